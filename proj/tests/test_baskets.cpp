#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sqp/baskets.hpp"
#include "sqp/invariants.hpp"

using namespace sqp;

namespace {

IntPoly det_alexander(const SeifertMatrix& s) {
    int m = s.size();
    std::vector<std::vector<IntPoly>> a(m, std::vector<IntPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a[i][j] = IntPoly::constant(s.entries[i][j]) - IntPoly::monomial(s.entries[j][i], 1);
    IntPoly d = poly_det(std::move(a));
    if (d.is_zero()) return d;
    size_t sh = 0;
    while (d[static_cast<int>(sh)] == 0) ++sh;
    IntPoly out{std::vector<Int>(d.coeffs().begin() + sh, d.coeffs().end())};
    return out.leading() < 0 ? -out : out;
}

CyclicBasket random_basket(std::mt19937_64& rng, int m) {
    CyclicBasket cb{m, std::vector<int>(m, -1)};
    int p = 1 + static_cast<int>(rng() % (m - 1));
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < p; ++i) cb.eps[idx[i]] = 1;
    return cb;
}

SymmetricForm neg_sym(const SeifertMatrix& s) {
    int m = s.size();
    Mat g(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g[i][j] = -(s.entries[i][j] + s.entries[j][i]);
    return SymmetricForm{std::move(g)};
}

}  // namespace

TEST_CASE("seifert matrix examples") {
    SeifertMatrix s = cyclic_seifert_matrix(CyclicBasket{3, {-1, -1, 1}});
    CHECK(s.entries == Mat{{-1, 0, 0}, {1, -1, 0}, {-1, 1, -1}});
    CHECK(det_alexander(s) == IntPoly({-1, 1, -1, 1}));  // (t-1)(t^2+1)
    CHECK_THROWS_AS(cyclic_seifert_matrix(CyclicBasket{3, {1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_seifert_matrix(CyclicBasket{3, {-1, -1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_seifert_matrix(CyclicBasket{2, {1, -1}}), std::invalid_argument);
}

TEST_CASE("linking number formula") {
    CHECK(cyclic_lk(normalize_eps(CyclicBasket{5, {1, 1, -1, -1, -1}})) == 4);
    CHECK(cyclic_lk(CyclicBasket{6, {1, -1, -1, -1, -1, -1}}) == 4);
    CHECK(cyclic_lk(CyclicBasket{3, {-1, -1, 1}}) == 2);
}

TEST_CASE("normalization") {
    CyclicBasket n = normalize_eps(CyclicBasket{3, {1, -1, -1}});
    CHECK(n.eps == std::vector<int>{-1, -1, 1});
    CHECK(normalize_eps(n).eps == n.eps);

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 3 + static_cast<int>(rng() % 6);
        CyclicBasket cb = random_basket(rng, m);
        CyclicBasket nb = normalize_eps(cb);
        CHECK(basket_p(nb) == basket_p(cb));
        CHECK(cyclic_lk(nb) == cyclic_lk(cb));
        SymmetricForm f = neg_sym(cyclic_seifert_matrix(cb));
        SymmetricForm g = neg_sym(cyclic_seifert_matrix(nb));
        CHECK(inertia(f) == inertia(g));
        CHECK(det(f) == det(g));
        try {
            CHECK(congruent(f, g));
        } catch (const std::runtime_error&) {
            // Indefinite nondegenerate pairs: invariant agreement suffices here.
        }
    }
}

TEST_CASE("q matrix determinant and minors") {
    CHECK(q_det(3, 1) == 4);
    CHECK(q_det(4, 1) == 0);
    for (int m = 3; m <= 12; ++m)
        for (int e : {1, -1}) {
            CHECK(q_det(m, e) == (m % 2 ? 2 + 2 * e : 2 - 2 * e));
            SymmetricForm q = q_matrix(m, e);
            for (int r = 1; r <= m - 1; ++r) {
                Mat minor(r, std::vector<Int>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) minor[i][j] = q.gram[i][j];
                CHECK(det(SymmetricForm{minor}) == r + 1);
            }
        }
}

TEST_CASE("congruence with the corner form") {
    CHECK(cyclic_congruence_check(CyclicBasket{5, {-1, -1, -1, -1, 1}}));
    CHECK(cyclic_congruence_check(CyclicBasket{4, {-1, -1, 1, 1}}));
    std::mt19937_64 rng(83);
    for (int m = 3; m <= 10; ++m)
        for (int p = 1; p < m; ++p) {
            CyclicBasket cb{m, std::vector<int>(m, -1)};
            for (int i = m - p; i < m; ++i) cb.eps[i] = 1;
            CHECK(cyclic_congruence_check(cb));
            CHECK(cyclic_congruence_check(random_basket(rng, m)));
        }
}

TEST_CASE("definite exactly for odd p, with the expected class") {
    for (int m = 3; m <= 10; ++m)
        for (int p = 1; p < m; ++p) {
            CyclicReport rep = cyclic_report(m, p);
            CyclicBasket cb{m, std::vector<int>(m, -1)};
            for (int i = m - p; i < m; ++i) cb.eps[i] = 1;
            SymmetricForm f = symmetrize(cyclic_seifert_matrix(cb));
            bool neg_def = definiteness(f) == Definiteness::negative_definite;
            CHECK(neg_def == (p % 2 == 1));
            CHECK(rep.definite == (p % 2 == 1));
            if (p % 2 == 1) {
                std::string expect = m == 3 ? "A3" : "D" + std::to_string(m);
                CHECK(rep.lattice_class == expect);
            } else {
                CHECK(rep.lattice_class.empty());
            }
        }
}

TEST_CASE("closed-form alexander polynomial matches the determinant") {
    CHECK(cyclic_alexander(3, 1) == IntPoly({-1, 1, -1, 1}));
    CHECK(cyclic_alexander(4, 2) == IntPoly({1, 0, -2, 0, 1}));
    for (int m = 3; m <= 10; ++m)
        for (int p = 1; p < m; ++p) {
            CyclicBasket cb{m, std::vector<int>(m, -1)};
            for (int i = m - p; i < m; ++i) cb.eps[i] = 1;
            CHECK(cyclic_alexander(m, p) == det_alexander(cyclic_seifert_matrix(cb)));
        }
}

TEST_CASE("reports") {
    CyclicReport r53 = cyclic_report(5, 3);
    CHECK(r53.definite);
    CHECK(r53.lattice_class == "D5");
    CHECK(r53.obstructed_from_n == 3);

    CyclicReport r31 = cyclic_report(3, 1);
    CHECK(r31.lk == 2);
    CHECK_FALSE(lspace_obstructed(r31.alexander, 3).obstructed);
    CHECK(r31.obstructed_from_n == 4);

    CyclicReport r51 = cyclic_report(5, 1);
    CHECK(r51.obstructed_from_n == 3);

    CHECK(r53.json().find("\"m\":5") != std::string::npos);
    CHECK(r53.json().find("\"lattice_class\":\"D5\"") != std::string::npos);
    CHECK(r31.json().find("\"definite\":true") != std::string::npos);
}
