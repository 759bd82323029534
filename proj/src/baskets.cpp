#include "sqp/baskets.hpp"

#include <stdexcept>

#include "sqp/invariants.hpp"

namespace sqp {

namespace {

void validate(const CyclicBasket& cb) {
    if (cb.m < 3) throw std::invalid_argument("cyclic basket: m must be >= 3");
    if (static_cast<int>(cb.eps.size()) != cb.m)
        throw std::invalid_argument("cyclic basket: eps size mismatch");
    for (int e : cb.eps)
        if (e != 1 && e != -1) throw std::invalid_argument("cyclic basket: eps entries must be +-1");
    int p = 0;
    for (int e : cb.eps) p += e == 1;
    if (p == 0 || p == cb.m)
        throw std::invalid_argument("cyclic basket: p must satisfy 1 <= p <= m-1");
}

void validate_mp(int m, int p) {
    if (m < 3) throw std::invalid_argument("cyclic basket: m must be >= 3");
    if (p <= 0 || p >= m) throw std::invalid_argument("cyclic basket: p must satisfy 1 <= p <= m-1");
}

}  // namespace

int basket_p(const CyclicBasket& cb) {
    validate(cb);
    int p = 0;
    for (int e : cb.eps) p += e == 1;
    return p;
}

SeifertMatrix cyclic_seifert_matrix(const CyclicBasket& cb) {
    validate(cb);
    int m = cb.m;
    SeifertMatrix out;
    out.entries.assign(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i) {
        out.basis_labels.push_back("band " + std::to_string(i + 1));
        out.entries[i][i] = -1;
        int j = (i + 1) % m;
        if (cb.eps[i] == 1) {
            out.entries[i][j] = -1;
            out.entries[j][i] = 0;
        } else {
            out.entries[i][j] = 0;
            out.entries[j][i] = 1;
        }
    }
    return out;
}

int cyclic_lk(const CyclicBasket& cb) {
    int p = basket_p(cb);
    return cb.m % 2 ? 2 * p : cb.m / 2 + p;
}

CyclicBasket normalize_eps(const CyclicBasket& cb) {
    int p = basket_p(cb);
    CyclicBasket out{cb.m, std::vector<int>(cb.m, -1)};
    for (int i = cb.m - p; i < cb.m; ++i) out.eps[i] = 1;
    return out;
}

SymmetricForm q_matrix(int m, int epsilon) {
    if (m < 3) throw std::invalid_argument("q_matrix: m must be >= 3");
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("q_matrix: epsilon must be +-1");
    Mat g(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i) {
        g[i][i] = 2;
        if (i + 1 < m) g[i][i + 1] = g[i + 1][i] = 1;
    }
    g[0][m - 1] = g[m - 1][0] = epsilon;
    return SymmetricForm{std::move(g)};
}

Int q_det(int m, int epsilon) {
    Int d = det(q_matrix(m, epsilon));
    Int expected = m % 2 ? Int(2 + 2 * epsilon) : Int(2 - 2 * epsilon);
    if (d != expected) throw std::logic_error("q_det: elimination disagrees with the closed form");
    return d;
}

bool cyclic_congruence_check(const CyclicBasket& cb) {
    int p = basket_p(cb);
    int m = cb.m;
    SeifertMatrix s = cyclic_seifert_matrix(normalize_eps(cb));
    Mat a(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = -(s.entries[i][j] + s.entries[j][i]);
    // Negate rows and columns m-p, m-p-2, ... (1-based) down to 1 or 2.
    for (int i = m - p; i >= 1; i -= 2) {
        for (int j = 0; j < m; ++j) a[i - 1][j] = -a[i - 1][j];
        for (int j = 0; j < m; ++j) a[j][i - 1] = -a[j][i - 1];
    }
    int corner = (m - p) % 2 ? -1 : 1;
    return a == q_matrix(m, corner).gram;
}

IntPoly cyclic_alexander(int m, int p) {
    validate_mp(m, p);
    IntPoly first = IntPoly::monomial(1, p) - IntPoly::constant(1);
    IntPoly second = IntPoly::monomial(1, m - p) + IntPoly::constant(m % 2 ? 1 : -1);
    return first * second;
}

CyclicReport cyclic_report(int m, int p) {
    validate_mp(m, p);
    CyclicBasket cb{m, {}};
    cb.eps.assign(m, -1);
    for (int i = m - p; i < m; ++i) cb.eps[i] = 1;
    SeifertMatrix s = cyclic_seifert_matrix(cb);
    CyclicReport rep{m, p, cyclic_lk(cb), p % 2 == 1, "", cyclic_alexander(m, p), 0};
    if (rep.definite) rep.lattice_class = classify_root_lattice(symmetrize(s)).str();
    for (int n = 2; n <= 50; ++n)
        if (lspace_obstructed(rep.alexander, n).obstructed) {
            rep.obstructed_from_n = n;
            break;
        }
    return rep;
}

std::string CyclicReport::json() const {
    std::string out = "{\"m\":" + std::to_string(m) + ",\"p\":" + std::to_string(p) +
                      ",\"lk\":" + std::to_string(lk) +
                      ",\"definite\":" + (definite ? "true" : "false") + ",\"lattice_class\":\"" +
                      lattice_class + "\",\"alexander_coeffs\":[";
    for (int i = 0; i <= alexander.degree(); ++i) {
        if (i) out += ",";
        out += alexander[i].str();
    }
    out += "],\"obstructed_from_n\":" + std::to_string(obstructed_from_n) + "}";
    return out;
}

}  // namespace sqp
