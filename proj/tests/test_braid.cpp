#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sqp/braid.hpp"

using namespace sqp;

namespace {

BraidWord random_positive_word(std::mt19937_64& rng, int n, int len) {
    BraidWord w{n, {}};
    std::uniform_int_distribution<int> dr(1, n - 1);
    for (int i = 0; i < len; ++i) {
        int r = dr(rng);
        std::uniform_int_distribution<int> ds(r + 1, n);
        w.letters.push_back(band(r, ds(rng)));
    }
    return w;
}

}  // namespace

TEST_CASE("parsing") {
    BraidWord w = parse_braid("D^2", 3);
    CHECK(w.letters == std::vector<Band>{sigma(1), sigma(2), sigma(1), sigma(2)});
    BraidWord b111 = parse_braid("s1 a(1,3) s2", 3);
    CHECK(b111.letters == std::vector<Band>{band(1, 2), band(1, 3), band(2, 3)});
    CHECK(parse_braid("s1^-2", 2).letters ==
          std::vector<Band>{sigma(1, -1), sigma(1, -1)});
    CHECK(parse_braid("~a(1,3)", 3).letters == std::vector<Band>{band(1, 3, -1)});
    CHECK(parse_braid("~D", 3).letters ==
          std::vector<Band>{sigma(2, -1), sigma(1, -1)});
    CHECK_THROWS_AS(parse_braid("a(2,5)", 4), parse_error);
    CHECK_THROWS_AS(parse_braid("s1^0", 3), parse_error);
    CHECK_THROWS_AS(parse_braid("s3", 3), parse_error);
    CHECK_THROWS_AS(parse_braid("q", 3), parse_error);
}

TEST_CASE("expand to sigma") {
    BraidWord a13 = parse_braid("a(1,3)", 3);
    CHECK(expand_to_sigma(a13).letters ==
          std::vector<Band>{sigma(1), sigma(2), sigma(1, -1)});
    BraidWord a14 = parse_braid("a(1,4)", 4);
    CHECK(expand_to_sigma(a14).letters ==
          std::vector<Band>{sigma(1), sigma(2), sigma(3), sigma(2, -1), sigma(1, -1)});
    CHECK(expand_to_sigma(parse_braid("s2", 3)).letters == std::vector<Band>{sigma(2)});
}

TEST_CASE("delta conjugation") {
    CHECK(conjugate_by_delta(parse_braid("a(1,3)", 5), 1).letters ==
          std::vector<Band>{band(2, 4)});
    CHECK(conjugate_by_delta(parse_braid("a(1,3)", 3), 1).letters ==
          std::vector<Band>{band(1, 2)});
    BraidWord w = parse_braid("s1 a(2,4) s3", 4);
    CHECK(conjugate_by_delta(w, 0) == w);
    CHECK(conjugate_by_delta(conjugate_by_delta(w, 1), -1) == w);
    CHECK(conjugate_by_delta(w, 4) == w);  // period n
}

TEST_CASE("predicates") {
    auto p = letter_predicates(parse_braid("a(1,3)", 4));
    CHECK(p.covers == std::vector<bool>{true, true, false});
    CHECK(p.spans == std::vector<int>{2});
    auto lp = letter_predicates(parse_braid("a(1,3) a(2,4)", 4));
    CHECK(lp.linked_pairs == std::vector<std::pair<int, int>>{{0, 1}});
    auto np = letter_predicates(parse_braid("s1 s3", 4));
    CHECK(np.linked_pairs.empty());
    CHECK(bands_commute(band(1, 2), band(3, 4)));
    CHECK_FALSE(bands_commute(band(1, 3), band(2, 4)));
    CHECK_FALSE(bands_commute(band(1, 2), band(2, 3)));
}

TEST_CASE("contains and r_of_P") {
    BraidWord d32 = parse_braid("D^2", 3);
    CHECK(contains(concat(d32, parse_braid("s1", 3)), d32));
    CHECK(contains(parse_braid("s1 a(1,3) s2", 3), parse_braid("s1 s2", 3)));
    CHECK_FALSE(contains(parse_braid("s1 s1", 3), parse_braid("s2", 3)));
    CHECK(r_of_P(delta_word(4)) == 1);
    CHECK(r_of_P(parse_braid("s1^5", 3)) == 0);
    // delta^2 = s1 s2 s1 s2 sits inside at positions 0,2,3,4.
    CHECK(r_of_P(parse_braid("s1 a(1,3) s2 s1 s2", 3)) == 2);
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k)
            CHECK(r_of_P(word_pow(delta_word(n), k)) == k);
    // a13 s1 rewrites to s1 s2 in one triple-relation step.
    CHECK(r_of_P(parse_braid("a(1,3) s1", 3)) == 0);
    CHECK(r_of_P_rewrites(parse_braid("a(1,3) s1", 3)) == 1);
    // s1 a13 admits no adjacent-pair rewrite at all.
    CHECK(single_rewrites(parse_braid("s1 a(1,3)", 3)).empty());
    CHECK(r_of_P_rewrites(parse_braid("s1 a(1,3)", 3)) == 0);
}

TEST_CASE("normal form equalities") {
    // Triple relation in all three guises.
    CHECK(equal(parse_braid("s1 s2", 3), parse_braid("a(1,3) s1", 3)));
    CHECK(equal(parse_braid("s1 s2", 3), parse_braid("s2 a(1,3)", 3)));
    CHECK(equal(parse_braid("s1 s3", 4), parse_braid("s3 s1", 4)));
    CHECK_FALSE(equal(parse_braid("s1", 3), parse_braid("s2", 3)));
    CHECK_FALSE(equal(parse_braid("s1 s2", 3), parse_braid("s2 s1", 3)));
    // Inverses cancel.
    CHECK(normal_form(parse_braid("s1 ~s1", 3)) == normal_form(BraidWord{3, {}}));
    CHECK(equal(parse_braid("a(1,3)", 3), parse_braid("s1 s2 ~s1", 3)));
    // Artin relation via expansion.
    CHECK(equal(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3)));
}

TEST_CASE("normal form structure") {
    NormalForm nf = normal_form(delta_word(4));
    CHECK(nf.infimum == 1);
    CHECK(nf.factors.empty());
    NormalForm nf2 = normal_form(parse_braid("~D", 4));
    CHECK(nf2.infimum == -1);
    CHECK(nf2.factors.empty());
    NormalForm nf3 = normal_form(parse_braid("s1", 4));
    CHECK(nf3.infimum == 0);
    REQUIRE(nf3.factors.size() == 1);
    CHECK(nf3.factors[0] == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("full twist is central") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        BraidWord w = random_positive_word(rng, n, 4 + static_cast<int>(rng() % 4));
        BraidWord twist = word_pow(delta_word(n), n);
        CHECK(equal(concat(twist, w), concat(w, twist)));
        // Conjugation by delta is realized by the index shift.
        BraidWord lhs = concat(concat(delta_word(n), w), parse_braid("~D", n));
        CHECK(equal(lhs, conjugate_by_delta(w, 1)));
    }
}

TEST_CASE("rewrites preserve normal form and covering") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        BraidWord w = random_positive_word(rng, n, 5);
        auto covers = letter_predicates(w).covers;
        for (const auto& v : single_rewrites(w)) {
            CHECK(equal(w, v));
            CHECK(letter_predicates(v).covers == covers);
            ++checked;
        }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("expand_to_sigma preserves equality") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        BraidWord w = random_positive_word(rng, n, 5);
        CHECK(equal(w, expand_to_sigma(w)));
    }
}

TEST_CASE("contains reflexive and transitive") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        BraidWord w = random_positive_word(rng, n, 6);
        CHECK(contains(w, w));
        // Random subsequence of a subsequence.
        BraidWord u{n, {}}, v{n, {}};
        for (const auto& b : w.letters)
            if (rng() % 2) u.letters.push_back(b);
        for (const auto& b : u.letters)
            if (rng() % 2) v.letters.push_back(b);
        CHECK(contains(w, u));
        CHECK(contains(u, v));
        CHECK(contains(w, v));
    }
}

TEST_CASE("reduce_index") {
    auto r1 = reduce_index(parse_braid("D^2 s2", 3));
    REQUIRE(r1.has_value());
    CHECK(r1->n == 2);
    CHECK(r1->positive());
    auto r2 = reduce_index(parse_braid("D^2 s2 s3", 4));
    REQUIRE(r2.has_value());
    CHECK(r2->n == 3);
    CHECK_FALSE(reduce_index(parse_braid("D^2 s1 s2", 3)).has_value());
    CHECK_THROWS_AS(reduce_index(parse_braid("s1 s2", 3)), std::invalid_argument);
    // The two destabilization identities hold as group elements.
    CHECK(equal(parse_braid("D^2", 4), parse_braid("s2 s1 s2 s3 s2 s3", 4)));
    CHECK(equal(parse_braid("D^2", 4), parse_braid("s1 s2 s1 s2 s3 s2", 4)));
    CHECK(equal(parse_braid("D^2", 5), parse_braid("s2 s1 s2 s3 s4 s2 s3 s4", 5)));
    CHECK(equal(parse_braid("D^2", 5), parse_braid("s1 s2 s3 s1 s2 s3 s4 s3", 5)));
}

TEST_CASE("permutation and render") {
    auto p = permutation(delta_word(4));
    CHECK(p == std::vector<int>{1, 2, 3, 0});
    BraidWord w = parse_braid("s1 a(1,3) ~s2", 3);
    CHECK(parse_braid(render(w), 3) == w);
}
