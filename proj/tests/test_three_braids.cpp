#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sqp/invariants.hpp"
#include "sqp/lattice.hpp"
#include "sqp/seifert.hpp"
#include "sqp/tables.hpp"
#include "sqp/three_braids.hpp"

using namespace sqp;

namespace {

int direct_sig(const BraidWord& w) {
    Inertia in = inertia(symmetrize(generic_seifert_matrix(w)));
    return in.pos - in.neg;
}

BraidWord random_word(std::mt19937_64& rng, int len) {
    static const Band letters[3] = {band(1, 2), band(1, 3), band(2, 3)};
    BraidWord w{3, {}};
    for (int i = 0; i < len; ++i) w.letters.push_back(letters[rng() % 3]);
    return w;
}

}  // namespace

TEST_CASE("minimal representative examples") {
    MinimalRep3 r1 = minimal_representative(b_pqr(1, 1, 1));
    CHECK(r1.k == 0);
    REQUIRE(r1.syllables.size() == 1);
    CHECK(r1.syllables[0] == Syllable{1, 1, 1});
    CHECK(r1.tail_p == 0);

    for (int p = 1; p <= 4; ++p) {
        BraidWord w = concat(word_pow(delta_word(3), 2), word_pow(BraidWord{3, {sigma(1)}}, p));
        MinimalRep3 r = minimal_representative(w);
        CHECK(r.k == 2);
        CHECK(r.syllables.empty());
        CHECK(r.tail_p == p);
        CHECK(r.tail_q == 0);
    }

    BraidWord w45 = concat(word_pow(delta_word(3), 4), word_pow(BraidWord{3, {sigma(1)}}, 2));
    MinimalRep3 r45 = minimal_representative(w45);
    CHECK(r45.k == 5);
    CHECK(r45.syllables.empty());
    CHECK(r45.tail_p == 0);

    // sigma1^p a13^q gains one delta.
    MinimalRep3 rc = minimal_representative(parse_braid("s1^3 a(1,3)^2", 3));
    CHECK(rc.k == 1);
    CHECK(rc.syllables.empty());
    CHECK(rc.tail_p + rc.tail_q == 3);
    CHECK(rc.tail_q > 0);
}

TEST_CASE("idempotence, conjugation invariance, tail discipline") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 80; ++trial) {
        BraidWord w = random_word(rng, 2 + static_cast<int>(rng() % 6));
        MinimalRep3 r = minimal_representative(w);
        CHECK(minimal_representative(r.word()) == r);
        int j = 1 + static_cast<int>(rng() % 2);
        CHECK(minimal_representative(conjugate_by_delta(w, j)) == r);
        if (!r.syllables.empty()) {
            if (r.k % 3 == 0) CHECK((r.tail_p == 0 && r.tail_q == 0));
            if (r.k % 3 == 1) CHECK((r.tail_p > 0 && r.tail_q > 0));
            if (r.k % 3 == 2) CHECK((r.tail_p > 0 && r.tail_q == 0));
        }
        // No delta subword survives in the representative.
        BraidWord v = r.word();
        for (size_t i = static_cast<size_t>(2 * r.k); i + 1 < v.letters.size(); ++i) {
            BraidWord pair{3, {v.letters[i], v.letters[i + 1]}};
            CHECK_FALSE(equal(pair, delta_word(3)));
        }
    }
}

TEST_CASE("representatives preserve closure invariants") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        BraidWord w = random_word(rng, 3 + static_cast<int>(rng() % 5));
        BraidWord v = minimal_representative(w).word();
        CHECK(alexander(w) == alexander(v));
        if (surface_data(w).connected() && surface_data(v).connected())
            CHECK(direct_sig(w) == direct_sig(v));
    }
}

TEST_CASE("murasugi form examples") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r) {
                MurasugiForm m = murasugi_form(minimal_representative(b_pqr(p, q, r)));
                CHECK(m.d == 1);
                // The representative may be a cyclic rotation of (p, q, r).
                std::vector<int> got = m.a, want = {p - 1, q - 1, r - 1};
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                CHECK(got == want);
            }
    // The shape rule also applies to non-minimal inputs.
    MurasugiForm m2 = murasugi_form(MinimalRep3{3, {Syllable{1, 1, 1}}, 0, 0});
    CHECK(m2.d == 2);
    CHECK(m2.a == std::vector<int>{0, 0, 0});

    MurasugiForm m3 = murasugi_form(MinimalRep3{2, {}, 3, 0});
    CHECK(m3.d == 1);
    CHECK(m3.a == std::vector<int>{2});

    MurasugiForm m4 = murasugi_form(MinimalRep3{1, {}, 2, 3});
    CHECK(m4.d == 1);
    CHECK(m4.a == std::vector<int>{1, 2});

    MurasugiForm m5 = murasugi_form(MinimalRep3{2, {Syllable{2, 1, 3}}, 1, 0});
    CHECK(m5.d == 2);
    CHECK(m5.a == std::vector<int>{1, 0, 2, 0});
}

TEST_CASE("murasugi form unsupported shapes") {
    CHECK_THROWS_AS(murasugi_form(MinimalRep3{1, {}, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(murasugi_form(MinimalRep3{2, {}, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(murasugi_form(MinimalRep3{3, {}, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(murasugi_form(MinimalRep3{1, {}, 2, 0}), std::invalid_argument);
}

TEST_CASE("closed-form signature examples") {
    MurasugiForm m222 = murasugi_form(minimal_representative(b_pqr(2, 2, 2)));
    CHECK(signature_closed_form(m222) == -4);
    MurasugiForm m111 = murasugi_form(minimal_representative(b_pqr(1, 1, 1)));
    CHECK(signature_closed_form(m111) == -1);
    CHECK(signature_closed_form(MurasugiForm{0, {}, {3, {}}}) == 0);
}

TEST_CASE("closed-form signature agrees with direct computation") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        MurasugiForm m;
        m.d = 1 + static_cast<int>(rng() % 4);
        int blocks = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < blocks; ++i) m.a.push_back(static_cast<int>(rng() % 6));
        CHECK(signature_closed_form(m) == direct_sig(m.word()));
    }
    // All-zero blocks exercise the parity term.
    for (int d = 1; d <= 4; ++d)
        for (int blocks = 0; blocks <= 4; ++blocks) {
            MurasugiForm m{d, std::vector<int>(blocks, 0), {3, {}}};
            CHECK(signature_closed_form(m) == direct_sig(m.word()));
        }
}

TEST_CASE("classification examples") {
    for (int m = 1; m <= 6; ++m) {
        BraidWord w = concat(delta_word(3), word_pow(BraidWord{3, {sigma(1)}}, m));
        CHECK(classify_definite_3braid(w) ==
              ThreeBraidClass{ThreeBraidClass::Kind::root_lattice, "A" + std::to_string(m)});
    }
    for (int m = 4; m <= 8; ++m) {
        BraidWord w =
            concat(word_pow(delta_word(3), 3), word_pow(BraidWord{3, {sigma(1)}}, m - 4));
        CHECK(classify_definite_3braid(w) ==
              ThreeBraidClass{ThreeBraidClass::Kind::root_lattice, "D" + std::to_string(m)});
    }
    CHECK(classify_definite_3braid(word_pow(delta_word(3), 4)).lattice == "E6");
    BraidWord e7 = concat(word_pow(delta_word(3), 4), BraidWord{3, {sigma(1)}});
    CHECK(classify_definite_3braid(e7).lattice == "E7");
    CHECK(classify_definite_3braid(word_pow(delta_word(3), 5)).lattice == "E8");
    CHECK(classify_definite_3braid(word_pow(delta_word(3), 6)).kind ==
          ThreeBraidClass::Kind::indefinite);

    ThreeBraidClass mont = classify_definite_3braid(b_pqr(2, 3, 4));
    CHECK(mont.kind == ThreeBraidClass::Kind::montesinos);
    CHECK((mont.p == 2 && mont.q == 3 && mont.r == 4));

    ThreeBraidClass comp = classify_definite_3braid(parse_braid("D s1^2 a(1,3)^3", 3));
    CHECK(comp.kind == ThreeBraidClass::Kind::composite);
    CHECK((comp.p == 3 && comp.q == 4));

    CHECK(classify_definite_3braid(parse_braid("s1^4", 3)).kind ==
          ThreeBraidClass::Kind::trivial_or_split);
    CHECK(classify_definite_3braid(delta_word(3)).kind ==
          ThreeBraidClass::Kind::trivial_or_split);

    BraidWord sq = concat(word_pow(delta_word(3), 2), word_pow(b_pqr(1, 1, 1), 2));
    CHECK(classify_definite_3braid(sq).kind == ThreeBraidClass::Kind::indefinite);
}

TEST_CASE("classification matches the band-surface definiteness test") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord w = random_word(rng, 2 + static_cast<int>(rng() % 6));
        ThreeBraidClass verdict = classify_definite_3braid(w);
        if (verdict.kind == ThreeBraidClass::Kind::trivial_or_split) continue;
        bool definite;
        try {
            definite = is_definite_link(w);
        } catch (const std::invalid_argument&) {
            continue;  // split closure
        }
        CHECK(verdict.definite() == definite);
    }
}

TEST_CASE("definite classes with a delta power rewrite to positive words") {
    std::vector<BraidWord> words;
    for (int m = 1; m <= 5; ++m)
        words.push_back(concat(delta_word(3), word_pow(BraidWord{3, {sigma(1)}}, m)));
    words.push_back(parse_braid("D s1^2 a(1,3)^3", 3));
    words.push_back(parse_braid("D^2 s1^3", 3));
    words.push_back(parse_braid("D^3 s1^2", 3));
    words.push_back(parse_braid("D^4 s1", 3));
    words.push_back(word_pow(delta_word(3), 5));
    for (const auto& w : words) {
        CHECK(classify_definite_3braid(w).definite());
        auto pos = positive_braid_form(w);
        REQUIRE(pos.has_value());
        CHECK(pos->positive());
        for (const auto& b : pos->letters) CHECK(b.span() == 1);
        CHECK(equal(*pos, *pos));  // well-formed
        CHECK(alexander(*pos) == alexander(w));
    }
}

TEST_CASE("lspace table reproduces the golden columns") {
    auto rows = lspace_table(3, 50);
    for (const auto& row : rows) {
        bool found = false;
        for (const auto& g : golden_pqr_rows())
            if (g.p == row.p && g.q == row.q && g.r == row.r) {
                CHECK(row.nabla == g.nabla);
                CHECK(row.delta == g.delta);
                CHECK(row.least_obstructed_n == g.threshold);
                found = true;
            }
        CHECK(found);
    }
    CHECK(rows.size() == 10);
}
