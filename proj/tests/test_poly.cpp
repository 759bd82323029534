#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqp/poly.hpp"

using namespace sqp;

TEST_CASE("basic arithmetic") {
    IntPoly a{1, 2, 3};  // 3t^2 + 2t + 1
    IntPoly b{0, 1};     // t
    CHECK((a * b).coeffs() == std::vector<Int>{0, 1, 2, 3});
    CHECK((a + (-a)).is_zero());
    CHECK(a.degree() == 2);
    CHECK(IntPoly{}.degree() == -1);
    CHECK(a.eval(Int(2)) == 17);
    CHECK(a.eval(Rat(1, 2)) == Rat(11, 4));
}

TEST_CASE("exact division") {
    IntPoly p{-1, 0, 0, 1};  // t^3 - 1
    IntPoly d{-1, 1};        // t - 1
    IntPoly q;
    REQUIRE(IntPoly::div_exact(p, d, q));
    CHECK(q == IntPoly{1, 1, 1});
    CHECK_FALSE(IntPoly::div_exact(IntPoly{1, 1}, IntPoly{0, 2}, q));
}

TEST_CASE("gcd") {
    IntPoly a = IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{2, 3};
    IntPoly b = IntPoly{-1, 1} * IntPoly{5, 7};
    CHECK(IntPoly::gcd(a, b) == IntPoly{-1, 1});
    CHECK(IntPoly::gcd(IntPoly{2, 4}, IntPoly{6}) == IntPoly{1});
}

TEST_CASE("palindrome and trace form") {
    IntPoly p{1, -1, 1};  // t^2 - t + 1
    CHECK(p.is_palindromic());
    CHECK(trace_form(p) == IntPoly{-1, 1});  // x - 1
    IntPoly q{2, -3, 2};
    CHECK(trace_form(q) == IntPoly{-3, 2});  // 2x - 3
    CHECK(trace_form(IntPoly{1, 0, 1}) == IntPoly{0, 1});
}

TEST_CASE("cyclotomic") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    // Degree phi(n).
    CHECK(cyclotomic(15).degree() == 8);
    CHECK(cyclotomic(105).degree() == 48);
}

TEST_CASE("cos minimal polynomials") {
    CHECK(cos_min_poly(3) == IntPoly{1, 1});       // x = -1
    CHECK(cos_min_poly(4) == IntPoly{0, 1});       // x = 0
    CHECK(cos_min_poly(6) == IntPoly{-1, 1});      // x = 1
    CHECK(cos_min_poly(2) == IntPoly{2, 1});       // x = -2
    CHECK(cos_min_poly(5) == IntPoly{-1, 1, 1});   // x^2 + x - 1
    CHECK(cos_min_poly(12).degree() == 2);
    // 2cos(2pi/12) = sqrt(3): x^2 - 3.
    CHECK(cos_min_poly(12) == IntPoly{-3, 0, 1});
}

TEST_CASE("sturm root counting") {
    // (x-1)(x-2)(x-3)
    IntPoly p = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 1};
    auto chain = sturm_chain(p);
    CHECK(sturm_count(chain, Rat(0), Rat(4)) == 3);
    CHECK(sturm_count(chain, Rat(1), Rat(4)) == 2);   // (1, 4] excludes root at 1
    CHECK(sturm_count(chain, Rat(0), Rat(3)) == 3);   // (0, 3] includes root at 3
    CHECK(sturm_count(chain, Rat(3, 2), Rat(5, 2)) == 1);
    // Multiple roots collapse: (x-1)^2 has one distinct root.
    IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1};
    CHECK(sturm_count(sturm_chain(sq), Rat(0), Rat(2)) == 1);
}

TEST_CASE("root isolation with multiplicity") {
    // (x-1)^2 (x+1) (2x-3)
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{-3, 2};
    auto roots = isolate_real_roots(p, Rat(-2), Rat(2));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].second == 1);
    CHECK(roots[1].second == 2);
    CHECK(roots[2].second == 1);
    // Sorted by position: -1, 1, 3/2.
    CHECK(roots[0].first.hi < roots[1].first.lo);
    CHECK(roots[1].first.hi <= roots[2].first.hi);
    for (const auto& [iv, mult] : roots) {
        CHECK(iv.lo <= iv.hi);
        if (iv.lo == iv.hi) CHECK(p.eval(iv.lo) == 0);
    }
}

TEST_CASE("root isolation endpoints") {
    IntPoly p = IntPoly{2, 1} * IntPoly{0, 1};  // roots -2, 0
    auto roots = isolate_real_roots(p, Rat(-2), Rat(2));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first.lo == Rat(-2));
    CHECK(roots[0].first.hi == Rat(-2));
}

TEST_CASE("strip linear roots") {
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{1, 1, 1};
    int m1 = strip_linear_root(p, 1);
    int m2 = strip_linear_root(p, -1);
    CHECK(m1 == 2);
    CHECK(m2 == 1);
    CHECK(p == IntPoly{1, 1, 1});
}

TEST_CASE("string rendering") {
    CHECK(IntPoly{1, -1, 2}.str() == "2t^2 - t + 1");
    CHECK(IntPoly{}.str() == "0");
    CHECK(IntPoly{0, 1}.str("z") == "z");
}
