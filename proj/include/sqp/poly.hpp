#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace sqp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense integer polynomial, coefficients ascending by degree.
// Invariant: no trailing zero coefficient (the zero polynomial is {}).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<int> coeffs);
    static IntPoly constant(const Int& a);
    static IntPoly monomial(const Int& a, int deg);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& operator[](int i) const;
    const Int& leading() const { return c_.back(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly scaled(const Int& a) const;
    IntPoly shifted(int k) const;  // multiply by t^k, k >= 0
    IntPoly derivative() const;
    IntPoly reversed() const;  // t^deg * p(1/t)
    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    Int content() const;               // gcd of coefficients, 0 for zero poly
    IntPoly primitive_part() const;    // content removed, leading coeff > 0
    bool is_palindromic() const;       // p == reversed()

    // Exact division; returns false if remainder is nonzero or the quotient
    // leaves the integers.
    static bool div_exact(const IntPoly& a, const IntPoly& b, IntPoly& q);
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, lead > 0
    static IntPoly pow(const IntPoly& p, int e);

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Rational polynomial support for Sturm sequences.
using RatPoly = std::vector<Rat>;  // ascending, trailing zeros trimmed
RatPoly to_rat(const IntPoly& p);
Rat rp_eval(const RatPoly& p, const Rat& x);
std::vector<RatPoly> sturm_chain(const IntPoly& p);
// Number of distinct real roots in (a, b].
int sturm_count(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b);

struct Interval {
    Rat lo, hi;  // root lies in (lo, hi], dyadic endpoints
};

// Isolating intervals for the distinct real roots of p in [lo, hi],
// paired with multiplicities. p must be nonzero.
std::vector<std::pair<Interval, int>> isolate_real_roots(const IntPoly& p, const Rat& lo,
                                                         const Rat& hi);

// How many times (t - root) divides p, removing the factor; root is +1 or -1.
int strip_linear_root(IntPoly& p, int root);

// Trace form: for palindromic p of even degree 2m, the unique Q with
// p(t) = t^m * Q(t + 1/t). Throws if p is not palindromic of even degree.
IntPoly trace_form(const IntPoly& p);

IntPoly cyclotomic(int n);
// Minimal polynomial of 2*cos(2*pi/n) over Q, for n >= 2.
IntPoly cos_min_poly(int n);

}  // namespace sqp
