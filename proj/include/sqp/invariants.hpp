#pragma once

#include <string>
#include <vector>

#include "sqp/braid.hpp"
#include "sqp/poly.hpp"
#include "sqp/seifert.hpp"

namespace sqp {

// det(S - t S^T) normalized: t-power stripped, leading coefficient positive.
// Uses the linking-rule matrix for delta-prefixed positive words and the
// generic construction otherwise.
IntPoly alexander(const BraidWord& w);

// Determinant of a square matrix of integer polynomials, fraction-free.
IntPoly poly_det(std::vector<std::vector<IntPoly>> a);

// Conway polynomial in z, recovered from the normalized Alexander polynomial
// through nabla(t - 1/t) = alexander(t^2); leading coefficient positive.
// Throws if the substitution system is inconsistent.
IntPoly conway(const BraidWord& w);
IntPoly conway_from_alexander(const IntPoly& delta);

// Fibonacci-style polynomials: f_0 = 0, f_1 = 1, f_k = z f_{k-1} + f_{k-2}.
IntPoly f_poly(int k);

// Closed formula for the Conway polynomial of the closure of
// sigma1^p a13^q sigma2^r.
IntPoly nabla_pqr(int p, int q, int r);

int signature(const BraidWord& w);

// Betti-sharp signature test on the band surface of a positive word.
bool is_definite_link(const BraidWord& w);

struct CircleRootReport {
    // Isolating intervals in x = t + 1/t coordinates on [-2, 2], with
    // multiplicities, for unit-circle roots off t = +-1.
    std::vector<std::pair<Interval, int>> unit_roots;
    bool root_at_minus_one = false;
    int root_at_one_multiplicity = 0;
};
CircleRootReport circle_roots(const IntPoly& delta);

struct ObstructionResult {
    bool obstructed = false;
    std::string witness;  // empty when not obstructed
};
// Root-location obstruction for the n-fold cyclic branched cover: a root at
// t = -1, or a unit-circle root whose x = 2cos(arg t) lies in the closed
// interval [-2, 2cos(2*pi/n)].
ObstructionResult lspace_obstructed(const IntPoly& delta, int n);
ObstructionResult lspace_obstructed(const BraidWord& w, int n);

}  // namespace sqp
