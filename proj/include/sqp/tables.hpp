#pragma once

#include <string>
#include <vector>

#include "sqp/poly.hpp"

namespace sqp {

// Golden data for the closures of sigma1^p a13^q sigma2^r, 1 <= p <= q <= r <= 5.
// threshold is the least n whose cyclic branched cover is obstructed by the
// root-location test; 0 means never obstructed for n <= 50.
struct PqrRow {
    int p, q, r;
    IntPoly nabla;
    IntPoly delta;
    int threshold;
};
const std::vector<PqrRow>& golden_pqr_rows();

// Braid words with known definite form classes.
struct FormsRow {
    std::string cls;   // "A1".."A8", "D4".."D8", "E6", "E7", "E8"
    int strands;
    std::string word;  // parseable braid text
};
const std::vector<FormsRow>& golden_forms_rows();

// f_0 .. f_7 of the recursion f_k = z f_{k-1} + f_{k-2}.
const std::vector<IntPoly>& golden_f_rows();

// Definiteness of the symmetrized form of delta_n^k.
bool baader_definite(int n, int k);

}  // namespace sqp
