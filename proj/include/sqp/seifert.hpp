#pragma once

#include <string>
#include <vector>

#include "sqp/braid.hpp"
#include "sqp/lattice.hpp"

namespace sqp {

struct SeifertMatrix {
    Mat entries;
    std::vector<std::string> basis_labels;
    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const SeifertMatrix&) const = default;
};

struct SurfaceData {
    int strands = 0;
    int letter_count = 0;
    std::vector<std::pair<int, int>> edges;  // one {r,s} per letter, 1-based
    int components = 0;
    int betti = 0;
    int boundary_components = 0;
    bool connected() const { return components == 1; }
};

// Band surface of the closure: n disks joined by one band per letter.
SurfaceData surface_data(const BraidWord& w);

// Linking-number matrix on the per-letter basis for words with a literal
// delta_n prefix (the prefix is consumed; remaining letters index the basis).
// Throws on negative letters, missing prefix, or disconnected surface.
SeifertMatrix qp_seifert_matrix(const BraidWord& w);

// Seifert matrix of the closure from the algorithm surface of the sigma
// expansion; valid for arbitrary-sign words. Requires every column
// 1..n-1 to carry at least one crossing (connected surface).
SeifertMatrix generic_seifert_matrix(const BraidWord& w);

SymmetricForm symmetrize(const SeifertMatrix& s);

// Structural reasons forcing the symmetrized form of delta_n^k P to be
// indefinite. Possible reasons: "wide_span", "linked_pair",
// "commuting_pair", "staircase".
std::vector<std::string> indefiniteness_screen(const BraidWord& w);

}  // namespace sqp
