#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqp/poly.hpp"

namespace sqp {

using Mat = std::vector<std::vector<Int>>;

struct SymmetricForm {
    Mat gram;
    int rank() const { return static_cast<int>(gram.size()); }
    bool operator==(const SymmetricForm&) const = default;
};

SymmetricForm make_form(Mat gram);  // validates squareness and symmetry

struct Inertia {
    int pos = 0, neg = 0, zero = 0;
    bool operator==(const Inertia&) const = default;
};
Inertia inertia(const SymmetricForm& f);

enum class Definiteness { negative_definite, positive_definite, indefinite, degenerate };
Definiteness definiteness(const SymmetricForm& f);
std::string definiteness_name(Definiteness d);

Int det(const SymmetricForm& f);
bool is_even(const SymmetricForm& f);

// All integer vectors v with f(v,v) = -2; f must be negative definite and
// even. Both signs of each root are listed; lexicographic order.
std::vector<std::vector<Int>> enumerate_roots(const SymmetricForm& f);

// Orthogonal ADE decomposition, e.g. {"A1","A1","E6"}; sorted tags.
struct RootLatticeType {
    std::vector<std::string> components;
    bool operator==(const RootLatticeType&) const = default;
    std::string str() const;
};
RootLatticeType classify_root_lattice(const SymmetricForm& f);

// Integer congruence test (unimodular change of basis). Exact for definite
// and degenerate forms; throws for indefinite nondegenerate pairs whose
// invariants agree (undecided).
bool congruent(const SymmetricForm& f, const SymmetricForm& g);

// Gram matrix of a plumbing graph: -2 on the diagonal, +1 per edge.
SymmetricForm tree_gram(int vertices, const std::vector<std::pair<int, int>>& edges);

// Standard ADE trees on 0-based vertices: "A5", "D4", "E8", ...
SymmetricForm ade_gram(const std::string& tag);

}  // namespace sqp
