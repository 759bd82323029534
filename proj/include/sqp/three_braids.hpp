#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqp/braid.hpp"
#include "sqp/poly.hpp"

namespace sqp {

struct Syllable {
    int p = 1, q = 1, r = 1;
    auto operator<=>(const Syllable&) const = default;
};

// Conjugacy representative delta_3^k (syllables) tail, with maximal k and
// minimal syllable count among the rewrite class. The tail is sigma1^tail_p
// a13^tail_q with tail_q > 0 only if tail_p > 0.
struct MinimalRep3 {
    int k = 0;
    std::vector<Syllable> syllables;
    int tail_p = 0, tail_q = 0;
    BraidWord word() const;
    bool operator==(const MinimalRep3&) const = default;
};

// delta_3^{3d} prod_i sigma1^{-1} sigma2^{a_i}, conjugate to the source word
// via the stored conjugator.
struct MurasugiForm {
    int d = 0;
    std::vector<int> a;
    BraidWord conjugator{3, {}};
    BraidWord word() const;
};

struct ThreeBraidClass {
    enum class Kind { trivial_or_split, composite, montesinos, root_lattice, indefinite };
    Kind kind = Kind::indefinite;
    std::string lattice;  // "A1".."E8" when kind == root_lattice
    int p = 0, q = 0, r = 0;  // montesinos slopes, or composite torus parameters (p, q)
    bool definite() const { return kind != Kind::indefinite && kind != Kind::trivial_or_split; }
    std::string str() const;
    bool operator==(const ThreeBraidClass&) const = default;
};

struct LspaceRow {
    int p, q, r;
    IntPoly nabla, delta;
    int least_obstructed_n;  // 0 when never obstructed within the bound
};

BraidWord b_pqr(int p, int q, int r);
MinimalRep3 minimal_representative(const BraidWord& w);
MurasugiForm murasugi_form(const MinimalRep3& rep);
int signature_closed_form(const MurasugiForm& m);
ThreeBraidClass classify_definite_3braid(const BraidWord& w);
std::vector<LspaceRow> lspace_table(int max_pqr, int max_n);

// A conjugate word delta_3^k W with maximal k and W using only sigma1, sigma2,
// when one exists in the search class.
std::optional<BraidWord> positive_braid_form(const BraidWord& w);

}  // namespace sqp
