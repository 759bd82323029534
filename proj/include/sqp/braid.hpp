#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqp {

// Band generator a_{rs}, 1 <= r < s <= n; a_{r,r+1} is the Artin sigma_r.
struct Band {
    int r = 1, s = 2, sign = 1;
    auto operator<=>(const Band&) const = default;
    int span() const { return s - r; }
};

struct BraidWord {
    int n = 2;
    std::vector<Band> letters;
    bool positive() const;
    bool operator==(const BraidWord&) const = default;
};

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

Band band(int r, int s, int sign = 1);
Band sigma(int i, int sign = 1);
BraidWord delta_word(int n);
BraidWord word_pow(const BraidWord& w, int k);  // k >= 0
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse_word(const BraidWord& w);
std::vector<int> permutation(const BraidWord& w);  // 0-based strand images

BraidWord parse_braid(const std::string& text, int strands);
std::string render(const BraidWord& w);

BraidWord expand_to_sigma(const BraidWord& w);
BraidWord conjugate_by_delta(const BraidWord& w, int k);
Band shift_band(const Band& b, int n, int k);

bool bands_linked(const Band& a, const Band& b);
bool bands_commute(const Band& a, const Band& b);

struct LetterPredicates {
    std::vector<bool> covers;                       // covers[i-1] for sigma_i
    std::vector<std::pair<int, int>> linked_pairs;  // letter index pairs, i < j
    std::vector<int> spans;
};
LetterPredicates letter_predicates(const BraidWord& w);

bool contains(const BraidWord& w, const BraidWord& pattern);
int r_of_P(const BraidWord& P);
// Lower bound on r over the rewrite class: best value seen within `depth`
// single-relation rewrites of P.
int r_of_P_rewrites(const BraidWord& P, int depth = 3);
std::vector<BraidWord> single_rewrites(const BraidWord& w);

// Left-greedy dual-Garside normal form. Canonical factors are non-crossing
// partitions of {1..n}, stored as sorted blocks (singletons omitted).
struct NormalForm {
    int n = 2;
    int infimum = 0;
    std::vector<std::vector<std::vector<int>>> factors;
    bool operator==(const NormalForm&) const = default;
};
NormalForm normal_form(const BraidWord& w);
bool equal(const BraidWord& a, const BraidWord& b);

// Markov destabilization of w = delta_n^2 P when P misses sigma_1 or
// sigma_{n-1}; nullopt when P covers both. Throws if w lacks the literal
// delta_n^2 prefix or P is not BKL-positive.
std::optional<BraidWord> reduce_index(const BraidWord& w);

}  // namespace sqp
