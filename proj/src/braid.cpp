#include "sqp/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace sqp {

bool BraidWord::positive() const {
    return std::all_of(letters.begin(), letters.end(), [](const Band& b) { return b.sign > 0; });
}

Band band(int r, int s, int sign) { return Band{r, s, sign}; }
Band sigma(int i, int sign) { return Band{i, i + 1, sign}; }

BraidWord delta_word(int n) {
    BraidWord w{n, {}};
    for (int i = 1; i < n; ++i) w.letters.push_back(sigma(i));
    return w;
}

BraidWord word_pow(const BraidWord& w, int k) {
    BraidWord r{w.n, {}};
    for (int i = 0; i < k; ++i) r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("concat: strand counts differ");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord inverse_word(const BraidWord& w) {
    BraidWord r{w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(Band{it->r, it->s, -it->sign});
    return r;
}

namespace {

using Perm = std::vector<int>;

Perm perm_id(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

// comp(p, q)(i) = p[q[i]]; the homomorphism sends u*v to comp(perm(u), perm(v)).
Perm comp(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm perm_inv(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
    return r;
}

Perm perm_delta(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

Perm perm_band(const Band& b, int n) {
    Perm p = perm_id(n);
    std::swap(p[b.r - 1], p[b.s - 1]);
    return p;
}

void check_band(const Band& b, int n) {
    if (!(1 <= b.r && b.r < b.s && b.s <= n))
        throw std::invalid_argument("band index out of range for " + std::to_string(n) +
                                    " strands");
}

}  // namespace

std::vector<int> permutation(const BraidWord& w) {
    Perm p = perm_id(w.n);
    for (const auto& b : w.letters) {
        check_band(b, w.n);
        p = comp(p, perm_band(b, w.n));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Parsing. Grammar: word := term { WS term }; term := base [ "^" INT ];
// base := "s" INT | "a(" INT "," INT ")" | "D" | "~" base.

namespace {

struct Parser {
    const std::string& t;
    size_t pos = 0;
    int n;

    void skip_ws() {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= t.size();
    }

    int parse_int() {
        size_t start = pos;
        bool neg = false;
        if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) {
            neg = t[pos] == '-';
            ++pos;
        }
        if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
            throw parse_error("expected integer", start);
        long v = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            v = v * 10 + (t[pos] - '0');
            if (v > 1000000) throw parse_error("integer too large", start);
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    }

    void expect(char c) {
        if (pos >= t.size() || t[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    // Returns the letters of one base, as written.
    std::vector<Band> parse_base() {
        size_t start = pos;
        if (t[pos] == '~') {
            ++pos;
            if (pos >= t.size()) throw parse_error("dangling '~'", start);
            std::vector<Band> inner = parse_base();
            std::vector<Band> out;
            for (auto it = inner.rbegin(); it != inner.rend(); ++it)
                out.push_back(Band{it->r, it->s, -it->sign});
            return out;
        }
        if (t[pos] == 's') {
            ++pos;
            int i = parse_int();
            if (i < 1 || i >= n) throw parse_error("sigma index out of range", start);
            return {sigma(i)};
        }
        if (t[pos] == 'a') {
            ++pos;
            expect('(');
            int r = parse_int();
            skip_ws();
            expect(',');
            skip_ws();
            int s = parse_int();
            expect(')');
            if (!(1 <= r && r < s && s <= n)) throw parse_error("band index out of range", start);
            return {band(r, s)};
        }
        if (t[pos] == 'D') {
            ++pos;
            return delta_word(n).letters;
        }
        throw parse_error("unexpected character", pos);
    }
};

}  // namespace

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 2) throw std::invalid_argument("strand count must be at least 2");
    Parser p{text, 0, strands};
    BraidWord w{strands, {}};
    while (!p.done()) {
        size_t term_start = p.pos;
        std::vector<Band> base = p.parse_base();
        int exp = 1;
        if (p.pos < p.t.size() && p.t[p.pos] == '^') {
            ++p.pos;
            exp = p.parse_int();
            if (exp == 0) throw parse_error("zero exponent", term_start);
        }
        std::vector<Band> unit = base;
        if (exp < 0) {
            std::reverse(unit.begin(), unit.end());
            for (auto& b : unit) b.sign = -b.sign;
            exp = -exp;
        }
        for (int i = 0; i < exp; ++i) w.letters.insert(w.letters.end(), unit.begin(), unit.end());
    }
    return w;
}

std::string render(const BraidWord& w) {
    std::string out;
    for (const auto& b : w.letters) {
        if (!out.empty()) out += ' ';
        if (b.sign < 0) out += '~';
        if (b.span() == 1)
            out += "s" + std::to_string(b.r);
        else
            out += "a(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")";
    }
    return out;
}

// ---------------------------------------------------------------------------

BraidWord expand_to_sigma(const BraidWord& w) {
    BraidWord out{w.n, {}};
    for (const auto& b : w.letters) {
        check_band(b, w.n);
        for (int i = b.r; i <= b.s - 2; ++i) out.letters.push_back(sigma(i));
        out.letters.push_back(sigma(b.s - 1, b.sign));
        for (int i = b.s - 2; i >= b.r; --i) out.letters.push_back(sigma(i, -1));
    }
    return out;
}

Band shift_band(const Band& b, int n, int k) {
    Band x = b;
    k = ((k % n) + n) % n;
    for (int step = 0; step < k; ++step) {
        if (x.s < n)
            x = Band{x.r + 1, x.s + 1, x.sign};
        else
            x = Band{1, x.r + 1, x.sign};
    }
    return x;
}

BraidWord conjugate_by_delta(const BraidWord& w, int k) {
    BraidWord out{w.n, {}};
    for (const auto& b : w.letters) out.letters.push_back(shift_band(b, w.n, k));
    return out;
}

bool bands_linked(const Band& a, const Band& b) {
    int r = a.r, s = a.s, t = b.r, u = b.s;
    return (r < t && t < s && s < u) || (t < r && r < u && u < s);
}

bool bands_commute(const Band& a, const Band& b) {
    long r = a.r, s = a.s, t = b.r, u = b.s;
    return (t - r) * (t - s) * (u - r) * (u - s) > 0;
}

LetterPredicates letter_predicates(const BraidWord& w) {
    if (!w.positive()) throw std::invalid_argument("letter_predicates: word not BKL-positive");
    LetterPredicates out;
    out.covers.assign(w.n - 1, false);
    for (const auto& b : w.letters) {
        out.spans.push_back(b.span());
        for (int i = b.r; i < b.s; ++i) out.covers[i - 1] = true;
    }
    for (size_t i = 0; i < w.letters.size(); ++i)
        for (size_t j = i + 1; j < w.letters.size(); ++j)
            if (bands_linked(w.letters[i], w.letters[j])) out.linked_pairs.emplace_back(i, j);
    return out;
}

bool contains(const BraidWord& w, const BraidWord& pattern) {
    if (w.n != pattern.n) throw std::invalid_argument("contains: strand counts differ");
    if (!w.positive() || !pattern.positive())
        throw std::invalid_argument("contains: requires BKL-positive words");
    size_t j = 0;
    for (const auto& b : w.letters) {
        if (j < pattern.letters.size() && b == pattern.letters[j]) ++j;
    }
    return j == pattern.letters.size();
}

int r_of_P(const BraidWord& P) {
    int best = 0;
    BraidWord target{P.n, {}};
    const BraidWord d = delta_word(P.n);
    while (true) {
        target = concat(target, d);
        if (target.letters.size() > P.letters.size() || !contains(P, target)) break;
        ++best;
    }
    return best;
}

std::vector<BraidWord> single_rewrites(const BraidWord& w) {
    std::vector<BraidWord> out;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
        const Band &x = w.letters[i], &y = w.letters[i + 1];
        if (x.sign < 0 || y.sign < 0) continue;
        auto emit = [&](Band a, Band b) {
            BraidWord v = w;
            v.letters[i] = a;
            v.letters[i + 1] = b;
            out.push_back(std::move(v));
        };
        if (bands_commute(x, y)) emit(y, x);
        // The triple relation a_{rs}a_{st} = a_{rt}a_{rs} = a_{st}a_{rt}, r<s<t.
        if (x.s == y.r) {  // (a_{rs}, a_{st})
            int r = x.r, s = x.s, t = y.s;
            emit(band(r, t), band(r, s));
            emit(band(s, t), band(r, t));
        }
        if (x.r == y.r && x.s > y.s) {  // (a_{rt}, a_{rs})
            int r = x.r, s = y.s, t = x.s;
            emit(band(r, s), band(s, t));
            emit(band(s, t), band(r, t));
        }
        if (x.s == y.s && x.r > y.r) {  // (a_{st}, a_{rt})
            int r = y.r, s = x.r, t = x.s;
            emit(band(r, s), band(s, t));
            emit(band(r, t), band(r, s));
        }
    }
    return out;
}

int r_of_P_rewrites(const BraidWord& P, int depth) {
    int best = r_of_P(P);
    std::set<std::vector<Band>> seen{
        std::vector<Band>(P.letters.begin(), P.letters.end())};
    std::vector<BraidWord> frontier{P};
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<BraidWord> next;
        for (const auto& w : frontier)
            for (auto& v : single_rewrites(w)) {
                if (!seen.insert(v.letters).second) continue;
                best = std::max(best, r_of_P(v));
                next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Dual-Garside normal form. Canonical factors correspond to non-crossing
// partitions: a block {i_1 < ... < i_k} stands for the increasing cycle
// i_1 -> i_2 -> ... -> i_k -> i_1, and the product over blocks is the
// factor's underlying permutation.

namespace {

using Ncp = std::vector<std::vector<int>>;  // sorted blocks of 0-based indices

Perm perm_of_ncp(const Ncp& p, int n) {
    Perm q = perm_id(n);
    for (const auto& blk : p) {
        for (size_t j = 0; j + 1 < blk.size(); ++j) q[blk[j]] = blk[j + 1];
        q[blk.back()] = blk.front();
    }
    return q;
}

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    // Crossing iff the merged order alternates a,b,a,b.
    std::vector<std::pair<int, int>> m;
    for (int x : a) m.emplace_back(x, 0);
    for (int x : b) m.emplace_back(x, 1);
    std::sort(m.begin(), m.end());
    int alternations = 0;
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i].second != m[i - 1].second) ++alternations;
    return alternations >= 3;
}

// Convert a permutation to its non-crossing partition if it is a simple
// element (all cycles increasing, blocks non-crossing); nullopt otherwise.
std::optional<Ncp> ncp_of_perm(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> used(n, false);
    Ncp out;
    for (int i = 0; i < n; ++i) {
        if (used[i] || p[i] == i) continue;
        std::vector<int> blk;
        int j = i;
        do {
            if (used[j]) return std::nullopt;
            used[j] = true;
            blk.push_back(j);
            j = p[j];
        } while (j != i);
        // The cycle must visit its support in increasing order starting at
        // the minimum, which is i.
        if (!std::is_sorted(blk.begin(), blk.end())) return std::nullopt;
        out.push_back(std::move(blk));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (blocks_cross(out[i], out[j])) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

Ncp ncp_meet(const Ncp& a, const Ncp& b, int n) {
    std::vector<int> ba(n, -1), bb(n, -1);
    for (size_t i = 0; i < a.size(); ++i)
        for (int x : a[i]) ba[x] = static_cast<int>(i);
    for (size_t i = 0; i < b.size(); ++i)
        for (int x : b[i]) bb[x] = static_cast<int>(i);
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int x = 0; x < n; ++x)
        if (ba[x] >= 0 && bb[x] >= 0) groups[{ba[x], bb[x]}].push_back(x);
    Ncp out;
    for (auto& [key, blk] : groups)
        if (blk.size() >= 2) out.push_back(std::move(blk));
    std::sort(out.begin(), out.end());
    return out;
}

Ncp ncp_rotate(const Ncp& p, int n, int k) {
    k = ((k % n) + n) % n;
    Ncp out;
    for (const auto& blk : p) {
        std::vector<int> nb;
        for (int x : blk) nb.push_back((x + k) % n);
        std::sort(nb.begin(), nb.end());
        out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Ncp ncp_of_perm_checked(const Perm& p) {
    auto r = ncp_of_perm(p);
    if (!r) throw std::logic_error("normal form: product left the simple elements");
    return *r;
}

bool ncp_is_delta(const Ncp& p, int n) {
    return p.size() == 1 && static_cast<int>(p[0].size()) == n;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
    const int n = w.n;
    const Perm pd = perm_delta(n);
    const Perm pd_inv = perm_inv(pd);

    // Replace x^{-1} by complement(x) * delta^{-1}, then move every
    // delta^{-1} to the front: s * d^{-1} = d^{-1} * (d s d^{-1}), and
    // conjugation by delta rotates a factor's partition.
    int inf = 0;
    std::vector<Ncp> factors;
    {
        int neg_to_right = 0;
        for (const auto& b : w.letters) check_band(b, n);
        std::vector<std::pair<Ncp, bool>> items;  // (factor, followed later)
        // First pass right to left to count the delta^{-1}s right of each item.
        std::vector<Ncp> raw;
        std::vector<int> rot;
        int count = 0;
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            const Band& b = *it;
            if (b.sign > 0) {
                raw.push_back(Ncp{{b.r - 1, b.s - 1}});
                rot.push_back(count);
            } else {
                // x^{-1} = (x^{-1} delta) * delta^{-1}; the complement factor
                // sits where x was, so it sees `count` deltas to its right
                // after this one moves past it.
                ++count;
                Perm comp_perm = comp(perm_band(band(b.r, b.s), n), pd);
                raw.push_back(ncp_of_perm_checked(comp_perm));
                rot.push_back(count);
            }
        }
        neg_to_right = count;
        inf = -neg_to_right;
        for (size_t i = raw.size(); i-- > 0;) {
            Ncp f = ncp_rotate(raw[i], n, rot[i]);
            if (!f.empty()) factors.push_back(std::move(f));
        }
    }

    // Left-greedy bubbling: for adjacent factors (A, B), move
    // t = meet(complement(A), B) from B into A.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < factors.size(); ++i) {
            Perm pa = perm_of_ncp(factors[i], n);
            Ncp comp_a = ncp_of_perm_checked(comp(perm_inv(pa), pd));
            Ncp t = ncp_meet(comp_a, factors[i + 1], n);
            if (t.empty()) continue;
            Perm pt = perm_of_ncp(t, n);
            factors[i] = ncp_of_perm_checked(comp(pa, pt));
            factors[i + 1] =
                ncp_of_perm_checked(comp(perm_inv(pt), perm_of_ncp(factors[i + 1], n)));
            changed = true;
        }
        size_t before = factors.size();
        factors.erase(std::remove_if(factors.begin(), factors.end(),
                                     [](const Ncp& f) { return f.empty(); }),
                      factors.end());
        while (!factors.empty() && ncp_is_delta(factors.front(), n)) {
            factors.erase(factors.begin());
            ++inf;
        }
        if (factors.size() != before) changed = true;
    }

    NormalForm nf;
    nf.n = n;
    nf.infimum = inf;
    for (const auto& f : factors) {
        std::vector<std::vector<int>> blocks;
        for (const auto& blk : f) {
            std::vector<int> b1;
            for (int x : blk) b1.push_back(x + 1);
            blocks.push_back(std::move(b1));
        }
        nf.factors.push_back(std::move(blocks));
    }
    return nf;
}

bool equal(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("equal: strand counts differ");
    return normal_form(a) == normal_form(b);
}

// ---------------------------------------------------------------------------

std::optional<BraidWord> reduce_index(const BraidWord& w) {
    const int n = w.n;
    const BraidWord d2 = word_pow(delta_word(n), 2);
    if (w.letters.size() < d2.letters.size() ||
        !std::equal(d2.letters.begin(), d2.letters.end(), w.letters.begin()))
        throw std::invalid_argument("reduce_index: input is not delta^2 P");
    BraidWord P{n, {w.letters.begin() + d2.letters.size(), w.letters.end()}};
    if (!P.positive()) throw std::invalid_argument("reduce_index: P not BKL-positive");
    if (n == 2) return std::nullopt;
    auto preds = letter_predicates(P);
    bool covers1 = !P.letters.empty() && preds.covers[0];
    bool coversTop = !P.letters.empty() && preds.covers[n - 2];
    if (P.letters.empty()) covers1 = coversTop = false;

    auto shift_down_all = [&](const BraidWord& v) {
        BraidWord out{n - 1, {}};
        for (const auto& b : v.letters) out.letters.push_back(band(b.r - 1, b.s - 1, b.sign));
        return out;
    };

    if (!covers1) {
        // delta^2 = (s2 s1)(s2...s_{n-1})^2, so w ~ (s2...s_{n-1})^2 P s2 s1
        // with a single s1; destabilize strand 1 and shift indices down.
        BraidWord tail{n, {}};
        for (int i = 2; i < n; ++i) tail.letters.push_back(sigma(i));
        BraidWord v = concat(concat(word_pow(tail, 2), P), BraidWord{n, {sigma(2)}});
        return shift_down_all(v);
    }
    if (!coversTop) {
        // delta^2 = (s1...s_{n-2})^2 s_{n-1} s_{n-2}, so
        // w ~ s_{n-2} P (s1...s_{n-2})^2 s_{n-1}; destabilize strand n.
        BraidWord head{n, {}};
        for (int i = 1; i <= n - 2; ++i) head.letters.push_back(sigma(i));
        BraidWord v = concat(concat(BraidWord{n, {sigma(n - 2)}}, P), word_pow(head, 2));
        BraidWord out{n - 1, v.letters};
        return out;
    }
    return std::nullopt;
}

}  // namespace sqp
