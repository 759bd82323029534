#include "sqp/three_braids.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "sqp/invariants.hpp"
#include "sqp/lattice.hpp"
#include "sqp/seifert.hpp"

namespace sqp {

namespace {

// Letter codes: 0 = sigma1, 1 = a13, 2 = sigma2. Conjugation by delta_3^{-1}
// sends sigma1 -> a13 -> sigma2 -> sigma1, i.e. +1 mod 3. A pair (x, x-1 mod 3)
// in word order multiplies to delta_3.
int code_of(const Band& b) {
    if (b.sign != 1) throw std::invalid_argument("three_braids: negative letter");
    if (b.r == 1 && b.s == 2) return 0;
    if (b.r == 1 && b.s == 3) return 1;
    if (b.r == 2 && b.s == 3) return 2;
    throw std::invalid_argument("three_braids: letter outside B_3");
}

Band decode(int c) { return c == 0 ? band(1, 2) : c == 1 ? band(1, 3) : band(2, 3); }

using State = std::pair<int, std::vector<int>>;

constexpr size_t kSearchCap = 200000;

// All words delta_3^k L reachable from w by delta-absorption and conjugation.
std::set<State> search_states(const BraidWord& w) {
    if (w.n != 3) throw std::invalid_argument("three_braids: word must have 3 strands");
    std::vector<int> start;
    for (const auto& b : w.letters) start.push_back(code_of(b));
    std::set<State> visited;
    std::deque<State> queue;
    auto push = [&](int k, std::vector<int> L) {
        State st{k, std::move(L)};
        if (visited.count(st)) return;
        if (visited.size() >= kSearchCap)
            throw std::runtime_error("three_braids: search cap exceeded");
        visited.insert(st);
        queue.push_back(std::move(st));
    };
    push(0, start);
    while (!queue.empty()) {
        auto [k, L] = queue.front();
        queue.pop_front();
        int len = static_cast<int>(L.size());
        // Absorb an adjacent pair equal to delta_3 and push it left past the
        // prefix: u delta v = delta shift(u) v.
        for (int i = 0; i + 1 < len; ++i) {
            if (L[i + 1] != (L[i] + 2) % 3) continue;
            std::vector<int> next;
            for (int j = 0; j < i; ++j) next.push_back((L[j] + 1) % 3);
            for (int j = i + 2; j < len; ++j) next.push_back(L[j]);
            push(k + 1, std::move(next));
        }
        if (len > 0) {
            // Cycle the first letter to the back: conjugation by (delta^k x)^{-1}.
            std::vector<int> fb;
            for (int j = 1; j < len; ++j) fb.push_back((L[j] + k) % 3);
            fb.push_back(L[0]);
            push(k, std::move(fb));
            // Cycle the last letter to the front: conjugation by that letter.
            std::vector<int> bf;
            bf.push_back((L[len - 1] + k) % 3);
            for (int j = 0; j + 1 < len; ++j) bf.push_back(L[j]);
            push(k, std::move(bf));
        }
        // Conjugation by delta^{+-1}.
        for (int shift : {1, 2}) {
            std::vector<int> g;
            for (int l : L) g.push_back((l + shift) % 3);
            push(k, std::move(g));
        }
    }
    return visited;
}

struct Parsed {
    std::vector<Syllable> syllables;
    int tail_p = 0, tail_q = 0;
};

// A word parses when its runs cycle sigma1, a13, sigma2 starting at sigma1;
// complete triples are syllables, a trailing partial run pair is the tail.
std::optional<Parsed> parse_codes(const std::vector<int>& L) {
    std::vector<std::pair<int, int>> runs;
    for (int c : L) {
        if (!runs.empty() && runs.back().first == c)
            ++runs.back().second;
        else
            runs.push_back({c, 1});
    }
    for (size_t i = 0; i < runs.size(); ++i)
        if (runs[i].first != static_cast<int>(i % 3)) return std::nullopt;
    Parsed out;
    size_t full = runs.size() / 3;
    for (size_t i = 0; i < full; ++i)
        out.syllables.push_back(
            {runs[3 * i].second, runs[3 * i + 1].second, runs[3 * i + 2].second});
    if (runs.size() % 3 >= 1) out.tail_p = runs[3 * full].second;
    if (runs.size() % 3 == 2) out.tail_q = runs[3 * full + 1].second;
    return out;
}

int direct_signature(const BraidWord& w) {
    Inertia in = inertia(symmetrize(generic_seifert_matrix(w)));
    return in.pos - in.neg;
}

// epsilon(d) in {-1,0,1} with epsilon(d) = d mod 2; even d forces 0, odd d is
// resolved once by two witness words and cached.
int epsilon_of(int d) {
    if (d % 2 == 0) return 0;
    static std::map<int, int> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    BraidWord w1 = word_pow(delta_word(3), 3 * d);
    w1.letters.push_back(sigma(1, -1));
    int eps = direct_signature(w1) + 4 * d;  // 1 - 4d - 1 + eps = sigma(w1)
    if (eps != 1 && eps != -1) throw std::logic_error("epsilon: witness out of range");
    BraidWord w2 = word_pow(delta_word(3), 3 * d);
    w2.letters.push_back(sigma(1, -1));
    w2.letters.push_back(sigma(1, -1));
    if (direct_signature(w2) != 1 - 4 * d + eps)
        throw std::logic_error("epsilon: witnesses disagree");
    std::lock_guard<std::mutex> lock(mu);
    cache[d] = eps;
    return eps;
}

}  // namespace

BraidWord MinimalRep3::word() const {
    BraidWord w = word_pow(delta_word(3), k);
    auto run = [&](int c, int count) {
        for (int i = 0; i < count; ++i) w.letters.push_back(decode(c));
    };
    for (const auto& s : syllables) {
        run(0, s.p);
        run(1, s.q);
        run(2, s.r);
    }
    run(0, tail_p);
    run(1, tail_q);
    return w;
}

BraidWord MurasugiForm::word() const {
    BraidWord w = word_pow(delta_word(3), 3 * d);
    for (int ai : a) {
        w.letters.push_back(sigma(1, -1));
        for (int i = 0; i < ai; ++i) w.letters.push_back(sigma(2));
    }
    return w;
}

std::string ThreeBraidClass::str() const {
    switch (kind) {
        case Kind::trivial_or_split:
            return "trivial or split";
        case Kind::composite:
            return "composite T(2," + std::to_string(p) + ") # T(2," + std::to_string(q) + ")";
        case Kind::montesinos:
            return "Montesinos(1; 1/" + std::to_string(p) + ", 1/" + std::to_string(q) +
                   ", 1/" + std::to_string(r) + ")";
        case Kind::root_lattice:
            return lattice;
        case Kind::indefinite:
            return "indefinite";
    }
    return "";
}

BraidWord b_pqr(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("b_pqr: exponents must be >= 1");
    BraidWord w{3, {}};
    for (int i = 0; i < p; ++i) w.letters.push_back(band(1, 2));
    for (int i = 0; i < q; ++i) w.letters.push_back(band(1, 3));
    for (int i = 0; i < r; ++i) w.letters.push_back(band(2, 3));
    return w;
}

MinimalRep3 minimal_representative(const BraidWord& w) {
    auto states = search_states(w);
    int max_k = 0;
    for (const auto& [k, L] : states) max_k = std::max(max_k, k);
    const std::vector<int>* best = nullptr;
    std::optional<Parsed> best_parsed;
    for (const auto& [k, L] : states) {
        if (k != max_k) continue;
        auto parsed = parse_codes(L);
        if (!parsed) continue;
        if (!best || parsed->syllables.size() < best_parsed->syllables.size() ||
            (parsed->syllables.size() == best_parsed->syllables.size() && L < *best)) {
            best = &L;
            best_parsed = parsed;
        }
    }
    if (!best) throw std::logic_error("minimal_representative: no parseable word at maximal k");
    MinimalRep3 rep;
    rep.k = max_k;
    rep.syllables = best_parsed->syllables;
    rep.tail_p = best_parsed->tail_p;
    rep.tail_q = best_parsed->tail_q;
    return rep;
}

MurasugiForm murasugi_form(const MinimalRep3& rep) {
    int s = static_cast<int>(rep.syllables.size());
    MurasugiForm m;
    for (const auto& syl : rep.syllables) {
        m.a.push_back(syl.p - 1);
        m.a.push_back(syl.q - 1);
        m.a.push_back(syl.r - 1);
    }
    int r3 = rep.k / 3, km = rep.k % 3;
    BraidWord c{3, {}};
    if (km == 0) {
        if (rep.tail_p != 0 || rep.tail_q != 0)
            throw std::invalid_argument("murasugi_form: no such form for k = 0 mod 3 with tail");
        m.d = r3 + s;
        if (s > 0) c.letters = {sigma(2)};
    } else if (km == 1) {
        if (rep.tail_p == 0 || rep.tail_q == 0)
            throw std::invalid_argument("murasugi_form: k = 1 mod 3 requires a two-part tail");
        m.d = r3 + s + 1;
        m.a.push_back(rep.tail_p - 1);
        m.a.push_back(rep.tail_q - 1);
        c.letters = {sigma(1), sigma(2), sigma(1), sigma(2), band(1, 3)};
    } else {
        if (rep.tail_q != 0)
            throw std::invalid_argument("murasugi_form: k = 2 mod 3 forbids an a13 tail");
        if (rep.tail_p == 0)
            throw std::invalid_argument("murasugi_form: k = 2 mod 3 requires a sigma1 tail");
        m.d = r3 + s + 1;
        m.a.push_back(rep.tail_p - 1);
        c.letters = {sigma(1), sigma(2), sigma(1)};
    }
    m.conjugator = c;
    BraidWord b = rep.word(), target = m.word();
    if (!equal(target, concat(concat(c, b), inverse_word(c)))) {
        BraidWord ci = inverse_word(c);
        if (equal(target, concat(concat(ci, b), c)))
            m.conjugator = ci;
        else
            throw std::logic_error("murasugi_form: conjugacy verification failed");
    }
    return m;
}

int signature_closed_form(const MurasugiForm& m) {
    int n = static_cast<int>(m.a.size());
    // With no blocks the word is the torus link of delta_3^{3d}.
    if (n == 0) return -4 * m.d;
    int sum = 0;
    bool nonzero = false;
    for (int ai : m.a) {
        if (ai < 0) throw std::invalid_argument("signature_closed_form: negative exponent");
        sum += ai;
        if (ai) nonzero = true;
    }
    if (nonzero) return n - 4 * m.d - sum;
    return n - 4 * m.d - 1 + epsilon_of(m.d);
}

ThreeBraidClass classify_definite_3braid(const BraidWord& w) {
    MinimalRep3 rep = minimal_representative(w);
    int k = rep.k, s = static_cast<int>(rep.syllables.size());
    int tp = rep.tail_p, tq = rep.tail_q;
    ThreeBraidClass out;
    if (s == 0) {
        if (tp == 0) {
            if (k <= 1)
                out.kind = ThreeBraidClass::Kind::trivial_or_split;
            else if (k <= 5) {
                out.kind = ThreeBraidClass::Kind::root_lattice;
                out.lattice = k == 2 ? "A2" : k == 3 ? "D4" : k == 4 ? "E6" : "E8";
            }
        } else if (tq > 0) {
            if (k == 1) {
                out.kind = ThreeBraidClass::Kind::composite;
                out.p = std::min(tp, tq) + 1;
                out.q = std::max(tp, tq) + 1;
            }
        } else {
            if (k == 0)
                out.kind = ThreeBraidClass::Kind::trivial_or_split;
            else if (k == 1 || k == 2 || k == 3) {
                out.kind = ThreeBraidClass::Kind::root_lattice;
                int m = k == 1 ? tp : k == 2 ? tp + 2 : tp + 4;
                out.lattice = (k == 3 ? "D" : "A") + std::to_string(m);
            } else if (k == 4 && tp == 1) {
                out.kind = ThreeBraidClass::Kind::root_lattice;
                out.lattice = "E7";
            }
        }
    } else if (k == 0 && s == 1 && tp == 0) {
        out.kind = ThreeBraidClass::Kind::montesinos;
        int v[3] = {rep.syllables[0].p, rep.syllables[0].q, rep.syllables[0].r};
        std::sort(v, v + 3);
        out.p = v[0];
        out.q = v[1];
        out.r = v[2];
    }
    if (out.kind == ThreeBraidClass::Kind::root_lattice) {
        auto f = symmetrize(qp_seifert_matrix(rep.word()));
        if (!(classify_root_lattice(f) == RootLatticeType{{out.lattice}}))
            throw std::logic_error("classify_definite_3braid: lattice cross-check failed");
    } else if (out.kind == ThreeBraidClass::Kind::montesinos ||
               out.kind == ThreeBraidClass::Kind::composite) {
        if (!is_definite_link(rep.word()))
            throw std::logic_error("classify_definite_3braid: definiteness cross-check failed");
    }
    return out;
}

std::vector<LspaceRow> lspace_table(int max_pqr, int max_n) {
    if (max_pqr < 1 || max_n < 1) throw std::invalid_argument("lspace_table: bounds must be >= 1");
    std::vector<LspaceRow> rows;
    for (int p = 1; p <= max_pqr; ++p)
        for (int q = p; q <= max_pqr; ++q)
            for (int r = q; r <= max_pqr; ++r) {
                LspaceRow row{p, q, r, nabla_pqr(p, q, r), alexander(b_pqr(p, q, r)), 0};
                for (int n = 2; n <= max_n; ++n)
                    if (lspace_obstructed(row.delta, n).obstructed) {
                        row.least_obstructed_n = n;
                        break;
                    }
                rows.push_back(std::move(row));
            }
    return rows;
}

std::optional<BraidWord> positive_braid_form(const BraidWord& w) {
    auto states = search_states(w);
    int max_k = 0;
    for (const auto& [k, L] : states) max_k = std::max(max_k, k);
    const std::vector<int>* best = nullptr;
    for (const auto& [k, L] : states) {
        if (k != max_k) continue;
        if (std::find(L.begin(), L.end(), 1) != L.end()) continue;
        if (!best || L < *best) best = &L;
    }
    if (!best) return std::nullopt;
    BraidWord out = word_pow(delta_word(3), max_k);
    for (int c : *best) out.letters.push_back(decode(c));
    return out;
}

}  // namespace sqp
