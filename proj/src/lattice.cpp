#include "sqp/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sqp {

SymmetricForm make_form(Mat gram) {
    size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw std::invalid_argument("form: not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("form: not symmetric");
    return SymmetricForm{std::move(gram)};
}

Inertia inertia(const SymmetricForm& f) {
    int n = f.rank();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(f.gram[i][j]);
    Inertia out;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int j = k + 1; j < n; ++j)
                if (a[j][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv >= 0) {
                std::swap(a[k], a[piv]);
                for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][piv]);
            } else {
                int off = -1;
                for (int j = k + 1; j < n; ++j)
                    if (a[k][j] != 0) {
                        off = j;
                        break;
                    }
                if (off < 0) {
                    ++out.zero;
                    continue;
                }
                // Diagonal block is zero: add row/col `off` onto k to expose
                // a nonzero diagonal entry (2*a[k][off]).
                for (int i = 0; i < n; ++i) a[k][i] += a[off][i];
                for (int i = 0; i < n; ++i) a[i][k] += a[i][off];
            }
        }
        Rat p = a[k][k];
        if (p > 0)
            ++out.pos;
        else
            ++out.neg;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat factor = a[i][k] / p;
            for (int j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            for (int j = k; j < n; ++j) a[j][i] -= factor * a[j][k];
        }
    }
    return out;
}

Definiteness definiteness(const SymmetricForm& f) {
    Inertia in = inertia(f);
    if (in.zero > 0) return Definiteness::degenerate;
    if (in.pos == 0) return Definiteness::negative_definite;
    if (in.neg == 0) return Definiteness::positive_definite;
    return Definiteness::indefinite;
}

std::string definiteness_name(Definiteness d) {
    switch (d) {
        case Definiteness::negative_definite: return "negative_definite";
        case Definiteness::positive_definite: return "positive_definite";
        case Definiteness::indefinite: return "indefinite";
        case Definiteness::degenerate: return "degenerate";
    }
    return "?";
}

Int det(const SymmetricForm& f) {
    // Bareiss fraction-free elimination with row pivoting.
    int n = f.rank();
    if (n == 0) return 1;
    Mat a = f.gram;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_even(const SymmetricForm& f) {
    for (int i = 0; i < f.rank(); ++i)
        if (f.gram[i][i] % 2 != 0) return false;
    return true;
}

namespace {

// LDL^T data for a positive definite rational matrix.
struct Ldl {
    int n;
    std::vector<std::vector<Rat>> l;  // unit lower triangular
    std::vector<Rat> d;
};

Ldl ldl_decompose(const Mat& a) {
    int n = static_cast<int>(a.size());
    Ldl out{n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, 0)), std::vector<Rat>(n, 0)};
    for (int j = 0; j < n; ++j) {
        Rat dj(a[j][j]);
        for (int k = 0; k < j; ++k) dj -= out.l[j][k] * out.l[j][k] * out.d[k];
        if (dj <= 0) throw std::invalid_argument("not positive definite");
        out.d[j] = dj;
        out.l[j][j] = 1;
        for (int i = j + 1; i < n; ++i) {
            Rat v(a[i][j]);
            for (int k = 0; k < j; ++k) v -= out.l[i][k] * out.l[j][k] * out.d[k];
            out.l[i][j] = v / dj;
        }
    }
    return out;
}

// All integer v != 0 with v^T A v <= bound, A positive definite; one
// representative per +/- pair is NOT taken: both signs appear.
void enumerate_bounded(const Ldl& q, const Rat& bound, std::vector<std::vector<Int>>& out) {
    int n = q.n;
    std::vector<Int> x(n, 0);
    // Levels from n-1 down to 0; c[i] = sum_{j>i} L[j][i] * x[j].
    std::vector<Rat> used(n + 1, 0);  // used[i] = sum_{k>i} d_k (x_k + c_k)^2
    std::vector<Rat> c(n, 0);
    auto compute_c = [&](int i) {
        Rat s = 0;
        for (int j = i + 1; j < n; ++j) s += q.l[j][i] * Rat(x[j]);
        return s;
    };
    // Depth-first over x[n-1], ..., x[0].
    struct Frame {
        Int lo, hi, cur;
    };
    std::vector<Frame> stack(n);
    int level = n - 1;
    bool descending = true;
    while (level < n) {
        if (level < 0) {
            bool nonzero = std::any_of(x.begin(), x.end(), [](const Int& v) { return v != 0; });
            if (nonzero) out.push_back(x);
            ++level;
            descending = false;
        } else if (descending) {
            c[level] = compute_c(level);
            Rat rem = bound - used[level + 1];
            // d * (x + c)^2 <= rem; scan integers around -c.
            Rat target = rem / q.d[level];
            Int base = boost::multiprecision::numerator(Rat(-c[level])) /
                       boost::multiprecision::denominator(Rat(-c[level]));
            // Make base = floor(-c).
            if (Rat(base) > -c[level]) base -= 1;
            auto ok = [&](const Int& v) {
                Rat t = Rat(v) + c[level];
                return t * t <= target;
            };
            Int lo = base, hi = base + 1;
            if (!ok(lo) && !ok(hi)) {
                ++level;
                descending = false;
                continue;
            }
            if (ok(lo)) {
                while (ok(lo - 1)) --lo;
            } else {
                lo = hi;
            }
            if (ok(hi)) {
                while (ok(hi + 1)) ++hi;
            } else {
                hi = lo;
            }
            stack[level] = {lo, hi, lo};
            x[level] = lo;
            Rat t = Rat(lo) + c[level];
            used[level] = used[level + 1] + q.d[level] * t * t;
            --level;
        } else {
            // Advance x[level].
            if (stack[level].cur < stack[level].hi) {
                stack[level].cur += 1;
                x[level] = stack[level].cur;
                Rat t = Rat(x[level]) + c[level];
                used[level] = used[level + 1] + q.d[level] * t * t;
                descending = true;
                --level;
            } else {
                x[level] = 0;
                ++level;
            }
        }
    }
}

std::vector<std::vector<Int>> short_vectors(const Mat& a_posdef, const Rat& bound) {
    Ldl q = ldl_decompose(a_posdef);
    std::vector<std::vector<Int>> out;
    enumerate_bounded(q, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

Int norm_of(const Mat& a, const std::vector<Int>& v) {
    Int s = 0;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += v[i] * a[i][j] * v[j];
    return s;
}

Int pairing(const Mat& a, const std::vector<Int>& v, const std::vector<Int>& w) {
    Int s = 0;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += v[i] * a[i][j] * w[j];
    return s;
}

// Rank over Q of a set of integer vectors.
int rational_rank(std::vector<std::vector<Rat>> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Index in Z^n of the lattice generated by the given rows; 0 if the rows do
// not span a finite-index sublattice.
Int lattice_index(std::vector<std::vector<Int>> rows, int n) {
    // Integer row echelon: row operations preserve the row lattice.
    Int d = 1;
    int r = 0;
    for (int c = 0; c < n; ++c) {
        // Euclid across the rows below r until one nonzero entry remains.
        while (true) {
            int best = -1;
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 &&
                    (best < 0 || boost::multiprecision::abs(rows[i][c]) <
                                     boost::multiprecision::abs(rows[best][c])))
                    best = static_cast<int>(i);
            if (best < 0) break;
            std::swap(rows[r], rows[best]);
            bool cleared = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];
                for (int j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (static_cast<size_t>(r) >= rows.size() || rows[r][c] == 0) return 0;
        d *= rows[r][c];
        ++r;
    }
    return boost::multiprecision::abs(d);
}

}  // namespace

std::vector<std::vector<Int>> enumerate_roots(const SymmetricForm& f) {
    if (definiteness(f) != Definiteness::negative_definite)
        throw std::invalid_argument("enumerate_roots: form not negative definite");
    if (!is_even(f)) throw std::invalid_argument("enumerate_roots: form not even");
    Mat a = f.gram;
    for (auto& row : a)
        for (auto& v : row) v = -v;
    auto vecs = short_vectors(a, Rat(2));
    std::vector<std::vector<Int>> out;
    for (auto& v : vecs)
        if (norm_of(a, v) == 2) out.push_back(std::move(v));
    return out;
}

std::string RootLatticeType::str() const {
    std::string s;
    for (const auto& c : components) {
        if (!s.empty()) s += " + ";
        s += c;
    }
    return s.empty() ? "0" : s;
}

RootLatticeType classify_root_lattice(const SymmetricForm& f) {
    int n = f.rank();
    if (n == 0) return {};
    auto roots = enumerate_roots(f);
    if (lattice_index(roots, n) != 1)
        throw std::invalid_argument("classify_root_lattice: roots do not span the lattice");
    // Connected components under non-orthogonality.
    std::vector<int> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (pairing(f.gram, roots[i], roots[j]) != 0) parent[find(i)] = find(j);
    std::map<int, std::vector<size_t>> comps;
    for (size_t i = 0; i < roots.size(); ++i) comps[find(static_cast<int>(i))].push_back(i);
    std::vector<std::string> tags;
    for (const auto& [rep, idxs] : comps) {
        std::vector<std::vector<Rat>> rows;
        for (size_t i : idxs) {
            std::vector<Rat> r;
            for (const auto& v : roots[i]) r.emplace_back(v);
            rows.push_back(std::move(r));
        }
        int rank = rational_rank(rows);
        size_t count = idxs.size();
        std::string tag;
        if (count == static_cast<size_t>(rank) * (rank + 1))
            tag = "A" + std::to_string(rank);
        else if (rank >= 4 && count == 2u * rank * (rank - 1))
            tag = "D" + std::to_string(rank);
        else if (rank == 6 && count == 72)
            tag = "E6";
        else if (rank == 7 && count == 126)
            tag = "E7";
        else if (rank == 8 && count == 240)
            tag = "E8";
        else
            throw std::invalid_argument("classify_root_lattice: unrecognized component");
        tags.push_back(tag);
    }
    std::sort(tags.begin(), tags.end());
    RootLatticeType t{tags};
    // Cross-check: component ranks sum to the form's rank.
    int total = 0;
    for (const auto& tag : t.components) total += std::stoi(tag.substr(1));
    if (total != n) throw std::invalid_argument("classify_root_lattice: rank mismatch");
    return t;
}

namespace {

// Backtracking isometry search between positive definite forms.
bool isometric_posdef(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Rat max_norm(0);
    for (int i = 0; i < n; ++i) max_norm = std::max(max_norm, Rat(a[i][i]));
    auto candidates = short_vectors(b, max_norm);
    std::vector<std::vector<Int>> chosen;
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) return true;
        for (const auto& v : candidates) {
            if (norm_of(b, v) != a[i][i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pairing(b, chosen[j], v) != a[j][i]) ok = false;
            if (!ok) continue;
            chosen.push_back(v);
            if (place(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!place(0)) return false;
    // The image vectors must form a basis of Z^n.
    return lattice_index(chosen, n) == 1;
}

// Saturated integer kernel {x : a x = 0} of a symmetric integer matrix,
// via unimodular column reduction a V = [B | 0]: the columns of V hitting
// the zero block form a basis of the kernel lattice.
std::vector<std::vector<Int>> integer_kernel(const Mat& a_in) {
    int n = static_cast<int>(a_in.size());
    Mat a = a_in;
    std::vector<std::vector<Int>> v(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) v[i][i] = 1;
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    for (int row = 0; row < n; ++row) {
        while (true) {
            int best = -1;
            for (int c : active)
                if (a[row][c] != 0 &&
                    (best < 0 || boost::multiprecision::abs(a[row][c]) <
                                     boost::multiprecision::abs(a[row][best])))
                    best = c;
            if (best < 0) break;
            bool cleared = true;
            for (int c : active) {
                if (c == best || a[row][c] == 0) continue;
                Int q = a[row][c] / a[row][best];
                for (int i = 0; i < n; ++i) {
                    a[i][c] -= q * a[i][best];
                    v[i][c] -= q * v[i][best];
                }
                if (a[row][c] != 0) cleared = false;
            }
            if (cleared) {
                std::erase(active, best);
                break;
            }
        }
    }
    std::vector<std::vector<Int>> kernel;
    for (int c : active) {
        std::vector<Int> w(n);
        for (int i = 0; i < n; ++i) w[i] = v[i][c];
        kernel.push_back(std::move(w));
    }
    return kernel;
}

// Given k independent rows spanning a saturated sublattice of Z^n, return
// n-k rows completing them to a basis of Z^n. Column-reduce K to lower
// triangular [L | 0] via unimodular C (so K C = [L | 0]); since the lattice
// is saturated, det L = +-1, and the rows e_j C^{-1} for j >= k complete the
// basis: stacking gives [K; U] C = [[L, 0], [0, I]], unimodular. C^{-1} is
// tracked by mirroring each column op E (C <- C E) as a left multiplication
// C^{-1} <- E^{-1} C^{-1}.
std::vector<std::vector<Int>> complete_basis(std::vector<std::vector<Int>> kk, int n) {
    int k = static_cast<int>(kk.size());
    std::vector<std::vector<Int>> cinv(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) cinv[i][i] = 1;
    auto col_addmul = [&](int dst, int src, const Int& f) {
        // E = I + f e_src e_dst^T; E^{-1} subtracts f * row dst from row src.
        for (int i = 0; i < k; ++i) kk[i][dst] += f * kk[i][src];
        for (int j = 0; j < n; ++j) cinv[src][j] -= f * cinv[dst][j];
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < k; ++i) std::swap(kk[i][a], kk[i][b]);
        std::swap(cinv[a], cinv[b]);
    };
    auto col_neg = [&](int a) {
        for (int i = 0; i < k; ++i) kk[i][a] = -kk[i][a];
        for (int j = 0; j < n; ++j) cinv[a][j] = -cinv[a][j];
    };
    for (int row = 0; row < k; ++row) {
        int c0 = -1;
        for (int c = row; c < n; ++c)
            if (kk[row][c] != 0) {
                c0 = c;
                break;
            }
        if (c0 < 0) throw std::logic_error("complete_basis: dependent rows");
        col_swap(row, c0);
        bool again = true;
        while (again) {
            again = false;
            for (int c = row + 1; c < n; ++c) {
                if (kk[row][c] == 0) continue;
                if (boost::multiprecision::abs(kk[row][c]) <
                    boost::multiprecision::abs(kk[row][row]))
                    col_swap(row, c);
                Int q = kk[row][c] / kk[row][row];
                if (q != 0) col_addmul(c, row, -q);
                if (kk[row][c] != 0) again = true;
            }
        }
        if (kk[row][row] < 0) col_neg(row);
        if (kk[row][row] != 1) throw std::logic_error("complete_basis: not saturated");
    }
    std::vector<std::vector<Int>> completion(cinv.begin() + k, cinv.end());
    return completion;
}

}  // namespace

bool congruent(const SymmetricForm& f, const SymmetricForm& g) {
    if (f.rank() != g.rank()) return false;
    if (f.rank() == 0) return true;
    if (det(f) != det(g)) return false;
    Inertia inf_ = inertia(f), ing = inertia(g);
    if (!(inf_ == ing)) return false;
    if (is_even(f) != is_even(g)) return false;
    if (inf_.zero > 0) {
        // Split off the radical on both sides and compare the quotients.
        auto reduce = [](const SymmetricForm& h) {
            auto kernel = integer_kernel(h.gram);
            auto comp = complete_basis(kernel, h.rank());
            int m = static_cast<int>(comp.size());
            Mat q(m, std::vector<Int>(m, 0));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) q[i][j] = pairing(h.gram, comp[i], comp[j]);
            return SymmetricForm{q};
        };
        return congruent(reduce(f), reduce(g));
    }
    if (inf_.pos == 0 || inf_.neg == 0) {
        Mat a = f.gram, b = g.gram;
        if (inf_.pos == 0) {
            for (auto& row : a)
                for (auto& x : row) x = -x;
            for (auto& row : b)
                for (auto& x : row) x = -x;
        }
        return isometric_posdef(a, b);
    }
    throw std::runtime_error("congruent: undecided for indefinite forms with equal invariants");
}

SymmetricForm tree_gram(int vertices, const std::vector<std::pair<int, int>>& edges) {
    Mat g(vertices, std::vector<Int>(vertices, 0));
    for (int i = 0; i < vertices; ++i) g[i][i] = -2;
    for (auto [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || a >= vertices || b >= vertices)
            throw std::invalid_argument("tree_gram: bad edge");
        g[a][b] = 1;
        g[b][a] = 1;
    }
    return SymmetricForm{std::move(g)};
}

SymmetricForm ade_gram(const std::string& tag) {
    if (tag.size() < 2) throw std::invalid_argument("ade_gram: bad tag");
    char fam = tag[0];
    int m = std::stoi(tag.substr(1));
    std::vector<std::pair<int, int>> edges;
    if (fam == 'A') {
        for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
        return tree_gram(m, edges);
    }
    if (fam == 'D') {
        if (m < 4) throw std::invalid_argument("ade_gram: D needs m >= 4");
        for (int i = 0; i + 1 < m - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(m - 3, m - 1);
        return tree_gram(m, edges);
    }
    if (fam == 'E') {
        if (m < 6 || m > 8) throw std::invalid_argument("ade_gram: E needs 6..8");
        // Path 0-1-2-...-(m-2), branch vertex m-1 attached to node 2.
        for (int i = 0; i + 1 < m - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(2, m - 1);
        return tree_gram(m, edges);
    }
    throw std::invalid_argument("ade_gram: bad family");
}

}  // namespace sqp
