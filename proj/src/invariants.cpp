#include "sqp/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sqp {

namespace {

bool has_delta_prefix(const BraidWord& w) {
    if (w.letters.size() < static_cast<size_t>(w.n - 1)) return false;
    for (int i = 1; i < w.n; ++i)
        if (w.letters[i - 1] != sigma(i)) return false;
    return true;
}

SeifertMatrix seifert_of(const BraidWord& w) {
    if (w.positive() && has_delta_prefix(w) && surface_data(w).connected())
        return qp_seifert_matrix(w);
    return generic_seifert_matrix(w);
}

IntPoly normalize_alexander(IntPoly d) {
    if (d.is_zero()) return d;
    size_t shift = 0;
    while (d[static_cast<int>(shift)] == 0) ++shift;
    std::vector<Int> c(d.coeffs().begin() + shift, d.coeffs().end());
    IntPoly out{std::move(c)};
    if (out.leading() < 0) out = -out;
    return out;
}

}  // namespace

IntPoly poly_det(std::vector<std::vector<IntPoly>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return IntPoly::constant(1);
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return IntPoly{};
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                IntPoly q;
                if (!IntPoly::div_exact(num, prev, q))
                    throw std::logic_error("poly_det: inexact division");
                a[i][j] = std::move(q);
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IntPoly alexander(const BraidWord& w) {
    SeifertMatrix s = seifert_of(w);
    int m = s.size();
    std::vector<std::vector<IntPoly>> a(m, std::vector<IntPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a[i][j] = IntPoly::constant(s.entries[i][j]) -
                      IntPoly::monomial(s.entries[j][i], 1);
    return normalize_alexander(poly_det(std::move(a)));
}

IntPoly conway_from_alexander(const IntPoly& delta) {
    if (delta.is_zero()) throw std::invalid_argument("conway: zero polynomial");
    int d = delta.degree();
    // Laurent coefficients of t^{-d} * delta(t^2), exponents -d..d.
    std::vector<Int> lau(2 * d + 1, 0);
    for (int i = 0; i <= d; ++i) lau[2 * i - d + d] = delta[i];
    // Peel off c_k * (t - 1/t)^k from the top down.
    std::vector<Int> c(d + 1, 0);
    for (int k = d; k >= 0; --k) {
        Int ck = lau[k + d];
        if (ck == 0) continue;
        c[k] = ck;
        // (t - 1/t)^k has coefficient binom(k, j) * (-1)^j at exponent k - 2j.
        Int binom = 1;
        for (int j = 0; j <= k; ++j) {
            Int coeff = (j % 2 == 0) ? binom : -binom;
            lau[k - 2 * j + d] -= ck * coeff;
            binom = binom * (k - j) / (j + 1);
        }
    }
    for (const auto& v : lau)
        if (v != 0) throw std::runtime_error("conway: substitution inconsistency");
    return IntPoly{std::move(c)};
}

IntPoly conway(const BraidWord& w) { return conway_from_alexander(alexander(w)); }

IntPoly f_poly(int k) {
    if (k < 0) throw std::invalid_argument("f_poly: negative index");
    IntPoly a{}, b = IntPoly::constant(1), z = IntPoly::monomial(1, 1);
    if (k == 0) return a;
    for (int i = 1; i < k; ++i) {
        IntPoly next = z * b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

IntPoly nabla_pqr(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("nabla_pqr: indices must be >= 1");
    IntPoly z = IntPoly::monomial(1, 1);
    IntPoly fp = f_poly(p), fq = f_poly(q), fr = f_poly(r);
    return IntPoly::constant(2) * z * fp * fq * fr + fp * fq * f_poly(r - 1) +
           fp * f_poly(q - 1) * fr + f_poly(p - 1) * fq * fr;
}

int signature(const BraidWord& w) {
    Inertia in = inertia(symmetrize(seifert_of(w)));
    if (in.zero > 0) throw std::invalid_argument("signature: degenerate symmetrized form");
    return in.pos - in.neg;
}

bool is_definite_link(const BraidWord& w) {
    if (!w.positive()) throw std::invalid_argument("is_definite_link: negative letter");
    SurfaceData d = surface_data(w);
    if (!d.connected()) throw std::invalid_argument("is_definite_link: disconnected surface");
    if (d.betti == 0) return true;
    Inertia in = inertia(symmetrize(seifert_of(w)));
    if (in.zero > 0) return false;
    return std::abs(in.pos - in.neg) == d.betti;
}

CircleRootReport circle_roots(const IntPoly& delta) {
    if (delta.is_zero()) throw std::invalid_argument("circle_roots: zero polynomial");
    CircleRootReport rep;
    IntPoly r = delta;
    rep.root_at_one_multiplicity = strip_linear_root(r, 1);
    rep.root_at_minus_one = strip_linear_root(r, -1) > 0;
    if (r.degree() == 0) return rep;
    if (!r.is_palindromic())
        throw std::invalid_argument("circle_roots: residue is not reciprocal");
    if (r.degree() % 2 != 0)
        throw std::invalid_argument("circle_roots: residue has odd degree");
    IntPoly q = trace_form(r.leading() > 0 ? r : -r);
    rep.unit_roots = isolate_real_roots(q, Rat(-2), Rat(2));
    return rep;
}

ObstructionResult lspace_obstructed(const IntPoly& delta, int n) {
    if (n < 2) throw std::invalid_argument("lspace_obstructed: n must be >= 2");
    if (delta.is_zero()) throw std::invalid_argument("lspace_obstructed: zero polynomial");
    IntPoly r = delta;
    strip_linear_root(r, 1);
    if (strip_linear_root(r, -1) > 0) return {true, "root at t = -1"};
    if (r.degree() == 0) return {};
    IntPoly q = trace_form(r.leading() > 0 ? r : -r);
    // Boundary of the arc: x = 2cos(2*pi/n), an algebraic number with
    // irreducible minimal polynomial psi; membership is a divisibility test.
    IntPoly psi = cos_min_poly(n);
    IntPoly g = IntPoly::gcd(q, psi);
    if (g.degree() == psi.degree()) return {true, "root at the arc endpoint"};
    if (n == 2) return {};  // endpoint is x = -2; no interior left of it
    // Interior (-2, c_n): count roots of q below a dyadic bound separating
    // c_n from all roots of q, refining the isolating interval as needed.
    auto chain_q = sturm_chain(q);
    auto iso = isolate_real_roots(psi, Rat(-2), Rat(2));
    // c_n is the largest root of psi: its conjugates are 2cos(2*pi*k/n) over
    // k coprime to n, and k = 1 maximizes the cosine.
    Interval box = iso.back().first;
    auto chain_psi = sturm_chain(psi);
    while (sturm_count(chain_q, box.lo, box.hi) > 0) {
        Rat mid = (box.lo + box.hi) / 2;
        if (sturm_count(chain_psi, box.lo, mid) > 0)
            box.hi = mid;
        else
            box.lo = mid;
    }
    // Roots with x <= -2 correspond to real t, not unit-circle roots.
    int interior = sturm_count(chain_q, Rat(-2), box.lo);
    if (interior > 0)
        return {true, std::to_string(interior) + " root(s) in the open arc interior"};
    return {};
}

ObstructionResult lspace_obstructed(const BraidWord& w, int n) {
    return lspace_obstructed(alexander(w), n);
}

}  // namespace sqp
