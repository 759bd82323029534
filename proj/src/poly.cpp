#include "sqp/poly.hpp"

#include <map>
#include <stdexcept>

namespace sqp {

IntPoly::IntPoly(std::initializer_list<int> coeffs) {
    for (int a : coeffs) c_.emplace_back(a);
    trim();
}

IntPoly IntPoly::constant(const Int& a) {
    IntPoly p;
    if (a != 0) p.c_ = {a};
    return p;
}

IntPoly IntPoly::monomial(const Int& a, int deg) {
    IntPoly p;
    if (a != 0) {
        p.c_.assign(deg + 1, 0);
        p.c_[deg] = a;
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::operator[](int i) const {
    static const Int zero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& a : r) a = -a;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& a) const {
    std::vector<Int> r(c_);
    for (auto& x : r) x *= a;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Int> r(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& a : c_) g = boost::multiprecision::gcd(g, a);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> r(c_);
    for (auto& a : r) a /= g;
    return IntPoly(std::move(r));
}

bool IntPoly::is_palindromic() const { return !is_zero() && *this == reversed(); }

bool IntPoly::div_exact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
    if (b.is_zero()) return false;
    std::vector<Int> rem(a.c_);
    std::vector<Int> quot;
    int db = b.degree();
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db) {
        if (a.is_zero()) {
            q = {};
            return true;
        }
        return false;
    }
    quot.assign(da - db + 1, 0);
    for (int i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        if (rem[i] % b.leading() != 0) return false;
        Int f = rem[i] / b.leading();
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    q = IntPoly(std::move(quot));
    return true;
}

namespace {

// Pseudo-remainder: lc(b)^(da-db+1) * a mod b, exact over the integers.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> rem(a.coeffs());
    int db = b.degree();
    int da = a.degree();
    if (da < db) return a;
    Int lb = b.leading();
    for (int i = da; i >= db; --i) {
        Int f = rem[i];
        for (auto& r : rem) r *= lb;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    rem.resize(db);
    return IntPoly(std::move(rem));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = v;
        v = r;
    }
    return u.primitive_part();
}

IntPoly IntPoly::pow(const IntPoly& p, int e) {
    IntPoly r = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (!out.empty())
            out += (a < 0) ? " - " : " + ";
        else if (a < 0)
            out += "-";
        bool unit = (mag == 1 && i > 0);
        if (!unit) out += mag.str();
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    for (const auto& a : p.coeffs()) r.emplace_back(a);
    return r;
}

Rat rp_eval(const RatPoly& p, const Rat& x) {
    Rat v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

namespace {

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_rem(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= db) {
        Rat f = r.back() / b.back();
        int shift = static_cast<int>(r.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) r[shift + j] -= f * b[j];
        r.pop_back();
        rp_trim(r);
        if (r.empty()) break;
    }
    return r;
}

int sign_of(const Rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

int sign_changes(const std::vector<RatPoly>& chain, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(rp_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
    IntPoly sf;
    {
        // The primitive gcd divides the primitive part exactly (Gauss).
        IntPoly g = IntPoly::gcd(p, p.derivative());
        if (!IntPoly::div_exact(p.primitive_part(), g, sf))
            throw std::logic_error("squarefree division failed");
    }
    std::vector<RatPoly> chain;
    chain.push_back(to_rat(sf));
    if (sf.degree() >= 1) {
        chain.push_back(to_rat(sf.derivative()));
        while (chain.back().size() > 1) {
            RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
            if (r.empty()) break;
            for (auto& a : r) a = -a;
            chain.push_back(std::move(r));
        }
    }
    return chain;
}

int sturm_count(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
}

namespace {

// Squarefree decomposition (Yun): returns {multiplicity, factor} with each
// factor primitive; factors of degree 0 are dropped.
std::vector<std::pair<int, IntPoly>> squarefree_decomp(const IntPoly& f0) {
    std::vector<std::pair<int, IntPoly>> out;
    IntPoly f = f0.primitive_part();
    if (f.degree() <= 0) return out;
    IntPoly d = IntPoly::gcd(f, f.derivative());
    if (d.degree() == 0) {
        out.emplace_back(1, f);
        return out;
    }
    IntPoly b, c;
    if (!IntPoly::div_exact(f, d, b)) throw std::logic_error("yun: f/d");
    if (!IntPoly::div_exact(f.derivative(), d, c)) throw std::logic_error("yun: f'/d");
    IntPoly z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly a = IntPoly::gcd(b, z);
        if (a.degree() > 0) out.emplace_back(i, a);
        IntPoly nb, nc;
        if (!IntPoly::div_exact(b, a, nb)) throw std::logic_error("yun: b/a");
        if (!IntPoly::div_exact(z, a, nc)) throw std::logic_error("yun: z/a");
        b = nb;
        z = nc - b.derivative();
        ++i;
    }
    return out;
}

// Isolating intervals for the (squarefree) polynomial p on the half-open
// interval (lo, hi]. sturm_count(chain, a, b) counts roots in (a, b], so
// endpoints that are themselves roots need no special casing: a root at lo
// is excluded, a root at hi is included.
void isolate_squarefree(const IntPoly& p, const std::vector<RatPoly>& chain, const Rat& lo,
                        const Rat& hi, std::vector<Interval>& out) {
    int cnt = sturm_count(chain, lo, hi);
    if (cnt == 0) return;
    if (cnt == 1) {
        Rat a = lo, b = hi;
        for (int i = 0; i < 3; ++i) {
            Rat mid = (a + b) / 2;
            if (p.eval(mid) == 0) {
                out.push_back({mid, mid});
                return;
            }
            if (sturm_count(chain, a, mid) == 1)
                b = mid;
            else
                a = mid;
        }
        out.push_back({a, b});
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (p.eval(mid) == 0) {
        out.push_back({mid, mid});
        Rat step = (hi - lo) / 4;
        while (sturm_count(chain, mid - step, mid) > 1) step /= 2;
        isolate_squarefree(p, chain, lo, mid - step, out);
        isolate_squarefree(p, chain, mid, hi, out);
        return;
    }
    isolate_squarefree(p, chain, lo, mid, out);
    isolate_squarefree(p, chain, mid, hi, out);
}

struct IsoEntry {
    Interval iv;
    int mult;
    IntPoly fac;
    std::vector<RatPoly> chain;
};

// Halve an isolating interval, keeping its single root inside.
void bisect_entry(IsoEntry& e) {
    if (e.iv.lo == e.iv.hi) return;
    Rat mid = (e.iv.lo + e.iv.hi) / 2;
    if (e.fac.eval(mid) == 0) {
        e.iv = {mid, mid};
        return;
    }
    if (sturm_count(e.chain, e.iv.lo, mid) == 1)
        e.iv.hi = mid;
    else
        e.iv.lo = mid;
}

bool intervals_touch(const Interval& a, const Interval& b) {
    if (a.lo == a.hi) return b.lo < a.lo && a.lo <= b.hi;
    if (b.lo == b.hi) return a.lo < b.lo && b.lo <= a.hi;
    return a.lo < b.hi && b.lo < a.hi;
}

}  // namespace

std::vector<std::pair<Interval, int>> isolate_real_roots(const IntPoly& p, const Rat& lo,
                                                         const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<IsoEntry> entries;
    for (const auto& [mult, fac] : squarefree_decomp(p)) {
        auto chain = sturm_chain(fac);
        std::vector<Interval> iv;
        if (fac.eval(lo) == 0) iv.push_back({lo, lo});
        if (hi > lo) isolate_squarefree(fac, chain, lo, hi, iv);
        for (auto& i : iv) entries.push_back({i, mult, fac, chain});
    }
    // Distinct roots come from distinct squarefree factors too, so shrink
    // intervals until all are pairwise disjoint.
    bool touched = true;
    while (touched) {
        touched = false;
        for (size_t i = 0; i < entries.size(); ++i)
            for (size_t j = i + 1; j < entries.size(); ++j)
                if (intervals_touch(entries[i].iv, entries[j].iv)) {
                    bisect_entry(entries[i]);
                    bisect_entry(entries[j]);
                    touched = true;
                }
    }
    std::vector<std::pair<Interval, int>> out;
    for (auto& e : entries) out.push_back({e.iv, e.mult});
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first.lo < y.first.lo; });
    return out;
}

int strip_linear_root(IntPoly& p, int root) {
    int count = 0;
    Int r(root);
    while (!p.is_zero() && p.eval(r) == 0) {
        // Synthetic division by (t - root).
        std::vector<Int> q(p.degree(), 0);
        Int carry = 0;
        for (int i = p.degree(); i >= 1; --i) {
            carry = p[i] + carry * r;
            q[i - 1] = carry;
        }
        p = IntPoly(std::move(q));
        ++count;
    }
    return count;
}

IntPoly trace_form(const IntPoly& p) {
    if (!p.is_palindromic() || p.degree() % 2 != 0)
        throw std::invalid_argument("trace_form: not palindromic of even degree");
    int m = p.degree() / 2;
    IntPoly q = IntPoly::constant(p[m]);
    IntPoly ck_prev = IntPoly::constant(2);     // t^0 + t^0
    IntPoly ck = IntPoly::monomial(1, 1);       // t + 1/t
    const IntPoly x = ck;
    for (int k = 1; k <= m; ++k) {
        q = q + ck.scaled(p[m + k]);
        IntPoly next = x * ck - ck_prev;
        ck_prev = ck;
        ck = next;
    }
    return q;
}

IntPoly cyclotomic(int n) {
    static std::map<int, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly num = IntPoly::monomial(1, n) - IntPoly::constant(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        IntPoly q;
        if (!IntPoly::div_exact(num, cyclotomic(d), q))
            throw std::logic_error("cyclotomic: division failed");
        num = q;
    }
    cache[n] = num;
    return num;
}

IntPoly cos_min_poly(int n) {
    if (n < 1) throw std::invalid_argument("cos_min_poly: n >= 1");
    if (n == 1) return IntPoly{-2, 1};  // x - 2
    if (n == 2) return IntPoly{2, 1};   // x + 2
    return trace_form(cyclotomic(n));
}

}  // namespace sqp
