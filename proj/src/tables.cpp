#include "sqp/tables.hpp"

namespace sqp {

namespace {

IntPoly P(std::initializer_list<int> c) { return IntPoly(c); }

// Even polynomial given ascending coefficients of z^0, z^2, z^4, ...
IntPoly E(std::initializer_list<int> even) {
    std::vector<Int> c;
    for (int v : even) {
        c.emplace_back(v);
        c.emplace_back(0);
    }
    c.pop_back();
    return IntPoly(std::move(c));
}

IntPoly Z() { return IntPoly::monomial(1, 1); }

std::vector<PqrRow> build_pqr() {
    IntPoly z = Z();
    IntPoly z2p1 = E({1, 1}), z2p2 = E({2, 1}), z2p3 = E({3, 1});
    IntPoly z4 = E({1, 3, 1});  // z^4 + 3z^2 + 1
    IntPoly tm1 = P({-1, 1}), t2mt1 = P({1, -1, 1}), t2pt1 = P({1, 1, 1});
    IntPoly t2p1 = P({1, 0, 1});
    IntPoly quart = P({1, -1, 1, -1, 1});  // t^4 - t^3 + t^2 - t + 1
    std::vector<PqrRow> rows;
    auto add = [&](int p, int q, int r, IntPoly nb, IntPoly dl, int th) {
        rows.push_back({p, q, r, std::move(nb), std::move(dl), th});
    };
    add(1, 1, 1, IntPoly::constant(2) * z, IntPoly::constant(2) * tm1, 0);
    add(1, 1, 2, E({1, 2}), P({2, -3, 2}), 9);
    add(1, 1, 3, z * E({3, 2}), tm1 * P({2, -1, 2}), 5);
    add(1, 1, 4, E({1, 5, 2}), P({2, -3, 3, -3, 2}), 4);
    add(1, 1, 5, z * E({4, 7, 2}), tm1 * P({2, -1, 2, -1, 2}), 4);
    add(1, 2, 2, IntPoly::constant(2) * z * z2p1, IntPoly::constant(2) * tm1 * t2mt1, 6);
    add(1, 2, 3, E({1, 4, 2}), P({2, -4, 5, -4, 2}), 5);
    add(1, 2, 4, z * E({3, 6, 2}), tm1 * P({2, -2, 3, -2, 2}), 4);
    add(1, 2, 5, z2p1 * E({1, 6, 2}), t2mt1 * P({2, -2, 1, -2, 2}), 4);
    add(1, 3, 3, IntPoly::constant(2) * z * z2p1 * z2p2,
        IntPoly::constant(2) * tm1 * t2mt1 * t2p1, 4);
    add(1, 3, 4, E({1, 8, 8, 2}), P({2, -4, 6, -7, 6, -4, 2}), 4);
    add(1, 3, 5, z * E({5, 14, 10, 2}), tm1 * P({2, -2, 4, -3, 4, -2, 2}), 4);
    add(1, 4, 4, IntPoly::constant(2) * z * z2p2 * z4,
        IntPoly::constant(2) * tm1 * t2p1 * quart, 4);
    add(1, 4, 5, E({1, 12, 22, 12, 2}), P({2, -4, 6, -8, 9, -8, 6, -4, 2}), 4);
    add(1, 5, 5, IntPoly::constant(2) * z * z2p1 * z2p3 * z4,
        IntPoly::constant(2) * tm1 * t2mt1 * t2pt1 * P({1, -1, 1, -1, 1}), 3);
    add(2, 2, 2, z * z * E({3, 2}), tm1 * tm1 * P({2, -1, 2}), 5);
    add(2, 2, 3, z * E({1, 2}) * z2p2, tm1 * t2p1 * P({2, -3, 2}), 4);
    add(2, 2, 4, z * z * E({5, 7, 2}), tm1 * tm1 * P({2, -1, 3, -1, 2}), 4);
    add(2, 2, 5, z * E({2, 10, 9, 2}), tm1 * P({2, -3, 4, -4, 4, -3, 2}), 4);
    add(2, 3, 3, z2p1 * E({1, 5, 2}), t2mt1 * P({2, -3, 3, -3, 2}), 4);
    add(2, 3, 4, z * E({3, 2}) * z4, tm1 * P({2, -1, 2}) * quart, 4);
    add(2, 3, 5, E({1, 9, 18, 11, 2}), P({2, -5, 8, -10, 11, -10, 8, -5, 2}), 4);
    add(2, 4, 4, z * z * z2p2 * E({4, 7, 2}), tm1 * tm1 * t2p1 * P({2, -1, 2, -1, 2}), 4);
    add(2, 4, 5, z * z2p1 * z2p3 * E({1, 5, 2}), tm1 * t2mt1 * t2pt1 * P({2, -3, 3, -3, 2}), 3);
    add(2, 5, 5, z4 * E({1, 9, 9, 2}), quart * P({2, -3, 3, -3, 3, -3, 2}), 3);
    add(3, 3, 3, z * z2p1 * z2p1 * E({5, 2}), tm1 * t2mt1 * t2mt1 * P({2, 1, 2}), 4);
    add(3, 3, 4, z2p1 * E({1, 10, 9, 2}), t2mt1 * P({2, -3, 4, -5, 4, -3, 2}), 4);
    add(3, 3, 5, z * z2p1 * z2p2 * E({1, 2}) * z2p3,
        tm1 * t2mt1 * t2p1 * t2pt1 * P({2, -3, 2}), 3);
    add(3, 4, 4, z * z2p2 * E({2, 10, 9, 2}), tm1 * t2p1 * P({2, -3, 4, -4, 4, -3, 2}), 4);
    add(3, 4, 5, E({1, 15, 41, 39, 15, 2}),
        P({2, -5, 9, -13, 16, -17, 16, -13, 9, -5, 2}), 3);
    add(3, 5, 5, z * z4 * E({7, 17, 11, 2}), tm1 * quart * P({2, -1, 3, -1, 3, -1, 2}), 3);
    add(4, 4, 4, z * z * z2p2 * z2p2 * E({1, 2}) * z2p3,
        tm1 * tm1 * t2p1 * t2p1 * t2pt1 * P({2, -3, 2}), 3);
    add(4, 4, 5, z * z2p2 * E({2, 16, 26, 13, 2}),
        tm1 * t2p1 * P({2, -3, 4, -5, 6, -5, 4, -3, 2}), 3);
    add(4, 5, 5, z2p1 * z4 * E({1, 15, 11, 2}), t2mt1 * quart * P({2, -1, 1, -3, 1, -1, 2}), 3);
    add(5, 5, 5, z * z4 * z4 * E({8, 9, 2}), tm1 * quart * quart * P({2, 1, 2, 1, 2}), 3);
    return rows;
}

std::vector<FormsRow> build_forms() {
    std::vector<FormsRow> rows;
    for (int m = 1; m <= 8; ++m)
        rows.push_back({"A" + std::to_string(m), 2, "D^" + std::to_string(m + 1)});
    for (int m = 1; m <= 8; ++m)
        rows.push_back({"A" + std::to_string(m), 3, "D s1^" + std::to_string(m)});
    for (int m = 4; m <= 8; ++m)
        rows.push_back({"D" + std::to_string(m), 3,
                        m == 4 ? std::string("D^3") : "D^3 s1^" + std::to_string(m - 4)});
    rows.push_back({"E6", 3, "D^4"});
    rows.push_back({"E6", 4, "D^3"});
    rows.push_back({"E7", 3, "D^4 s1"});
    rows.push_back({"E8", 3, "D^5"});
    rows.push_back({"E8", 5, "D^3"});
    return rows;
}

}  // namespace

const std::vector<PqrRow>& golden_pqr_rows() {
    static const std::vector<PqrRow> rows = build_pqr();
    return rows;
}

const std::vector<FormsRow>& golden_forms_rows() {
    static const std::vector<FormsRow> rows = build_forms();
    return rows;
}

const std::vector<IntPoly>& golden_f_rows() {
    static const std::vector<IntPoly> rows = {
        IntPoly{},        IntPoly::constant(1), Z(),           E({1, 1}),
        Z() * E({2, 1}),  E({1, 3, 1}),         Z() * E({3, 4, 1}),
        E({1, 6, 5, 1}),
    };
    return rows;
}

bool baader_definite(int n, int k) {
    if (n == 2 || k == 2) return true;
    if (n == 3 && k >= 3 && k <= 5) return true;
    return k == 3 && (n == 4 || n == 5);
}

}  // namespace sqp
