#pragma once

#include <string>
#include <vector>

#include "sqp/lattice.hpp"
#include "sqp/poly.hpp"
#include "sqp/seifert.hpp"

namespace sqp {

// Cyclic chord-diagram basket surface on m bands with band signs eps.
struct CyclicBasket {
    int m = 3;
    std::vector<int> eps;  // entries +-1; the count p of +1 satisfies 1 <= p <= m-1
};

int basket_p(const CyclicBasket& cb);
SeifertMatrix cyclic_seifert_matrix(const CyclicBasket& cb);
int cyclic_lk(const CyclicBasket& cb);
CyclicBasket normalize_eps(const CyclicBasket& cb);

// Tridiagonal form with diagonal 2, off-diagonal 1, and corner entries epsilon.
SymmetricForm q_matrix(int m, int epsilon);
Int q_det(int m, int epsilon);

// Verifies -(S+S^T) of the normalized basket equals q_matrix(m, (-1)^(m-p))
// after the prescribed row/column sign changes.
bool cyclic_congruence_check(const CyclicBasket& cb);

IntPoly cyclic_alexander(int m, int p);

struct CyclicReport {
    int m, p, lk;
    bool definite;
    std::string lattice_class;  // empty when not definite
    IntPoly alexander;
    int obstructed_from_n;  // least obstructed cover degree in [2, 50]; 0 if none
    std::string json() const;
};
CyclicReport cyclic_report(int m, int p);

}  // namespace sqp
