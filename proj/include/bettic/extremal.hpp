#ifndef BETTIC_EXTREMAL_HPP
#define BETTIC_EXTREMAL_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "bettic/complex.hpp"

namespace bettic {

// A closed-form extremal answer: the bound plus the complexes attaining it,
// re-measured on construction so the answer is validated, never trusted.
struct ExtremalAnswer {
    mpz_class value;
    std::vector<Complex> witnesses;
    std::string theorem;
};

// g(m,d) = sum_{j=d+1}^{m} C(m,j) C(j-1,d), exact.
mpz_class g_value(int m, int d);

// The unique maximizer of d -> g(m,d), found by direct evaluation.
// Throws std::domain_error if the maximum is attained twice.
int g_argmax(int m);

// g(m,d) + g(m,d-1) == 2^{m-d} C(m,d) for all 1 <= d < m.
bool g_recurrence_check(int m);

// Maximum reduced total Betti number of a d-dimensional complex on m
// vertices: C(m-1,d+1) for d <= floor(m/2)-1; C(m-1,floor(m/2)) -
// C(d,floor(m/2)) for floor(m/2) <= d <= m-2; 0 for d = m-1.
mpz_class tb_upper_bound(int m, int d);

// The complexes attaining tb_upper_bound(m,d) (skeleta and extended
// skeleta, with the odd-m double answer at d = m-2).
ExtremalAnswer sigma_tb_witnesses(int m, int d);

// The complexes attaining the global maximum C(m-1, floor((m-1)/2)) over
// all dimensions (parity-dependent skeleta).
ExtremalAnswer sigma_tb_global(int m);

// The total bigraded Betti number of the d-skeleton: g(m,d+1) + 1
// (1 for the full simplex d = m-1).
mpz_class d_skeleton_value(int m, int d);

// Universal lower bound 2^{m-d-1} attained exactly by the tight complexes.
mpz_class tight_bound(int m, int d);

// Maximum D over all complexes on m vertices: g(m, floor((m-1)/3)) + 1 with
// unique witness the (floor((m-1)/3)-1)-skeleton.  Defined for m >= 4; the
// skeleton index degenerates below that.
ExtremalAnswer d_max(int m);

} // namespace bettic

#endif
