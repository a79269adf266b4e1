#ifndef BETTIC_SPERNER_HPP
#define BETTIC_SPERNER_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "bettic/complex.hpp"

namespace bettic {

// An antichain of subsets of a ground set, optionally constrained to meet a
// fixed subset Y ("over Y").  Ground and members are bit masks over the same
// 1-based vertex numbering used by Complex.
struct SpernerFamily {
    Simplex ground = 0;
    std::vector<Simplex> members;
    std::optional<Simplex> over;
};

bool is_sperner(const SpernerFamily& F);                  // antichain check; members must lie in ground
bool is_sperner_over(const SpernerFamily& F, Simplex Y);  // additionally every member meets Y

// Largest antichain of an n-set: C(n, floor(n/2)).
mpz_class sperner_max(int n);
// Largest antichain of an n-set all of whose members meet a fixed k-set:
// C(n, ceil(n/2)) - C(n-k, ceil(n/2)), for 1 <= k <= n.
mpz_class f_bound(int n, int k);

// Near-cone predicate: replacing any vertex of a face by vertex 1 stays a
// face.  Vertex 1 must exist in the universe.
bool is_near_cone(const Complex& K);

// Shifted predicate: replacing any vertex of a face by a smaller unused one
// stays a face.
bool is_shifted(const Complex& K);

// B(K) = faces not extendable by vertex 1; defined only for near-cones
// (throws std::domain_error otherwise).  Ground set is {2..m}.
SpernerFamily b_delta(const Complex& K);

// Builds the |spine|-dimensional near-cone with apex 1 whose non-extendable
// faces are exactly `family`: the cone over the complex generated by the
// family minus its top faces, together with the family itself and the
// simplex on {1} plus the spine.  Preconditions: no member is contained in
// the spine, and every member has at most |spine|+1 vertices.
Complex near_cone_from_family(const SpernerFamily& family, Simplex spine, int m);

} // namespace bettic

#endif
