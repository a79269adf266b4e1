#ifndef BETTIC_CLASSIFIER_HPP
#define BETTIC_CLASSIFIER_HPP

#include <vector>

#include "bettic/complex.hpp"
#include "bettic/field.hpp"

namespace bettic {

// Recognition of (simplex-)sphere joins through the minimal non-faces:
// K equals simplex(cone) * boundary(N_1) * ... * boundary(N_k) exactly when
// its minimal non-faces are the pairwise-disjoint sets N_1..N_k.  When they
// overlap, `residual` is set and the other fields are empty.
struct JoinDecomposition {
    Simplex cone_vertices = 0;
    std::vector<Simplex> sphere_factors;
    bool residual = false;
};

JoinDecomposition decompose(const Complex& K);

// Numeric tightness: the total bigraded Betti number equals 2^{m-d-1}.
bool is_tight_numeric(const Complex& K, const FieldSpec& F, int threads = 1);

// Structural tightness: K is a sphere join or simplex-sphere join.
bool is_tight_structural(const Complex& K);

// No d-dimensional tight complex on m vertices exists below this dimension:
// floor((m-1)/2).  Used as a search prune.
int tightness_necessary_dim(int m);

} // namespace bettic

#endif
