#ifndef BETTIC_GENERATORS_HPP
#define BETTIC_GENERATORS_HPP

#include <string>
#include <vector>

#include "bettic/complex.hpp"

namespace bettic {

// Named families.  All vertex universes are 1-based prefixes [m].

Complex simplex_complex(int m);                    // the full (m-1)-simplex
Complex skeleton(int m, int k);                    // k-skeleton of the (m-1)-simplex, 0 <= k <= m-1
Complex skeleton_ext(int m, int k, int d);         // k-skeleton plus the d-simplex on {1..d+1}, 0 <= k < d < m
Complex boundary(int n);                           // boundary of the (n-1)-simplex; boundary(1) = {emptyset}
Complex sphere_join(const std::vector<int>& ns);   // join of boundary(n_i), n_i >= 1
Complex simplex_sphere_join(int r, const std::vector<int>& ns);
Complex cycle(int m);                              // the m-cycle graph, m >= 3
Complex complete_bipartite(int a, int b);          // K_{a,b}

struct GeneratorParams {
    int m = -1, k = -1, d = -1, n = -1, r = -1, a = -1, b = -1;
    std::vector<int> ns;
};

// Dispatch by kind name: simplex, skeleton, skeleton_ext, boundary,
// sphere_join, simplex_sphere_join, cycle, complete_bipartite.
Complex generate(const std::string& kind, const GeneratorParams& p);

} // namespace bettic

#endif
