#include "bettic/generators.hpp"

#include <stdexcept>

namespace bettic {

Complex simplex_complex(int m) {
    if (m < 0 || m > kMaxVertices) throw std::range_error("simplex: m out of range");
    return Complex::from_antichain(m, {full_mask(m)});
}

Complex skeleton(int m, int k) {
    if (m < 1 || m > kMaxVertices || k < 0 || k > m - 1) throw std::range_error("skeleton: need 0 <= k <= m-1");
    return Complex::from_antichain(m, subsets_of_card(full_mask(m), k + 1));
}

Complex skeleton_ext(int m, int k, int d) {
    if (!(0 <= k && k < d && d < m)) throw std::range_error("skeleton_ext: need 0 <= k < d < m");
    std::vector<Simplex> fac;
    const Simplex big = full_mask(d + 1); // {1..d+1}
    for (Simplex s : subsets_of_card(full_mask(m), k + 1))
        if ((s & big) != s) fac.push_back(s); // faces inside the d-simplex are dominated
    fac.push_back(big);
    return Complex::from_antichain(m, std::move(fac));
}

Complex boundary(int n) {
    if (n < 1 || n > kMaxVertices) throw std::range_error("boundary: n out of range");
    if (n == 1) return Complex::from_antichain(0, {0}); // the empty complex
    return Complex::from_antichain(n, subsets_of_card(full_mask(n), n - 1));
}

Complex sphere_join(const std::vector<int>& ns) {
    if (ns.empty()) throw std::range_error("sphere_join: need at least one factor");
    Complex out = boundary(ns[0]);
    for (std::size_t i = 1; i < ns.size(); ++i) out = join(out, boundary(ns[i]));
    return out;
}

Complex simplex_sphere_join(int r, const std::vector<int>& ns) {
    if (r < 1) throw std::range_error("simplex_sphere_join: need r >= 1");
    return join(simplex_complex(r), sphere_join(ns));
}

Complex cycle(int m) {
    if (m < 3 || m > kMaxVertices) throw std::range_error("cycle: need m >= 3");
    std::vector<Simplex> edges;
    for (int i = 1; i < m; ++i) edges.push_back(vertex_bit(i) | vertex_bit(i + 1));
    edges.push_back(vertex_bit(m) | vertex_bit(1));
    return Complex::from_antichain(m, std::move(edges));
}

Complex complete_bipartite(int a, int b) {
    if (a < 1 || b < 1 || a + b > kMaxVertices) throw std::range_error("complete_bipartite: need a,b >= 1");
    std::vector<Simplex> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) edges.push_back(vertex_bit(i) | vertex_bit(j));
    return Complex::from_antichain(a + b, std::move(edges));
}

Complex generate(const std::string& kind, const GeneratorParams& p) {
    if (kind == "simplex") return simplex_complex(p.m);
    if (kind == "skeleton") return skeleton(p.m, p.k);
    if (kind == "skeleton_ext") return skeleton_ext(p.m, p.k, p.d);
    if (kind == "boundary") return boundary(p.n);
    if (kind == "sphere_join") return sphere_join(p.ns);
    if (kind == "simplex_sphere_join") return simplex_sphere_join(p.r, p.ns);
    if (kind == "cycle") return cycle(p.m);
    if (kind == "complete_bipartite") return complete_bipartite(p.a, p.b);
    throw std::range_error("unknown generator kind '" + kind + "'");
}

} // namespace bettic
