#ifndef BETTIC_SIMPLEX_HPP
#define BETTIC_SIMPLEX_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bettic/errors.hpp"

namespace bettic {

// A simplex is a subset of the vertex universe [m], m <= 64, packed into a
// 64-bit word: vertex i (1-based) present  <=>  bit i-1 set.  Mask 0 is the
// empty simplex, which is a legal face of every complex.
using Simplex = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int card(Simplex s) { return std::popcount(s); }

inline Simplex full_mask(int m) {
    return m == 0 ? 0 : (m == 64 ? ~Simplex{0} : (Simplex{1} << m) - 1);
}

inline bool has_vertex(Simplex s, int v) { return (s >> (v - 1)) & 1u; }

inline Simplex vertex_bit(int v) { return Simplex{1} << (v - 1); }

inline Simplex make_simplex(std::initializer_list<int> vs) {
    Simplex s = 0;
    for (int v : vs) s |= vertex_bit(v);
    return s;
}

inline Simplex make_simplex(const std::vector<int>& vs) {
    Simplex s = 0;
    for (int v : vs) s |= vertex_bit(v);
    return s;
}

inline std::vector<int> simplex_vertices(Simplex s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(card(s)));
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

// Lexicographic order on the sorted vertex lists of two equal-size
// simplices: the one containing the smallest vertex of the symmetric
// difference comes first.  Only meaningful for card(a) == card(b).
inline bool lex_less_same_card(Simplex a, Simplex b) {
    Simplex diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & (~diff + 1))) != 0;
}

// Total order used for serialized facet lists: by cardinality, then lex.
inline bool size_lex_less(Simplex a, Simplex b) {
    int ca = card(a), cb = card(b);
    if (ca != cb) return ca < cb;
    return lex_less_same_card(a, b);
}

// All k-subsets of `mask`, in increasing numeric mask order.
std::vector<Simplex> subsets_of_card(Simplex mask, int k);

// Re-index a simplex that lives inside `universe` onto {1,...,|universe|},
// preserving the relative vertex order.
inline Simplex compress_into(Simplex s, Simplex universe) {
    Simplex out = 0;
    int pos = 0;
    while (universe) {
        Simplex low = universe & (~universe + 1);
        if (s & low) out |= Simplex{1} << pos;
        ++pos;
        universe &= universe - 1;
    }
    return out;
}

// Inverse of compress_into: place a simplex on {1..k} back into `universe`.
inline Simplex expand_from(Simplex s, Simplex universe) {
    Simplex out = 0;
    int pos = 0;
    while (universe) {
        Simplex low = universe & (~universe + 1);
        if ((s >> pos) & 1u) out |= low;
        ++pos;
        universe &= universe - 1;
    }
    return out;
}

} // namespace bettic

#endif
