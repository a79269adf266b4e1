#ifndef BETTIC_CANONICAL_HPP
#define BETTIC_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bettic/complex.hpp"

namespace bettic {

// Isomorphism-grade canonical form of a complex: the minimal relabeling of
// its facet set under a fixed total order on facet sets.  Two complexes on
// the same universe have equal keys iff they are simplicially isomorphic.
//
// The order: index every subset of [m] by its bit mask; a facet set is its
// characteristic bit vector over these 2^m indices, and A < B iff A contains
// the smallest-indexed subset where they differ.  The minimum over all m!
// relabelings is found by assigning new labels 1..m depth-first, comparing
// the 2^k-bit prefix determined after k assignments, and pruning branches
// whose prefix is already beaten.

struct CanonicalForm {
    int m = 0;
    std::vector<std::uint64_t> bits; // characteristic vector of the canonical facet set
    std::string key;                 // "m=..;facets=[..][..]" of the canonical representative

    bool operator==(const CanonicalForm& o) const { return m == o.m && bits == o.bits; }
    bool operator<(const CanonicalForm& o) const;
};

inline constexpr int kDefaultPermutationLimit = 10;

// Canonical form of K; throws capacity_error when m exceeds the limit.
CanonicalForm canonical_form(const Complex& K, int permutation_limit = kDefaultPermutationLimit);

// The complex whose facet set realizes the canonical key.
Complex canonical_representative(const Complex& K, int permutation_limit = kDefaultPermutationLimit);

// True iff K itself is the minimal labeling of its orbit (the enumerator's
// accept test; cheaper than computing the full form).
bool is_canonical_labeling(const Complex& K, int permutation_limit = kDefaultPermutationLimit);

// Unused vertices are discarded before comparison; complexes with different
// support sizes are simply not isomorphic.
bool is_isomorphic(const Complex& K, const Complex& L, int permutation_limit = kDefaultPermutationLimit);

// K relabeled by a permutation of [m]: vertex v becomes perm[v-1].
Complex relabel(const Complex& K, const std::vector<int>& perm);

} // namespace bettic

#endif
