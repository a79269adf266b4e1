#ifndef BETTIC_HOMOLOGY_HPP
#define BETTIC_HOMOLOGY_HPP

#include <vector>

#include "bettic/complex.hpp"
#include "bettic/field.hpp"
#include "bettic/linalg.hpp"

namespace bettic {

// Reduced Betti numbers over a field, degrees -1 .. dim.  For the empty
// complex {emptyset} the table is beta_{-1} = 1 and nothing else; for a
// nonempty complex beta_{-1} = 0.
struct BettiTable {
    FieldSpec field = FieldSpec::f2();
    std::vector<long long> by_degree; // index i holds beta_{i-1}

    long long betti(int degree) const {
        const int idx = degree + 1;
        if (idx < 0 || idx >= static_cast<int>(by_degree.size())) return 0;
        return by_degree[static_cast<std::size_t>(idx)];
    }
    int max_degree() const { return static_cast<int>(by_degree.size()) - 2; }
    long long total() const {
        long long t = 0;
        for (long long b : by_degree) t += b;
        return t;
    }
};

// Matrix of the boundary map del_i : C_i -> C_{i-1} on the augmented chain
// complex (C_{-1} spanned by the empty simplex).  Faces of each degree are
// ordered lexicographically; coefficients alternate by vertex position
// (irrelevant over F2).  Requires -1 <= i <= dim+1.
SparseMatrix boundary_matrix(const Complex& K, int i, const FieldSpec& F);

BettiTable reduced_betti(const Complex& K, const FieldSpec& F);

// Reduced Betti numbers computed straight from a facet antichain, without a
// Complex value.  Vertex labels are irrelevant; this is the inner loop of
// the subset sweeps.  Result indexed like BettiTable::by_degree.
std::vector<long long> betti_from_facets(const std::vector<Simplex>& facets, const FieldSpec& F);

// Sum of all reduced Betti numbers (degree -1 included, so {emptyset} has
// reduced total 1 and nonempty complexes match the usual sum over i >= 0).
long long tb_reduced(const Complex& K, const FieldSpec& F);

// Unreduced total Betti number: tb_reduced + 1 for nonempty K, 0 for {emptyset}.
long long tb_unreduced(const Complex& K, const FieldSpec& F);

// Reduced Euler characteristic from the f-vector (field-independent):
// -1 + f_0 - f_1 + ...; equals -1 for {emptyset}.
long long reduced_euler(const Complex& K);

} // namespace bettic

#endif
