#ifndef BETTIC_LINALG_HPP
#define BETTIC_LINALG_HPP

#include <cstdint>
#include <vector>

#include "bettic/field.hpp"

namespace bettic {

// Sparse integer matrix, the carrier for boundary maps.  At most one entry
// per (row, col); entries are exact integers (boundary coefficients are +-1,
// but any int64 is accepted and reduced into the requested field).
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        std::int64_t value;
    };
    std::vector<Entry> entries;
};

// Exact rank of M over F.  F2 uses bit-packed row elimination, Fp modular
// elimination, Rationals fraction-free (Bareiss) elimination -- int64 with
// overflow checks, falling back to arbitrary-precision integers.  No
// floating point anywhere.
int rank(const SparseMatrix& M, const FieldSpec& F);

// Packed-row GF(2) rank: rows[r] holds `words` 64-bit words, column c lives
// at bit c%64 of word c/64.  Destroys its input.  This is the fast path the
// homology engine feeds directly.
int rank_f2_packed(std::vector<std::vector<std::uint64_t>>& rows, int cols);

// Dense row-major rank mod an odd prime p; destroys its input.
int rank_fp_dense(std::vector<std::uint32_t>& a, int rows, int cols, std::uint32_t p);

// Dense row-major rank over the rationals of an integer matrix.
int rank_q_dense(const std::vector<std::int64_t>& a, int rows, int cols);

} // namespace bettic

#endif
