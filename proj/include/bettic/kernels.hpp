#ifndef BETTIC_KERNELS_HPP
#define BETTIC_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bettic::kernels {

// Row-operation kernels behind the exact-rank engines.  Each operation has a
// scalar reference implementation plus SIMD variants selected once at
// runtime from CPU capabilities; all variants are bit-for-bit equivalent and
// the test suite checks every compiled variant against the reference.

// dst[w] ^= src[w] for w < nwords.  Inner loop of GF(2) row elimination on
// bit-packed rows.
void f2_xor_rows(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);

// dst[i] = (dst[i] + a*src[i]) mod p for i < n.
// Preconditions: p an odd prime < 2^31, a < p, all entries < p.
void fp_axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
             std::uint32_t a, std::uint32_t p);

// Name of the backend the dispatcher picked ("avx2", "neon", "scalar").
const char* active_backend();

// Every compiled variant, for equivalence testing.  `supported` reflects the
// running CPU; unsupported variants must not be called.
struct F2XorVariant {
    const char* name;
    void (*fn)(std::uint64_t*, const std::uint64_t*, std::size_t);
    bool supported;
};
struct FpAxpyVariant {
    const char* name;
    void (*fn)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
    bool supported;
};
std::vector<F2XorVariant> f2_xor_variants();
std::vector<FpAxpyVariant> fp_axpy_variants();

} // namespace bettic::kernels

#endif
