// AVX2 variants of the row-operation kernels.  Compiled with -mavx2 and only
// ever called after a runtime cpuid check.

#include <cstddef>
#include <cstdint>
#include <immintrin.h>

namespace bettic::kernels {

void f2_xor_rows_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t w = 0;
    for (; w + 4 <= nwords; w += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + w));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_xor_si256(a, b));
    }
    for (; w < nwords; ++w) dst[w] ^= src[w];
}

// -inverse of p modulo 2^32 (p odd), by Newton iteration.
static inline std::uint32_t neg_inv_mod_2_32(std::uint32_t p) {
    std::uint32_t x = p; // correct to 3 bits
    for (int it = 0; it < 4; ++it) x *= 2u - p * x;
    return ~x + 1u; // = -p^{-1} mod 2^32
}

// Montgomery product with a pre-scaled multiplier: given ahat = a*2^32 mod p
// in the low 32 bits of each 64-bit lane of `ahat` and plain residues s in
// the low 32 bits of `s`, returns (a*s) mod p per lane.
static inline __m256i mont_mul_lanes(__m256i s, __m256i ahat, __m256i p64, __m256i pprime) {
    __m256i t = _mm256_mul_epu32(s, ahat);              // a-hat * s, full 64-bit
    __m256i m = _mm256_mul_epu32(t, pprime);            // low32(t) * p'  (low 32 bits wanted)
    __m256i mlo = _mm256_and_si256(m, _mm256_set1_epi64x(0xffffffffll));
    __m256i mp = _mm256_mul_epu32(mlo, p64);            // m * p
    __m256i u = _mm256_srli_epi64(_mm256_add_epi64(t, mp), 32);
    // u < 2p; conditional subtract (values < 2^32, signed 64-bit compare safe)
    __m256i ge = _mm256_or_si256(_mm256_cmpgt_epi64(u, p64),
                                 _mm256_cmpeq_epi64(u, p64));
    return _mm256_sub_epi64(u, _mm256_and_si256(ge, p64));
}

static inline __m256i add_mod_lanes(__m256i x, __m256i y, __m256i p64) {
    __m256i s = _mm256_add_epi64(x, y);
    __m256i ge = _mm256_or_si256(_mm256_cmpgt_epi64(s, p64),
                                 _mm256_cmpeq_epi64(s, p64));
    return _mm256_sub_epi64(s, _mm256_and_si256(ge, p64));
}

void fp_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                  std::uint32_t a, std::uint32_t p) {
    // a*2^32 mod p fits in 64 bits because a < p < 2^31.
    std::uint32_t ahat32 = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) << 32) % p);
    std::uint32_t pprime32 = neg_inv_mod_2_32(p);

    const __m256i ahat = _mm256_set1_epi64x(ahat32);
    const __m256i pprime = _mm256_set1_epi64x(pprime32);
    const __m256i p64 = _mm256_set1_epi64x(p);
    const __m256i lo32 = _mm256_set1_epi64x(0xffffffffll);

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));

        __m256i s_even = _mm256_and_si256(s, lo32);
        __m256i s_odd = _mm256_srli_epi64(s, 32);
        __m256i d_even = _mm256_and_si256(d, lo32);
        __m256i d_odd = _mm256_srli_epi64(d, 32);

        __m256i r_even = add_mod_lanes(d_even, mont_mul_lanes(s_even, ahat, p64, pprime), p64);
        __m256i r_odd = add_mod_lanes(d_odd, mont_mul_lanes(s_odd, ahat, p64, pprime), p64);

        __m256i res = _mm256_or_si256(r_even, _mm256_slli_epi64(r_odd, 32));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), res);
    }
    for (; i < n; ++i) {
        std::uint64_t t = dst[i] + static_cast<std::uint64_t>(a) * src[i];
        dst[i] = static_cast<std::uint32_t>(t % p);
    }
}

} // namespace bettic::kernels
