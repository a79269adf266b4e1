#include "bettic/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace bettic::kernels {

// ---------------------------------------------------------------------------
// scalar reference kernels
// ---------------------------------------------------------------------------

static void f2_xor_rows_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t w = 0; w < nwords; ++w) dst[w] ^= src[w];
}

static void fp_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                           std::uint32_t a, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t t = dst[i] + static_cast<std::uint64_t>(a) * src[i];
        dst[i] = static_cast<std::uint32_t>(t % p);
    }
}

// ---------------------------------------------------------------------------
// SIMD variants (separate TUs so they can carry their own -m flags)
// ---------------------------------------------------------------------------

#if defined(BETTIC_HAVE_AVX2_TU)
void f2_xor_rows_avx2(std::uint64_t*, const std::uint64_t*, std::size_t);
void fp_axpy_avx2(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
static bool avx2_supported() { return __builtin_cpu_supports("avx2"); }
#endif

#if defined(__aarch64__)
static void f2_xor_rows_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t w = 0;
    for (; w + 2 <= nwords; w += 2) {
        uint64x2_t a = vld1q_u64(dst + w);
        uint64x2_t b = vld1q_u64(src + w);
        vst1q_u64(dst + w, veorq_u64(a, b));
    }
    for (; w < nwords; ++w) dst[w] ^= src[w];
}
#endif

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

using F2Fn = void (*)(std::uint64_t*, const std::uint64_t*, std::size_t);
using FpFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);

namespace {

struct Dispatch {
    F2Fn f2 = f2_xor_rows_scalar;
    FpFn fp = fp_axpy_scalar;
    const char* backend = "scalar";

    Dispatch() {
#if defined(BETTIC_HAVE_AVX2_TU)
        if (avx2_supported()) {
            f2 = f2_xor_rows_avx2;
            fp = fp_axpy_avx2;
            backend = "avx2";
            return;
        }
#endif
#if defined(__aarch64__)
        f2 = f2_xor_rows_neon;
        backend = "neon";
#endif
    }
};

const Dispatch& dispatch() {
    static const Dispatch d;
    return d;
}

} // namespace

void f2_xor_rows(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    dispatch().f2(dst, src, nwords);
}

void fp_axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
             std::uint32_t a, std::uint32_t p) {
    dispatch().fp(dst, src, n, a, p);
}

const char* active_backend() { return dispatch().backend; }

std::vector<F2XorVariant> f2_xor_variants() {
    std::vector<F2XorVariant> out;
    out.push_back({"scalar", f2_xor_rows_scalar, true});
#if defined(BETTIC_HAVE_AVX2_TU)
    out.push_back({"avx2", f2_xor_rows_avx2, avx2_supported()});
#endif
#if defined(__aarch64__)
    out.push_back({"neon", f2_xor_rows_neon, true});
#endif
    return out;
}

std::vector<FpAxpyVariant> fp_axpy_variants() {
    std::vector<FpAxpyVariant> out;
    out.push_back({"scalar", fp_axpy_scalar, true});
#if defined(BETTIC_HAVE_AVX2_TU)
    out.push_back({"avx2", fp_axpy_avx2, avx2_supported()});
#endif
    return out;
}

} // namespace bettic::kernels
