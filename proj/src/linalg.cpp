#include "bettic/linalg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

#include "bettic/kernels.hpp"

namespace bettic {

// ---------------------------------------------------------------------------
// field spec
// ---------------------------------------------------------------------------

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::fp(std::uint32_t p) {
    if (p == 2) return f2();
    if (p < 3 || static_cast<std::uint64_t>(p) > (1ull << 31) || !is_prime_u64(p))
        throw std::domain_error("field characteristic must be a prime <= 2^31, got " + std::to_string(p));
    return FieldSpec(Tag::Fp, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(text.c_str() + 1, &end, 10);
        if (end && *end == '\0' && v >= 2) {
            if (v == 2) return f2();
            return fp(static_cast<std::uint32_t>(v));
        }
    }
    throw std::domain_error("unrecognized field '" + text + "' (expected f2, f<p>, or q)");
}

std::string FieldSpec::name() const {
    switch (tag_) {
        case Tag::F2: return "f2";
        case Tag::Fp: return "f" + std::to_string(p_);
        case Tag::Rationals: return "q";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// GF(2): bit-packed Gaussian elimination
// ---------------------------------------------------------------------------

int rank_f2_packed(std::vector<std::vector<std::uint64_t>>& rows, int cols) {
    const int nrows = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        const int w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        int pivot = -1;
        for (int i = r; i < nrows; ++i) {
            if (rows[i][w] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = r + 1; i < nrows; ++i) {
            if (rows[i][w] & bit)
                kernels::f2_xor_rows(rows[i].data() + w, rows[r].data() + w,
                                     rows[i].size() - static_cast<std::size_t>(w));
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fp: dense modular elimination
// ---------------------------------------------------------------------------

static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

int rank_fp_dense(std::vector<std::uint32_t>& a, int rows, int cols, std::uint32_t p) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = c; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(r) * cols + j],
                          a[static_cast<std::size_t>(pivot) * cols + j]);
        }
        const std::uint32_t inv = inv_mod(a[static_cast<std::size_t>(r) * cols + c], p);
        for (int i = r + 1; i < rows; ++i) {
            std::uint32_t lead = a[static_cast<std::size_t>(i) * cols + c];
            if (lead == 0) continue;
            // row_i += (p - lead*inv) * row_r, zeroing column c
            std::uint32_t factor = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(lead) * inv) % p);
            std::uint32_t neg = p - factor;
            kernels::fp_axpy(&a[static_cast<std::size_t>(i) * cols + c],
                             &a[static_cast<std::size_t>(r) * cols + c],
                             static_cast<std::size_t>(cols - c), neg, p);
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Rationals: fraction-free (Bareiss) elimination
// ---------------------------------------------------------------------------

// int64 attempt; returns -1 on overflow so the caller can retry with GMP.
static int rank_q_int64(std::vector<std::int64_t> a, int rows, int cols) {
    std::int64_t prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = c; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(r) * cols + j],
                          a[static_cast<std::size_t>(pivot) * cols + j]);
        }
        const std::int64_t piv = a[static_cast<std::size_t>(r) * cols + c];
        for (int i = r + 1; i < rows; ++i) {
            const std::int64_t lead = a[static_cast<std::size_t>(i) * cols + c];
            for (int j = c + 1; j < cols; ++j) {
                std::int64_t x, y;
                if (__builtin_mul_overflow(piv, a[static_cast<std::size_t>(i) * cols + j], &x))
                    return -1;
                if (__builtin_mul_overflow(lead, a[static_cast<std::size_t>(r) * cols + j], &y))
                    return -1;
                std::int64_t num;
                if (__builtin_sub_overflow(x, y, &num)) return -1;
                a[static_cast<std::size_t>(i) * cols + j] = num / prev; // exact by Sylvester's identity
            }
            a[static_cast<std::size_t>(i) * cols + c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

static int rank_q_mpz(const std::vector<std::int64_t>& in, int rows, int cols) {
    std::vector<mpz_class> a(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) a[i] = static_cast<long>(in[i]);
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = c; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(r) * cols + j],
                          a[static_cast<std::size_t>(pivot) * cols + j]);
        }
        const mpz_class piv = a[static_cast<std::size_t>(r) * cols + c];
        for (int i = r + 1; i < rows; ++i) {
            const mpz_class lead = a[static_cast<std::size_t>(i) * cols + c];
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num = piv * a[static_cast<std::size_t>(i) * cols + j] -
                                lead * a[static_cast<std::size_t>(r) * cols + j];
                mpz_divexact(a[static_cast<std::size_t>(i) * cols + j].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(i) * cols + c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

int rank_q_dense(const std::vector<std::int64_t>& a, int rows, int cols) {
    int r = rank_q_int64(a, rows, cols);
    if (r >= 0) return r;
    return rank_q_mpz(a, rows, cols);
}

// ---------------------------------------------------------------------------
// public entry point
// ---------------------------------------------------------------------------

int rank(const SparseMatrix& M, const FieldSpec& F) {
    if (M.rows == 0 || M.cols == 0) return 0;
    for (const auto& e : M.entries) {
        if (e.row < 0 || e.row >= M.rows || e.col < 0 || e.col >= M.cols)
            throw std::range_error("matrix entry out of range");
    }
    switch (F.tag()) {
        case FieldSpec::Tag::F2: {
            const int words = (M.cols + 63) / 64;
            std::vector<std::vector<std::uint64_t>> rows(
                static_cast<std::size_t>(M.rows),
                std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
            for (const auto& e : M.entries) {
                if (e.value & 1)
                    rows[static_cast<std::size_t>(e.row)][e.col >> 6] ^= std::uint64_t{1} << (e.col & 63);
            }
            return rank_f2_packed(rows, M.cols);
        }
        case FieldSpec::Tag::Fp: {
            const std::uint32_t p = F.prime();
            std::vector<std::uint32_t> a(static_cast<std::size_t>(M.rows) * M.cols, 0);
            for (const auto& e : M.entries) {
                std::int64_t v = e.value % static_cast<std::int64_t>(p);
                if (v < 0) v += p;
                a[static_cast<std::size_t>(e.row) * M.cols + e.col] = static_cast<std::uint32_t>(v);
            }
            return rank_fp_dense(a, M.rows, M.cols, p);
        }
        case FieldSpec::Tag::Rationals: {
            std::vector<std::int64_t> a(static_cast<std::size_t>(M.rows) * M.cols, 0);
            for (const auto& e : M.entries)
                a[static_cast<std::size_t>(e.row) * M.cols + e.col] = e.value;
            return rank_q_dense(a, M.rows, M.cols);
        }
    }
    return 0;
}

} // namespace bettic
