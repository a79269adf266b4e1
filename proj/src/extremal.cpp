#include "bettic/extremal.hpp"

#include <stdexcept>

#include "bettic/generators.hpp"
#include "bettic/hochster.hpp"
#include "bettic/homology.hpp"

namespace bettic {

static mpz_class binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

mpz_class g_value(int m, int d) {
    if (!(0 <= d && d < m)) throw std::range_error("g(m,d): need 0 <= d < m");
    mpz_class sum = 0;
    for (int j = d + 1; j <= m; ++j) sum += binom(m, j) * binom(j - 1, d);
    return sum;
}

int g_argmax(int m) {
    if (m < 1) throw std::range_error("g_argmax: need m >= 1");
    int best = 0;
    mpz_class best_value = g_value(m, 0);
    bool tie = false;
    for (int d = 1; d < m; ++d) {
        mpz_class v = g_value(m, d);
        if (v > best_value) {
            best = d;
            best_value = v;
            tie = false;
        } else if (v == best_value) {
            tie = true;
        }
    }
    if (tie) throw std::domain_error("g(m,.) maximum attained more than once at m=" + std::to_string(m));
    return best;
}

bool g_recurrence_check(int m) {
    for (int d = 1; d < m; ++d) {
        mpz_class lhs = g_value(m, d) + g_value(m, d - 1);
        mpz_class rhs;
        mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(m - d));
        rhs *= binom(m, d);
        if (lhs != rhs) return false;
    }
    return true;
}

mpz_class tb_upper_bound(int m, int d) {
    if (!(0 <= d && d < m)) throw std::range_error("tb_upper_bound: need 0 <= d < m");
    if (d == m - 1) return 0;
    const int half = m / 2;
    if (d <= half - 1) return binom(m - 1, d + 1);
    return binom(m - 1, half) - binom(d, half);
}

// Extended skeleton with the degenerate k = d case folded to the plain
// skeleton (the minimal d-dimensional complex containing the d-skeleton is
// the skeleton itself).
static Complex ext_or_skeleton(int m, int k, int d) {
    if (k == d) return skeleton(m, d);
    return skeleton_ext(m, k, d);
}

// Witness re-measurement cutoffs: answers are validated against the
// homology engines whenever the check is desk-scale.
constexpr int kTbValidateMax = 14;
constexpr int kSweepValidateMax = 12;

static ExtremalAnswer checked_answer(mpz_class value, std::vector<Complex> witnesses, std::string theorem) {
    for (const Complex& W : witnesses) {
        if (W.m() > kTbValidateMax) continue;
        long long measured = tb_reduced(W, FieldSpec::f2());
        if (mpz_class(static_cast<long>(measured)) != value)
            throw std::logic_error("extremal witness fails to attain its value (" + theorem + ")");
    }
    return ExtremalAnswer{std::move(value), std::move(witnesses), std::move(theorem)};
}

ExtremalAnswer sigma_tb_witnesses(int m, int d) {
    if (!(0 <= d && d < m)) throw std::range_error("sigma_tb_witnesses: need 0 <= d < m");
    const int half = m / 2;
    mpz_class value = tb_upper_bound(m, d);
    std::vector<Complex> ws;
    if (d <= half - 1 || d == m - 1) {
        ws.push_back(skeleton(m, d));
    } else if (d == m - 2 && m % 2 == 1) {
        ws.push_back(ext_or_skeleton(m, half - 1, d));
        ws.push_back(ext_or_skeleton(m, half, d));
    } else { // floor(m/2) <= d <= m-2 (single answer)
        ws.push_back(ext_or_skeleton(m, half - 1, d));
    }
    return checked_answer(std::move(value), std::move(ws), "sigma-tb(m,d)");
}

ExtremalAnswer sigma_tb_global(int m) {
    if (m < 1) throw std::range_error("sigma_tb_global: need m >= 1");
    if (m == 1) return checked_answer(0, {simplex_complex(1)}, "sigma-tb(m)");
    if (m == 2) return checked_answer(1, {skeleton(2, 0)}, "sigma-tb(m)");
    mpz_class value = binom(m - 1, (m - 1) / 2);
    std::vector<Complex> ws;
    if (m % 2 == 1) {
        ws.push_back(skeleton(m, (m - 3) / 2));
    } else {
        ws.push_back(skeleton(m, m / 2 - 1));
        ws.push_back(skeleton(m, m / 2 - 2));
    }
    return checked_answer(std::move(value), std::move(ws), "sigma-tb(m)");
}

mpz_class d_skeleton_value(int m, int d) {
    if (!(0 <= d && d < m)) throw std::range_error("d_skeleton_value: need 0 <= d < m");
    if (d == m - 1) return 1; // the full simplex
    return g_value(m, d + 1) + 1;
}

mpz_class tight_bound(int m, int d) {
    if (!(0 <= d && d < m)) throw std::range_error("tight_bound: need 0 <= d < m");
    mpz_class b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(m - d - 1));
    return b;
}

ExtremalAnswer d_max(int m) {
    if (m < 4)
        throw std::domain_error("d_max: closed form defined for m >= 4 "
                                "(the witness skeleton index degenerates below); use an exhaustive scan");
    const int t = (m - 1) / 3;
    mpz_class value = g_value(m, t) + 1;
    Complex witness = skeleton(m, t - 1);
    if (m <= kSweepValidateMax) {
        // validated against the sweep engine rather than trusted
        long long measured = d_total(witness, FieldSpec::f2());
        if (mpz_class(static_cast<long>(measured)) != value)
            throw std::logic_error("d_max witness fails to attain its value");
    }
    return ExtremalAnswer{std::move(value), {std::move(witness)}, "d-max(m)"};
}

} // namespace bettic
