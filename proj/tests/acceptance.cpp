// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion pins its own tolerances (everything here is exact
// integer arithmetic, so tolerance means equality) and its own scale.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bettic/canonical.hpp"
#include "bettic/classifier.hpp"
#include "bettic/extremal.hpp"
#include "bettic/generators.hpp"
#include "bettic/hochster.hpp"
#include "bettic/homology.hpp"
#include "bettic/io.hpp"
#include "bettic/search.hpp"
#include "bettic/sperner.hpp"

using namespace bettic;

namespace {

const FieldSpec F2 = FieldSpec::f2();
const FieldSpec F3 = FieldSpec::fp(3);
const FieldSpec Q = FieldSpec::rationals();
constexpr int kThreads = 0; // hardware

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

mpz_class binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

std::vector<std::string> canonical_keys(const std::vector<Complex>& cs) {
    std::vector<std::string> keys;
    for (const Complex& K : cs) keys.push_back(canonical_form(K).key);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

// 1. skeleton formula over F2 and the rationals, m <= 10
Outcome criterion_skeleton_formula() {
    Outcome o;
    for (int m = 1; m <= 10; ++m) {
        for (int d = 0; d < m; ++d) {
            const Complex sk = skeleton(m, d);
            const mpz_class expect = binom(m - 1, d + 1);
            for (const FieldSpec& F : {F2, Q}) {
                const long long tb = tb_reduced(sk, F);
                if (mpz_class(static_cast<long>(tb)) != expect)
                    o.fail("tb(skeleton(" + std::to_string(m) + "," + std::to_string(d) + ")) over " +
                           F.name() + " = " + std::to_string(tb) + " != " + expect.get_str());
            }
        }
    }
    return o;
}

// 2. the 33 classes of 1-dimensional complexes on 5 vertices, and the
// minimum total bigraded Betti number 12 with witnesses C5 and K_{2,3}
Outcome criterion_sigma51() {
    Outcome o;
    const ScanReport rep = scan(5, 1, Objective::D_MIN, F2, kThreads);
    if (rep.enumerated != 33) o.fail("expected 33 classes, got " + std::to_string(rep.enumerated));
    if (rep.extremal_value != 12) o.fail("minimum is " + std::to_string(rep.extremal_value) + ", not 12");
    const auto want = canonical_keys({cycle(5), complete_bipartite(2, 3)});
    if (rep.witness_keys != want) o.fail("witness set is not {C5, K_{2,3}}");
    return o;
}

// 3. global maxima of the reduced total Betti number at m = 5 and m = 6
Outcome criterion_tb_global() {
    Outcome o;
    for (int m : {5, 6}) {
        const ScanReport rep = scan(m, std::nullopt, Objective::TB_MAX, F2, kThreads, /*allow_long=*/true);
        const ExtremalAnswer expect = sigma_tb_global(m);
        if (mpz_class(static_cast<long>(rep.extremal_value)) != expect.value)
            o.fail("m=" + std::to_string(m) + " value " + std::to_string(rep.extremal_value));
        if (rep.witness_keys != canonical_keys(expect.witnesses))
            o.fail("m=" + std::to_string(m) + " witness set mismatch");
    }
    return o;
}

// 4. dimension-wise classification for every d, m <= 5 plus the gated m = 6
Outcome criterion_sigma_md() {
    Outcome o;
    long long classes = 0;
    for (int m = 2; m <= 6; ++m) {
        for (int d = 0; d < m; ++d) {
            const ScanReport rep = scan(m, d, Objective::TB_MAX, F2, kThreads, /*allow_long=*/true);
            classes += rep.enumerated;
            const ExtremalAnswer expect = sigma_tb_witnesses(m, d);
            if (mpz_class(static_cast<long>(rep.extremal_value)) != expect.value)
                o.fail("(" + std::to_string(m) + "," + std::to_string(d) + ") value");
            if (rep.witness_keys != canonical_keys(expect.witnesses))
                o.fail("(" + std::to_string(m) + "," + std::to_string(d) + ") witnesses");
        }
    }
    o.detail = std::to_string(classes) + " classes";
    return o;
}

// 5. the dimension-wise upper bound saturates, m <= 5 plus the gated m = 6
Outcome criterion_bound_saturation() {
    Outcome o;
    for (int m = 2; m <= 6; ++m)
        for (int d = 0; d < m; ++d) {
            const ScanReport rep = scan(m, d, Objective::TB_MAX, F2, kThreads, /*allow_long=*/true);
            if (mpz_class(static_cast<long>(rep.extremal_value)) != tb_upper_bound(m, d))
                o.fail("(" + std::to_string(m) + "," + std::to_string(d) + ")");
        }
    return o;
}

// 6. numeric tightness == structural tightness for every class at m <= 5
// over F2, F3, and the rationals; at the gated m = 6 the numerically tight
// classes must be exactly the generated simplex-sphere-join classes
Outcome criterion_tight_equivalence() {
    Outcome o;
    long long checked = 0;
    for (int m = 1; m <= 5; ++m) {
        enumerate(m, std::nullopt, false, [&](const Complex& K) {
            const bool structural = is_tight_structural(K);
            for (const FieldSpec& F : {F2, F3, Q}) {
                ++checked;
                if (is_tight_numeric(K, F) != structural)
                    o.fail("discrepancy at m=" + std::to_string(K.m()) + " facets=" + facet_list_string(K) +
                           " over " + F.name());
            }
            return true;
        });
    }

    // expected tight classes on [6]: cone size r plus sphere factors n_i >= 2
    std::vector<Complex> expected{simplex_complex(6)};
    for (int r = 0; r <= 4; ++r) {
        // all partitions of 6 - r into parts >= 2
        std::vector<std::vector<int>> plist;
        std::function<void(int, int, std::vector<int>&)> rec = [&](int rest, int min_part,
                                                                   std::vector<int>& acc) {
            if (rest == 0) {
                plist.push_back(acc);
                return;
            }
            for (int p = min_part; p <= rest; ++p) {
                acc.push_back(p);
                rec(rest - p, p, acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        rec(6 - r, 2, acc);
        for (const auto& ns : plist)
            expected.push_back(r == 0 ? sphere_join(ns) : simplex_sphere_join(r, ns));
    }
    const ScanReport tight6 = scan(6, std::nullopt, Objective::TIGHT_ALL, F2, kThreads, /*allow_long=*/true);
    if (tight6.witness_keys != canonical_keys(expected))
        o.fail("m=6 tight classes differ from the simplex-sphere-join census (" +
               std::to_string(tight6.extremal_value) + " found, " +
               std::to_string(canonical_keys(expected).size()) + " expected)");

    o.detail = std::to_string(checked) + " class-field pairs; " +
               std::to_string(tight6.extremal_value) + " tight classes at m=6";
    return o;
}

// 7. global maxima of the total bigraded Betti number at m = 4, 5
Outcome criterion_d_max() {
    Outcome o;
    for (int m : {4, 5}) {
        const ExtremalAnswer expect = d_max(m);
        const int t = (m - 1) / 3;
        if (expect.value != d_skeleton_value(m, t - 1)) o.fail("closed forms disagree at m=" + std::to_string(m));
        const ScanReport rep = scan(m, std::nullopt, Objective::D_MAX, F2, kThreads);
        if (mpz_class(static_cast<long>(rep.extremal_value)) != expect.value)
            o.fail("m=" + std::to_string(m) + " value " + std::to_string(rep.extremal_value));
        if (rep.witness_keys != canonical_keys(expect.witnesses))
            o.fail("m=" + std::to_string(m) + " witness mismatch");
    }
    return o;
}

// 8. direct evaluation of the g-maximizer and the g recurrence
Outcome criterion_g() {
    Outcome o;
    for (int m = 4; m <= 60; ++m) {
        int arg = -1;
        try {
            arg = g_argmax(m);
        } catch (const std::domain_error&) {
            o.fail("maximum not unique at m=" + std::to_string(m));
            continue;
        }
        if (arg != (m - 1) / 3) o.fail("argmax at m=" + std::to_string(m));
    }
    for (int m = 2; m <= 30; ++m)
        if (!g_recurrence_check(m)) o.fail("recurrence at m=" + std::to_string(m));
    return o;
}

// 9. sampled property suites, 1000 seeded samples each at m <= 6
Outcome criterion_properties() {
    Outcome o;
    long long violations = 0;

    // Mayer-Vietoris for the reduced total Betti number
    std::uint64_t state = 1;
    for (int s = 0; s < 1000; ++s) {
        const int m = 3 + static_cast<int>(state % 4);
        const Complex K = random_subcomplex(m, state);
        const Complex L = random_subcomplex(m, state);
        if (tb_reduced(K, F2) + tb_reduced(L, F2) >
            tb_reduced(complex_intersection(K, L), F2) + tb_reduced(complex_union(K, L), F2))
            ++violations, o.fail("tb Mayer-Vietoris");
    }
    // Mayer-Vietoris for the total bigraded Betti number
    state = 2;
    for (int s = 0; s < 1000; ++s) {
        const int m = 3 + static_cast<int>(state % 4);
        const Complex K = random_subcomplex(m, state);
        const Complex L = random_subcomplex(m, state);
        if (d_total(K, F2) + d_total(L, F2) >
            d_total(complex_intersection(K, L), F2) + d_total(complex_union(K, L), F2))
            ++violations, o.fail("D Mayer-Vietoris");
    }
    // join multiplicativity, both invariants
    state = 3;
    for (int s = 0; s < 1000; ++s) {
        const Complex K = random_subcomplex(3 + static_cast<int>(state % 2), state);
        const Complex L = random_subcomplex(3, state);
        if (tb_reduced(join(K, L), F2) != tb_reduced(K, F2) * tb_reduced(L, F2))
            ++violations, o.fail("tb join");
        if (d_total(join(K, L), F2) != d_total(K, F2) * d_total(L, F2))
            ++violations, o.fail("D join");
    }
    // monotonicity under vertex deletion, and the two lower bounds
    state = 4;
    for (int s = 0; s < 1000; ++s) {
        const int m = 4 + static_cast<int>(state % 3);
        const Complex K = random_subcomplex(m, state);
        const long long d = d_total(K, F2);
        for (int w = 1; w <= K.m(); ++w)
            if (d_total(restrict_to(K, full_mask(K.m()) & ~vertex_bit(w)), F2) > d)
                ++violations, o.fail("deletion monotonicity");
        if (mpz_class(static_cast<long>(d)) < mpz_class(1) << (K.m() - K.dim() - 1))
            ++violations, o.fail("universal lower bound");
        if (mpz_class(static_cast<long>(d)) < mpz_class(1) << (K.m() - K.mdim() - 1))
            ++violations, o.fail("mdim lower bound");
    }
    o.detail = "6 properties x 1000 seeded samples, " + std::to_string(violations) + " violations";
    return o;
}

// 10. near-cone suite: shifted complexes at m <= 5, 200 seeded
// constructions, and brute-force antichain maxima at n <= 6
Outcome criterion_near_cone() {
    Outcome o;
    long long shifted = 0;
    for (int m = 1; m <= 5; ++m) {
        enumerate_labeled(m, std::nullopt, true, [&](const Complex& K) {
            if (!is_shifted(K)) return true;
            ++shifted;
            if (!is_near_cone(K)) {
                o.fail("shifted complex is not a near-cone: " + facet_list_string(K));
                return true;
            }
            const SpernerFamily B = b_delta(K);
            if (!is_sperner(B)) o.fail("B is not an antichain: " + facet_list_string(K));
            if (static_cast<long long>(B.members.size()) != tb_reduced(K, F2))
                o.fail("tb != |B| at " + facet_list_string(K));
            for (Simplex s : B.members) {
                if (has_vertex(s, 1)) o.fail("B member contains the apex");
                bool maximal = true;
                for (Simplex f : K.facets())
                    if (s != f && (s & f) == s) maximal = false;
                if (!maximal) o.fail("non-maximal B member at " + facet_list_string(K));
            }
            return true;
        });
    }

    // seeded constructions
    std::uint64_t state = 10;
    int built = 0;
    while (built < 200) {
        const int m = 3 + static_cast<int>(state % 4);
        const Complex K = random_subcomplex(m, state);
        SpernerFamily F;
        F.ground = full_mask(m) & ~vertex_bit(1);
        for (Simplex f : K.facets()) {
            const Simplex s = f & F.ground;
            if (s == 0) continue;
            bool comparable = false;
            for (Simplex other : F.members)
                if ((other & s) == other || (other & s) == s) comparable = true;
            if (!comparable) F.members.push_back(s);
        }
        int need = 0;
        for (Simplex s : F.members) need = std::max(need, card(s) - 1);
        Simplex spine = 0;
        int have = 0;
        for (int v = 2; v <= m && have < need; ++v) spine |= vertex_bit(v), ++have;
        bool ok = true;
        for (Simplex s : F.members)
            if ((s & spine) == s) ok = false;
        if (!ok) continue;
        const Complex nc = near_cone_from_family(F, spine, m);
        ++built;
        if (!is_near_cone(nc)) o.fail("construction not a near-cone");
        const SpernerFamily B = b_delta(nc);
        std::vector<Simplex> got(B.members), want(F.members);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) o.fail("B differs from the input family");
        if (static_cast<long long>(B.members.size()) != tb_reduced(nc, F2))
            o.fail("tb != |B| on a construction");
    }

    // brute-force antichain maxima
    for (int n = 1; n <= 6; ++n) {
        struct Brute {
            std::vector<Simplex> pool;
            std::vector<std::uint64_t> comparable;
            long long best = 0;
            void prepare() {
                comparable.assign(pool.size(), 0);
                for (std::size_t i = 0; i < pool.size(); ++i)
                    for (std::size_t j = 0; j < i; ++j)
                        if ((pool[j] & pool[i]) == pool[j] || (pool[j] & pool[i]) == pool[i])
                            comparable[i] |= std::uint64_t{1} << j;
            }
            void dfs(std::size_t next, std::uint64_t chosen, long long size) {
                best = std::max(best, size);
                for (std::size_t i = next; i < pool.size(); ++i) {
                    if (size + static_cast<long long>(pool.size() - i) <= best) return;
                    if (comparable[i] & chosen) continue;
                    dfs(i + 1, chosen | (std::uint64_t{1} << i), size + 1);
                }
            }
        };
        Brute b;
        for (Simplex s = 1; s <= full_mask(n); ++s) b.pool.push_back(s);
        b.prepare();
        b.dfs(0, 0, 0);
        if (mpz_class(static_cast<long>(b.best)) != sperner_max(n)) o.fail("sperner_max(" + std::to_string(n) + ")");
        for (int k = 1; k <= n; ++k) {
            Simplex Y = 0;
            for (int v = n - k + 1; v <= n; ++v) Y |= vertex_bit(v);
            Brute bk;
            for (Simplex s = 1; s <= full_mask(n); ++s)
                if (s & Y) bk.pool.push_back(s);
            bk.prepare();
            bk.dfs(0, 0, 0);
            if (mpz_class(static_cast<long>(bk.best)) != f_bound(n, k))
                o.fail("f_bound(" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    }
    o.detail = std::to_string(shifted) + " shifted complexes, 200 constructions, antichain maxima to n=6";
    return o;
}

// 11. the projective-plane fixture separates characteristics
Outcome criterion_field_sensitivity() {
    Outcome o;
    const Complex rp2 = read_complex_file(std::string(BETTIC_TEST_DATA) + "/rp2_6.json");
    if (tb_reduced(rp2, F2) != 2) o.fail("tb over f2 != 2");
    if (tb_reduced(rp2, Q) != 0) o.fail("tb over q != 0");
    const BettiTable t2 = reduced_betti(rp2, F2);
    if (t2.betti(1) != 1 || t2.betti(2) != 1) o.fail("f2 table is not (0,1,1)");
    const BettiTable tq = reduced_betti(rp2, Q);
    if (tq.total() != 0) o.fail("rational table does not vanish");
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "skeleton Betti closed form (m<=10, f2+q)", criterion_skeleton_formula},
        {2, "Sigma(5,1): 33 classes, minimum D = 12 at {C5, K_{2,3}}", criterion_sigma51},
        {3, "global tb maxima at m=5,6 with parity skeleta", criterion_tb_global},
        {4, "dimension-wise tb classification (m<=6)", criterion_sigma_md},
        {5, "tb upper bound saturates (m<=6)", criterion_bound_saturation},
        {6, "numeric = structural tightness (m<=5; f2,f3,q)", criterion_tight_equivalence},
        {7, "global D maxima at m=4,5 with skeleton witness", criterion_d_max},
        {8, "g argmax (m<=60) and recurrence (m<=30)", criterion_g},
        {9, "seeded property suites (1000 samples each)", criterion_properties},
        {10, "near-cone suite and antichain maxima", criterion_near_cone},
        {11, "field sensitivity on the 6-vertex projective plane", criterion_field_sensitivity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %2d  %-55s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, dt,
                    o.detail.empty() ? "" : "  -- ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
