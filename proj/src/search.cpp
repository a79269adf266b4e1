#include "bettic/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "bettic/classifier.hpp"
#include "bettic/extremal.hpp"
#include "bettic/generators.hpp"
#include "bettic/hochster.hpp"
#include "bettic/homology.hpp"
#include "bettic/sperner.hpp"

namespace bettic {

// ---------------------------------------------------------------------------
// enumeration: ascending-facet antichain DFS + canonical-labeling filter
// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
    int m;
    std::optional<int> d;
    bool canonical_only = true;
    bool require_cover = true;
    const std::function<bool(const Complex&)>& yield;
    std::vector<Simplex> cand;          // candidate facets, ascending mask order
    std::vector<std::uint64_t> dom;     // dom[i]: indices j<i with cand[j] strictly inside cand[i]
    std::vector<Simplex> suffix_union;  // union of cand[i..]
    std::vector<char> suffix_has_top;   // a size-(d+1) candidate at index >= i exists
    Simplex full;
    int top_size; // d+1, or 0 when d is absent
    std::vector<Simplex> chosen;
    bool stopped = false;

    Enumerator(int m_, std::optional<int> d_, const std::function<bool(const Complex&)>& y)
        : m(m_), d(d_), yield(y), full(full_mask(m_)), top_size(d_ ? *d_ + 1 : 0) {
        const int cap = d_ ? *d_ + 1 : m_;
        for (Simplex s = 1; s <= full; ++s)
            if (card(s) <= cap) cand.push_back(s);
        const std::size_t n = cand.size();
        dom.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if ((cand[j] & cand[i]) == cand[j]) dom[i] |= std::uint64_t{1} << j;
        suffix_union.assign(n + 1, 0);
        suffix_has_top.assign(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            suffix_union[i] = suffix_union[i + 1] | cand[i];
            suffix_has_top[i] = suffix_has_top[i + 1] || (top_size && card(cand[i]) == top_size);
        }
    }

    void run() { dfs(0, 0, 0, false); }

    void dfs(std::size_t next, std::uint64_t chosen_idx, Simplex covered, bool has_top) {
        if (stopped) return;
        for (std::size_t i = next; i < cand.size(); ++i) {
            if (dom[i] & chosen_idx) continue; // would swallow a chosen facet
            // feasibility: the rest of the pool must still be able to cover
            // the missing vertices and provide a top-dimension facet
            if (require_cover && (covered | cand[i] | suffix_union[i + 1]) != full) continue;
            const bool top_now = has_top || !top_size || card(cand[i]) == top_size;
            if (!top_now && !suffix_has_top[i + 1]) continue;
            chosen.push_back(cand[i]);
            const Simplex cov = covered | cand[i];
            if ((cov == full || !require_cover) && top_now) emit();
            if (!stopped) dfs(i + 1, chosen_idx | (std::uint64_t{1} << i), cov, top_now);
            chosen.pop_back();
            if (stopped) return;
        }
    }

    void emit() {
        Complex K = Complex::from_antichain(m, chosen);
        if (canonical_only && !is_canonical_labeling(K)) return;
        if (!yield(K)) stopped = true;
    }
};

} // namespace

void enumerate(int m, std::optional<int> d, bool allow_long,
               const std::function<bool(const Complex&)>& yield) {
    if (m < 1) throw std::range_error("enumerate: need m >= 1");
    if (d && !(0 <= *d && *d < m)) throw std::range_error("enumerate: need 0 <= d < m");
    if (m > kEnumGatedMax)
        throw capacity_error("exhaustive enumeration capped at " + std::to_string(kEnumGatedMax) + " vertices");
    if (m > kEnumFreeMax && !allow_long)
        throw capacity_error("enumeration at m = " + std::to_string(m) +
                             " is long-running; pass the long-running flag to proceed");
    Enumerator e(m, d, yield);
    e.run();
}

long long count_classes(int m, std::optional<int> d, bool allow_long) {
    long long n = 0;
    enumerate(m, d, allow_long, [&](const Complex&) {
        ++n;
        return true;
    });
    return n;
}

void enumerate_labeled(int m, std::optional<int> d, bool require_full_support,
                       const std::function<bool(const Complex&)>& yield) {
    if (m < 1) throw std::range_error("enumerate_labeled: need m >= 1");
    if (d && !(0 <= *d && *d < m)) throw std::range_error("enumerate_labeled: need 0 <= d < m");
    if (m > kEnumFreeMax)
        throw capacity_error("labeled enumeration capped at " + std::to_string(kEnumFreeMax) + " vertices");
    Enumerator e(m, d, yield);
    e.canonical_only = false;
    e.require_cover = require_full_support;
    e.run();
}

// ---------------------------------------------------------------------------
// scans
// ---------------------------------------------------------------------------

Objective parse_objective(const std::string& name) {
    if (name == "tb_max") return Objective::TB_MAX;
    if (name == "d_min") return Objective::D_MIN;
    if (name == "d_max") return Objective::D_MAX;
    if (name == "tight_all") return Objective::TIGHT_ALL;
    throw std::range_error("unknown objective '" + name + "' (tb_max, d_min, d_max, tight_all)");
}

std::string objective_name(Objective o) {
    switch (o) {
        case Objective::TB_MAX: return "tb_max";
        case Objective::D_MIN: return "d_min";
        case Objective::D_MAX: return "d_max";
        case Objective::TIGHT_ALL: return "tight_all";
    }
    return "?";
}

ScanReport scan(int m, std::optional<int> d, Objective objective, const FieldSpec& F,
                int threads, bool allow_long, const ProgressFn& progress) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Complex> classes;
    enumerate(m, d, allow_long, [&](const Complex& K) {
        classes.push_back(K);
        if (progress && classes.size() % 10000 == 0)
            progress(static_cast<long long>(classes.size()));
        return true;
    });

    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    // objective value per class; TIGHT_ALL marks tight classes with 1
    std::vector<long long> values(classes.size(), 0);
    auto eval_range = [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            switch (objective) {
                case Objective::TB_MAX: values[i] = tb_reduced(classes[i], F); break;
                case Objective::D_MIN:
                case Objective::D_MAX: values[i] = d_total(classes[i], F); break;
                case Objective::TIGHT_ALL:
                    // no tight complex lives below floor((m-1)/2); skip the sweep there
                    values[i] = classes[i].dim() >= tightness_necessary_dim(m) &&
                                        is_tight_numeric(classes[i], F)
                                    ? 1
                                    : 0;
                    break;
            }
        }
    };
    if (threads == 1 || classes.size() < 32) {
        eval_range(0, classes.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (classes.size() + threads - 1) / static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t b = chunk * static_cast<std::size_t>(t);
            const std::size_t e = std::min(classes.size(), b + chunk);
            if (b < e) pool.emplace_back(eval_range, b, e);
        }
        for (auto& th : pool) th.join();
    }

    ScanReport rep;
    rep.m = m;
    rep.d = d;
    rep.objective = objective;
    rep.field = F;
    rep.enumerated = static_cast<long long>(classes.size());

    std::vector<std::size_t> attain;
    if (objective == Objective::TIGHT_ALL) {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (values[i]) attain.push_back(i);
        rep.extremal_value = static_cast<long long>(attain.size());
    } else {
        if (classes.empty()) throw std::logic_error("scan: empty enumeration");
        long long best = values[0];
        for (long long v : values)
            best = (objective == Objective::D_MIN) ? std::min(best, v) : std::max(best, v);
        rep.extremal_value = best;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (values[i] == best) attain.push_back(i);
    }

    // deterministic witness order: by canonical key
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(attain.size());
    for (std::size_t i : attain) keyed.push_back({canonical_form(classes[i]).key, i});
    std::sort(keyed.begin(), keyed.end());
    for (auto& [key, i] : keyed) {
        rep.witnesses.push_back(classes[i]);
        rep.witness_keys.push_back(key);
    }

    // every witness re-evaluates to the extremal value
    for (std::size_t w = 0; w < rep.witnesses.size(); ++w) {
        long long v = 0;
        switch (objective) {
            case Objective::TB_MAX: v = tb_reduced(rep.witnesses[w], F); break;
            case Objective::D_MIN:
            case Objective::D_MAX: v = d_total(rep.witnesses[w], F); break;
            case Objective::TIGHT_ALL: v = is_tight_numeric(rep.witnesses[w], F) ? 1 : 0; break;
        }
        const long long expect = (objective == Objective::TIGHT_ALL) ? 1 : rep.extremal_value;
        if (v != expect) throw std::logic_error("scan witness failed re-evaluation");
    }

    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// seeded sampling
// ---------------------------------------------------------------------------

static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Complex random_subcomplex(int m, std::uint64_t& state) {
    const std::uint64_t r = splitmix64(state);
    if ((r & 31u) == 0) return Complex::build(m, std::vector<Simplex>{}); // occasionally {emptyset}
    const int nfac = 1 + static_cast<int>(splitmix64(state) % 6);
    std::vector<Simplex> fac;
    for (int i = 0; i < nfac; ++i) {
        const int size = 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(m));
        Simplex s = 0;
        while (card(s) < size) s |= vertex_bit(1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(m)));
        fac.push_back(s);
    }
    return Complex::build(m, fac);
}

// ---------------------------------------------------------------------------
// verifiers
// ---------------------------------------------------------------------------

namespace {

std::string describe(const Complex& K) {
    return "m=" + std::to_string(K.m()) + " facets=" + facet_list_string(K);
}

VerifyReport verify_bk(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "BK-1.2";
    const int n_max = p.n_max.value_or(4); // complexes on at most n_max+1 vertices
    for (int m = 1; m <= n_max + 1; ++m) {
        const mpz_class bound = sperner_max(m - 1);
        enumerate(m, std::nullopt, p.allow_long, [&](const Complex& K) {
            ++rep.checked;
            const long long tb = tb_reduced(K, p.field);
            const long long chi = reduced_euler(K);
            if (mpz_class(static_cast<long>(tb)) > bound || mpz_class(static_cast<long>(std::llabs(chi))) > mpz_class(static_cast<long>(tb)))
                rep.counterexamples.push_back(describe(K) + " tb=" + std::to_string(tb) +
                                              " chi=" + std::to_string(chi));
            return true;
        });
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_tb22(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "TB-2.2";
    const int m = p.m.value_or(5);
    const ExtremalAnswer expect = sigma_tb_global(m);
    const ScanReport sc = scan(m, std::nullopt, Objective::TB_MAX, p.field, p.threads, p.allow_long);
    rep.checked = sc.enumerated;
    if (mpz_class(static_cast<long>(sc.extremal_value)) != expect.value)
        rep.counterexamples.push_back("value " + std::to_string(sc.extremal_value) + " != " +
                                      expect.value.get_str());
    std::vector<std::string> want;
    for (const Complex& W : expect.witnesses) want.push_back(canonical_form(W).key);
    std::sort(want.begin(), want.end());
    if (want != sc.witness_keys) {
        std::string got;
        for (const auto& k : sc.witness_keys) got += k + " ";
        rep.counterexamples.push_back("witness set mismatch: got " + got);
    }
    rep.pass = rep.counterexamples.empty();
    rep.notes.push_back("max reduced total Betti number over all complexes on " + std::to_string(m) +
                        " vertices is " + expect.value.get_str());
    return rep;
}

VerifyReport verify_mv21(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "MV-2.1";
    const int m = p.m.value_or(5);
    std::uint64_t state = p.seed * 0x9e3779b97f4a7c15ull + 12345;
    for (int s = 0; s < p.samples; ++s) {
        const Complex K = random_subcomplex(m, state);
        const Complex L = random_subcomplex(m, state);
        const long long lhs = tb_reduced(K, p.field) + tb_reduced(L, p.field);
        const long long rhs = tb_reduced(complex_intersection(K, L), p.field) +
                              tb_reduced(complex_union(K, L), p.field);
        ++rep.checked;
        if (lhs > rhs)
            rep.counterexamples.push_back("K=" + describe(K) + " L=" + describe(L) + " " +
                                          std::to_string(lhs) + " > " + std::to_string(rhs));
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

// independent brute-force antichain maximization: DFS over all antichains of
// the pool, with a precomputed comparability mask per candidate so the
// compatibility test is one AND
struct AntichainMax {
    std::vector<Simplex> pool;
    std::vector<std::uint64_t> comparable; // indices j<i with pool[j] related to pool[i]
    long long best = 0;

    void prepare() {
        comparable.assign(pool.size(), 0);
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if ((pool[j] & pool[i]) == pool[j] || (pool[j] & pool[i]) == pool[i])
                    comparable[i] |= std::uint64_t{1} << j;
    }

    void dfs(std::size_t next, std::uint64_t chosen_idx, long long size) {
        best = std::max(best, size);
        for (std::size_t i = next; i < pool.size(); ++i) {
            if (size + static_cast<long long>(pool.size() - i) <= best) return;
            if (comparable[i] & chosen_idx) continue;
            dfs(i + 1, chosen_idx | (std::uint64_t{1} << i), size + 1);
        }
    }

    long long run() {
        prepare();
        dfs(0, 0, 0);
        return best;
    }
};

VerifyReport verify_sperner(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "SPERNER-2.8";
    const int n_max = p.n_max.value_or(6);
    for (int n = 1; n <= n_max; ++n) {
        // unconstrained maximum
        AntichainMax am;
        for (Simplex s = 1; s <= full_mask(n); ++s) am.pool.push_back(s);
        const long long brute = am.run();
        ++rep.checked;
        if (mpz_class(static_cast<long>(brute)) != sperner_max(n))
            rep.counterexamples.push_back("n=" + std::to_string(n) + " brute=" + std::to_string(brute) +
                                          " formula=" + sperner_max(n).get_str());
        // over-Y maxima, Y = {n-k+1..n}
        for (int k = 1; k <= n; ++k) {
            Simplex Y = 0;
            for (int v = n - k + 1; v <= n; ++v) Y |= vertex_bit(v);
            AntichainMax am2;
            for (Simplex s = 1; s <= full_mask(n); ++s)
                if (s & Y) am2.pool.push_back(s);
            const long long brute2 = am2.run();
            ++rep.checked;
            if (mpz_class(static_cast<long>(brute2)) != f_bound(n, k))
                rep.counterexamples.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                              " brute=" + std::to_string(brute2) +
                                              " formula=" + f_bound(n, k).get_str());
        }
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_sigma29(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "SIGMA-2.9";
    const int m_max = p.m_max.value_or(5);
    for (int m = 2; m <= m_max; ++m) {
        for (int d = 0; d < m; ++d) {
            if (p.d && *p.d != d) continue;
            const ExtremalAnswer expect = sigma_tb_witnesses(m, d);
            const ScanReport sc = scan(m, d, Objective::TB_MAX, p.field, p.threads, p.allow_long);
            rep.checked += sc.enumerated;
            if (mpz_class(static_cast<long>(sc.extremal_value)) != expect.value) {
                rep.counterexamples.push_back("(" + std::to_string(m) + "," + std::to_string(d) + ") value " +
                                              std::to_string(sc.extremal_value) + " != " + expect.value.get_str());
                continue;
            }
            std::vector<std::string> want;
            for (const Complex& W : expect.witnesses) want.push_back(canonical_form(W).key);
            std::sort(want.begin(), want.end());
            want.erase(std::unique(want.begin(), want.end()), want.end());
            if (want != sc.witness_keys)
                rep.counterexamples.push_back("(" + std::to_string(m) + "," + std::to_string(d) +
                                              ") witness set mismatch");
        }
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_bounds210(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "BOUNDS-2.10";
    const int m_max = p.m_max.value_or(5);
    for (int m = 2; m <= m_max; ++m) {
        for (int d = 0; d < m; ++d) {
            const ScanReport sc = scan(m, d, Objective::TB_MAX, p.field, p.threads, p.allow_long);
            rep.checked += sc.enumerated;
            if (mpz_class(static_cast<long>(sc.extremal_value)) != tb_upper_bound(m, d))
                rep.counterexamples.push_back("(" + std::to_string(m) + "," + std::to_string(d) + ") max " +
                                              std::to_string(sc.extremal_value) + " != bound " +
                                              tb_upper_bound(m, d).get_str());
        }
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_tight312(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "TIGHT-3.12";
    const int m_max = p.m_max.value_or(5);
    const FieldSpec fields[] = {FieldSpec::f2(), FieldSpec::fp(3), FieldSpec::rationals()};
    for (int m = 1; m <= m_max; ++m) {
        enumerate(m, std::nullopt, p.allow_long, [&](const Complex& K) {
            const bool structural = is_tight_structural(K);
            for (const FieldSpec& F : fields) {
                ++rep.checked;
                if (is_tight_numeric(K, F) != structural)
                    rep.counterexamples.push_back(describe(K) + " over " + F.name() +
                                                  (structural ? ": structural tight, numeric not"
                                                              : ": numeric tight, structural not"));
            }
            return true;
        });
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_links310(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "LINKS-3.10";
    const int m_max = p.m_max.value_or(5);
    for (int m = 1; m <= m_max; ++m) {
        enumerate(m, std::nullopt, p.allow_long, [&](const Complex& K) {
            if (!is_tight_numeric(K, p.field)) return true;
            ++rep.checked;
            if (!is_pure(K)) rep.counterexamples.push_back(describe(K) + ": tight but not pure");
            if (K.m() >= 3 && !is_connected(K))
                rep.counterexamples.push_back(describe(K) + ": tight, disconnected, not S^0");
            for (Simplex sigma : K.faces()) {
                if (sigma == 0) continue;
                const Complex lk = link(K, sigma);
                const Complex lk_full = lk.full_support() ? lk : restrict_to(lk, lk.support());
                if (lk_full.m() >= 1 && !is_tight_structural(lk_full)) {
                    rep.counterexamples.push_back(describe(K) + ": link of a face is not tight");
                    break;
                }
            }
            return true;
        });
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_mv41(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "MV-4.1";
    const int m = p.m.value_or(5);
    std::uint64_t state = p.seed * 0x9e3779b97f4a7c15ull + 54321;
    for (int s = 0; s < p.samples; ++s) {
        const Complex K = random_subcomplex(m, state);
        const Complex L = random_subcomplex(m, state);
        const long long lhs = d_total(K, p.field) + d_total(L, p.field);
        const long long rhs = d_total(complex_intersection(K, L), p.field) +
                              d_total(complex_union(K, L), p.field);
        ++rep.checked;
        if (lhs > rhs)
            rep.counterexamples.push_back("K=" + describe(K) + " L=" + describe(L) + " " +
                                          std::to_string(lhs) + " > " + std::to_string(rhs));
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_dmax42(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "DMAX-4.2";
    std::vector<int> ms;
    if (p.m)
        ms.push_back(*p.m);
    else
        ms = {4, 5};
    for (int m : ms) {
        const ExtremalAnswer expect = d_max(m);
        const int t = (m - 1) / 3;
        if (expect.value != d_skeleton_value(m, t - 1)) {
            rep.counterexamples.push_back("m=" + std::to_string(m) + ": closed forms disagree");
            continue;
        }
        const ScanReport sc = scan(m, std::nullopt, Objective::D_MAX, p.field, p.threads, p.allow_long);
        rep.checked += sc.enumerated;
        if (mpz_class(static_cast<long>(sc.extremal_value)) != expect.value)
            rep.counterexamples.push_back("m=" + std::to_string(m) + " scan value " +
                                          std::to_string(sc.extremal_value) + " != " + expect.value.get_str());
        if (sc.witness_keys.size() != 1 ||
            sc.witness_keys[0] != canonical_form(expect.witnesses[0]).key)
            rep.counterexamples.push_back("m=" + std::to_string(m) + ": witness is not the expected skeleton");
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

VerifyReport verify_g51(const VerifyParams& p) {
    VerifyReport rep;
    rep.id = "G-5.1";
    const int m_max = p.m_max.value_or(60);
    for (int m = 4; m <= m_max; ++m) {
        ++rep.checked;
        int arg;
        try {
            arg = g_argmax(m);
        } catch (const std::domain_error&) {
            rep.counterexamples.push_back("m=" + std::to_string(m) + ": maximum not unique");
            continue;
        }
        if (arg != (m - 1) / 3)
            rep.counterexamples.push_back("m=" + std::to_string(m) + ": argmax " + std::to_string(arg) +
                                          " != " + std::to_string((m - 1) / 3));
    }
    for (int m = 2; m <= std::min(m_max, 30); ++m) {
        ++rep.checked;
        if (!g_recurrence_check(m))
            rep.counterexamples.push_back("m=" + std::to_string(m) + ": recurrence fails");
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

} // namespace

std::vector<std::string> verifier_ids() {
    return {"BK-1.2", "TB-2.2", "MV-2.1", "SPERNER-2.8", "SIGMA-2.9", "BOUNDS-2.10",
            "TIGHT-3.12", "LINKS-3.10", "MV-4.1", "DMAX-4.2", "G-5.1"};
}

VerifyReport verify(const std::string& theorem_id, const VerifyParams& params) {
    if (theorem_id == "BK-1.2") return verify_bk(params);
    if (theorem_id == "TB-2.2") return verify_tb22(params);
    if (theorem_id == "MV-2.1") return verify_mv21(params);
    if (theorem_id == "SPERNER-2.8") return verify_sperner(params);
    if (theorem_id == "SIGMA-2.9") return verify_sigma29(params);
    if (theorem_id == "BOUNDS-2.10") return verify_bounds210(params);
    if (theorem_id == "TIGHT-3.12") return verify_tight312(params);
    if (theorem_id == "LINKS-3.10") return verify_links310(params);
    if (theorem_id == "MV-4.1") return verify_mv41(params);
    if (theorem_id == "DMAX-4.2") return verify_dmax42(params);
    if (theorem_id == "G-5.1") return verify_g51(params);
    throw std::range_error("unknown theorem id '" + theorem_id + "'");
}

} // namespace bettic
