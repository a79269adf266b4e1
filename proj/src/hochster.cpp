#include "bettic/hochster.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "bettic/homology.hpp"

namespace bettic {

std::vector<std::pair<std::pair<int, int>, long long>> BigradedTable::nonzero() const {
    std::vector<std::pair<std::pair<int, int>, long long>> out;
    for (int i = 0; i <= m_; ++i)
        for (int j = 0; j <= m_; ++j)
            if (entry(i, j) != 0) out.push_back({{i, j}, entry(i, j)});
    return out;
}

namespace {

inline std::uint64_t gray(std::uint64_t idx) { return idx ^ (idx >> 1); }

// One worker's walk over a contiguous Gray-code index range.  The masked
// facet list is updated incrementally: flipping vertex v only touches the
// facets containing v.
struct SweepWalker {
    const Complex& K;
    std::vector<Simplex> masked;             // facets[i] & J
    std::vector<std::vector<int>> by_vertex; // facet indices containing v
    Simplex J = 0;

    explicit SweepWalker(const Complex& K_) : K(K_), masked(K_.facets().size(), 0) {
        by_vertex.resize(static_cast<std::size_t>(K.m()));
        for (std::size_t i = 0; i < K.facets().size(); ++i)
            for (int v : simplex_vertices(K.facets()[i]))
                by_vertex[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(i));
    }

    void jump_to(std::uint64_t idx) {
        J = gray(idx);
        for (std::size_t i = 0; i < masked.size(); ++i) masked[i] = K.facets()[i] & J;
    }

    void flip(int vertex_index) { // 0-based
        const Simplex bit = Simplex{1} << vertex_index;
        J ^= bit;
        for (int i : by_vertex[static_cast<std::size_t>(vertex_index)]) masked[static_cast<std::size_t>(i)] ^= bit;
    }

    // Maximal distinct masked facets: the facet antichain of K|_J.
    std::vector<Simplex> restricted_facets() const {
        std::vector<Simplex> fac(masked);
        std::sort(fac.begin(), fac.end());
        fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
        std::vector<Simplex> maxima;
        for (std::size_t i = 0; i < fac.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = fac.size(); j-- > i + 1;) {
                if ((fac[i] & fac[j]) == fac[i]) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) maxima.push_back(fac[i]);
        }
        if (maxima.empty()) maxima.push_back(0);
        return maxima;
    }
};

// Order-preserving relabeling of the restricted facets onto a dense prefix;
// K|_J and K|_J' collide exactly when their facet patterns match after this
// compaction (memo key for sweeps past 12 vertices, where recomputation
// starts to dominate).
static std::vector<Simplex> normalized_key(const std::vector<Simplex>& facets, Simplex J) {
    std::vector<Simplex> key;
    key.reserve(facets.size());
    for (Simplex f : facets) key.push_back(compress_into(f, J));
    std::sort(key.begin(), key.end());
    return key;
}

struct SweepAccumulator {
    // scatter target: per-(degree, |J|) counts; degree index shifted by one
    std::vector<long long> counts; // [(deg+1) * (m+2) + |J|]
    int m;
    explicit SweepAccumulator(int m_) : counts(static_cast<std::size_t>((m_ + 2) * (m_ + 2)), 0), m(m_) {}
    void add(int degree, int jsize, long long value) {
        counts[static_cast<std::size_t>(degree + 1) * (m + 2) + jsize] += value;
    }
    void merge(const SweepAccumulator& o) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    }
};

// Core sweep: for every J in the worker's range, scatter the Betti numbers
// of K|_J into (degree, |J|) buckets.  The callers below reshape the buckets
// into D-totals, bigraded tables, or tau averages.
static SweepAccumulator sweep_range(const Complex& K, const FieldSpec& F,
                                    std::uint64_t begin, std::uint64_t end) {
    SweepAccumulator acc(K.m());
    SweepWalker walker(K);
    const bool memoize = K.m() > 12;
    std::map<std::vector<Simplex>, std::vector<long long>> memo;
    if (begin >= end) return acc;
    walker.jump_to(begin);
    for (std::uint64_t idx = begin;; ++idx) {
        const std::vector<Simplex> fac = walker.restricted_facets();
        const int jsize = card(walker.J);
        if (memoize) {
            std::vector<Simplex> key = normalized_key(fac, walker.J);
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(std::move(key), betti_from_facets(fac, F)).first;
            const auto& betti = it->second;
            for (std::size_t k = 0; k < betti.size(); ++k)
                if (betti[k]) acc.add(static_cast<int>(k) - 1, jsize, betti[k]);
        } else {
            const std::vector<long long> betti = betti_from_facets(fac, F);
            for (std::size_t k = 0; k < betti.size(); ++k)
                if (betti[k]) acc.add(static_cast<int>(k) - 1, jsize, betti[k]);
        }
        if (idx + 1 >= end) break;
        walker.flip(std::countr_zero(idx + 1));
    }
    return acc;
}

static SweepAccumulator sweep(const Complex& K, const FieldSpec& F, int threads) {
    if (K.m() > kSweepMaxVertices)
        throw capacity_error("subset sweep capped at " + std::to_string(kSweepMaxVertices) + " vertices");
    const std::uint64_t total = std::uint64_t{1} << K.m();
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    const std::uint64_t chunk = (total + threads - 1) / static_cast<std::uint64_t>(threads);
    if (threads == 1 || chunk < 64) return sweep_range(K, F, 0, total);

    std::vector<SweepAccumulator> parts;
    parts.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) parts.emplace_back(K.m());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t b = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t e = std::min(total, b + chunk);
        pool.emplace_back([&, t, b, e] { parts[static_cast<std::size_t>(t)] = sweep_range(K, F, b, e); });
    }
    for (auto& th : pool) th.join();
    SweepAccumulator acc(K.m());
    for (const auto& p : parts) acc.merge(p);
    return acc;
}

} // namespace

// the sweep total can never undercut the mdim bound; trip loudly if the
// engine ever produces such a value
static void check_mdim_floor(const Complex& K, long long total) {
    const long long floor = 1ll << (K.m() - K.mdim() - 1);
    if (total < floor)
        throw std::logic_error("sweep total " + std::to_string(total) + " below the mdim floor " +
                               std::to_string(floor));
}

BigradedTable bigraded(const Complex& K, const FieldSpec& F, int threads) {
    const SweepAccumulator acc = sweep(K, F, threads);
    BigradedTable table(K.m(), F);
    const int m = K.m();
    for (int deg = -1; deg <= m; ++deg) {
        for (int jsize = 0; jsize <= m; ++jsize) {
            const long long v = acc.counts[static_cast<std::size_t>(deg + 1) * (m + 2) + jsize];
            if (v) table.add(jsize - deg - 1, jsize, v);
        }
    }
    check_mdim_floor(K, table.total());
    return table;
}

long long d_total(const Complex& K, const FieldSpec& F, int threads) {
    const SweepAccumulator acc = sweep(K, F, threads);
    long long total = 0;
    for (long long v : acc.counts) total += v;
    check_mdim_floor(K, total);
    return total;
}

mpq_class tau(const Complex& K, const FieldSpec& F, int i, int threads) {
    if (i < -1) throw std::range_error("tau degree must be >= -1");
    if (i > K.m()) return 0;
    const SweepAccumulator acc = sweep(K, F, threads);
    const int m = K.m();
    mpq_class sum = 0;
    for (int jsize = 0; jsize <= m; ++jsize) {
        const long long v = acc.counts[static_cast<std::size_t>(i + 1) * (m + 2) + jsize];
        if (v == 0) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(jsize));
        sum += mpq_class(mpz_class(static_cast<long>(v)), binom);
    }
    sum /= (m + 1);
    sum.canonicalize();
    return sum;
}

} // namespace bettic
