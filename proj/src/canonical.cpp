#include "bettic/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettic {

bool CanonicalForm::operator<(const CanonicalForm& o) const {
    if (m != o.m) return m < o.m;
    // "contains the smallest differing subset" wins, per the key order
    for (std::size_t w = 0; w < bits.size(); ++w) {
        std::uint64_t diff = bits[w] ^ o.bits[w];
        if (diff) return (bits[w] & (diff & (~diff + 1))) != 0;
    }
    return false;
}

namespace {

// Shared state of the minimal-image depth-first search.
struct MinImage {
    int m;
    std::size_t nsubsets;                 // 2^m
    std::vector<std::uint64_t> orig;      // characteristic bits of K's facet set
    std::vector<Simplex> inv_image;       // inv_image[s] = old-vertex mask of new-subset s
    std::vector<std::uint64_t> best;      // minimal image found so far
    bool stop_on_smaller = false;         // is_canonical_labeling mode
    bool found_smaller = false;

    explicit MinImage(const Complex& K) {
        m = K.m();
        nsubsets = std::size_t{1} << m;
        orig.assign((nsubsets + 63) / 64, 0);
        for (Simplex f : K.facets()) orig[f >> 6] |= std::uint64_t{1} << (f & 63);
        inv_image.assign(nsubsets, 0);
        best = orig;
    }

    bool orig_has(Simplex s) const { return (orig[s >> 6] >> (s & 63)) & 1u; }
    bool best_has(std::size_t s) const { return (best[s >> 6] >> (s & 63)) & 1u; }
    void best_set(std::size_t s, bool v) {
        if (v)
            best[s >> 6] |= std::uint64_t{1} << (s & 63);
        else
            best[s >> 6] &= ~(std::uint64_t{1} << (s & 63));
    }

    // Explore assignments of new label depth+1; `used` is the mask of old
    // vertices already assigned.
    void dfs(int depth, Simplex used) {
        if (found_smaller) return;
        if (depth == m) return; // full image equals best: an automorphic relabeling
        const std::size_t lo = std::size_t{1} << depth;
        for (int v = 1; v <= m; ++v) {
            if (used & vertex_bit(v)) continue;
            // Determine the block of subsets containing new vertex depth+1,
            // i.e. indices [2^depth, 2^{depth+1}), against the current best.
            int cmp = 0; // -1 candidate smaller, 0 equal, +1 larger
            std::size_t s = lo;
            for (; s < 2 * lo; ++s) {
                inv_image[s] = inv_image[s - lo] | vertex_bit(v);
                const bool cand = orig_has(inv_image[s]);
                const bool ref = best_has(s);
                if (cand != ref) {
                    cmp = cand ? -1 : +1;
                    ++s;
                    break;
                }
            }
            if (cmp > 0) continue; // prefix beaten, prune this assignment
            if (cmp < 0) {
                if (stop_on_smaller) {
                    found_smaller = true;
                    return;
                }
                // candidate becomes the new champion prefix: overwrite best
                // from the first difference on, and blank everything after
                // this block (0-bits compare as "larger or equal").
                for (std::size_t t = s - 1; t < 2 * lo; ++t) {
                    inv_image[t] = inv_image[t - lo] | vertex_bit(v);
                    best_set(t, orig_has(inv_image[t]));
                }
                for (std::size_t t = 2 * lo; t < nsubsets; ++t) best_set(t, false);
            }
            dfs(depth + 1, used | vertex_bit(v));
            if (found_smaller) return;
        }
    }
};

} // namespace

static void check_limit(const Complex& K, int limit) {
    if (K.m() > limit)
        throw capacity_error("canonical form limited to " + std::to_string(limit) +
                             " vertices, complex has " + std::to_string(K.m()));
}

static std::vector<Simplex> facets_from_bits(const std::vector<std::uint64_t>& bits, std::size_t nsubsets) {
    std::vector<Simplex> out;
    for (std::size_t s = 0; s < nsubsets; ++s)
        if ((bits[s >> 6] >> (s & 63)) & 1u) out.push_back(static_cast<Simplex>(s));
    return out;
}

CanonicalForm canonical_form(const Complex& K, int permutation_limit) {
    check_limit(K, permutation_limit);
    MinImage mi(K);
    mi.dfs(0, 0);
    CanonicalForm cf;
    cf.m = K.m();
    cf.bits = mi.best;
    Complex rep = Complex::from_antichain(K.m(), facets_from_bits(mi.best, mi.nsubsets));
    cf.key = "m=" + std::to_string(K.m()) + ";facets=" + facet_list_string(rep);
    return cf;
}

Complex canonical_representative(const Complex& K, int permutation_limit) {
    check_limit(K, permutation_limit);
    MinImage mi(K);
    mi.dfs(0, 0);
    return Complex::from_antichain(K.m(), facets_from_bits(mi.best, mi.nsubsets));
}

bool is_canonical_labeling(const Complex& K, int permutation_limit) {
    check_limit(K, permutation_limit);
    MinImage mi(K);
    mi.stop_on_smaller = true;
    mi.dfs(0, 0);
    return !mi.found_smaller;
}

Complex relabel(const Complex& K, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != K.m()) throw std::range_error("relabel: permutation size mismatch");
    std::vector<Simplex> fac;
    fac.reserve(K.facets().size());
    for (Simplex f : K.facets()) {
        Simplex img = 0;
        for (int v : simplex_vertices(f)) img |= vertex_bit(perm[static_cast<std::size_t>(v - 1)]);
        fac.push_back(img);
    }
    return Complex::from_antichain(K.m(), std::move(fac));
}

bool is_isomorphic(const Complex& K, const Complex& L, int permutation_limit) {
    Complex Ks = K.full_support() ? K : restrict_to(K, K.support());
    Complex Ls = L.full_support() ? L : restrict_to(L, L.support());
    if (Ks.m() != Ls.m()) return false;
    return canonical_form(Ks, permutation_limit) == canonical_form(Ls, permutation_limit);
}

} // namespace bettic
