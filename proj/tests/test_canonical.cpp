#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bettic/canonical.hpp"
#include "bettic/generators.hpp"
#include "bettic/search.hpp"

using namespace bettic;

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(123);
    std::uint64_t state = 77;
    for (int trial = 0; trial < 40; ++trial) {
        const Complex K = random_subcomplex(6, state);
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Complex L = relabel(K, perm);
        CHECK(canonical_form(K) == canonical_form(L));
        CHECK(canonical_form(K).key == canonical_form(L).key);
    }
}

TEST_CASE("non-isomorphic complexes get distinct keys") {
    CHECK(!is_isomorphic(cycle(5), complete_bipartite(2, 3)));
    CHECK(is_isomorphic(cycle(4), complete_bipartite(2, 2)));
    CHECK(!is_isomorphic(cycle(6), complete_bipartite(3, 3)));
    CHECK(is_isomorphic(boundary(3), cycle(3)));
}

TEST_CASE("canonical representative is itself canonically labeled") {
    std::uint64_t state = 3;
    for (int trial = 0; trial < 30; ++trial) {
        const Complex K = random_subcomplex(5, state);
        const Complex R = canonical_representative(K);
        CHECK(is_canonical_labeling(R));
        CHECK(is_isomorphic(K, R));
        CHECK(canonical_form(R).key == canonical_form(K).key);
    }
}

TEST_CASE("isomorphism ignores unused vertices") {
    // a single edge on universes of different size
    const Complex a = Complex::build(3, std::vector<Simplex>{make_simplex({1, 2})});
    const Complex b = Complex::build(5, std::vector<Simplex>{make_simplex({2, 4})});
    CHECK(is_isomorphic(a, b));
    const Complex c = Complex::build(5, std::vector<Simplex>{make_simplex({2, 4}), make_simplex({5})});
    CHECK(!is_isomorphic(a, c));
}

TEST_CASE("permutation limit enforced") {
    CHECK_THROWS_AS(canonical_form(skeleton(11, 0)), capacity_error);
    CHECK_THROWS_AS(is_isomorphic(cycle(11), cycle(11)), capacity_error);
    // raising the limit admits the computation (sparse complexes prune well;
    // fully symmetric ones like the 0-skeleton pay the full factorial)
    CHECK(is_isomorphic(cycle(11), relabel(cycle(11), {4, 5, 6, 7, 8, 9, 10, 11, 1, 2, 3}), 11));
}

TEST_CASE("canonical form separates all classes at m=4") {
    // all labeled complexes on [4], grouped by key: group count must match
    // the enumerator's class count
    std::vector<std::string> keys;
    for (int d = 0; d < 4; ++d) {
        enumerate(4, d, false, [&](const Complex& K) {
            keys.push_back(canonical_form(K).key);
            return true;
        });
    }
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end()); // all distinct
}
