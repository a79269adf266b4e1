#include <doctest.h>

#include "bettic/canonical.hpp"
#include "bettic/classifier.hpp"
#include "bettic/extremal.hpp"
#include "bettic/generators.hpp"
#include "bettic/hochster.hpp"

using namespace bettic;

static const FieldSpec F2 = FieldSpec::f2();
static const FieldSpec F3 = FieldSpec::fp(3);
static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("decomposition recovers join structure") {
    // C4 = S^0 * S^0
    const JoinDecomposition c4 = decompose(cycle(4));
    CHECK(!c4.residual);
    CHECK(c4.cone_vertices == 0);
    REQUIRE(c4.sphere_factors.size() == 2);
    CHECK(c4.sphere_factors[0] == make_simplex({1, 3}));
    CHECK(c4.sphere_factors[1] == make_simplex({2, 4}));

    // simplex * boundary: cone of two vertices and one factor of size 3
    const JoinDecomposition ssj = decompose(simplex_sphere_join(2, {3}));
    CHECK(!ssj.residual);
    CHECK(card(ssj.cone_vertices) == 2);
    REQUIRE(ssj.sphere_factors.size() == 1);
    CHECK(card(ssj.sphere_factors[0]) == 3);

    // C5's minimal non-faces are its five non-edges, which overlap
    const std::vector<Simplex> nonedges = minimal_non_faces(cycle(5));
    CHECK(nonedges == std::vector<Simplex>{make_simplex({1, 3}), make_simplex({1, 4}),
                                           make_simplex({2, 4}), make_simplex({2, 5}),
                                           make_simplex({3, 5})});
    const JoinDecomposition c5 = decompose(cycle(5));
    CHECK(c5.residual);
    CHECK(c5.sphere_factors.empty());

    // the full simplex: pure cone
    const JoinDecomposition full = decompose(simplex_complex(4));
    CHECK(!full.residual);
    CHECK(full.cone_vertices == full_mask(4));
    CHECK(full.sphere_factors.empty());
}

TEST_CASE("decomposition inverts the generators") {
    for (const auto& ns : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {4}}) {
        const Complex K = sphere_join(ns);
        const JoinDecomposition dec = decompose(K);
        CHECK(!dec.residual);
        CHECK(dec.cone_vertices == 0);
        CHECK(dec.sphere_factors.size() == ns.size());
        // each factor restricted is the boundary of the simplex on it
        for (Simplex N : dec.sphere_factors) {
            const Complex r = restrict_to(K, N);
            CHECK(r == boundary(card(N)));
        }
    }
}

TEST_CASE("tightness, numeric and structural") {
    const Complex sj = sphere_join({2, 3});
    CHECK(d_total(sj, F2) == 4); // 2 * 2, and 2^{5-2-1} = 4
    CHECK(is_tight_numeric(sj, F2));
    CHECK(is_tight_structural(sj));

    CHECK(!is_tight_numeric(cycle(5), F2)); // 12 != 8
    CHECK(!is_tight_structural(cycle(5)));

    // a simplex factor never changes tightness
    for (int r = 1; r <= 3; ++r) {
        const Complex K = simplex_sphere_join(r, {3});
        CHECK(is_tight_numeric(K, F2));
        CHECK(is_tight_structural(K));
        CHECK(d_total(K, F2) == d_total(boundary(3), F2));
    }

    CHECK(is_tight_numeric(simplex_complex(4), F2));
    CHECK(is_tight_structural(simplex_complex(4)));
}

TEST_CASE("tightness is field-independent on the named families") {
    for (const Complex& K : {sphere_join({2, 2, 2}), simplex_sphere_join(1, {2, 2, 2}), cycle(4), cycle(5)}) {
        const bool s = is_tight_structural(K);
        for (const FieldSpec& F : {F2, F3, Q}) CHECK(is_tight_numeric(K, F) == s);
    }
}

TEST_CASE("necessary dimension for tightness") {
    CHECK(tightness_necessary_dim(6) == 2);
    CHECK(tightness_necessary_dim(7) == 3);
    CHECK(tightness_necessary_dim(1) == 0);
    // attained: (S^0)^{*3} on 6 vertices has dimension 2
    const Complex even = sphere_join({2, 2, 2});
    CHECK(even.m() == 6);
    CHECK(even.dim() == 2);
    CHECK(is_tight_numeric(even, F2));
    // odd case: a cone point joined on
    const Complex odd = simplex_sphere_join(1, {2, 2, 2});
    CHECK(odd.m() == 7);
    CHECK(odd.dim() == 3);
    CHECK(is_tight_numeric(odd, F2));
}

TEST_CASE("sphere joins up to ten vertices are tight") {
    for (const auto& ns : std::vector<std::vector<int>>{{2, 2, 2, 2, 2}, {5, 5}, {3, 3, 4}, {2, 4, 4}}) {
        const Complex K = sphere_join(ns);
        REQUIRE(K.m() <= 10);
        CHECK(is_tight_structural(K));
        CHECK(is_tight_numeric(K, F2));
        // product form
        long long prod = 1;
        for (int n : ns) prod *= d_total(boundary(n), F2);
        CHECK(d_total(K, F2) == prod);
    }
}

TEST_CASE("full support is required") {
    const Complex ghost = Complex::build(4, std::vector<Simplex>{make_simplex({1, 2})});
    CHECK_THROWS_AS(decompose(ghost), std::domain_error);
    CHECK_THROWS_AS(is_tight_numeric(ghost, F2), std::domain_error);
}
