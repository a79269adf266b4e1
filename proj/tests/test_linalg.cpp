#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>

#include "bettic/generators.hpp"
#include "bettic/homology.hpp"
#include "bettic/linalg.hpp"
#include "bettic/search.hpp"

using namespace bettic;

static SparseMatrix dense(int rows, int cols, std::initializer_list<std::int64_t> vals) {
    SparseMatrix M;
    M.rows = rows;
    M.cols = cols;
    auto it = vals.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c, ++it)
            if (*it != 0) M.entries.push_back({r, c, *it});
    return M;
}

TEST_CASE("field parsing and primality") {
    CHECK(FieldSpec::parse("f2").is_f2());
    CHECK(FieldSpec::parse("f3").prime() == 3);
    CHECK(FieldSpec::parse("f2147483647").prime() == 2147483647u);
    CHECK(FieldSpec::parse("q").is_rationals());
    CHECK_THROWS_AS(FieldSpec::parse("f4"), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::parse("f1"), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::parse("r"), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::fp(91), std::domain_error); // 7*13
    CHECK(FieldSpec::fp(2).is_f2());
}

TEST_CASE("rank basics over all fields") {
    const SparseMatrix id3 = dense(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    for (auto F : {FieldSpec::f2(), FieldSpec::fp(5), FieldSpec::rationals()})
        CHECK(rank(id3, F) == 3);

    const SparseMatrix ones = dense(2, 2, {1, 1, 1, 1});
    CHECK(rank(ones, FieldSpec::f2()) == 1);
    CHECK(rank(ones, FieldSpec::rationals()) == 1);

    // characteristic dependence
    const SparseMatrix two = dense(1, 1, {2});
    CHECK(rank(two, FieldSpec::f2()) == 0);
    CHECK(rank(two, FieldSpec::rationals()) == 1);
    CHECK(rank(two, FieldSpec::fp(3)) == 1);

    const SparseMatrix empty;
    CHECK(rank(empty, FieldSpec::f2()) == 0);
}

TEST_CASE("rank equals transpose rank") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        SparseMatrix M;
        M.rows = 1 + static_cast<int>(rng() % 8);
        M.cols = 1 + static_cast<int>(rng() % 8);
        for (int r = 0; r < M.rows; ++r)
            for (int c = 0; c < M.cols; ++c)
                if (rng() % 3 == 0) M.entries.push_back({r, c, static_cast<std::int64_t>(rng() % 7) - 3});
        SparseMatrix T;
        T.rows = M.cols;
        T.cols = M.rows;
        for (const auto& e : M.entries) T.entries.push_back({e.col, e.row, e.value});
        for (auto F : {FieldSpec::f2(), FieldSpec::fp(7), FieldSpec::rationals()}) {
            const int r = rank(M, F);
            CHECK(r == rank(T, F));
            CHECK(r <= std::min(M.rows, M.cols));
        }
    }
}

TEST_CASE("modular rank agrees with rational rank on random boundary matrices") {
    // valid whenever no elimination pivot is divisible by p; primes this
    // large never divide a pivot at desk scale
    std::uint64_t state = 2024;
    const FieldSpec q = FieldSpec::rationals();
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Complex K = random_subcomplex(6, state);
        for (int i = 0; i <= K.dim() + 1; ++i) {
            const SparseMatrix M = boundary_matrix(K, i, q);
            const int rq = rank(M, q);
            for (std::uint32_t p : {1009u, 65537u, 2147483647u}) CHECK(rank(M, FieldSpec::fp(p)) == rq);
            ++checked;
        }
    }
    CHECK(checked > 40);
}

TEST_CASE("fraction-free elimination survives values past int64 midway") {
    // a matrix engineered so Bareiss intermediates overflow int64 and the
    // arbitrary-precision fallback must take over
    const int n = 12;
    SparseMatrix M;
    M.rows = n;
    M.cols = n;
    std::mt19937_64 rng(3);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            M.entries.push_back({r, c, static_cast<std::int64_t>(rng() % 2000000) - 1000000});
    const int rq = rank(M, FieldSpec::rationals());
    CHECK(rq == rank(M, FieldSpec::fp(2147483647u))); // full-rank with overwhelming probability
}
