#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "bettic/kernels.hpp"

using namespace bettic;

TEST_CASE("every compiled f2 xor variant matches the scalar reference") {
    std::mt19937_64 rng(42);
    const auto variants = kernels::f2_xor_variants();
    REQUIRE(!variants.empty());
    CHECK(variants.front().name == std::string("scalar"));
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 257u}) {
        std::vector<std::uint64_t> dst(len), src(len);
        for (auto& w : dst) w = rng();
        for (auto& w : src) w = rng();
        std::vector<std::uint64_t> expect(dst);
        variants.front().fn(expect.data(), src.data(), len);
        for (const auto& v : variants) {
            if (!v.supported) continue;
            std::vector<std::uint64_t> got(dst);
            v.fn(got.data(), src.data(), len);
            INFO("variant " << v.name << " len " << len);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("every compiled fp axpy variant matches the scalar reference") {
    std::mt19937_64 rng(7);
    const auto variants = kernels::fp_axpy_variants();
    REQUIRE(!variants.empty());
    const std::uint32_t primes[] = {3, 5, 7, 31, 101, 65537, 1000003, 2147483647u};
    for (std::uint32_t p : primes) {
        for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 200u}) {
            std::vector<std::uint32_t> dst(len), src(len);
            for (auto& x : dst) x = static_cast<std::uint32_t>(rng() % p);
            for (auto& x : src) x = static_cast<std::uint32_t>(rng() % p);
            const std::uint32_t a = static_cast<std::uint32_t>(rng() % p);
            std::vector<std::uint32_t> expect(dst);
            variants.front().fn(expect.data(), src.data(), len, a, p);
            for (const auto& v : variants) {
                if (!v.supported) continue;
                std::vector<std::uint32_t> got(dst);
                v.fn(got.data(), src.data(), len, a, p);
                INFO("variant " << v.name << " p " << p << " len " << len << " a " << a);
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("fp axpy edge multipliers") {
    for (const auto& v : kernels::fp_axpy_variants()) {
        if (!v.supported) continue;
        const std::uint32_t p = 2147483647u; // largest prime <= 2^31
        std::vector<std::uint32_t> dst(16, p - 1), src(16, p - 1);
        v.fn(dst.data(), src.data(), dst.size(), p - 1, p);
        // (p-1) + (p-1)^2 mod p = (p-1) + 1 = p, i.e. 0
        for (auto x : dst) CHECK(x == 0);
        std::vector<std::uint32_t> dst2(16, 5);
        v.fn(dst2.data(), src.data(), dst2.size(), 0, p);
        for (auto x : dst2) CHECK(x == 5);
    }
}

TEST_CASE("dispatcher reports a backend") {
    const std::string b = kernels::active_backend();
    CHECK((b == "scalar" || b == "avx2" || b == "neon"));
}
