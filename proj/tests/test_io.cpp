#include <doctest.h>

#include <fstream>

#include "bettic/canonical.hpp"
#include "bettic/generators.hpp"
#include "bettic/io.hpp"
#include "bettic/search.hpp"

using namespace bettic;

static const std::string kData = BETTIC_TEST_DATA;

TEST_CASE("complex files round-trip and stay byte-stable") {
    std::uint64_t state = 1234;
    for (int trial = 0; trial < 40; ++trial) {
        const Complex K = random_subcomplex(6, state);
        const std::string s1 = complex_to_string(K);
        const Complex back = complex_from_json(nlohmann::json::parse(s1));
        CHECK(back == K);
        CHECK(complex_to_string(back) == s1);
    }
}

TEST_CASE("fixture files parse") {
    const Complex c5 = read_complex_file(kData + "/c5.json");
    CHECK(is_isomorphic(c5, cycle(5)));
    const Complex rp2 = read_complex_file(kData + "/rp2_6.json");
    CHECK(rp2.facets().size() == 10);
    CHECK_THROWS_AS(read_complex_file(kData + "/nope.json"), std::invalid_argument);
    CHECK_THROWS_AS(read_complex_file(kData + "/truncated.json"), nlohmann::json::parse_error);
}

TEST_CASE("malformed documents are rejected") {
    using nlohmann::json;
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"m": 3})")), std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"m": 3, "facets": []})")), std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"m": 3, "facets": [[0]]})")), std::range_error);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"m": 3, "facets": [[4]]})")), std::range_error);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"m": "x", "facets": [[1]]})")), std::invalid_argument);
    // the empty complex spells its facet list explicitly
    CHECK(complex_from_json(json::parse(R"({"m": 0, "facets": [[]]})")).is_empty_complex());
}

TEST_CASE("strict mode rejects dominated input") {
    using nlohmann::json;
    const auto doc = json::parse(R"({"m": 3, "facets": [[1,2,3],[1,2]]})");
    CHECK_NOTHROW(complex_from_json(doc));
    CHECK_THROWS_AS(complex_from_json(doc, true), std::invalid_argument);
}

TEST_CASE("sperner family documents") {
    using nlohmann::json;
    const auto doc = json::parse(R"({"ground": [2,3,4], "members": [[2,3],[3,4]], "over": [3]})");
    const SpernerFamily F = family_from_json(doc);
    CHECK(F.ground == make_simplex({2, 3, 4}));
    REQUIRE(F.members.size() == 2);
    CHECK(F.over.has_value());
    CHECK(is_sperner(F));
    CHECK(is_sperner_over(F, *F.over));
    const std::string out = family_to_json(F).dump();
    CHECK(family_from_json(json::parse(out)).members == F.members);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"members": [[1]]})")), std::invalid_argument);
}
