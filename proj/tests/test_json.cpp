#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperpoly/json_io.hpp"

using namespace hyperpoly;

TEST_CASE("envelope shape and determinism")
{
    Json result;
    result["value"] = 7;
    const Json a = envelope("demo", 5, Json::object(), result);
    const Json b = envelope("demo", 5, Json::object(), result);
    CHECK(a.dump() == b.dump());

    const Json parsed = Json::parse(a.dump());
    CHECK(parsed["command"] == "demo");
    CHECK(parsed["n"] == 5);
    CHECK(parsed["result"]["value"] == 7);
    CHECK(parsed["version"] == kVersion);

    // Insertion order is fixed: command, n, parameters, result, version.
    const std::string dumped = a.dump();
    CHECK(dumped.find("\"command\"") < dumped.find("\"n\""));
    CHECK(dumped.find("\"n\"") < dumped.find("\"parameters\""));
    CHECK(dumped.find("\"parameters\"") < dumped.find("\"result\""));
    CHECK(dumped.find("\"result\"") < dumped.find("\"version\""));
}

TEST_CASE("exact scalars serialise exactly")
{
    CHECK(to_json(Integer("42")) == 42);
    CHECK(to_json(Integer("-7")) == -7);
    const Integer huge("123456789012345678901234567890");
    CHECK(to_json(huge) == "123456789012345678901234567890");
    CHECK(to_json(Rational(-3) / 4) == "-3/4");
}

TEST_CASE("charpoly payload round-trips")
{
    const Arrangement arr = build_arrangement(4);
    const CharPoly chi = char_poly(arr);
    const Json j = to_json(chi);
    const Json parsed = Json::parse(j.dump());
    CHECK(parsed["degree"] == 4);
    REQUIRE(parsed["coefficients"].size() == 5);
    CHECK(parsed["coefficients"][0] == 1);
    CHECK(parsed["coefficients"][1] == -12);
    CHECK(parsed["coefficients"][2] == 50);
    CHECK(parsed["coefficients"][3] == -84);
    CHECK(parsed["coefficients"][4] == 45);
}

TEST_CASE("wall and leaf payloads")
{
    const Arrangement arr = build_arrangement(5);
    const Json flop =
        to_json(wall_report(5, arr.hyperplanes[static_cast<std::size_t>(arr.index_of("H{1}"))]));
    CHECK(flop["kind"] == "flop");
    CHECK(flop["pairing"] == -3);
    CHECK(flop["local_model"] == "T*P(V) flop, dim V = 3");

    const Json leaf_list = [&] {
        Json arrj = Json::array();
        for (const auto& leaf : leaves(5)) arrj.push_back(to_json(leaf));
        return arrj;
    }();
    CHECK(leaf_list.size() == 7);
    CHECK(leaf_list[0]["codimension"] == 0);
    CHECK(Json::parse(leaf_list.dump()) == leaf_list);
}

TEST_CASE("chamber payload carries signs and witnesses")
{
    const Arrangement arr = build_arrangement(4);
    const ChamberSet set = enumerate_chambers(arr, true);
    const Json j = to_json(set);
    CHECK(j["count"] == 12);
    REQUIRE(j["chambers"].size() == 12);
    const Json parsed = Json::parse(j.dump());
    const std::string signs = parsed["chambers"][0]["signs"];
    CHECK(signs.size() == 12);
}
