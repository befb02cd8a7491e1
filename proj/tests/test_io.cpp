#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "vrbridge/error.hpp"
#include "vrbridge/io.hpp"
#include "vrbridge/transform.hpp"

using namespace vrbridge;

TEST_CASE("complex and Betti JSON")
{
    const auto k = vietoris_rips(cycle_graph(4), 2);
    const Json j = complex_to_json(k);
    CHECK(j["vertices"] == Json({"0", "1", "2", "3"}));
    CHECK(j["counts"] == Json({4, 4, 0}));
    CHECK(j["simplices"][1][0] == Json({"0", "1"}));
    CHECK(counts_to_json(k) == Json{{"dim_cap", 2}, {"counts", {4, 4, 0}}});
    const Json b = betti_to_json(k, 1);
    CHECK(b["betti"] == Json({1, 1}));
    CHECK(b["euler"] == 0);
    CHECK(b["field"] == "GF(2)");
}

TEST_CASE("points round-trip through labels")
{
    std::istringstream in("a b\nb c\nc a\n");
    const Graph g = parse_edge_list(in);
    const BaryPoint x({0, 2}, {0.25, 0.75});
    const Json j = bary_point_to_json(x, g);
    CHECK(j["carrier"] == Json({"a", "c"}));
    CHECK(bary_point_from_json(j, g) == x);

    const Graph n = cycle_graph(4);
    CHECK(bary_point_from_json(Json::parse(R"({"carrier":[1,2],"coords":[0.5,0.5]})"), n) ==
          BaryPoint({1, 2}, {0.5, 0.5}));
    CHECK_THROWS_AS(bary_point_from_json(Json::parse(R"({"carrier":[1]})"), n), InputError);
    CHECK_THROWS_AS(bary_point_from_json(Json::parse(R"({"carrier":[9],"coords":[1]})"), n), InputError);
    CHECK_THROWS_AS(bary_point_from_json(Json::parse(R"({"carrier":[1],"coords":["x"]})"), n), InputError);
    CHECK_THROWS_AS(bary_point_from_json(Json::parse(R"({"carrier":[1.5],"coords":[1]})"), n), InputError);
}

TEST_CASE("discrete maps round-trip")
{
    const Graph g = cycle_graph(4);
    const SampledDomain circle = circle_domain(8);
    const DiscreteMap f(circle, g, {3, 0, 0, 1, 1, 2, 2, 3});
    const Json j = discrete_map_to_json(f);
    CHECK(j["base"] == "3");
    CHECK(j["values"]["4"] == "1");
    CHECK(discrete_map_from_json(j, circle, g).values() == f.values());

    Json missing = j;
    missing["values"].erase("5");
    CHECK_THROWS_AS(discrete_map_from_json(missing, circle, g), InputError);
    Json outside = j;
    outside["values"]["8"] = "0";
    CHECK_THROWS_AS(discrete_map_from_json(outside, circle, g), InputError);
    Json junk = j;
    junk["values"]["x1"] = "0";
    CHECK_THROWS_AS(discrete_map_from_json(junk, circle, g), InputError);
    Json wrong_base = j;
    wrong_base["base"] = "0";
    CHECK_THROWS_AS(discrete_map_from_json(wrong_base, circle, g), InputError);
    CHECK_THROWS_AS(discrete_map_from_json(Json::array(), circle, g), InputError);
}

TEST_CASE("certificate JSON writes infinity as null")
{
    const double inf = std::numeric_limits<double>::infinity();
    const Json j = certificate_to_json(CliqueCertificate{{inf, 0.5}, 0.5});
    CHECK(j["radii"][0].is_null());
    CHECK(j["radii"][1] == 0.5);
    CHECK(j["delta"] == 0.5);
    CHECK(certificate_to_json(CliqueCertificate{{inf}, inf})["delta"].is_null());
}

TEST_CASE("digests")
{
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
    // Key order in the source does not matter.
    CHECK(json_digest(Json::parse(R"({"b":1,"a":[1,2]})")) == json_digest(Json::parse(R"({"a":[1,2],"b":1})")));
    CHECK(json_digest(Json{{"a", 1}}) != json_digest(Json{{"a", 2}}));
}
