#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <fstream>

#include "vrbridge/error.hpp"
#include "vrbridge/pipeline.hpp"
#include "vrbridge/transform.hpp"

using namespace vrbridge;

TEST_CASE("domain and map specs")
{
    CHECK(make_domain("circle:12").size() == 12);
    CHECK(make_domain("sphere2:icosa:1").size() == 42);
    CHECK_THROWS_AS(make_domain("circle:"), InputError);
    CHECK_THROWS_AS(make_domain("circle:12x"), InputError);
    CHECK_THROWS_AS(make_domain("torus:3"), InputError);

    const SampledDomain circle = circle_domain(16);
    const Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(make_map("bogus", circle, c4, 0), InputError);
    CHECK_THROWS_AS(make_map("quarter-arc", circle, cycle_graph(3), 0), InputError);
    CHECK_THROWS_AS(make_map("quarter-arc", sphere_domain(0), c4, 0), InputError);
    CHECK_THROWS_AS(make_map("nearest-vertex", sphere_domain(0), c4, 0), InputError);
    CHECK_THROWS_AS(make_map("file:/nonexistent/map.json", circle, c4, 0), InputError);

    // The winding maps land on cycle vertices at the matching fractions of a turn.
    const auto nearest = make_map("nearest-vertex", circle, c4, 0);
    CHECK(nearest(0) == 0);
    CHECK(nearest(4) == 1);
    CHECK(make_map("antipodal", circle, c4, 0)(0) == 2);
    CHECK(make_map("random", circle, c4, 7).values() == make_map("random", circle, c4, 7).values());
}

TEST_CASE("random rotations are orthogonal")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const Rotation r = random_rotation(rng);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double dot = 0.0;
                for (int k = 0; k < 3; ++k)
                    dot += r[i][k] * r[j][k];
                CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
            }
        const double det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
                           r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
        CHECK(det == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("quarter-arc on the 4-cycle is essential")
{
    const auto r = run_pipeline(cycle_graph(4), PipelineOptions{});
    INFO(r.report.dump(2));
    REQUIRE(r.ok);
    CHECK(r.report["h1"]["rank"] == 1);
    CHECK(r.report["h1"]["source_rank"] == 1);
    CHECK(r.report["simplicial"] == true);
    CHECK(r.report["sd_compatible"] == true);
    CHECK(r.report["basepoint_preserved"] == true);
    // Floods move the arc boundaries, so the certificate is taken on the
    // flooded map and sits below the raw map's sin(pi/8).
    const double delta = r.report["certificate"]["delta"].get<double>();
    CHECK(delta > 0.0);
    CHECK(delta <= std::sin(std::numbers::pi / 8) + 1e-12);
    CHECK(run_pipeline(cycle_graph(4), PipelineOptions{}).report == r.report);
}

TEST_CASE("constant map is null-homotopic")
{
    PipelineOptions o;
    o.map = "constant";
    o.domain = "circle:32";
    const auto r = run_pipeline(cycle_graph(4), o);
    REQUIRE(r.ok);
    CHECK(r.report["h1"]["rank"] == 0);
}

TEST_CASE("octahedral projection of the sphere")
{
    PipelineOptions o;
    o.domain = "sphere2:icosa:1";
    o.map = "nearest-vertex";
    o.grid = 6;
    const auto r = run_pipeline(octahedron_graph(), o);
    INFO(r.report.dump(2));
    REQUIRE(r.ok);
    CHECK(r.report["certificate"]["delta"].get<double>() > 0.0);
    CHECK(r.report["simplicial"] == true);
}

TEST_CASE("certificate failures are reported, not thrown")
{
    const auto path = std::filesystem::temp_directory_path() / "vrbridge_jump_map.json";
    {
        Json values = Json::object();
        for (int i = 0; i < 16; ++i)
            values[std::to_string(i)] = i < 4 ? "0" : "2";
        std::ofstream(path) << Json{{"base", "0"}, {"values", values}}.dump();
    }
    PipelineOptions o;
    o.domain = "circle:16";
    o.map = "file:" + path.string();
    const auto r = run_pipeline(cycle_graph(4), o);
    std::filesystem::remove(path);
    CHECK_FALSE(r.ok);
    REQUIRE(r.report.contains("error"));
    CHECK(r.report["error"]["kind"] == "certificate");
    CHECK(r.report["error"]["stage"] == 0);
    CHECK(r.report["error"]["values"] == Json({"0", "2"}));

    o.grid = 0;
    CHECK_THROWS_AS(run_pipeline(cycle_graph(4), o), InputError);
}
