#include "vrbridge/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>

#include "vrbridge/error.hpp"
#include "vrbridge/homology.hpp"
#include "vrbridge/realization.hpp"
#include "vrbridge/transform.hpp"

namespace vrbridge {

namespace {

std::size_t parse_count(const std::string& text, const std::string& spec)
{
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw InputError("domain spec '" + spec + "': '" + text + "' is not a count");
    return value;
}

// Uniform in [0, 1) from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Circle parameter in [0, 1), snapped so that samples placed at exact
// fractions of a turn land on them.
double circle_parameter(const Position& p)
{
    double s = std::atan2(p[1], p[0]) / (2.0 * std::numbers::pi);
    if (s < 0.0)
        s += 1.0;
    return s;
}

double snap(double x)
{
    const double r = std::round(x);
    return std::abs(x - r) < 1e-9 ? r : x;
}

void require_embedding(const SampledDomain& domain, std::size_t dim, const std::string& map)
{
    if (domain.positions().front().size() != dim)
        throw InputError("map '" + map + "' needs a " + (dim == 2 ? std::string("circle") : std::string("sphere")) +
                         " domain");
}

}  // namespace

SampledDomain make_domain(const std::string& spec)
{
    const std::string circle = "circle:";
    const std::string sphere = "sphere2:icosa:";
    if (spec.rfind(circle, 0) == 0)
        return circle_domain(parse_count(spec.substr(circle.size()), spec));
    if (spec.rfind(sphere, 0) == 0)
        return sphere_domain(parse_count(spec.substr(sphere.size()), spec));
    throw InputError("unknown domain '" + spec + "'; expected circle:n or sphere2:icosa:k");
}

Rotation random_rotation(std::mt19937_64& rng)
{
    const double u1 = unit(rng), u2 = unit(rng), u3 = unit(rng);
    const double tau = 2.0 * std::numbers::pi;
    const double a = std::sqrt(1.0 - u1) * std::sin(tau * u2);
    const double b = std::sqrt(1.0 - u1) * std::cos(tau * u2);
    const double c = std::sqrt(u1) * std::sin(tau * u3);
    const double w = std::sqrt(u1) * std::cos(tau * u3);
    return {{{1 - 2 * (b * b + c * c), 2 * (a * b - c * w), 2 * (a * c + b * w)},
             {2 * (a * b + c * w), 1 - 2 * (a * a + c * c), 2 * (b * c - a * w)},
             {2 * (a * c - b * w), 2 * (b * c + a * w), 1 - 2 * (a * a + b * b)}}};
}

std::vector<BaryPoint> octahedral_projection(const SampledDomain& sphere, const Rotation& rotation)
{
    std::vector<BaryPoint> out;
    out.reserve(sphere.size());
    for (const Position& p : sphere.positions()) {
        if (p.size() != 3)
            throw InputError("octahedral projection needs points in R^3");
        std::array<double, 3> q{};
        for (int i = 0; i < 3; ++i)
            q[i] = rotation[i][0] * p[0] + rotation[i][1] * p[1] + rotation[i][2] * p[2];
        const double norm = std::abs(q[0]) + std::abs(q[1]) + std::abs(q[2]);
        std::vector<Vertex> carrier;
        std::vector<double> coords;
        for (Vertex k = 0; k < 3; ++k)
            if (q[k] != 0.0) {
                carrier.push_back(2 * k + (q[k] < 0.0 ? 1 : 0));
                coords.push_back(std::abs(q[k]) / norm);
            }
        // Rounding in the division can leave the sum a few ulps off 1.
        double sum = 0.0;
        for (double t : coords)
            sum += t;
        for (double& t : coords)
            t /= sum;
        out.emplace_back(std::move(carrier), std::move(coords));
    }
    return out;
}

std::vector<BaryPoint> circle_winding(const SampledDomain& circle, std::size_t m, int degree, double phase)
{
    if (m < 3)
        throw InputError("winding map needs a cycle of length at least 3");
    std::vector<BaryPoint> out;
    out.reserve(circle.size());
    for (const Position& p : circle.positions()) {
        if (p.size() != 2)
            throw InputError("winding map needs points in R^2");
        const double s = circle_parameter(p);
        const double turns = static_cast<double>(degree) * s + phase / (2.0 * std::numbers::pi);
        double t = snap(static_cast<double>(m) * turns);
        t -= std::floor(t / static_cast<double>(m)) * static_cast<double>(m);
        const double j = std::floor(t);
        const double frac = t - j;
        const auto a = static_cast<Vertex>(static_cast<std::size_t>(j) % m);
        const auto b = static_cast<Vertex>((a + 1) % m);
        if (frac == 0.0)
            out.push_back(BaryPoint::at_vertex(a));
        else
            out.emplace_back(std::vector<Vertex>{a, b}, std::vector<double>{1.0 - frac, frac});
    }
    return out;
}

DiscreteMap make_map(const std::string& spec, const SampledDomain& domain, const Graph& g, std::uint64_t seed)
{
    if (g.size() == 0)
        throw InputError("target graph is empty");
    const bool circle = domain.positions().front().size() == 2;
    std::vector<BaryPoint> f;

    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in)
            throw InputError("cannot open " + path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw InputError(path + ": " + e.what());
        }
        return discrete_map_from_json(j, domain, g);
    }
    if (spec == "constant") {
        f.assign(domain.size(), BaryPoint::at_vertex(0));
    } else if (spec == "quarter-arc") {
        require_embedding(domain, 2, spec);
        if (g.size() < 4)
            throw InputError("quarter-arc map needs at least 4 target vertices");
        for (const Position& p : domain.positions()) {
            const double q = snap(4.0 * circle_parameter(p));
            f.push_back(BaryPoint::at_vertex(static_cast<Vertex>(std::min(3.0, std::floor(q)))));
        }
    } else if (spec == "nearest-vertex" || spec == "antipodal" || spec == "random") {
        if (circle) {
            double phase = spec == "antipodal" ? std::numbers::pi : 0.0;
            if (spec == "random") {
                std::mt19937_64 rng(seed);
                phase = 2.0 * std::numbers::pi * unit(rng);
            }
            f = circle_winding(domain, g.size(), 1, phase);
        } else {
            require_embedding(domain, 3, spec);
            if (g.size() != 6)
                throw InputError("map '" + spec + "' on a sphere targets the octahedron (6 vertices)");
            Rotation r{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
            if (spec == "antipodal")
                r = {{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
            if (spec == "random") {
                std::mt19937_64 rng(seed);
                r = random_rotation(rng);
            }
            f = octahedral_projection(domain, r);
        }
    } else {
        throw InputError("unknown map '" + spec +
                         "'; expected quarter-arc, constant, nearest-vertex, antipodal, random or file:PATH");
    }
    return discrete_modify(f, domain, g);
}

namespace {

Json witness_json(const CertificateError& e, const std::vector<std::string>& value_labels)
{
    const auto& w = e.witness();
    auto label = [&](std::size_t v) { return v < value_labels.size() ? Json(value_labels[v]) : Json(v); };
    Json out{{"kind", "certificate"},
             {"message", e.what()},
             {"pair", {w.first, w.second}},
             {"values", {label(w.first_value), label(w.second_value)}}};
    out["stage"] = e.stage() ? Json(*e.stage()) : Json(nullptr);
    return out;
}

Json map_digest(const DiscreteMap& f)
{
    return json_digest(discrete_map_to_json(f));
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options)
{
    if (options.grid == 0)
        throw InputError("grid must be positive");
    const SampledDomain domain = make_domain(options.domain);
    const std::size_t dim = static_cast<std::size_t>(std::max(1, domain.triangulation().dimension()));
    const SimplicialComplex vr = vietoris_rips(g, std::max<std::size_t>(2, dim));

    PipelineResult result;
    Json& report = result.report;
    report["domain"] = options.domain;
    report["map"] = options.map;
    report["seed"] = options.seed;
    report["samples"] = domain.size();
    report["target_vertices"] = g.size();

    const DiscreteMap fd = make_map(options.map, domain, g, options.seed);
    Json stages = Json::array();
    stages.push_back({{"name", "discrete_modify"}, {"digest", map_digest(fd)}});
    report["base"] = fd.base_value() ? Json(g.label(*fd.base_value())) : Json(nullptr);

    try {
        std::vector<FloodStage> trace;
        const DiscreteMap flooded = flood_sequence(fd, &trace);
        bool base_kept = true;
        for (const FloodStage& s : trace) {
            DiscreteMap staged(domain, g, s.values);
            base_kept = base_kept && staged.base_value() == fd.base_value();
            stages.push_back({{"name", "flood"},
                              {"vertex", g.label(s.vertex)},
                              {"changed", s.changed},
                              {"digest", map_digest(staged)}});
        }
        report["stages"] = stages;

        const CliqueCertificate cert = clique_certificate(flooded);
        const Json cert_json = certificate_to_json(cert);
        report["certificate"] = {{"delta", cert_json["delta"]}, {"digest", json_digest(cert_json)}};

        TriangulatedMap k0 = restrict_to_triangulation(flooded);
        report["mesh"] = k0.mesh();
        std::size_t depth = options.extra_subdivisions;
        if (std::isfinite(cert.delta) && k0.mesh() > 0.0)
            depth += subdivision_depth_for_mesh(dim, k0.mesh(), cert.delta);
        report["depth"] = depth;

        TriangulatedMap kd = std::move(k0);
        for (std::size_t i = 0; i < depth; ++i)
            kd = subdivide(kd, g).second;
        auto [sd, kd1] = subdivide(kd, g);
        report["subdivided_counts"] = kd.complex.counts();

        const SimplicialMap conv = convex_transform(kd, cert.delta, vr);
        const SimplicialMap conv1 = convex_transform(kd1, cert.delta, vr);
        Json images = Json::array();
        for (Vertex v : conv.vertex_images())
            images.push_back(g.label(v));
        report["convex_digest"] = json_digest(images);

        const bool simplicial = check_simplicial(conv) && check_simplicial(conv1);
        const bool well_defined = shared_faces_agree(conv, 10);
        std::vector<BaryPoint> grid;
        for (const Simplex& s : maximal_simplices(kd.complex))
            for (BaryPoint& x : grid_points(s, options.grid))
                grid.push_back(std::move(x));
        const bool compatible = carriers_compatible(conv, conv1, sd, grid);
        // Original vertices keep their numbers under subdivision.
        for (std::size_t a : domain.basepoints())
            base_kept = base_kept && flooded(a) == *fd.base_value() && conv(static_cast<Vertex>(a)) == *fd.base_value();
        const InducedMap h1 = induced_h1(conv);

        report["simplicial"] = simplicial;
        report["well_defined"] = well_defined;
        report["sd_compatible"] = compatible;
        report["basepoint_preserved"] = base_kept;
        report["h1"] = {{"source_rank", h1.source_rank},
                        {"target_rank", h1.target_rank},
                        {"rank", h1.rank}};
        result.ok = simplicial && well_defined && compatible && base_kept;
    } catch (const CertificateError& e) {
        report["stages"] = stages;
        report["error"] = witness_json(e, g.labels());
        result.ok = false;
    }
    report["ok"] = result.ok;
    return result;
}

}  // namespace vrbridge
