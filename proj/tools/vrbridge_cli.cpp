// Command-line front end: build, betti, theta, pipeline.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vrbridge/complex.hpp"
#include "vrbridge/error.hpp"
#include "vrbridge/io.hpp"
#include "vrbridge/pipeline.hpp"
#include "vrbridge/realization.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

void emit(const vrbridge::Json& j, const std::string& out_path)
{
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw vrbridge::InputError("cannot write " + out_path);
    out << text;
}

vrbridge::Json read_point(const std::string& arg)
{
    std::string text = arg;
    if (!arg.empty() && arg.front() != '{') {
        std::ifstream in(arg);
        if (!in)
            throw vrbridge::InputError("point must be inline JSON or a readable file: " + arg);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return vrbridge::Json::parse(text);
    } catch (const vrbridge::Json::parse_error& e) {
        throw vrbridge::InputError(std::string("point JSON: ") + e.what());
    }
}

void report_error(const std::string& kind, const std::string& message)
{
    std::cerr << vrbridge::Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vietoris-Rips complexes of reflexive graphs and the maps between them"};
    app.require_subcommand(1);

    std::string graph_file, out_path, point_arg;
    std::size_t max_dim = 2, max_k = 1;
    vrbridge::PipelineOptions pipe;

    auto* build = app.add_subcommand("build", "Clique complex of an edge list as JSON");
    build->add_option("graph", graph_file, "Edge-list file")->required();
    build->add_option("--max-dim", max_dim, "Dimension cap")->capture_default_str();
    build->add_option("--out", out_path, "Write the complex here and print only the counts");

    auto* betti = app.add_subcommand("betti", "GF(2) Betti numbers of the clique complex");
    betti->add_option("graph", graph_file, "Edge-list file")->required();
    betti->add_option("--max-dim", max_dim, "Dimension cap")->capture_default_str();
    betti->add_option("--max-k", max_k, "Highest Betti number (below the cap)")->capture_default_str();
    betti->add_option("--out", out_path, "Output file");

    auto* theta = app.add_subcommand("theta", "Discrete modification of one point");
    theta->add_option("graph", graph_file, "Edge-list file")->required();
    theta->add_option("point", point_arg, "{\"carrier\":[...],\"coords\":[...]} inline or as a file")->required();
    theta->add_option("--out", out_path, "Output file");

    auto* pipeline = app.add_subcommand("pipeline", "Sampled map to simplicial map, with certificates");
    pipeline->add_option("graph", graph_file, "Edge-list file")->required();
    pipeline->add_option("--domain", pipe.domain, "circle:n or sphere2:icosa:k")->capture_default_str();
    pipeline->add_option("--map", pipe.map, "quarter-arc, constant, nearest-vertex, antipodal, random, file:PATH")
        ->capture_default_str();
    pipeline->add_option("--subdivisions", pipe.extra_subdivisions, "Extra subdivisions past the Lebesgue depth")
        ->capture_default_str();
    pipeline->add_option("--grid", pipe.grid, "Grid steps per simplex for the carrier check")->capture_default_str();
    pipeline->add_option("--seed", pipe.seed, "Seed for the random map")->capture_default_str();
    pipeline->add_option("--out", out_path, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        const vrbridge::Graph g = vrbridge::read_edge_list(graph_file);
        if (*build) {
            const auto k = vrbridge::vietoris_rips(g, max_dim);
            if (out_path.empty()) {
                emit(vrbridge::complex_to_json(k), "");
            } else {
                emit(vrbridge::complex_to_json(k), out_path);
                emit(vrbridge::counts_to_json(k), "");
            }
            return kOk;
        }
        if (*betti) {
            if (max_dim < 1)
                throw vrbridge::InputError("--max-dim must be at least 1");
            const auto k = vrbridge::vietoris_rips(g, max_dim);
            emit(vrbridge::betti_to_json(k, max_k), out_path);
            return kOk;
        }
        if (*theta) {
            const auto x = vrbridge::bary_point_from_json(read_point(point_arg), g);
            emit(vrbridge::Json{{"vertex", g.label(vrbridge::theta_point(g, x))}}, out_path);
            return kOk;
        }
        const auto result = vrbridge::run_pipeline(g, pipe);
        emit(result.report, out_path);
        return result.ok ? kOk : kFailed;
    } catch (const vrbridge::CertificateError& e) {
        report_error("certificate", e.what());
        return kFailed;
    } catch (const vrbridge::InputError& e) {
        report_error("input", e.what());
        return kBadInput;
    } catch (const std::exception& e) {
        report_error("input", e.what());
        return kBadInput;
    }
}
