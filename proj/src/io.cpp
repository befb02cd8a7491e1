#include "vrbridge/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "vrbridge/error.hpp"
#include "vrbridge/homology.hpp"

namespace vrbridge {

Graph parse_edge_list(std::istream& in, const std::string& source)
{
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> isolated;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = source + ":" + std::to_string(lineno) + ": ";
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find("->") != std::string::npos || line.find("<-") != std::string::npos)
            throw InputError(where + "directed edge; the graph is undirected, write \"u v\"");
        std::istringstream tokens(line);
        std::vector<std::string> t;
        for (std::string tok; tokens >> tok;)
            t.push_back(tok);
        if (t.empty())
            continue;
        if (t.size() == 1)
            isolated.push_back(t[0]);
        else if (t.size() == 2)
            edges.emplace_back(t[0], t[1]);
        else
            throw InputError(where + "expected \"u v\" or a single vertex, got " + std::to_string(t.size()) +
                             " tokens");
    }
    if (in.bad())
        throw InputError(source + ": read error");
    return Graph::from_labeled_edges(edges, isolated);
}

Graph read_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return parse_edge_list(in, path);
}

namespace {

Json simplex_labels(const Simplex& s, const std::vector<std::string>& labels)
{
    Json out = Json::array();
    for (Vertex v : s)
        out.push_back(labels.at(v));
    return out;
}

std::string label_of(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_unsigned() || j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw InputError("vertex must be a string or an integer, got " + j.dump());
}

}  // namespace

Json complex_to_json(const SimplicialComplex& k)
{
    Json simplices = Json::array();
    for (std::size_t d = 0; d <= k.dim_cap(); ++d) {
        Json level = Json::array();
        for (const auto& s : k.simplices(d))
            level.push_back(simplex_labels(s, k.labels()));
        simplices.push_back(std::move(level));
    }
    return Json{{"vertices", k.labels()},
                {"dim_cap", k.dim_cap()},
                {"counts", k.counts()},
                {"simplices", std::move(simplices)}};
}

Json counts_to_json(const SimplicialComplex& k)
{
    return Json{{"dim_cap", k.dim_cap()}, {"counts", k.counts()}};
}

Json betti_to_json(const SimplicialComplex& k, std::size_t max_k)
{
    return Json{{"field", "GF(2)"}, {"betti", betti_numbers(k, max_k)}, {"euler", euler_characteristic(k)}};
}

BaryPoint bary_point_from_json(const Json& j, const Graph& g)
{
    if (!j.is_object() || !j.contains("carrier") || !j.contains("coords") || !j["carrier"].is_array() ||
        !j["coords"].is_array())
        throw InputError("point must be {\"carrier\": [...], \"coords\": [...]}");
    std::vector<Vertex> carrier;
    for (const auto& v : j["carrier"])
        carrier.push_back(g.vertex_of(label_of(v)));
    std::vector<double> coords;
    for (const auto& t : j["coords"]) {
        if (!t.is_number())
            throw InputError("coordinate must be a number, got " + t.dump());
        coords.push_back(t.get<double>());
    }
    return BaryPoint(std::move(carrier), std::move(coords));
}

Json bary_point_to_json(const BaryPoint& x, const Graph& g)
{
    Json carrier = Json::array();
    for (Vertex v : x.carrier())
        carrier.push_back(g.label(v));
    return Json{{"carrier", std::move(carrier)}, {"coords", x.coords()}};
}

Json discrete_map_to_json(const DiscreteMap& f)
{
    Json values = Json::object();
    for (std::size_t i = 0; i < f.size(); ++i)
        values[std::to_string(i)] = f.target().label(f(i));
    Json base = f.base_value() ? Json(f.target().label(*f.base_value())) : Json(nullptr);
    return Json{{"base", std::move(base)}, {"values", std::move(values)}};
}

DiscreteMap discrete_map_from_json(const Json& j, const SampledDomain& domain, const Graph& g)
{
    if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
        throw InputError("map must be {\"base\": v, \"values\": {\"sample\": v, ...}}");
    std::vector<Vertex> values(domain.size());
    std::vector<bool> seen(domain.size(), false);
    for (const auto& [key, value] : j["values"].items()) {
        std::size_t sample = 0;
        try {
            std::size_t used = 0;
            sample = std::stoul(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InputError("sample id '" + key + "' is not an index");
        }
        if (sample >= domain.size())
            throw InputError("sample id " + key + " outside the domain");
        values[sample] = g.vertex_of(label_of(value));
        seen[sample] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw InputError("map has no value for sample " + std::to_string(i));
    DiscreteMap f(domain, g, std::move(values));
    if (j.contains("base") && !j["base"].is_null()) {
        const Vertex base = g.vertex_of(label_of(j["base"]));
        if (f.base_value() && *f.base_value() != base)
            throw InputError("declared base value disagrees with the basepoint values");
    }
    return f;
}

Json certificate_to_json(const CliqueCertificate& cert)
{
    auto finite = [](double r) { return std::isfinite(r) ? Json(r) : Json(nullptr); };
    Json radii = Json::array();
    for (double r : cert.radii)
        radii.push_back(finite(r));
    return Json{{"delta", finite(cert.delta)}, {"radii", std::move(radii)}};
}

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string json_digest(const Json& j)
{
    return fnv1a_hex(j.dump());
}

}  // namespace vrbridge
