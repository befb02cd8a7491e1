#pragma once

#include <cstdint>
#include <istream>
#include <string>

#include <json.hpp>

#include "vrbridge/bary_point.hpp"
#include "vrbridge/complex.hpp"
#include "vrbridge/graph.hpp"
#include "vrbridge/transform.hpp"

namespace vrbridge {

using Json = nlohmann::json;

/**
 * Edge-list text: one "u v" edge per line, a lone token declares an isolated
 * vertex, '#' starts a comment. Self-loops are dropped. Arrows ("->", "<-")
 * are rejected since the graph is undirected. Errors carry `source:line`.
 */
Graph parse_edge_list(std::istream& in, const std::string& source = "<input>");
Graph read_edge_list(const std::string& path);

Json complex_to_json(const SimplicialComplex& k);
Json counts_to_json(const SimplicialComplex& k);
Json betti_to_json(const SimplicialComplex& k, std::size_t max_k);

/// {"carrier": [labels], "coords": [...]}; labels may be strings or integers.
BaryPoint bary_point_from_json(const Json& j, const Graph& g);
Json bary_point_to_json(const BaryPoint& x, const Graph& g);

/// {"base": label or null, "values": {"sample index": label}}.
Json discrete_map_to_json(const DiscreteMap& f);
DiscreteMap discrete_map_from_json(const Json& j, const SampledDomain& domain, const Graph& g);

/// {"delta": δ, "radii": [...]}; infinite radii are null.
Json certificate_to_json(const CliqueCertificate& cert);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Digest of the canonical (key-sorted, compact) serialization.
std::string json_digest(const Json& j);

}  // namespace vrbridge
