#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vrbridge/domain.hpp"
#include "vrbridge/graph.hpp"
#include "vrbridge/io.hpp"

namespace vrbridge {

/// "circle:n" or "sphere2:icosa:k". Throws InputError otherwise.
SampledDomain make_domain(const std::string& spec);

using Rotation = std::array<std::array<double, 3>, 3>;

Rotation random_rotation(std::mt19937_64& rng);

/**
 * Radial projection of the (rotated) sphere samples onto the octahedron
 * |VR(K_{2,2,2})|: vertex 2k is +e_k, vertex 2k+1 is −e_k, and a point
 * gets coordinates |x_k| / Σ|x_j| on its sign pattern.
 */
std::vector<BaryPoint> octahedral_projection(const SampledDomain& sphere, const Rotation& rotation);

/**
 * The circle samples wrapped `degree` times around the m-cycle |VR(C_m)|
 * with angular offset `phase`: parameter s ∈ [0, 1) goes to position
 * m·(degree·s + phase/2π) along the cycle 0 → 1 → ... → m−1 → 0.
 */
std::vector<BaryPoint> circle_winding(const SampledDomain& circle, std::size_t m, int degree, double phase);

/**
 * Resolves a map spec against a domain and graph. Built-ins: quarter-arc,
 * constant, nearest-vertex, antipodal, random; "file:PATH" reads a map JSON.
 */
DiscreteMap make_map(const std::string& spec, const SampledDomain& domain, const Graph& g, std::uint64_t seed);

struct PipelineOptions {
    std::string domain = "circle:64";
    std::string map = "quarter-arc";
    std::size_t extra_subdivisions = 0;
    std::size_t grid = 50;
    std::uint64_t seed = 0;
};

struct PipelineResult {
    Json report;
    /// Every verification held. False also when a certificate failed.
    bool ok = false;
};

/**
 * discrete modification → flood sequence → clique certificate → subdivision
 * to the Lebesgue depth → convex transformation → induced map on H_1, with
 * simpliciality, shared-face agreement, carrier compatibility against one
 * more subdivision, and basepoint preservation checked along the way.
 * Certificate failures are reported in the result; InputError propagates.
 */
PipelineResult run_pipeline(const Graph& g, const PipelineOptions& options);

}  // namespace vrbridge
