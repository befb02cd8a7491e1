#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vrbridge/complex.hpp"

namespace vrbridge {

using Position = std::vector<double>;

/**
 * A finite ε-net of a triangulated compact metric space.
 *
 * Sample i sits at positions[i] in some Euclidean embedding and the metric is
 * the chordal (embedding) distance. Triangulation vertex i is sample i, so the
 * triangulation may use a prefix of the samples but never anything else.
 */
class SampledDomain {
  public:
    SampledDomain(std::vector<Position> positions, SimplicialComplex triangulation,
                  std::vector<std::size_t> basepoints);

    std::size_t size() const noexcept { return positions_.size(); }
    const std::vector<Position>& positions() const noexcept { return positions_; }
    const Position& position(std::size_t i) const { return positions_.at(i); }

    double distance(std::size_t a, std::size_t b) const { return metric_[a * size() + b]; }
    double diameter() const noexcept { return diameter_; }

    /// Largest nearest-neighbor distance: every sample has another within it.
    double eps_net() const noexcept { return eps_net_; }

    const SimplicialComplex& triangulation() const noexcept { return triangulation_; }
    const std::vector<std::size_t>& basepoints() const noexcept { return basepoints_; }
    bool is_basepoint(std::size_t i) const;

    /// Symmetry, zero diagonal, and the triangle inequality on sampled triples.
    bool metric_is_valid(std::size_t triples, std::uint64_t seed) const;

  private:
    std::vector<Position> positions_;
    std::vector<double> metric_;
    SimplicialComplex triangulation_;
    std::vector<std::size_t> basepoints_;
    double diameter_ = 0.0;
    double eps_net_ = 0.0;
};

double euclidean_distance(const Position& a, const Position& b);

/// Regular n-gon on the circle of diameter one; sample i sits at parameter
/// i/n of a full turn. Basepoint is sample 0.
SampledDomain circle_domain(std::size_t n);

/// Icosahedron on the unit sphere with each triangle split into four
/// `subdivisions` times, new vertices pushed out to the sphere. Basepoint is sample 0.
SampledDomain sphere_domain(std::size_t subdivisions);

}  // namespace vrbridge
