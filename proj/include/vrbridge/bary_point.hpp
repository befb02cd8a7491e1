#pragma once

#include <cstdint>
#include <vector>

namespace vrbridge {

using Vertex = std::uint32_t;

/// Strictly increasing vertex tuple.
using Simplex = std::vector<Vertex>;

/// Tolerance on the sum-to-one invariant of barycentric coordinates.
inline constexpr double kSumTolerance = 1e-9;

/**
 * A point of a geometric realization: a carrier simplex and barycentric
 * coordinates aligned with it.
 *
 * Always canonical: the carrier is sorted, every coordinate is strictly
 * positive, so the carrier is the unique simplex containing the point in its
 * relative interior.
 */
class BaryPoint {
  public:
    /// Vertices may come in any order; zero coordinates are dropped. Throws
    /// InputError on length mismatch, repeated vertices, negative entries or a
    /// sum further than kSumTolerance from 1.
    BaryPoint(std::vector<Vertex> carrier, std::vector<double> coords);

    static BaryPoint at_vertex(Vertex v) { return BaryPoint({v}, {1.0}); }
    static BaryPoint barycenter(const Simplex& s);

    const Simplex& carrier() const noexcept { return carrier_; }
    const std::vector<double>& coords() const noexcept { return coords_; }

    bool is_vertex() const noexcept { return carrier_.size() == 1; }

    /// Coordinate of v, 0 when v is outside the carrier.
    double coordinate(Vertex v) const noexcept;

    friend bool operator==(const BaryPoint&, const BaryPoint&) = default;

  private:
    Simplex carrier_;
    std::vector<double> coords_;
};

}  // namespace vrbridge
