#pragma once

#include <cstddef>

#include "vrbridge/bary_point.hpp"
#include "vrbridge/complex.hpp"

namespace vrbridge {

/**
 * The barycentric cover {A_0, ..., A_n} of an n-simplex.
 *
 * A_i is the union of the chain subsimplices |{v_i, b_{v_i v_a}, ...}| that
 * start at v_i. Membership reduces to a coordinate test: x ∈ A_i exactly when
 * t_i is a maximal coordinate of x.
 */
class BarycentricCover {
  public:
    explicit BarycentricCover(Simplex simplex);

    const Simplex& simplex() const noexcept { return simplex_; }
    std::size_t piece_count() const noexcept { return simplex_.size(); }

    /// Throws InputError if x is not a point of this simplex or i is out of range.
    bool contains(const BaryPoint& x, std::size_t i) const;

    /// Least i with x ∈ A_i, i.e. the piece selected by A_0, A_1 − A_0, ...
    std::size_t first_piece(const BaryPoint& x) const;

  private:
    Simplex simplex_;
};

bool bary_cover_membership(const Simplex& simplex, const BaryPoint& x, std::size_t i);

/**
 * The discrete modification Θ at one point: the carrier vertex with the
 * largest coordinate, ties going to the earliest vertex in the vertex order.
 * Throws InputError if x's carrier is not a simplex of k.
 */
Vertex theta_point(const SimplicialComplex& k, const BaryPoint& x);

/// Same, checking the carrier against the graph's cliques (no dimension cap).
Vertex theta_point(const Graph& g, const BaryPoint& x);

/**
 * Piecewise-linear extension of a vertex map: Σ t_i y_i ↦ Σ t_i m(y_i), with
 * coordinates of collapsed vertices summed. Throws InputError if x's carrier
 * is not a source simplex or its image is not a target simplex.
 */
BaryPoint pl_evaluate(const SimplicialMap& m, const BaryPoint& x);

/**
 * Evaluates m on a point given by coordinates aligned with a (possibly larger)
 * source simplex `simplex`, without first reducing to the support. Used to
 * compare the restrictions of m to two simplices sharing a face.
 */
BaryPoint pl_evaluate_on(const SimplicialMap& m, const Simplex& simplex,
                         const std::vector<double>& coords);

/// Smallest k with diameter·(dim/(dim+1))^k < delta. Throws InputError if delta or diameter ≤ 0.
std::size_t subdivision_depth_for_mesh(std::size_t dim, double diameter, double delta);

/**
 * Re-expresses a point of |K| as a point of |sd K| by sorting its coordinates:
 * with t_(0) ≥ t_(1) ≥ ... the weight on the barycenter of the first k+1
 * sorted vertices is (k+1)(t_(k) − t_(k+1)). Ties sort by vertex order.
 */
BaryPoint to_subdivision_point(const BaryPoint& x, const Subdivision& sd);

/// Inverse of to_subdivision_point: expands barycenters back into K's vertices.
BaryPoint from_subdivision_point(const BaryPoint& y, const Subdivision& sd);

}  // namespace vrbridge
