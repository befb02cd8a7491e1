#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vrbridge/complex.hpp"
#include "vrbridge/domain.hpp"
#include "vrbridge/graph.hpp"

namespace vrbridge {

/**
 * A vertex-valued map on the samples of a domain. Both the domain and the
 * target graph must outlive it.
 *
 * Every basepoint carries the same value, the base value; a domain without
 * basepoints has none.
 */
class DiscreteMap {
  public:
    /// Throws InputError on a size mismatch, an unknown vertex, or basepoints
    /// with differing values.
    DiscreteMap(const SampledDomain& domain, const Graph& target, std::vector<Vertex> values);

    const SampledDomain& domain() const noexcept { return *domain_; }
    const Graph& target() const noexcept { return *target_; }
    const std::vector<Vertex>& values() const noexcept { return values_; }
    Vertex operator()(std::size_t sample) const { return values_.at(sample); }
    std::size_t size() const noexcept { return values_.size(); }
    std::optional<Vertex> base_value() const noexcept { return base_; }

    std::vector<std::size_t> preimage(Vertex v) const;

    /// Distinct values in vertex order.
    std::vector<Vertex> image() const;

  private:
    const SampledDomain* domain_;
    const Graph* target_;
    std::vector<Vertex> values_;
    std::optional<Vertex> base_;
};

/// values(y) = Θ(f(y)). Throws InputError if some f(y) is not carried by a clique.
DiscreteMap discrete_modify(const std::vector<BaryPoint>& f, const SampledDomain& domain,
                            const Graph& x);

/**
 * Largest radii for a flood with v: for y ∈ f⁻¹(v), the distance to the
 * nearest sample valued outside cl(v), capped by the distance to the nearest
 * basepoint when v is not the base value and by half the diameter. Balls are
 * open. Entries off the preimage are 0.
 */
std::vector<double> admissible_radii(const DiscreteMap& f, Vertex v);

/**
 * The flood of f with v: every sample strictly within radii[y]/2 of some
 * y ∈ f⁻¹(v) takes the value v. Throws CertificateError naming (y, z) if some
 * z strictly within radii[y] of y is valued outside cl(v), or is a basepoint
 * while v is not the base value. Throws InputError on a non-positive radius.
 */
DiscreteMap flood(const DiscreteMap& f, Vertex v, const std::vector<double>& radii);

struct FloodStage {
    Vertex vertex = 0;
    std::vector<double> radii;
    std::vector<Vertex> values;  ///< after the stage
    std::size_t changed = 0;
};

/**
 * Floods with each vertex of f's image in ascending order using
 * admissible_radii. Before each stage the nearest-neighbor shell of every
 * y ∈ f⁻¹(v) must be valued in cl(v); otherwise throws CertificateError with
 * the stage index. Stages are appended to `trace` when given.
 */
DiscreteMap flood_sequence(const DiscreteMap& f, std::vector<FloodStage>* trace = nullptr);

struct CliqueCertificate {
    /// Per-sample radius; +inf on a single-sample domain.
    std::vector<double> radii;
    double delta = 0.0;
};

/**
 * r(y) is the largest sample distance d such that the values on the closed
 * ball of radius d about y are pairwise adjacent; δ = min r. Throws
 * CertificateError naming the offending pair when the nearest shell of some
 * sample already fails.
 */
CliqueCertificate clique_certificate(const DiscreteMap& f);

/// A vertex map on a triangulation with embedding positions for its vertices.
struct TriangulatedMap {
    SimplicialComplex complex;
    std::vector<Position> positions;
    std::vector<Vertex> values;

    double simplex_diameter(const Simplex& s) const;
    /// Largest simplex diameter.
    double mesh() const;
};

TriangulatedMap restrict_to_triangulation(const DiscreteMap& f);

/**
 * Barycentric subdivision of a triangulated map. A new vertex sits at the
 * barycenter of its carrier and takes Θ of the linear image of that
 * barycenter: the most frequent value on the carrier, ties to the least
 * vertex. Throws CertificateError if a carrier's values are not a clique of x.
 */
std::pair<Subdivision, TriangulatedMap> subdivide(const TriangulatedMap& f, const Graph& x);

/**
 * The convex transformation: the simplicial map with f's values on vertices.
 * Throws CertificateError for a simplex of diameter ≥ delta or whose values
 * are not a simplex of vr. The result refers to f.complex and vr.
 */
SimplicialMap convex_transform(const TriangulatedMap& f, double delta, const SimplicialComplex& vr);

/// Same, on the domain's own triangulation with the certificate's δ.
SimplicialMap convex_transform(const DiscreteMap& f, const CliqueCertificate& cert,
                               const SimplicialComplex& vr);

/**
 * For every sample x of |K|, the images of x under m1 and of x viewed in
 * |sd K| under m2 lie in a common target simplex. Throws InputError unless
 * m2 is defined on sd.complex, sd subdivides m1's source and both maps share
 * a target.
 */
bool carriers_compatible(const SimplicialMap& m1, const SimplicialMap& m2, const Subdivision& sd,
                         const std::vector<BaryPoint>& samples);

/// Points of s whose coordinates are multiples of 1/steps.
std::vector<BaryPoint> grid_points(const Simplex& s, std::size_t steps);

/// Simplices not a proper face of another simplex.
std::vector<Simplex> maximal_simplices(const SimplicialComplex& k);

/**
 * For every pair of maximal simplices sharing a face, the linear extensions
 * over each of them agree exactly on the face's grid points (step 1/steps).
 */
bool shared_faces_agree(const SimplicialMap& m, std::size_t steps);

}  // namespace vrbridge
