#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vrbridge/bary_point.hpp"
#include "vrbridge/graph.hpp"

namespace vrbridge {

/**
 * A finite abstract simplicial complex truncated at dim_cap.
 *
 * Simplices of each dimension are kept in lexicographic order; that order
 * indexes rows and columns of boundary matrices. Every vertex 0..n-1 is a
 * 0-simplex.
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Downward closure of the given simplices, truncated at dim_cap.
    static SimplicialComplex from_facets(std::size_t vertex_count,
                                         const std::vector<Simplex>& facets,
                                         std::size_t dim_cap);

    /// Simplices grouped by dimension (levels[k] holds k-simplices). Levels are
    /// sorted here; throws InputError unless the result is a valid complex.
    static SimplicialComplex from_levels(std::size_t dim_cap,
                                         std::vector<std::vector<Simplex>> levels);

    std::size_t vertex_count() const noexcept { return by_dim_.empty() ? 0 : by_dim_[0].size(); }
    std::size_t dim_cap() const noexcept { return dim_cap_; }

    /// Highest dimension with a stored simplex; -1 for the empty complex.
    int dimension() const noexcept;

    /// Empty for k > dim_cap.
    const std::vector<Simplex>& simplices(std::size_t k) const;

    /// Simplex counts for dimensions 0..dim_cap.
    std::vector<std::size_t> counts() const;
    std::size_t size() const;

    bool contains(const Simplex& s) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    /// Faces closed downward and tuples strictly increasing.
    bool is_valid() const;

  private:
    std::size_t dim_cap_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::string> labels_;
};

/// Clique complex: k-simplices are the (k+1)-cliques, k ≤ dim_cap.
SimplicialComplex vietoris_rips(const Graph& g, std::size_t dim_cap);

/**
 * sd(K) together with its carrier map. Vertex i of the subdivision is the
 * barycenter of carriers[i]; vertices are numbered by (dimension, lex) of
 * their carriers, so every chain is already an increasing tuple.
 */
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> carriers;
    std::map<Simplex, Vertex> vertex_of;

    Vertex vertex_for(const Simplex& carrier) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& k);

/// Every simplex containing v, and all of their faces; ordered by (dim, lex).
std::vector<Simplex> closed_star(const SimplicialComplex& k, Vertex v);

/// All nonempty faces of s (including s), ordered by (dim, lex).
std::vector<Simplex> faces_of(const Simplex& s);

/// A vertex map between two complexes. Both complexes must outlive it.
class SimplicialMap {
  public:
    SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                  std::vector<Vertex> vertex_images);

    const SimplicialComplex& source() const noexcept { return *source_; }
    const SimplicialComplex& target() const noexcept { return *target_; }
    const std::vector<Vertex>& vertex_images() const noexcept { return images_; }
    Vertex operator()(Vertex v) const { return images_.at(v); }

    /// Deduplicated, sorted image of a source simplex.
    Simplex image(const Simplex& s) const;

  private:
    const SimplicialComplex* source_;
    const SimplicialComplex* target_;
    std::vector<Vertex> images_;
};

/// Every source simplex maps onto a target simplex.
bool check_simplicial(const SimplicialMap& m);

/**
 * Star-condition check of a simplicial approximation on vertex samples: for
 * each source vertex x, φ(x) must be a vertex of the carrier of f_sample[x].
 * Throws InputError if a sample's carrier is not a target simplex.
 */
bool check_star_condition(const std::vector<BaryPoint>& f_sample, const SimplicialMap& phi);

}  // namespace vrbridge
