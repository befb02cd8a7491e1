#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vrbridge/closure.hpp"

namespace vrbridge {

using Vertex = std::uint32_t;

/**
 * A finite, simple, reflexive, undirected graph.
 *
 * Vertices are stored as indices 0..size()-1 in the vertex order; each index
 * keeps the caller's label. Loops are implicit and never stored.
 */
class Graph {
  public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() = default;

    /// Numeric labels "0".."n-1". Self-loops are dropped, duplicates merged.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    /**
     * Builds a graph from labeled edges and isolated-vertex declarations.
     * Labels are ordered numerically if every label is an unsigned integer,
     * lexicographically otherwise; that order becomes the vertex order.
     */
    static Graph from_labeled_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                                    const std::vector<std::string>& isolated = {});

    std::size_t size() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::string& label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Throws InputError for an unknown label.
    Vertex vertex_of(const std::string& label) const;

    /// Sorted, loop-free neighbor list.
    const std::vector<Vertex>& neighbors(Vertex v) const;

    /// u == v or {u, v} is an edge.
    bool are_adjacent(Vertex u, Vertex v) const;

    /// All edges (u < v) in lexicographic order.
    std::vector<Edge> edges() const;

    /// Always true: the representation is finite.
    bool is_locally_finite() const noexcept { return true; }

  private:
    void check(Vertex v) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Every pair of vertices in `vertices` is adjacent.
bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);

/// cl(x) = {x} ∪ neighbors(x).
ClosureSpace canonical_closure(const Graph& g);

/// Named graphs used throughout the tests and examples.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{2,2,2}; antipodal pairs are (0,1), (2,3), (4,5).
Graph octahedron_graph();

}  // namespace vrbridge
