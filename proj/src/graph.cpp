#include "vrbridge/graph.hpp"

#include <algorithm>
#include <map>

#include "vrbridge/error.hpp"

namespace vrbridge {

namespace {

bool all_numeric(const std::vector<std::string>& labels)
{
    return std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    });
}

bool numeric_less(const std::string& a, const std::string& b)
{
    auto strip = [](const std::string& s) {
        auto p = s.find_first_not_of('0');
        return p == std::string::npos ? std::string("0") : s.substr(p);
    };
    auto sa = strip(a), sb = strip(b);
    if (sa.size() != sb.size())
        return sa.size() < sb.size();
    if (sa != sb)
        return sa < sb;
    return a < b;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges)
{
    Graph g;
    g.labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        g.labels_.push_back(std::to_string(i));
    g.adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint outside vertex range");
        if (u == v)
            continue;
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::from_labeled_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::vector<std::string>& isolated)
{
    std::vector<std::string> labels(isolated);
    for (const auto& [a, b] : edges) {
        labels.push_back(a);
        labels.push_back(b);
    }
    if (all_numeric(labels))
        std::sort(labels.begin(), labels.end(), numeric_less);
    else
        std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::map<std::string, Vertex> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        index.emplace(labels[i], static_cast<Vertex>(i));

    std::vector<Edge> numbered;
    numbered.reserve(edges.size());
    for (const auto& [a, b] : edges)
        numbered.emplace_back(index.at(a), index.at(b));

    Graph g = from_edges(labels.size(), numbered);
    g.labels_ = std::move(labels);
    return g;
}

void Graph::check(Vertex v) const
{
    if (v >= size())
        throw InputError("unknown vertex " + std::to_string(v));
}

const std::string& Graph::label(Vertex v) const
{
    check(v);
    return labels_[v];
}

Vertex Graph::vertex_of(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw InputError("unknown vertex '" + label + "'");
    return static_cast<Vertex>(it - labels_.begin());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const
{
    check(v);
    return adjacency_[v];
}

bool Graph::are_adjacent(Vertex u, Vertex v) const
{
    check(u);
    check(v);
    if (u == v)
        return true;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Graph::Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.are_adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

ClosureSpace canonical_closure(const Graph& g)
{
    std::vector<ClosureSpace::PointSet> cl(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        cl[v].insert(v);
        cl[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    }
    return ClosureSpace(std::move(cl));
}

Graph cycle_graph(std::size_t n)
{
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph octahedron_graph()
{
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < 6; ++i)
        for (Vertex j = i + 1; j < 6; ++j)
            if (i / 2 != j / 2)
                edges.emplace_back(i, j);
    return Graph::from_edges(6, edges);
}

}  // namespace vrbridge
