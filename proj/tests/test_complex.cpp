#include <doctest.h>

#include <algorithm>
#include <random>

#include "vrbridge/complex.hpp"
#include "vrbridge/error.hpp"
#include "vrbridge/homology.hpp"

using namespace vrbridge;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Every vertex subset of size ≤ cap+1 that is pairwise adjacent, by dimension.
std::vector<std::vector<Simplex>> cliques_by_subsets(const Graph& g, std::size_t cap)
{
    std::vector<std::vector<Simplex>> out(cap + 1);
    const std::size_t n = g.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Simplex s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        if (s.size() > cap + 1)
            continue;
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                clique = clique && g.are_adjacent(s[i], s[j]);
        if (clique)
            out[s.size() - 1].push_back(s);
    }
    for (auto& level : out)
        std::sort(level.begin(), level.end());
    return out;
}

bool is_proper_face(const Simplex& a, const Simplex& b)
{
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Chains σ_0 ⊊ σ_1 ⊊ ... of the face poset, counted by length.
void count_chains(const std::vector<Simplex>& all, const Simplex& last, std::size_t length,
                  std::vector<std::size_t>& counts)
{
    if (length > counts.size())
        return;
    ++counts[length - 1];
    for (const Simplex& next : all)
        if (is_proper_face(last, next))
            count_chains(all, next, length + 1, counts);
}

std::vector<std::size_t> chain_counts(const SimplicialComplex& k)
{
    std::vector<Simplex> all;
    for (std::size_t d = 0; d <= k.dim_cap(); ++d)
        for (const auto& s : k.simplices(d))
            all.push_back(s);
    std::vector<std::size_t> counts(k.dim_cap() + 1, 0);
    for (const Simplex& s : all)
        count_chains(all, s, 1, counts);
    return counts;
}

}  // namespace

TEST_CASE("clique complex examples")
{
    CHECK(vietoris_rips(cycle_graph(4), 2).counts() == std::vector<std::size_t>{4, 4, 0});
    const auto k3 = vietoris_rips(complete_graph(3), 2);
    CHECK(k3.counts() == std::vector<std::size_t>{3, 3, 1});
    CHECK(k3.contains({0, 1, 2}));
    CHECK(vietoris_rips(octahedron_graph(), 3).counts() == std::vector<std::size_t>{6, 12, 8, 0});
    CHECK(vietoris_rips(complete_graph(5), 1).counts() == std::vector<std::size_t>{5, 10});
    CHECK(vietoris_rips(Graph(), 2).dimension() == -1);
}

TEST_CASE("clique complex matches subset enumeration on random graphs")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(rng, 1 + rng() % 12, 0.2 + 0.6 * (trial % 3) / 2.0);
        const std::size_t cap = 1 + rng() % 4;
        const auto k = vietoris_rips(g, cap);
        const auto oracle = cliques_by_subsets(g, cap);
        REQUIRE(k.is_valid());
        for (std::size_t d = 0; d <= cap; ++d)
            CHECK(k.simplices(d) == oracle[d]);
        // The 1-skeleton is the graph itself.
        std::vector<Simplex> edges;
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        CHECK(k.simplices(1) == edges);
    }
}

TEST_CASE("subdivision examples")
{
    const auto edge = SimplicialComplex::from_facets(2, {{0, 1}}, 1);
    const auto sd1 = barycentric_subdivision(edge);
    CHECK(sd1.complex.counts() == std::vector<std::size_t>{3, 2});
    CHECK(sd1.carriers == std::vector<Simplex>{{0}, {1}, {0, 1}});

    const auto tri = vietoris_rips(complete_graph(3), 2);
    const auto sd2 = barycentric_subdivision(tri);
    CHECK(sd2.complex.counts() == std::vector<std::size_t>{7, 12, 6});
    CHECK(sd2.vertex_for({0, 1, 2}) == 6);
    CHECK(sd2.complex.is_valid());
    // Every simplex of sd is a chain of carriers under strict inclusion.
    for (std::size_t d = 1; d <= 2; ++d)
        for (const auto& s : sd2.complex.simplices(d))
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                CHECK(is_proper_face(sd2.carriers[s[i]], sd2.carriers[s[i + 1]]));
}

TEST_CASE("subdivision counts equal chain counts in the face poset")
{
    std::mt19937_64 rng(32);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 40; ++trial) {
        const Graph g = random_graph(rng, 2 + rng() % 6, 0.5);
        const auto k = vietoris_rips(g, 1 + rng() % 3);
        if (k.size() > 20)
            continue;
        ++checked;
        const auto sd = barycentric_subdivision(k);
        CHECK(sd.complex.counts() == chain_counts(k));
        CHECK(euler_characteristic(sd.complex) == euler_characteristic(k));
    }
    CHECK(checked == 40);
}

TEST_CASE("subdivision preserves the Euler characteristic")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 3 + rng() % 8, 0.45);
        const auto k = vietoris_rips(g, 2);
        const auto sd = barycentric_subdivision(k);
        CHECK(euler_characteristic(sd.complex) == euler_characteristic(k));
        CHECK(betti_numbers(sd.complex, 1) == betti_numbers(k, 1));
    }
}

TEST_CASE("closed stars")
{
    const auto c4 = vietoris_rips(cycle_graph(4), 2);
    CHECK(closed_star(c4, 0) == std::vector<Simplex>{{0}, {1}, {3}, {0, 1}, {0, 3}});
    const auto lone = vietoris_rips(Graph::from_edges(2, {}), 2);
    CHECK(closed_star(lone, 1) == std::vector<Simplex>{{1}});
    const auto k3 = vietoris_rips(complete_graph(3), 2);
    CHECK(closed_star(k3, 2).size() == k3.size());
    CHECK_THROWS_AS(closed_star(c4, 9), InputError);

    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const auto k = vietoris_rips(random_graph(rng, 2 + rng() % 8, 0.5), 3);
        const Vertex v = static_cast<Vertex>(rng() % k.vertex_count());
        const auto star = closed_star(k, v);
        CHECK(std::find(star.begin(), star.end(), Simplex{v}) != star.end());
        for (const auto& s : star)
            for (const auto& f : faces_of(s))
                CHECK(std::find(star.begin(), star.end(), f) != star.end());
    }
}

TEST_CASE("simpliciality of vertex maps")
{
    const auto c4 = vietoris_rips(cycle_graph(4), 2);
    CHECK(check_simplicial(SimplicialMap(c4, c4, {0, 1, 2, 3})));
    CHECK_FALSE(check_simplicial(SimplicialMap(c4, c4, {0, 1, 3, 3})));
    CHECK(check_simplicial(SimplicialMap(c4, c4, {2, 2, 2, 2})));
    CHECK_THROWS_AS(SimplicialMap(c4, c4, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(SimplicialMap(c4, c4, {0, 1, 2, 4}), InputError);
    SimplicialMap m(c4, c4, {1, 1, 2, 2});
    CHECK(m.image({0, 1}) == Simplex{1});
    CHECK(m.image({1, 2}) == Simplex{1, 2});
}

TEST_CASE("star condition")
{
    const auto c4 = vietoris_rips(cycle_graph(4), 2);
    SimplicialMap id(c4, c4, {0, 1, 2, 3});
    std::vector<BaryPoint> on_vertices;
    for (Vertex v = 0; v < 4; ++v)
        on_vertices.push_back(BaryPoint::at_vertex(v));
    CHECK(check_star_condition(on_vertices, id));

    std::vector<BaryPoint> on_edge = on_vertices;
    on_edge[1] = BaryPoint({1, 2}, {0.5, 0.5});
    CHECK(check_star_condition(on_edge, id));
    SimplicialMap off(c4, c4, {0, 0, 2, 3});
    CHECK_FALSE(check_star_condition(on_edge, off));

    std::vector<BaryPoint> bad = on_vertices;
    bad[0] = BaryPoint({0, 2}, {0.5, 0.5});
    CHECK_THROWS_AS(check_star_condition(bad, id), InputError);
}

TEST_CASE("complex validation")
{
    CHECK_THROWS_AS(SimplicialComplex::from_levels(1, {{{0}, {1}}, {{0, 2}}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{0, 5}}, 1), InputError);
    const auto k = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}}, 2);
    CHECK(k.counts() == std::vector<std::size_t>{4, 4, 1});
    CHECK(k.index_of({1, 2}) == 2u);
    CHECK_FALSE(k.index_of({0, 3}).has_value());
    const auto capped = SimplicialComplex::from_facets(3, {{0, 1, 2}}, 1);
    CHECK(capped.counts() == std::vector<std::size_t>{3, 3});
}
