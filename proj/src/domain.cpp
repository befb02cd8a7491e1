#include "vrbridge/domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "vrbridge/error.hpp"

namespace vrbridge {

double euclidean_distance(const Position& a, const Position& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

SampledDomain::SampledDomain(std::vector<Position> positions, SimplicialComplex triangulation,
                             std::vector<std::size_t> basepoints)
    : positions_(std::move(positions)),
      triangulation_(std::move(triangulation)),
      basepoints_(std::move(basepoints))
{
    const std::size_t n = positions_.size();
    if (n == 0)
        throw InputError("sampled domain needs at least one sample");
    for (const auto& p : positions_)
        if (p.size() != positions_.front().size())
            throw InputError("samples have inconsistent embedding dimensions");
    if (triangulation_.vertex_count() > n)
        throw InputError("triangulation uses vertices that are not samples");
    std::sort(basepoints_.begin(), basepoints_.end());
    basepoints_.erase(std::unique(basepoints_.begin(), basepoints_.end()), basepoints_.end());
    if (!basepoints_.empty() && basepoints_.back() >= n)
        throw InputError("basepoint is not a sample");

    metric_.assign(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double d = euclidean_distance(positions_[a], positions_[b]);
            metric_[a * n + b] = metric_[b * n + a] = d;
            diameter_ = std::max(diameter_, d);
        }
    if (n > 1) {
        for (std::size_t a = 0; a < n; ++a) {
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < n; ++b)
                if (b != a)
                    nearest = std::min(nearest, metric_[a * n + b]);
            eps_net_ = std::max(eps_net_, nearest);
        }
    }
}

bool SampledDomain::is_basepoint(std::size_t i) const
{
    return std::binary_search(basepoints_.begin(), basepoints_.end(), i);
}

bool SampledDomain::metric_is_valid(std::size_t triples, std::uint64_t seed) const
{
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        if (distance(a, a) != 0.0)
            return false;
        for (std::size_t b = 0; b < n; ++b)
            if (distance(a, b) != distance(b, a) || distance(a, b) < 0.0)
                return false;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < triples; ++t) {
        auto a = pick(rng), b = pick(rng), c = pick(rng);
        if (distance(a, c) > distance(a, b) + distance(b, c) + 1e-12)
            return false;
    }
    return true;
}

SampledDomain circle_domain(std::size_t n)
{
    if (n < 3)
        throw InputError("circle domain needs at least 3 samples");
    std::vector<Position> positions;
    std::vector<Simplex> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        positions.push_back({0.5 * std::cos(angle), 0.5 * std::sin(angle)});
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    auto k = SimplicialComplex::from_facets(n, edges, 2);
    return SampledDomain(std::move(positions), std::move(k), {0});
}

SampledDomain sphere_domain(std::size_t subdivisions)
{
    if (subdivisions > 6)
        throw InputError("sphere subdivision level above 6 is not supported");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Position> positions = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
    };
    auto normalize = [](Position p) {
        const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        for (double& c : p)
            c /= r;
        return p;
    };
    for (auto& p : positions)
        p = normalize(p);
    std::vector<std::array<Vertex, 3>> faces = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1},
    };
    for (std::size_t level = 0; level < subdivisions; ++level) {
        std::map<std::pair<Vertex, Vertex>, Vertex> midpoint;
        auto mid = [&](Vertex a, Vertex b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end())
                return it->second;
            Position m(3);
            for (int c = 0; c < 3; ++c)
                m[c] = 0.5 * (positions[a][c] + positions[b][c]);
            positions.push_back(normalize(std::move(m)));
            auto v = static_cast<Vertex>(positions.size() - 1);
            midpoint.emplace(key, v);
            return v;
        };
        std::vector<std::array<Vertex, 3>> next;
        next.reserve(faces.size() * 4);
        for (auto [a, b, c] : faces) {
            Vertex ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
            next.push_back({a, ab, ca});
            next.push_back({b, bc, ab});
            next.push_back({c, ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }
    std::vector<Simplex> facets;
    facets.reserve(faces.size());
    for (auto [a, b, c] : faces)
        facets.push_back({a, b, c});
    auto k = SimplicialComplex::from_facets(positions.size(), facets, 2);
    return SampledDomain(std::move(positions), std::move(k), {0});
}

}  // namespace vrbridge
