#include "vrbridge/realization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "vrbridge/error.hpp"

namespace vrbridge {

BaryPoint::BaryPoint(std::vector<Vertex> carrier, std::vector<double> coords)
{
    if (carrier.size() != coords.size())
        throw InputError("barycentric point: carrier and coordinates differ in length");
    if (carrier.empty())
        throw InputError("barycentric point: empty carrier");
    std::vector<std::pair<Vertex, double>> entries;
    entries.reserve(carrier.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (!(coords[i] >= 0.0) || !std::isfinite(coords[i]))
            throw InputError("barycentric point: coordinate " + std::to_string(coords[i]) +
                             " is not a nonnegative number");
        sum += coords[i];
        entries.emplace_back(carrier[i], coords[i]);
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw InputError("barycentric point: coordinates sum to " + std::to_string(sum));
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw InputError("barycentric point: repeated vertex " + std::to_string(entries[i].first));
    for (auto [v, t] : entries)
        if (t > 0.0) {
            carrier_.push_back(v);
            coords_.push_back(t);
        }
}

BaryPoint BaryPoint::barycenter(const Simplex& s)
{
    return BaryPoint(s, std::vector<double>(s.size(), 1.0 / static_cast<double>(s.size())));
}

double BaryPoint::coordinate(Vertex v) const noexcept
{
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), v);
    if (it == carrier_.end() || *it != v)
        return 0.0;
    return coords_[static_cast<std::size_t>(it - carrier_.begin())];
}

BarycentricCover::BarycentricCover(Simplex simplex) : simplex_(std::move(simplex))
{
    if (simplex_.empty())
        throw InputError("barycentric cover of an empty simplex");
    std::sort(simplex_.begin(), simplex_.end());
    if (std::adjacent_find(simplex_.begin(), simplex_.end()) != simplex_.end())
        throw InputError("barycentric cover: repeated vertex");
}

namespace {

void require_inside(const Simplex& simplex, const BaryPoint& x)
{
    if (!std::includes(simplex.begin(), simplex.end(), x.carrier().begin(), x.carrier().end()))
        throw InputError("point is not in the simplex");
}

}  // namespace

bool BarycentricCover::contains(const BaryPoint& x, std::size_t i) const
{
    require_inside(simplex_, x);
    if (i >= simplex_.size())
        throw InputError("barycentric cover index " + std::to_string(i) + " out of range");
    const double ti = x.coordinate(simplex_[i]);
    return std::all_of(x.coords().begin(), x.coords().end(), [ti](double t) { return ti >= t; });
}

std::size_t BarycentricCover::first_piece(const BaryPoint& x) const
{
    require_inside(simplex_, x);
    // Vertices outside the carrier have coordinate 0 and never win.
    auto best = std::max_element(x.coords().begin(), x.coords().end());
    Vertex v = x.carrier()[static_cast<std::size_t>(best - x.coords().begin())];
    return static_cast<std::size_t>(std::lower_bound(simplex_.begin(), simplex_.end(), v) - simplex_.begin());
}

bool bary_cover_membership(const Simplex& simplex, const BaryPoint& x, std::size_t i)
{
    return BarycentricCover(simplex).contains(x, i);
}

namespace {

Vertex argmax_vertex(const BaryPoint& x)
{
    // max_element keeps the first maximum, i.e. the least vertex among ties.
    auto best = std::max_element(x.coords().begin(), x.coords().end());
    return x.carrier()[static_cast<std::size_t>(best - x.coords().begin())];
}

}  // namespace

Vertex theta_point(const SimplicialComplex& k, const BaryPoint& x)
{
    if (!k.contains(x.carrier()))
        throw InputError("point carrier is not a simplex of the complex");
    return argmax_vertex(x);
}

Vertex theta_point(const Graph& g, const BaryPoint& x)
{
    if (x.carrier().back() >= g.size() || !is_clique(g, x.carrier()))
        throw InputError("point carrier is not a clique of the graph");
    return argmax_vertex(x);
}

BaryPoint pl_evaluate_on(const SimplicialMap& m, const Simplex& simplex, const std::vector<double>& coords)
{
    if (simplex.size() != coords.size())
        throw InputError("coordinates do not match the simplex");
    if (!m.source().contains(simplex))
        throw InputError("point carrier is not a simplex of the source complex");
    Simplex image = m.image(simplex);
    if (!m.target().contains(image))
        throw InputError("map is not simplicial on the point's carrier");
    std::map<Vertex, double> weights;
    for (std::size_t i = 0; i < simplex.size(); ++i)
        weights[m(simplex[i])] += coords[i];
    std::vector<Vertex> carrier;
    std::vector<double> out;
    for (auto [v, t] : weights) {
        carrier.push_back(v);
        out.push_back(t);
    }
    return BaryPoint(std::move(carrier), std::move(out));
}

BaryPoint pl_evaluate(const SimplicialMap& m, const BaryPoint& x)
{
    return pl_evaluate_on(m, x.carrier(), x.coords());
}

std::size_t subdivision_depth_for_mesh(std::size_t dim, double diameter, double delta)
{
    if (!(delta > 0.0))
        throw InputError("Lebesgue number must be positive");
    if (!(diameter > 0.0))
        throw InputError("diameter must be positive");
    const double factor = static_cast<double>(dim) / static_cast<double>(dim + 1);
    std::size_t k = 0;
    double mesh = diameter;
    while (!(mesh < delta)) {
        mesh *= factor;
        ++k;
        if (k > 4096)
            throw InputError("subdivision depth does not converge");
    }
    return k;
}

BaryPoint to_subdivision_point(const BaryPoint& x, const Subdivision& sd)
{
    std::vector<std::size_t> order(x.carrier().size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x.coords()[a] > x.coords()[b]; });

    std::vector<Vertex> carrier;
    std::vector<double> weights;
    Simplex face;
    for (std::size_t k = 0; k < order.size(); ++k) {
        face.insert(std::upper_bound(face.begin(), face.end(), x.carrier()[order[k]]),
                    x.carrier()[order[k]]);
        const double next = k + 1 < order.size() ? x.coords()[order[k + 1]] : 0.0;
        const double w = static_cast<double>(k + 1) * (x.coords()[order[k]] - next);
        if (w > 0.0) {
            carrier.push_back(sd.vertex_for(face));
            weights.push_back(w);
        }
    }
    // Round-off can push the weight sum slightly away from 1; renormalize.
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights)
        w /= sum;
    return BaryPoint(std::move(carrier), std::move(weights));
}

BaryPoint from_subdivision_point(const BaryPoint& y, const Subdivision& sd)
{
    std::map<Vertex, double> coords;
    for (std::size_t i = 0; i < y.carrier().size(); ++i) {
        const Simplex& c = sd.carriers.at(y.carrier()[i]);
        for (Vertex v : c)
            coords[v] += y.coords()[i] / static_cast<double>(c.size());
    }
    std::vector<Vertex> carrier;
    std::vector<double> out;
    for (auto [v, t] : coords) {
        carrier.push_back(v);
        out.push_back(t);
    }
    return BaryPoint(std::move(carrier), std::move(out));
}

}  // namespace vrbridge
