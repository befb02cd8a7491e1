#include "vrbridge/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "vrbridge/error.hpp"
#include "vrbridge/realization.hpp"

namespace vrbridge {

namespace {

// Distances computed along different float paths can differ in the last
// bits for points that are equidistant in exact arithmetic.
bool same_shell(double a, double b)
{
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(a, b));
}

std::string sample_name(std::size_t i)
{
    return "sample " + std::to_string(i);
}

std::string vertex_name(const Graph& g, Vertex v)
{
    return "'" + g.label(v) + "'";
}

}  // namespace

DiscreteMap::DiscreteMap(const SampledDomain& domain, const Graph& target, std::vector<Vertex> values)
    : domain_(&domain), target_(&target), values_(std::move(values))
{
    if (values_.size() != domain.size())
        throw InputError("map has " + std::to_string(values_.size()) + " values for " +
                         std::to_string(domain.size()) + " samples");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] >= target.size())
            throw InputError(sample_name(i) + " maps to unknown vertex " + std::to_string(values_[i]));
    for (std::size_t a : domain.basepoints()) {
        if (!base_)
            base_ = values_[a];
        else if (*base_ != values_[a])
            throw InputError("basepoints map to different vertices " + vertex_name(target, *base_) +
                             " and " + vertex_name(target, values_[a]));
    }
}

std::vector<std::size_t> DiscreteMap::preimage(Vertex v) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] == v)
            out.push_back(i);
    return out;
}

std::vector<Vertex> DiscreteMap::image() const
{
    std::vector<Vertex> out(values_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DiscreteMap discrete_modify(const std::vector<BaryPoint>& f, const SampledDomain& domain, const Graph& x)
{
    if (f.size() != domain.size())
        throw InputError("map has " + std::to_string(f.size()) + " points for " +
                         std::to_string(domain.size()) + " samples");
    std::vector<Vertex> values;
    values.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        try {
            values.push_back(theta_point(x, f[i]));
        } catch (const InputError& e) {
            throw InputError(sample_name(i) + ": " + e.what());
        }
    }
    return DiscreteMap(domain, x, std::move(values));
}

std::vector<double> admissible_radii(const DiscreteMap& f, Vertex v)
{
    const SampledDomain& dom = f.domain();
    const Graph& g = f.target();
    const bool capped_by_base = f.base_value() && *f.base_value() != v;
    const double cap = dom.diameter() > 0.0 ? dom.diameter() / 2.0 : 1.0;

    std::vector<double> radii(f.size(), 0.0);
    for (std::size_t y : f.preimage(v)) {
        double r = cap;
        for (std::size_t z = 0; z < f.size(); ++z)
            if (!g.are_adjacent(f(z), v))
                r = std::min(r, dom.distance(y, z));
        if (capped_by_base)
            for (std::size_t a : dom.basepoints())
                r = std::min(r, dom.distance(y, a));
        radii[y] = r;
    }
    return radii;
}

DiscreteMap flood(const DiscreteMap& f, Vertex v, const std::vector<double>& radii)
{
    const SampledDomain& dom = f.domain();
    const Graph& g = f.target();
    if (radii.size() != f.size())
        throw InputError("flood needs one radius per sample");
    if (v >= g.size())
        throw InputError("flood with unknown vertex " + std::to_string(v));
    const bool guard_base = f.base_value() && *f.base_value() != v;

    std::vector<Vertex> out(f.values());
    for (std::size_t y : f.preimage(v)) {
        const double r = radii[y];
        if (!(r > 0.0))
            throw InputError("flood radius at " + sample_name(y) + " is not positive");
        for (std::size_t z = 0; z < f.size(); ++z) {
            const double d = dom.distance(y, z);
            if (!(d < r))
                continue;
            if (!g.are_adjacent(f(z), v))
                throw CertificateError("flood with " + vertex_name(g, v) + ": " + sample_name(z) +
                                           " lies within the radius of " + sample_name(y) +
                                           " but has value " + vertex_name(g, f(z)) + " outside its closure",
                                       {y, z, v, f(z)});
            if (guard_base && dom.is_basepoint(z))
                throw CertificateError("flood with " + vertex_name(g, v) + ": basepoint " +
                                           std::to_string(z) + " lies within the radius of " + sample_name(y),
                                       {y, z, v, f(z)});
            if (d < r / 2.0)
                out[z] = v;
        }
    }
    return DiscreteMap(dom, g, std::move(out));
}

DiscreteMap flood_sequence(const DiscreteMap& f, std::vector<FloodStage>* trace)
{
    const SampledDomain& dom = f.domain();
    const Graph& g = f.target();
    const std::vector<Vertex> order = f.image();

    DiscreteMap current = f;
    for (std::size_t stage = 0; stage < order.size(); ++stage) {
        const Vertex v = order[stage];
        try {
            for (std::size_t y : current.preimage(v)) {
                double nearest = std::numeric_limits<double>::infinity();
                for (std::size_t z = 0; z < current.size(); ++z)
                    if (z != y)
                        nearest = std::min(nearest, dom.distance(y, z));
                for (std::size_t z = 0; z < current.size(); ++z)
                    if (z != y && same_shell(dom.distance(y, z), nearest) && !g.are_adjacent(current(z), v))
                        throw CertificateError("neighboring samples " + std::to_string(y) + " and " +
                                                   std::to_string(z) + " have non-adjacent values " +
                                                   vertex_name(g, v) + " and " + vertex_name(g, current(z)),
                                               {y, z, v, current(z)});
            }
            std::vector<double> radii = admissible_radii(current, v);
            DiscreteMap next = flood(current, v, radii);
            if (trace) {
                FloodStage s;
                s.vertex = v;
                s.radii = std::move(radii);
                s.values = next.values();
                for (std::size_t i = 0; i < next.size(); ++i)
                    s.changed += next(i) != current(i);
                trace->push_back(std::move(s));
            }
            current = std::move(next);
        } catch (const CertificateError& e) {
            throw CertificateError("flood stage " + std::to_string(stage) + " (vertex " + vertex_name(g, v) +
                                       "): " + e.what(),
                                   e.witness(), stage);
        }
    }
    return current;
}

CliqueCertificate clique_certificate(const DiscreteMap& f)
{
    const SampledDomain& dom = f.domain();
    const Graph& g = f.target();
    const std::size_t n = f.size();

    CliqueCertificate cert;
    cert.radii.assign(n, std::numeric_limits<double>::infinity());
    std::vector<std::pair<double, std::size_t>> by_distance;
    for (std::size_t y = 0; y < n; ++y) {
        by_distance.clear();
        for (std::size_t z = 0; z < n; ++z)
            if (z != y)
                by_distance.emplace_back(dom.distance(y, z), z);
        std::sort(by_distance.begin(), by_distance.end());

        // One witnessing sample per value seen so far in the ball.
        std::map<Vertex, std::size_t> seen{{f(y), y}};
        double radius = -1.0;
        for (std::size_t i = 0; i < by_distance.size();) {
            std::size_t j = i;
            while (j < by_distance.size() && same_shell(by_distance[j].first, by_distance[i].first))
                ++j;
            std::map<Vertex, std::size_t> grown = seen;
            for (std::size_t t = i; t < j; ++t)
                grown.emplace(f(by_distance[t].second), by_distance[t].second);
            bool clique = true;
            std::pair<std::size_t, std::size_t> bad;
            for (auto a = grown.begin(); clique && a != grown.end(); ++a)
                for (auto b = std::next(a); b != grown.end(); ++b)
                    if (!g.are_adjacent(a->first, b->first)) {
                        clique = false;
                        bad = {a->second, b->second};
                        break;
                    }
            if (!clique) {
                if (radius < 0.0)
                    throw CertificateError(sample_name(bad.first) + " and " + sample_name(bad.second) +
                                               " are nearest neighbors of " + sample_name(y) +
                                               " with non-adjacent values " + vertex_name(g, f(bad.first)) +
                                               " and " + vertex_name(g, f(bad.second)),
                                           {bad.first, bad.second, f(bad.first), f(bad.second)});
                break;
            }
            seen = std::move(grown);
            radius = by_distance[j - 1].first;
            i = j;
        }
        if (radius >= 0.0)
            cert.radii[y] = radius;
    }
    cert.delta = *std::min_element(cert.radii.begin(), cert.radii.end());
    return cert;
}

double TriangulatedMap::simplex_diameter(const Simplex& s) const
{
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            d = std::max(d, euclidean_distance(positions.at(s[i]), positions.at(s[j])));
    return d;
}

double TriangulatedMap::mesh() const
{
    // The diameter of a simplex is its longest edge.
    double d = 0.0;
    for (const auto& e : complex.simplices(1))
        d = std::max(d, simplex_diameter(e));
    return d;
}

TriangulatedMap restrict_to_triangulation(const DiscreteMap& f)
{
    const SimplicialComplex& k = f.domain().triangulation();
    const std::size_t n = k.vertex_count();
    TriangulatedMap out{k,
                        {f.domain().positions().begin(), f.domain().positions().begin() + static_cast<std::ptrdiff_t>(n)},
                        {f.values().begin(), f.values().begin() + static_cast<std::ptrdiff_t>(n)}};
    return out;
}

std::pair<Subdivision, TriangulatedMap> subdivide(const TriangulatedMap& f, const Graph& x)
{
    Subdivision sd = barycentric_subdivision(f.complex);
    TriangulatedMap out;
    out.positions.reserve(sd.carriers.size());
    out.values.reserve(sd.carriers.size());
    const std::size_t width = f.positions.empty() ? 0 : f.positions.front().size();
    for (const Simplex& c : sd.carriers) {
        Position p(width, 0.0);
        std::map<Vertex, std::size_t> counts;
        for (Vertex v : c) {
            for (std::size_t i = 0; i < width; ++i)
                p[i] += f.positions.at(v)[i];
            ++counts[f.values.at(v)];
        }
        for (double& coord : p)
            coord /= static_cast<double>(c.size());
        for (auto a = counts.begin(); a != counts.end(); ++a)
            for (auto b = std::next(a); b != counts.end(); ++b)
                if (!x.are_adjacent(a->first, b->first)) {
                    auto ia = std::find_if(c.begin(), c.end(), [&](Vertex v) { return f.values[v] == a->first; });
                    auto ib = std::find_if(c.begin(), c.end(), [&](Vertex v) { return f.values[v] == b->first; });
                    throw CertificateError("simplex vertices " + std::to_string(*ia) + " and " + std::to_string(*ib) +
                                               " have non-adjacent values " + vertex_name(x, a->first) + " and " +
                                               vertex_name(x, b->first),
                                           {*ia, *ib, a->first, b->first});
                }
        Vertex best = counts.begin()->first;
        for (auto [v, count] : counts)
            if (count > counts[best])
                best = v;
        out.positions.push_back(std::move(p));
        out.values.push_back(best);
    }
    out.complex = sd.complex;
    return {std::move(sd), std::move(out)};
}

namespace {

void check_convex(const SimplicialComplex& k, const std::vector<Position>& positions,
                  const std::vector<Vertex>& values, double delta, const SimplicialComplex& vr)
{
    if (values.size() != k.vertex_count() || positions.size() != k.vertex_count())
        throw InputError("triangulated map does not match its complex");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] >= vr.vertex_count())
            throw InputError("vertex " + std::to_string(i) + " maps outside the target complex");
    for (const auto& e : k.simplices(1)) {
        const double d = euclidean_distance(positions[e[0]], positions[e[1]]);
        if (!(d < delta))
            throw CertificateError("edge {" + std::to_string(e[0]) + ", " + std::to_string(e[1]) + "} has length " +
                                       std::to_string(d) + ", not below the Lebesgue number " + std::to_string(delta),
                                   {e[0], e[1], values[e[0]], values[e[1]]});
    }
    for (std::size_t dim = 1; dim <= k.dim_cap(); ++dim)
        for (const auto& s : k.simplices(dim)) {
            Simplex image;
            for (Vertex v : s)
                image.push_back(values[v]);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (vr.contains(image))
                continue;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    Simplex pair{std::min(values[s[i]], values[s[j]]), std::max(values[s[i]], values[s[j]])};
                    if (pair[0] != pair[1] && !vr.contains(pair))
                        throw CertificateError("simplex vertices " + std::to_string(s[i]) + " and " +
                                                   std::to_string(s[j]) + " have non-adjacent values",
                                               {s[i], s[j], values[s[i]], values[s[j]]});
                }
            throw CertificateError("image of a simplex exceeds the target's dimension cap",
                                   {s.front(), s.back(), values[s.front()], values[s.back()]});
        }
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (&a == &b)
        return true;
    if (a.dim_cap() != b.dim_cap())
        return false;
    for (std::size_t d = 0; d <= a.dim_cap(); ++d)
        if (a.simplices(d) != b.simplices(d))
            return false;
    return true;
}

}  // namespace

SimplicialMap convex_transform(const TriangulatedMap& f, double delta, const SimplicialComplex& vr)
{
    check_convex(f.complex, f.positions, f.values, delta, vr);
    return SimplicialMap(f.complex, vr, f.values);
}

SimplicialMap convex_transform(const DiscreteMap& f, const CliqueCertificate& cert, const SimplicialComplex& vr)
{
    const SimplicialComplex& k = f.domain().triangulation();
    const auto n = static_cast<std::ptrdiff_t>(k.vertex_count());
    std::vector<Position> positions(f.domain().positions().begin(), f.domain().positions().begin() + n);
    std::vector<Vertex> values(f.values().begin(), f.values().begin() + n);
    check_convex(k, positions, values, cert.delta, vr);
    return SimplicialMap(k, vr, std::move(values));
}

bool carriers_compatible(const SimplicialMap& m1, const SimplicialMap& m2, const Subdivision& sd,
                         const std::vector<BaryPoint>& samples)
{
    if (!same_complex(m2.source(), sd.complex))
        throw InputError("second map is not defined on the subdivision");
    if (sd.carriers.size() != m1.source().size() ||
        !std::all_of(sd.carriers.begin(), sd.carriers.end(), [&](const Simplex& c) { return m1.source().contains(c); }))
        throw InputError("subdivision does not subdivide the first map's source");
    if (!same_complex(m1.target(), m2.target()))
        throw InputError("maps have different targets");

    for (const BaryPoint& x : samples) {
        const BaryPoint p1 = pl_evaluate(m1, x);
        const BaryPoint p2 = pl_evaluate(m2, to_subdivision_point(x, sd));
        Simplex joint;
        std::set_union(p1.carrier().begin(), p1.carrier().end(), p2.carrier().begin(), p2.carrier().end(),
                       std::back_inserter(joint));
        if (!m1.target().contains(joint))
            return false;
    }
    return true;
}

namespace {

void compositions(std::size_t parts, std::size_t total, std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out)
{
    if (prefix.size() + 1 == parts) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t i = 0; i <= total; ++i) {
        prefix.push_back(i);
        compositions(parts, total - i, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<BaryPoint> grid_points(const Simplex& s, std::size_t steps)
{
    if (s.empty() || steps == 0)
        throw InputError("grid needs a nonempty simplex and a positive step count");
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> prefix;
    compositions(s.size(), steps, prefix, parts);
    std::vector<BaryPoint> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        std::vector<double> coords(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            coords[i] = static_cast<double>(p[i]) / static_cast<double>(steps);
        out.emplace_back(s, std::move(coords));
    }
    return out;
}

std::vector<Simplex> maximal_simplices(const SimplicialComplex& k)
{
    std::vector<Simplex> out;
    for (std::size_t d = 0; d <= k.dim_cap(); ++d) {
        std::vector<Simplex> covered;
        if (d < k.dim_cap())
            for (const auto& s : k.simplices(d + 1))
                for (std::size_t skip = 0; skip < s.size(); ++skip) {
                    Simplex f;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != skip)
                            f.push_back(s[i]);
                    covered.push_back(std::move(f));
                }
        std::sort(covered.begin(), covered.end());
        for (const auto& s : k.simplices(d))
            if (!std::binary_search(covered.begin(), covered.end(), s))
                out.push_back(s);
    }
    return out;
}

bool shared_faces_agree(const SimplicialMap& m, std::size_t steps)
{
    std::map<Simplex, std::vector<const Simplex*>> containing;
    const std::vector<Simplex> top = maximal_simplices(m.source());
    for (const Simplex& s : top)
        for (Simplex& f : faces_of(s))
            if (f.size() < s.size())
                containing[std::move(f)].push_back(&s);

    for (const auto& [face, owners] : containing) {
        if (owners.size() < 2)
            continue;
        for (const BaryPoint& x : grid_points(face, steps)) {
            std::vector<BaryPoint> images;
            for (const Simplex* s : owners) {
                std::vector<double> coords(s->size());
                for (std::size_t i = 0; i < s->size(); ++i)
                    coords[i] = x.coordinate((*s)[i]);
                images.push_back(pl_evaluate_on(m, *s, coords));
            }
            for (const BaryPoint& p : images)
                if (!(p == images.front()))
                    return false;
        }
    }
    return true;
}

}  // namespace vrbridge
