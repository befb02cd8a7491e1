#include "vrbridge/complex.hpp"

#include <algorithm>
#include <set>

#include "vrbridge/error.hpp"

namespace vrbridge {

namespace {

const std::vector<Simplex> kNoSimplices;

std::string describe(const Simplex& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

bool strictly_increasing(const Simplex& s)
{
    return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

// Cliques containing `prefix`, extended only by higher-ordered common neighbors.
void expand_cliques(const Graph& g, std::size_t dim_cap, Simplex& prefix,
                    const std::vector<Vertex>& candidates,
                    std::vector<std::vector<Simplex>>& levels)
{
    levels[prefix.size() - 1].push_back(prefix);
    if (prefix.size() > dim_cap)
        return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        Vertex w = candidates[i];
        const auto& nbrs = g.neighbors(w);
        std::vector<Vertex> next;
        std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                              nbrs.begin(), nbrs.end(), std::back_inserter(next));
        prefix.push_back(w);
        expand_cliques(g, dim_cap, prefix, next, levels);
        prefix.pop_back();
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 const std::vector<Simplex>& facets,
                                                 std::size_t dim_cap)
{
    std::vector<std::set<Simplex>> levels(dim_cap + 1);
    for (Vertex v = 0; v < vertex_count; ++v)
        levels[0].insert({v});
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        if (f.empty() || !strictly_increasing(f))
            throw InputError("malformed facet " + describe(f));
        if (f.back() >= vertex_count)
            throw InputError("facet " + describe(f) + " uses an unknown vertex");
        const std::size_t n = f.size();
        if (n > 20)
            throw InputError("facet " + describe(f) + " is too large to enumerate");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    face.push_back(f[i]);
            if (face.size() <= dim_cap + 1)
                levels[face.size() - 1].insert(std::move(face));
        }
    }
    SimplicialComplex k;
    k.dim_cap_ = dim_cap;
    k.by_dim_.reserve(levels.size());
    for (auto& level : levels)
        k.by_dim_.emplace_back(level.begin(), level.end());
    k.set_labels({});
    return k;
}

SimplicialComplex SimplicialComplex::from_levels(std::size_t dim_cap,
                                                 std::vector<std::vector<Simplex>> levels)
{
    if (levels.size() > dim_cap + 1)
        throw InputError("simplices above the dimension cap");
    levels.resize(dim_cap + 1);
    for (auto& level : levels)
        std::sort(level.begin(), level.end());
    SimplicialComplex k;
    k.dim_cap_ = dim_cap;
    k.by_dim_ = std::move(levels);
    if (!k.is_valid())
        throw InputError("simplices do not form a valid complex");
    k.set_labels({});
    return k;
}

int SimplicialComplex::dimension() const noexcept
{
    for (std::size_t k = by_dim_.size(); k-- > 0;)
        if (!by_dim_[k].empty())
            return static_cast<int>(k);
    return -1;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t k) const
{
    return k < by_dim_.size() ? by_dim_[k] : kNoSimplices;
}

std::vector<std::size_t> SimplicialComplex::counts() const
{
    std::vector<std::size_t> out(dim_cap_ + 1, 0);
    for (std::size_t k = 0; k < by_dim_.size(); ++k)
        out[k] = by_dim_[k].size();
    return out;
}

std::size_t SimplicialComplex::size() const
{
    std::size_t n = 0;
    for (const auto& level : by_dim_)
        n += level.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    if (s.empty() || s.size() > by_dim_.size())
        return std::nullopt;
    const auto& level = by_dim_[s.size() - 1];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    return index_of(s).has_value();
}

void SimplicialComplex::set_labels(std::vector<std::string> labels)
{
    if (labels.empty()) {
        labels.reserve(vertex_count());
        for (std::size_t v = 0; v < vertex_count(); ++v)
            labels.push_back(std::to_string(v));
    }
    if (labels.size() != vertex_count())
        throw InputError("label count does not match vertex count");
    labels_ = std::move(labels);
}

bool SimplicialComplex::is_valid() const
{
    if (by_dim_.empty())
        return true;
    for (std::size_t v = 0; v < by_dim_[0].size(); ++v)
        if (by_dim_[0][v] != Simplex{static_cast<Vertex>(v)})
            return false;
    for (std::size_t k = 1; k < by_dim_.size(); ++k) {
        const auto& level = by_dim_[k];
        if (std::adjacent_find(level.begin(), level.end(), std::greater_equal<>()) != level.end())
            return false;
        for (const auto& s : level) {
            if (s.size() != k + 1 || !strictly_increasing(s))
                return false;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!contains(face))
                    return false;
            }
        }
    }
    return true;
}

SimplicialComplex vietoris_rips(const Graph& g, std::size_t dim_cap)
{
    std::vector<std::vector<Simplex>> levels(dim_cap + 1);
    Simplex prefix;
    for (Vertex v = 0; v < g.size(); ++v) {
        std::vector<Vertex> higher;
        for (Vertex w : g.neighbors(v))
            if (w > v)
                higher.push_back(w);
        prefix.assign(1, v);
        expand_cliques(g, dim_cap, prefix, higher, levels);
    }
    auto k = SimplicialComplex::from_levels(dim_cap, std::move(levels));
    k.set_labels(g.labels());
    return k;
}

Vertex Subdivision::vertex_for(const Simplex& carrier) const
{
    auto it = vertex_of.find(carrier);
    if (it == vertex_of.end())
        throw InputError("no subdivision vertex for carrier " + describe(carrier));
    return it->second;
}

namespace {

// Chains of faces strictly below `top`, each extended by `top`; `chain` holds
// the larger elements already chosen (top first).
void collect_chains(const Subdivision& sd, const Simplex& top, std::vector<Vertex>& chain,
                    std::size_t max_len, std::vector<std::vector<Simplex>>& levels)
{
    Simplex ordered(chain.rbegin(), chain.rend());
    levels[ordered.size() - 1].push_back(std::move(ordered));
    if (chain.size() >= max_len || top.size() == 1)
        return;
    const std::size_t n = top.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                face.push_back(top[i]);
        chain.push_back(sd.vertex_for(face));
        collect_chains(sd, face, chain, max_len, levels);
        chain.pop_back();
    }
}

}  // namespace

Subdivision barycentric_subdivision(const SimplicialComplex& k)
{
    Subdivision sd;
    for (std::size_t d = 0; d <= k.dim_cap(); ++d)
        for (const auto& s : k.simplices(d)) {
            sd.vertex_of.emplace(s, static_cast<Vertex>(sd.carriers.size()));
            sd.carriers.push_back(s);
        }

    std::vector<std::vector<Simplex>> levels(k.dim_cap() + 1);
    std::vector<Vertex> chain;
    for (Vertex top = 0; top < sd.carriers.size(); ++top) {
        chain.assign(1, top);
        collect_chains(sd, sd.carriers[top], chain, k.dim_cap() + 1, levels);
    }
    sd.complex = SimplicialComplex::from_levels(k.dim_cap(), std::move(levels));
    return sd;
}

std::vector<Simplex> faces_of(const Simplex& s)
{
    const std::size_t n = s.size();
    if (n > 20)
        throw InputError("simplex too large to enumerate faces");
    std::vector<Simplex> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                face.push_back(s[i]);
        out.push_back(std::move(face));
    }
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<Simplex> closed_star(const SimplicialComplex& k, Vertex v)
{
    if (v >= k.vertex_count())
        throw InputError("unknown vertex " + std::to_string(v));
    std::set<Simplex> star;
    for (std::size_t d = 0; d <= k.dim_cap(); ++d)
        for (const auto& s : k.simplices(d))
            if (std::binary_search(s.begin(), s.end(), v))
                for (auto& f : faces_of(s))
                    star.insert(std::move(f));
    std::vector<Simplex> out(star.begin(), star.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    return out;
}

SimplicialMap::SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                             std::vector<Vertex> vertex_images)
    : source_(&source), target_(&target), images_(std::move(vertex_images))
{
    if (images_.size() != source.vertex_count())
        throw InputError("vertex map is not total on the source complex");
    for (Vertex w : images_)
        if (w >= target.vertex_count())
            throw InputError("vertex image " + std::to_string(w) + " is not a target vertex");
}

Simplex SimplicialMap::image(const Simplex& s) const
{
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s)
        out.push_back(images_.at(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool check_simplicial(const SimplicialMap& m)
{
    for (std::size_t d = 0; d <= m.source().dim_cap(); ++d)
        for (const auto& s : m.source().simplices(d))
            if (!m.target().contains(m.image(s)))
                return false;
    return true;
}

bool check_star_condition(const std::vector<BaryPoint>& f_sample, const SimplicialMap& phi)
{
    if (f_sample.size() != phi.source().vertex_count())
        throw InputError("star-condition samples must cover every source vertex");
    bool ok = true;
    for (Vertex x = 0; x < f_sample.size(); ++x) {
        const auto& carrier = f_sample[x].carrier();
        if (!phi.target().contains(carrier))
            throw InputError("sample carrier " + describe(carrier) + " is not a target simplex");
        if (!std::binary_search(carrier.begin(), carrier.end(), phi(x)))
            ok = false;
    }
    return ok;
}

}  // namespace vrbridge
