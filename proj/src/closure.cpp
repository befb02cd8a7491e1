#include "vrbridge/closure.hpp"

#include <algorithm>
#include <string>

#include "vrbridge/error.hpp"

namespace vrbridge {

ClosureSpace::ClosureSpace(std::vector<PointSet> singleton_closures)
    : cl1_(std::move(singleton_closures))
{
    for (Point x = 0; x < cl1_.size(); ++x) {
        if (!cl1_[x].contains(x))
            throw InputError("closure of point " + std::to_string(x) + " does not contain it");
        if (!cl1_[x].empty() && *cl1_[x].rbegin() >= cl1_.size())
            throw InputError("closure of point " + std::to_string(x) + " leaves the space");
    }
}

ClosureSpace::PointSet ClosureSpace::points() const
{
    PointSet all;
    for (Point x = 0; x < size(); ++x)
        all.insert(all.end(), x);
    return all;
}

void ClosureSpace::check_point(Point x) const
{
    if (x >= size())
        throw InputError("unknown point " + std::to_string(x));
}

void ClosureSpace::check_set(const PointSet& a) const
{
    if (!a.empty())
        check_point(*a.rbegin());
}

const ClosureSpace::PointSet& ClosureSpace::closure_of(Point x) const
{
    check_point(x);
    return cl1_[x];
}

ClosureSpace::PointSet ClosureSpace::closure(const PointSet& a) const
{
    check_set(a);
    PointSet out;
    for (Point x : a)
        out.insert(cl1_[x].begin(), cl1_[x].end());
    return out;
}

bool ClosureSpace::is_neighborhood(const PointSet& u, Point x) const
{
    check_set(u);
    check_point(x);
    PointSet complement;
    for (Point y = 0; y < size(); ++y)
        if (!u.contains(y))
            complement.insert(complement.end(), y);
    return !closure(complement).contains(x);
}

ClosureSpace::PointSet ClosureSpace::minimal_neighborhood(Point x) const
{
    check_point(x);
    PointSet out;
    for (Point y = 0; y < size(); ++y)
        if (cl1_[y].contains(x))
            out.insert(out.end(), y);
    return out;
}

bool ClosureSpace::is_symmetric() const
{
    for (Point x = 0; x < size(); ++x)
        for (Point y : cl1_[x])
            if (!cl1_[y].contains(x))
                return false;
    return true;
}

PointMap::PointMap(const ClosureSpace& domain, const ClosureSpace& codomain,
                   std::vector<ClosureSpace::Point> values)
    : domain_(domain), codomain_(codomain), values_(std::move(values))
{
    if (values_.size() != domain.size())
        throw InputError("point map is not total: " + std::to_string(values_.size()) +
                         " values for " + std::to_string(domain.size()) + " points");
    for (auto v : values_)
        if (v >= codomain.size())
            throw InputError("point map value " + std::to_string(v) + " outside codomain");
}

ClosureSpace::Point PointMap::operator()(ClosureSpace::Point x) const
{
    if (x >= values_.size())
        throw InputError("unknown point " + std::to_string(x));
    return values_[x];
}

ClosureSpace::PointSet PointMap::image(const ClosureSpace::PointSet& a) const
{
    ClosureSpace::PointSet out;
    for (auto x : a)
        out.insert((*this)(x));
    return out;
}

bool is_continuous(const PointMap& f)
{
    const auto& dom = f.domain();
    const auto& cod = f.codomain();
    for (ClosureSpace::Point x = 0; x < dom.size(); ++x) {
        const auto& target = cod.closure_of(f(x));
        for (auto y : dom.closure_of(x))
            if (!target.contains(f(y)))
                return false;
    }
    return true;
}

PointMap compose(const PointMap& g, const PointMap& f)
{
    if (&f.codomain() != &g.domain())
        throw InputError("cannot compose: codomain of the inner map is not the domain of the outer map");
    std::vector<ClosureSpace::Point> values(f.values().size());
    std::transform(f.values().begin(), f.values().end(), values.begin(),
                   [&](auto v) { return g(v); });
    return PointMap(f.domain(), g.codomain(), std::move(values));
}

}  // namespace vrbridge
