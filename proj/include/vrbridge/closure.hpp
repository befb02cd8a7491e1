#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

namespace vrbridge {

/**
 * A finite Čech closure space.
 *
 * Points are the integers 0..size()-1; their order is the total order used for
 * every tie-break downstream. The closure operator is additive, so it is
 * stored only on singletons and extended by unions.
 */
class ClosureSpace {
  public:
    using Point = std::size_t;
    using PointSet = std::set<Point>;

    ClosureSpace() = default;

    /// Throws InputError unless x ∈ cl(x) and every closure stays in range.
    explicit ClosureSpace(std::vector<PointSet> singleton_closures);

    std::size_t size() const noexcept { return cl1_.size(); }
    PointSet points() const;

    const PointSet& closure_of(Point x) const;

    /// Union of singleton closures; the empty set is closed.
    PointSet closure(const PointSet& a) const;

    /// x ∈ X \ c(X \ U).
    bool is_neighborhood(const PointSet& u, Point x) const;

    /// {y : x ∈ cl(y)}: the smallest neighborhood of x.
    PointSet minimal_neighborhood(Point x) const;

    bool is_symmetric() const;

  private:
    void check_point(Point x) const;
    void check_set(const PointSet& a) const;

    std::vector<PointSet> cl1_;
};

/// A total function between two closure spaces. Both spaces must outlive it.
class PointMap {
  public:
    PointMap(const ClosureSpace& domain, const ClosureSpace& codomain,
             std::vector<ClosureSpace::Point> values);

    const ClosureSpace& domain() const noexcept { return domain_.get(); }
    const ClosureSpace& codomain() const noexcept { return codomain_.get(); }
    const std::vector<ClosureSpace::Point>& values() const noexcept { return values_; }
    ClosureSpace::Point operator()(ClosureSpace::Point x) const;

    ClosureSpace::PointSet image(const ClosureSpace::PointSet& a) const;

  private:
    std::reference_wrapper<const ClosureSpace> domain_;
    std::reference_wrapper<const ClosureSpace> codomain_;
    std::vector<ClosureSpace::Point> values_;
};

/// f(cl(x)) ⊆ cl'(f(x)) for every x; by additivity this is f(c(A)) ⊆ c'(f(A)) for all A.
bool is_continuous(const PointMap& f);

/// g ∘ f. Throws InputError if f's codomain is not g's domain.
PointMap compose(const PointMap& g, const PointMap& f);

}  // namespace vrbridge
