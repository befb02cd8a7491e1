#include <doctest.h>

#include <random>

#include "vrbridge/closure.hpp"
#include "vrbridge/error.hpp"
#include "vrbridge/graph.hpp"

using namespace vrbridge;
using PS = ClosureSpace::PointSet;

namespace {

ClosureSpace c4()
{
    return canonical_closure(cycle_graph(4));
}

// Random closure space: x ∈ cl(x) plus each other point with probability p.
ClosureSpace random_space(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<PS> cl(n);
    for (std::size_t x = 0; x < n; ++x) {
        cl[x].insert(x);
        for (std::size_t y = 0; y < n; ++y)
            if (coin(rng))
                cl[x].insert(y);
    }
    return ClosureSpace(cl);
}

PS subset_of(std::size_t mask, std::size_t n)
{
    PS s;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
            s.insert(i);
    return s;
}

// f(c(A)) ⊆ c'(f(A)) over every subset A.
bool continuous_by_subsets(const PointMap& f)
{
    const std::size_t n = f.domain().size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        PS a = subset_of(mask, n);
        PS lhs = f.image(f.domain().closure(a));
        PS rhs = f.codomain().closure(f.image(a));
        for (auto y : lhs)
            if (!rhs.count(y))
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("closure of subsets of the 4-cycle")
{
    const auto x = c4();
    CHECK(x.closure({0}) == PS{3, 0, 1});
    CHECK(x.closure({}).empty());
    CHECK(x.closure({0, 2}) == PS{0, 1, 2, 3});
    CHECK_THROWS_AS(x.closure({4}), InputError);
}

TEST_CASE("neighborhoods in the 4-cycle")
{
    const auto x = c4();
    CHECK(x.is_neighborhood({3, 0, 1}, 0));
    CHECK_FALSE(x.is_neighborhood({0}, 0));
    for (std::size_t p = 0; p < 4; ++p)
        CHECK(x.is_neighborhood(x.points(), p));
    CHECK(x.minimal_neighborhood(0) == PS{3, 0, 1});
    CHECK_THROWS_AS(x.is_neighborhood({0}, 7), InputError);
}

TEST_CASE("continuity examples on the 4-cycle")
{
    const auto x = c4();
    CHECK(is_continuous(PointMap(x, x, {0, 1, 2, 3})));
    CHECK_FALSE(is_continuous(PointMap(x, x, {0, 2, 0, 2})));
    CHECK(is_continuous(PointMap(x, x, {2, 2, 2, 2})));
}

TEST_CASE("malformed spaces and maps are rejected")
{
    CHECK_THROWS_AS(ClosureSpace({PS{1}, PS{1}}), InputError);
    CHECK_THROWS_AS(ClosureSpace({PS{0, 5}}), InputError);
    const auto x = c4();
    CHECK_THROWS_AS(PointMap(x, x, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(PointMap(x, x, {0, 1, 2, 9}), InputError);
    const auto y = c4();
    PointMap f(x, x, {0, 1, 2, 3});
    PointMap g(y, y, {0, 1, 2, 3});
    CHECK_THROWS_AS(compose(g, f), InputError);
}

TEST_CASE("closure axioms on random subsets")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const auto x = random_space(rng, n, 0.3);
        for (int k = 0; k < 20; ++k) {
            const PS a = subset_of(rng() % (1u << n), n);
            const PS b = subset_of(rng() % (1u << n), n);
            PS ab = a;
            ab.insert(b.begin(), b.end());
            PS ca = x.closure(a), cb = x.closure(b);
            PS union_of = ca;
            union_of.insert(cb.begin(), cb.end());
            CHECK(x.closure(ab) == union_of);
            for (auto p : a)
                CHECK(ca.count(p));
        }
    }
}

TEST_CASE("singleton continuity check agrees with the all-subsets definition")
{
    std::mt19937_64 rng(12);
    int continuous = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 8, m = 1 + rng() % 8;
        const auto x = random_space(rng, n, 0.35);
        const auto y = random_space(rng, m, 0.35);
        std::vector<std::size_t> values(n);
        for (auto& v : values)
            v = rng() % m;
        PointMap f(x, y, values);
        CHECK(is_continuous(f) == continuous_by_subsets(f));
        continuous += is_continuous(f);
    }
    CHECK(continuous > 10);
}

TEST_CASE("composites of continuous maps are continuous")
{
    std::mt19937_64 rng(13);
    int composed = 0;
    for (int trial = 0; trial < 3000 && composed < 100; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const auto x = random_space(rng, n, 0.3);
        const auto y = random_space(rng, 1 + rng() % 6, 0.5);
        const auto z = random_space(rng, 1 + rng() % 6, 0.5);
        std::vector<std::size_t> fv(x.size()), gv(y.size());
        for (auto& v : fv)
            v = rng() % y.size();
        for (auto& v : gv)
            v = rng() % z.size();
        PointMap f(x, y, fv), g(y, z, gv);
        if (!is_continuous(f) || !is_continuous(g))
            continue;
        ++composed;
        PointMap h = compose(g, f);
        CHECK(is_continuous(h));
        CHECK(continuous_by_subsets(h));
    }
    CHECK(composed == 100);
}

TEST_CASE("neighborhoods are monotone")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const auto x = random_space(rng, n, 0.3);
        const PS u = subset_of(rng() % (1u << n), n);
        PS bigger = u;
        bigger.insert(rng() % n);
        for (std::size_t p = 0; p < n; ++p) {
            if (x.is_neighborhood(u, p))
                CHECK(x.is_neighborhood(bigger, p));
            // The minimal neighborhood is a neighborhood contained in every other.
            CHECK(x.is_neighborhood(x.minimal_neighborhood(p), p));
            if (x.is_neighborhood(u, p))
                for (auto q : x.minimal_neighborhood(p))
                    CHECK(u.count(q));
        }
    }
}
