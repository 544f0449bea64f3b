#pragma once

// Seeded random instances for property tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "rigprop.hpp"

namespace rigprop::testing {

class gen {
public:
    explicit gen(std::uint64_t seed = 20240601) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::size_t size(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        std::shuffle(v.begin(), v.end(), rng_);
    }

private:
    std::mt19937_64 rng_;
};

inline big_rational random_rational(gen& g, bool nonneg)
{
    const int p = nonneg ? g.uniform(0, 12) : g.uniform(-12, 12);
    return big_rational(p, g.uniform(1, 6));
}

inline polynomial random_polynomial(gen& g, std::size_t max_degree)
{
    std::vector<big_rational> c;
    const std::size_t deg = g.size(0, max_degree);
    for (std::size_t k = 0; k <= deg; ++k) c.push_back(g.coin(0.3) ? big_rational(0) : random_rational(g, false));
    return polynomial(std::move(c));
}

/// Small values mostly, with the occasional large integer so overflow would show.
template <rig R>
value_t<R> random_value(gen& g)
{
    if constexpr (std::is_same_v<R, boolean_rig> || std::is_same_v<R, f2_rig>) {
        return bit{g.coin()};
    } else if constexpr (std::is_same_v<R, natural_rig>) {
        if (g.coin(0.05)) return big_int(1) << g.uniform(64, 90);
        return big_int(g.uniform(0, 9));
    } else if constexpr (std::is_same_v<R, integer_rig>) {
        if (g.coin(0.05)) return (big_int(1) << g.uniform(64, 90)) * (g.coin() ? 1 : -1);
        return big_int(g.uniform(-9, 9));
    } else if constexpr (std::is_same_v<R, rational_rig>) {
        return random_rational(g, false);
    } else if constexpr (std::is_same_v<R, nonneg_rational_rig>) {
        return random_rational(g, true);
    } else {
        static_assert(std::is_same_v<R, rational_function_rig>);
        if (g.coin(0.2)) return rational_function::constant(random_rational(g, false));
        polynomial den = random_polynomial(g, 2);
        while (den.is_zero()) den = random_polynomial(g, 2);
        return rational_function(random_polynomial(g, 2), den);
    }
}

template <rig R>
matrix<R> random_matrix(gen& g, std::size_t cod, std::size_t dom)
{
    matrix<R> m(cod, dom);
    for (std::size_t i = 0; i < cod; ++i)
        for (std::size_t j = 0; j < dom; ++j) m(i, j) = random_value<R>(g);
    return m;
}

template <rig R>
matrix<R> random_matrix(gen& g, std::size_t max_side = 4)
{
    const std::size_t cod = g.size(0, max_side);
    const std::size_t dom = g.size(0, max_side);
    return random_matrix<R>(g, cod, dom);
}

inline std::vector<std::size_t> random_permutation(gen& g, std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    g.shuffle(p);
    return p;
}

namespace detail {

/// A term of exactly the requested shape built only from generators and par.
template <rig R>
term<R> shaped_leaf(gen& g, std::size_t dom, std::size_t cod)
{
    using T = term<R>;
    if (dom == 0 && cod == 0) return T::id(0);
    if (dom == 2 && cod == 1) return T::mu();
    if (dom == 1 && cod == 2) return T::delta();
    if (dom == 0 && cod == 1) return T::eta();
    if (dom == 1 && cod == 0) return T::eps();
    if (dom == 2 && cod == 2 && g.coin()) return g.coin() ? T::swap() : T::id(2);
    if (dom == 1 && cod == 1) return g.coin(0.7) ? T::scalar(random_value<R>(g)) : T::id(1);
    if (dom == 0) return T::par(T::eta(), shaped_leaf<R>(g, 0, cod - 1));
    if (cod == 0) return T::par(T::eps(), shaped_leaf<R>(g, dom - 1, 0));
    if (dom > cod) return T::par(T::mu(), shaped_leaf<R>(g, dom - 2, cod - 1));
    if (cod > dom) return T::par(T::delta(), shaped_leaf<R>(g, dom - 1, cod - 2));
    return T::par(shaped_leaf<R>(g, 1, 1), shaped_leaf<R>(g, dom - 1, cod - 1));
}

} // namespace detail

/// Random well-typed term of the given shape; nesting depth at most `depth` plus the leaf height.
template <rig R>
term<R> random_term(gen& g, std::size_t dom, std::size_t cod, std::size_t depth)
{
    using T = term<R>;
    if (depth == 0 || g.coin(0.2)) return detail::shaped_leaf<R>(g, dom, cod);
    if (g.coin(0.55)) {
        const std::size_t mid = g.size(0, 3);
        return T::seq(random_term<R>(g, dom, mid, depth - 1), random_term<R>(g, mid, cod, depth - 1));
    }
    const std::size_t d1 = g.size(0, dom);
    const std::size_t c1 = g.size(0, cod);
    return T::par(random_term<R>(g, d1, c1, depth - 1), random_term<R>(g, dom - d1, cod - c1, depth - 1));
}

/// Random term with depth(t) <= max_depth, shape drawn from [0, max_side]^2.
template <rig R>
term<R> random_term(gen& g, std::size_t max_depth = 6, std::size_t max_side = 3)
{
    while (true) {
        const std::size_t dom = g.size(0, max_side);
        const std::size_t cod = g.size(0, max_side);
        term<R> t = random_term<R>(g, dom, cod, 3);
        if (depth(t) <= max_depth) return t;
    }
}

template <rig R>
term<R> random_term_shaped(gen& g, std::size_t dom, std::size_t cod, std::size_t max_depth = 6)
{
    while (true) {
        term<R> t = random_term<R>(g, dom, cod, 3);
        if (depth(t) <= max_depth) return t;
    }
}

inline relation random_relation(gen& g, std::size_t dom, std::size_t cod, double density = 0.4)
{
    relation r{dom, cod, {}};
    for (std::size_t i = 0; i < dom; ++i)
        for (std::size_t j = 0; j < cod; ++j)
            if (g.coin(density)) r.pairs.emplace(i, j);
    return r;
}

inline span random_span(gen& g, std::size_t dom, std::size_t cod, std::size_t apex)
{
    span s{dom, cod, {}, {}};
    for (std::size_t a = 0; a < apex; ++a) {
        // Legs into an empty set only exist over an empty apex.
        if (dom == 0 || cod == 0) return {dom, cod, {}, {}};
        s.left.push_back(g.size(0, dom - 1));
        s.right.push_back(g.size(0, cod - 1));
    }
    return s;
}

} // namespace rigprop::testing
