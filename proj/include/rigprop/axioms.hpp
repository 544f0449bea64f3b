#pragma once

/**
 * @file axioms.hpp
 * @brief The defining equations as named term pairs, checked through eval.
 */

#include <string>
#include <vector>

#include "rigprop/rig.hpp"
#include "rigprop/semantics.hpp"
#include "rigprop/term.hpp"

namespace rigprop {

struct check_result {
    std::string name;
    bool passed = false;
};

template <rig R>
struct law {
    std::string name;
    term<R> lhs;
    term<R> rhs;

    bool holds() const { return eval(lhs) == eval(rhs); }
};

/// Monoid, comonoid and compatibility laws of a bicommutative bimonoid.
template <rig R>
std::vector<law<R>> bimonoid_laws()
{
    using T = term<R>;
    const T id1 = T::id(1);
    const T mu = T::mu(), eta = T::eta(), delta = T::delta(), eps = T::eps(), swap = T::swap();
    return {
        {"unit", T::seq(T::par(eta, id1), mu), id1},
        {"assoc", T::seq(T::par(mu, id1), mu), T::seq(T::par(id1, mu), mu)},
        {"comm", T::seq(swap, mu), mu},
        {"counit", T::seq(delta, T::par(eps, id1)), id1},
        {"coassoc", T::seq(delta, T::par(delta, id1)), T::seq(delta, T::par(id1, delta))},
        {"cocomm", T::seq(delta, swap), delta},
        {"bimonoid", T::seq(mu, delta),
         seq_all<T>({T::par(delta, delta), par_all<T>({id1, swap, id1}), T::par(mu, mu)}, 2)},
        {"unit-copy", T::seq(eta, delta), T::par(eta, eta)},
        {"counit-merge", T::seq(mu, eps), T::par(eps, eps)},
        {"unit-counit", T::seq(eta, eps), T::id(0)},
    };
}

/// Scalar laws at the given pair: sum, product, one and zero.
template <rig R>
std::vector<law<R>> scalar_laws(const value_t<R>& r, const value_t<R>& s)
{
    using T = term<R>;
    return {
        {"phi-sum", add_terms(T::scalar(r), T::scalar(s)), T::scalar(R::add(r, s))},
        {"phi-product", T::seq(T::scalar(r), T::scalar(s)), T::scalar(R::mul(s, r))},
        {"phi-one", T::scalar(R::one()), T::id(1)},
        {"phi-zero", T::scalar(R::zero()), T::seq(T::eps(), T::eta())},
    };
}

template <rig R>
std::vector<check_result> check_laws(const std::vector<law<R>>& laws)
{
    std::vector<check_result> out;
    for (const auto& l : laws) out.push_back({l.name, l.holds()});
    return out;
}

} // namespace rigprop
