#pragma once

/**
 * @file semantics.hpp
 * @brief Terms to matrices and back.
 *
 * eval() is the strict monoidal functor from the free PROP on the bimonoid
 * generators into Mat(R). decompose() is a section of it: every matrix comes
 * back as a canonical split / scale / permute / merge diagram. Since Mat(R)
 * is presented by the bimonoid and scalar relations, two terms are equivalent
 * exactly when their matrices agree, which is what equal_terms() checks.
 */

#include <cstddef>
#include <vector>

#include "rigprop/error.hpp"
#include "rigprop/matrix.hpp"
#include "rigprop/rig.hpp"
#include "rigprop/term.hpp"

namespace rigprop {

/// Evaluation target rig plus the action of the term's literals on it.
template <rig Src, rig Dst = Src>
struct eval_context {
    rig_hom<Src, Dst> scalar_action;
};

template <rig R>
eval_context<R, R> default_context()
{
    return {identity_hom<R>()};
}

namespace detail {

template <rig Src, rig Dst>
matrix<Dst> eval_checked(const term<Src>& t, const eval_context<Src, Dst>& ctx)
{
    switch (t.kind()) {
    case term_kind::id: return identity<Dst>(t.wires());
    case term_kind::swap: return symmetry<Dst>(1, 1);
    case term_kind::mu: return generator_matrix<Dst>(generator::mu);
    case term_kind::eta: return generator_matrix<Dst>(generator::eta);
    case term_kind::delta: return generator_matrix<Dst>(generator::delta);
    case term_kind::eps: return generator_matrix<Dst>(generator::eps);
    case term_kind::scalar: return scalar_matrix<Dst>(ctx.scalar_action(t.value()));
    case term_kind::seq: return compose(eval_checked(t.second(), ctx), eval_checked(t.first(), ctx));
    case term_kind::par: return tensor(eval_checked(t.first(), ctx), eval_checked(t.second(), ctx));
    }
    return {};
}

} // namespace detail

/// Matrix denoted by a term. seq(f, g) maps to eval(g) * eval(f) and par to
/// the block-diagonal sum; typecheck errors surface before any arithmetic.
template <rig Src, rig Dst>
matrix<Dst> eval(const term<Src>& t, const eval_context<Src, Dst>& ctx)
{
    arity_of(t);
    return detail::eval_checked(t, ctx);
}

template <rig R>
matrix<R> eval(const term<R>& t)
{
    return eval(t, default_context<R>());
}

/// Riffle used by decompose: copy i of input j starts at position j*cod + i
/// and ends at position i*dom + j.
inline std::vector<std::size_t> decompose_routing(std::size_t cod, std::size_t dom)
{
    std::vector<std::size_t> perm(cod * dom);
    for (std::size_t j = 0; j < dom; ++j)
        for (std::size_t i = 0; i < cod; ++i) perm[j * cod + i] = i * dom + j;
    return perm;
}

/**
 * Canonical diagram for a matrix M : dom -> cod. Input j fans out with
 * delta_n(cod), copy i carries scalar M(i, j), the riffle routes copy (j, i)
 * to slot (i, j), and output i merges its dom slots with mu_n(dom).
 *
 * Stages that are plain identities (an empty fan-out, a trivial routing)
 * are omitted; scalars are always emitted, including 0 and 1.
 */
template <rig R>
term<R> decompose(const matrix<R>& m)
{
    const std::size_t cod = m.cod();
    const std::size_t dom = m.dom();

    std::vector<term<R>> fan_outs(dom, delta_n<R>(cod));
    std::vector<term<R>> scalars;
    scalars.reserve(cod * dom);
    for (std::size_t j = 0; j < dom; ++j)
        for (std::size_t i = 0; i < cod; ++i) scalars.push_back(term<R>::scalar(m(i, j)));
    std::vector<term<R>> merges(cod, mu_n<R>(dom));

    return seq_all<term<R>>({par_all(std::move(fan_outs)), par_all(std::move(scalars)),
                       perm_term<R>(decompose_routing(cod, dom)), par_all(std::move(merges))},
                      dom);
}

/// Equivalence of diagrams, decided through their matrices.
template <rig Src, rig Dst>
bool equal_terms(const term<Src>& s, const term<Src>& t, const eval_context<Src, Dst>& ctx)
{
    const arity a = arity_of(s);
    const arity b = arity_of(t);
    if (a != b) throw not_comparable("terms of arity " + to_string(a) + " and " + to_string(b) + " are not comparable");
    return eval(s, ctx) == eval(t, ctx);
}

template <rig R>
bool equal_terms(const term<R>& s, const term<R>& t)
{
    return equal_terms(s, t, default_context<R>());
}

/// Canonical representative of a term's equivalence class.
template <rig Src, rig Dst>
term<Dst> normalize(const term<Src>& t, const eval_context<Src, Dst>& ctx)
{
    return decompose(eval(t, ctx));
}

template <rig R>
term<R> normalize(const term<R>& t)
{
    return decompose(eval(t));
}

} // namespace rigprop
