#pragma once

/**
 * @file term.hpp
 * @brief Free-PROP syntax over the bimonoid generators.
 *
 * A term is an immutable tree. `seq(f, g)` is diagrammatic order: f runs
 * first, then g, so its matrix is eval(g) * eval(f). `par(f, g)` places f
 * above g on the wire stack. Terms are built unchecked; arity_of() is the
 * typechecker.
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigprop/error.hpp"
#include "rigprop/matrix.hpp"
#include "rigprop/rig.hpp"

namespace rigprop {

enum class term_kind { id, swap, mu, eta, delta, eps, scalar, seq, par };

struct arity {
    std::size_t dom = 0;
    std::size_t cod = 0;

    friend bool operator==(const arity&, const arity&) = default;
};

inline std::string to_string(const arity& a)
{
    return "(" + std::to_string(a.dom) + "," + std::to_string(a.cod) + ")";
}

template <rig R>
class term {
public:
    using value_type = value_t<R>;

    /// The empty diagram, id[0].
    term() : term(make(term_kind::id)) {}

    static term id(std::size_t wires) { return make(term_kind::id, wires); }
    static term swap() { return make(term_kind::swap); }
    static term mu() { return make(term_kind::mu); }
    static term eta() { return make(term_kind::eta); }
    static term delta() { return make(term_kind::delta); }
    static term eps() { return make(term_kind::eps); }

    static term scalar(value_type r) { return make(term_kind::scalar, 0, std::move(r)); }

    static term seq(term first, term second) { return binary(term_kind::seq, std::move(first), std::move(second)); }
    static term par(term left, term right) { return binary(term_kind::par, std::move(left), std::move(right)); }

    term_kind kind() const { return node_->kind; }
    bool is(term_kind k) const { return node_->kind == k; }
    bool is_binary() const { return is(term_kind::seq) || is(term_kind::par); }

    /// Wire count of an id node.
    std::size_t wires() const { return node_->wires; }
    /// Literal of a scalar node.
    const value_type& value() const { return *node_->value; }
    /// Children of seq/par nodes: 0 is first/left, 1 is second/right.
    const term& child(int which) const { return which == 0 ? *node_->first : *node_->second; }
    const term& first() const { return child(0); }
    const term& second() const { return child(1); }

    friend bool operator==(const term& a, const term& b)
    {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
        case term_kind::id: return a.wires() == b.wires();
        case term_kind::scalar: return a.value() == b.value();
        case term_kind::seq:
        case term_kind::par: return a.first() == b.first() && a.second() == b.second();
        default: return true;
        }
    }

private:
    struct node;

    explicit term(std::shared_ptr<const node> n) : node_(std::move(n)) {}

    static term make(term_kind k, std::size_t wires = 0, std::optional<value_type> value = std::nullopt)
    {
        auto n = std::make_shared<node>();
        n->kind = k;
        n->wires = wires;
        n->value = std::move(value);
        return term(std::shared_ptr<const node>(std::move(n)));
    }

    static term binary(term_kind k, term a, term b)
    {
        auto n = std::make_shared<node>();
        n->kind = k;
        n->first.emplace(std::move(a));
        n->second.emplace(std::move(b));
        return term(std::shared_ptr<const node>(std::move(n)));
    }

    std::shared_ptr<const node> node_;
};

template <rig R>
struct term<R>::node {
    term_kind kind = term_kind::id;
    std::size_t wires = 0;
    std::optional<value_type> value;
    std::optional<term> first;
    std::optional<term> second;
};

/// Anything shaped like a term tree: terms themselves and rewrite patterns.
template <class T>
concept diagram_tree = requires(const T& t, std::size_t n) {
    { t.kind() } -> std::same_as<term_kind>;
    { t.is(term_kind::id) } -> std::same_as<bool>;
    { t.is_binary() } -> std::same_as<bool>;
    { t.wires() } -> std::convertible_to<std::size_t>;
    { t.first() } -> std::convertible_to<const T&>;
    { t.second() } -> std::convertible_to<const T&>;
    { T::id(n) } -> std::same_as<T>;
    { T::seq(t, t) } -> std::same_as<T>;
    { T::par(t, t) } -> std::same_as<T>;
};

// ---------------------------------------------------------------------------
// Typechecking

inline arity generator_arity(term_kind k)
{
    switch (k) {
    case term_kind::swap: return {2, 2};
    case term_kind::mu: return {2, 1};
    case term_kind::eta: return {0, 1};
    case term_kind::delta: return {1, 2};
    case term_kind::eps: return {1, 0};
    case term_kind::scalar: return {1, 1};
    default: return {};
    }
}

namespace detail {

template <diagram_tree T>
arity arity_at(const T& t, term_path& path)
{
    switch (t.kind()) {
    case term_kind::id: return {t.wires(), t.wires()};
    case term_kind::seq: {
        path.push_back(0);
        const arity a = arity_at(t.first(), path);
        path.back() = 1;
        const arity b = arity_at(t.second(), path);
        path.pop_back();
        if (a.cod != b.dom)
            throw typecheck_error("sequential composition joins " + std::to_string(a.cod) + " outputs to " +
                                      std::to_string(b.dom) + " inputs",
                                  path);
        return {a.dom, b.cod};
    }
    case term_kind::par: {
        path.push_back(0);
        const arity a = arity_at(t.first(), path);
        path.back() = 1;
        const arity b = arity_at(t.second(), path);
        path.pop_back();
        return {a.dom + b.dom, a.cod + b.cod};
    }
    default: return generator_arity(t.kind());
    }
}

} // namespace detail

/// (inputs, outputs) of a term; throws typecheck_error naming the first
/// ill-composed seq node in left-to-right order.
template <diagram_tree T>
arity arity_of(const T& t)
{
    term_path path;
    return detail::arity_at(t, path);
}

template <rig R>
bool well_typed(const term<R>& t)
{
    try {
        arity_of(t);
        return true;
    } catch (const typecheck_error&) {
        return false;
    }
}

/// Number of generator occurrences (everything except id, seq, par).
template <rig R>
std::size_t generator_count(const term<R>& t)
{
    switch (t.kind()) {
    case term_kind::id: return 0;
    case term_kind::seq:
    case term_kind::par: return generator_count(t.first()) + generator_count(t.second());
    default: return 1;
    }
}

template <rig R>
std::size_t depth(const term<R>& t)
{
    if (!t.is_binary()) return 0;
    return 1 + std::max(depth(t.first()), depth(t.second()));
}

// ---------------------------------------------------------------------------
// Chains and strict normal form

/// Right-nested seq of the stages, dropping identity stages. With nothing
/// left the result is id[dom].
template <diagram_tree T>
T seq_all(std::vector<T> stages, std::size_t dom)
{
    std::erase_if(stages, [](const T& s) { return s.is(term_kind::id); });
    if (stages.empty()) return T::id(dom);
    T out = stages.back();
    for (std::size_t k = stages.size() - 1; k-- > 0;) out = T::seq(stages[k], out);
    return out;
}

/// Right-nested par of the blocks, dropping id[0] blocks.
template <diagram_tree T>
T par_all(std::vector<T> blocks)
{
    std::erase_if(blocks, [](const T& b) { return b.is(term_kind::id) && b.wires() == 0; });
    if (blocks.empty()) return T::id(0);
    T out = blocks.back();
    for (std::size_t k = blocks.size() - 1; k-- > 0;) out = T::par(blocks[k], out);
    return out;
}

template <diagram_tree T>
T par_power(const T& block, std::size_t copies)
{
    return par_all(std::vector<T>(copies, block));
}

/// Elements of a seq (or par) chain, reading through nested nodes of the same kind.
template <diagram_tree T>
void chain_elements(const T& t, term_kind kind, std::vector<T>& out)
{
    if (t.is(kind)) {
        chain_elements(t.first(), kind, out);
        chain_elements(t.second(), kind, out);
    } else {
        out.push_back(t);
    }
}

/// Re-nests every seq and par chain to the right without changing anything else.
template <diagram_tree T>
T right_nest(const T& t)
{
    if (!t.is_binary()) return t;
    std::vector<T> parts;
    chain_elements(t, t.kind(), parts);
    T out = right_nest(parts.back());
    for (std::size_t k = parts.size() - 1; k-- > 0;)
        out = t.is(term_kind::seq) ? T::seq(right_nest(parts[k]), out) : T::par(right_nest(parts[k]), out);
    return out;
}

namespace detail {

template <diagram_tree T>
T strictify_node(const T& t)
{
    switch (t.kind()) {
    case term_kind::seq: {
        std::vector<T> parts;
        chain_elements(strictify_node(t.first()), term_kind::seq, parts);
        chain_elements(strictify_node(t.second()), term_kind::seq, parts);
        std::erase_if(parts, [](const T& s) { return s.is(term_kind::id); });
        if (parts.empty()) return T::id(arity_of(t).dom);
        return seq_all(std::move(parts), 0);
    }
    case term_kind::par: {
        std::vector<T> raw;
        chain_elements(strictify_node(t.first()), term_kind::par, raw);
        chain_elements(strictify_node(t.second()), term_kind::par, raw);
        std::vector<T> parts;
        bool all_wires = true;
        for (const auto& p : raw) {
            if (p.is(term_kind::id)) {
                for (std::size_t k = 0; k < p.wires(); ++k) parts.push_back(T::id(1));
            } else {
                all_wires = false;
                parts.push_back(p);
            }
        }
        if (all_wires) return T::id(parts.size());
        return par_all(std::move(parts));
    }
    default: return t;
    }
}

} // namespace detail

/**
 * Normal form modulo the strict monoidal structure: seq and par chains are
 * right-nested, identity stages vanish from seq chains, id[n] inside a par
 * chain becomes n copies of id[1], and a par of plain wires collapses to a
 * single id. Requires a well-typed term.
 */
template <diagram_tree T>
T strictify(const T& t)
{
    arity_of(t);
    return detail::strictify_node(t);
}

// ---------------------------------------------------------------------------
// Addressing

template <diagram_tree T>
const T& subterm(const T& t, const term_path& path)
{
    const T* at = &t;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (!at->is_binary() || (path[k] != 0 && path[k] != 1))
            throw path_error("path " + format_path(path) + " leaves the term at step " + std::to_string(k));
        at = &at->child(path[k]);
    }
    return *at;
}

template <diagram_tree T>
T replace_subterm(const T& t, const term_path& path, const T& replacement, std::size_t from = 0)
{
    if (from == path.size()) return replacement;
    if (!t.is_binary() || (path[from] != 0 && path[from] != 1))
        throw path_error("path " + format_path(path) + " leaves the term at step " + std::to_string(from));
    const T a = path[from] == 0 ? replace_subterm(t.first(), path, replacement, from + 1) : t.first();
    const T b = path[from] == 1 ? replace_subterm(t.second(), path, replacement, from + 1) : t.second();
    return t.is(term_kind::seq) ? T::seq(a, b) : T::par(a, b);
}

/// Every node position in post-order (children left to right, then parent).
template <diagram_tree T>
void postorder_paths(const T& t, term_path& prefix, std::vector<term_path>& out)
{
    if (t.is_binary()) {
        prefix.push_back(0);
        postorder_paths(t.first(), prefix, out);
        prefix.back() = 1;
        postorder_paths(t.second(), prefix, out);
        prefix.pop_back();
    }
    out.push_back(prefix);
}

template <diagram_tree T>
std::vector<term_path> postorder_paths(const T& t)
{
    std::vector<term_path> out;
    term_path prefix;
    postorder_paths(t, prefix, out);
    return out;
}

// ---------------------------------------------------------------------------
// Derived combinators

/// n-ary multiplication, right-nested: mu^0 = eta, mu^{n+1} = mu (1 (x) mu^n).
template <rig R>
term<R> mu_n(std::size_t n)
{
    term<R> out = term<R>::eta();
    for (std::size_t k = 0; k < n; ++k) out = term<R>::seq(term<R>::par(term<R>::id(1), out), term<R>::mu());
    return out;
}

/// n-ary comultiplication: delta^0 = eps, delta^{n+1} = (1 (x) delta^n) delta.
template <rig R>
term<R> delta_n(std::size_t n)
{
    term<R> out = term<R>::eps();
    for (std::size_t k = 0; k < n; ++k) out = term<R>::seq(term<R>::delta(), term<R>::par(term<R>::id(1), out));
    return out;
}

/// Swap of wires at positions i, i+1 inside a bundle of `width` wires.
template <rig R>
term<R> adjacent_swap(std::size_t i, std::size_t width)
{
    return par_all<term<R>>({term<R>::id(i), term<R>::swap(), term<R>::id(width - i - 2)});
}

/**
 * Swap network realizing a permutation: input wire k ends on output wire
 * perm[k]. Built by bubble sort, one adjacent transposition per stage, so
 * the same permutation always yields the same term.
 */
template <rig R>
term<R> perm_term(const std::vector<std::size_t>& perm)
{
    const std::size_t width = perm.size();
    std::vector<bool> seen(width, false);
    for (auto p : perm) {
        if (p >= width || seen[p]) throw precondition_error("perm_term needs a bijection on 0.." + std::to_string(width));
        seen[p] = true;
    }
    std::vector<std::size_t> labels = perm;
    std::vector<term<R>> stages;
    for (std::size_t pass = 0; pass < width; ++pass) {
        bool swapped = false;
        for (std::size_t i = 0; i + 1 < width; ++i) {
            if (labels[i] > labels[i + 1]) {
                std::swap(labels[i], labels[i + 1]);
                stages.push_back(adjacent_swap<R>(i, width));
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    return seq_all(std::move(stages), width);
}

/// Riffle on 2n wires: (a1..an, b1..bn) -> (a1, b1, .., an, bn).
inline std::vector<std::size_t> riffle(std::size_t n)
{
    std::vector<std::size_t> perm(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        perm[k] = 2 * k;
        perm[n + k] = 2 * k + 1;
    }
    return perm;
}

inline std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& perm)
{
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
    return inv;
}

/// Multiplication of the n-fold tensor bimonoid: riffle, then mu on each pair.
template <rig R>
term<R> bundle_mu(std::size_t n)
{
    return seq_all<term<R>>({perm_term<R>(riffle(n)), par_power(term<R>::mu(), n)}, 2 * n);
}

/// Comultiplication of the n-fold tensor bimonoid: delta on each wire, then unriffle.
template <rig R>
term<R> bundle_delta(std::size_t n)
{
    return seq_all<term<R>>({par_power(term<R>::delta(), n), perm_term<R>(inverse_permutation(riffle(n)))}, n);
}

/// Zero morphism of the given arity: discard every input, create every output.
template <rig R>
term<R> zero_term(arity a)
{
    return seq_all<term<R>>({par_power(term<R>::eps(), a.dom), par_power(term<R>::eta(), a.cod)}, a.dom);
}

/// Enriched sum f + g: copy the inputs, run f and g side by side, merge outputs.
template <rig R>
term<R> add_terms(const term<R>& f, const term<R>& g)
{
    const arity a = arity_of(f);
    const arity b = arity_of(g);
    if (a != b) throw shape_error("cannot add terms of arity " + to_string(a) + " and " + to_string(b));
    return seq_all<term<R>>({bundle_delta<R>(a.dom), term<R>::par(f, g), bundle_mu<R>(a.cod)}, a.dom);
}

} // namespace rigprop
