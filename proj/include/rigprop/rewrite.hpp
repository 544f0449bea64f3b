#pragma once

/**
 * @file rewrite.hpp
 * @brief The bimonoid and scalar relations as directed rewrite rules.
 *
 * Rules are matched syntactically against terms in strict normal form (see
 * strictify()). A rule whose left side is a chain of k stages also matches
 * the first k stages of a longer chain; since every suffix of a right-nested
 * chain is itself a node, this reaches every contiguous window.
 *
 * The engine exhibits derivations. It is not a decision procedure:
 * equivalence is decided by equal_terms().
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigprop/error.hpp"
#include "rigprop/rig.hpp"
#include "rigprop/term.hpp"
#include "rigprop/term_lang.hpp"

namespace rigprop {

// ---------------------------------------------------------------------------
// Patterns

/// Scalar slot of a pattern: a variable, a constant, or (right sides only)
/// a sum or product of other slots.
template <rig R>
struct scalar_expr {
    enum class op { variable, constant, sum, product };

    op kind = op::constant;
    std::string name;
    value_t<R> value = R::zero();
    std::vector<scalar_expr> args;

    static scalar_expr var(std::string n) { return {op::variable, std::move(n), R::zero(), {}}; }
    static scalar_expr lit(value_t<R> v) { return {op::constant, {}, std::move(v), {}}; }
    static scalar_expr plus(scalar_expr a, scalar_expr b) { return {op::sum, {}, R::zero(), {std::move(a), std::move(b)}}; }
    static scalar_expr times(scalar_expr a, scalar_expr b)
    {
        return {op::product, {}, R::zero(), {std::move(a), std::move(b)}};
    }

    friend bool operator==(const scalar_expr& a, const scalar_expr& b)
    {
        return a.kind == b.kind && a.name == b.name && a.value == b.value && a.args == b.args;
    }
};

template <rig R>
using scalar_bindings = std::map<std::string, value_t<R>>;

/// A term with scalar slots in place of literals.
template <rig R>
class pattern {
public:
    pattern() = default;

    static pattern id(std::size_t n)
    {
        pattern p;
        p.kind_ = term_kind::id;
        p.wires_ = n;
        return p;
    }
    static pattern swap() { return leaf(term_kind::swap); }
    static pattern mu() { return leaf(term_kind::mu); }
    static pattern eta() { return leaf(term_kind::eta); }
    static pattern delta() { return leaf(term_kind::delta); }
    static pattern eps() { return leaf(term_kind::eps); }
    static pattern scalar(scalar_expr<R> e)
    {
        pattern p = leaf(term_kind::scalar);
        p.scalar_ = std::move(e);
        return p;
    }
    static pattern seq(pattern a, pattern b) { return node(term_kind::seq, std::move(a), std::move(b)); }
    static pattern par(pattern a, pattern b) { return node(term_kind::par, std::move(a), std::move(b)); }

    /// Lifts a closed term; its literals become constant slots.
    static pattern from_term(const term<R>& t)
    {
        switch (t.kind()) {
        case term_kind::id: return id(t.wires());
        case term_kind::scalar: return scalar(scalar_expr<R>::lit(t.value()));
        case term_kind::seq: return seq(from_term(t.first()), from_term(t.second()));
        case term_kind::par: return par(from_term(t.first()), from_term(t.second()));
        default: return leaf(t.kind());
        }
    }

    term_kind kind() const { return kind_; }
    bool is(term_kind k) const { return kind_ == k; }
    bool is_binary() const { return is(term_kind::seq) || is(term_kind::par); }
    std::size_t wires() const { return wires_; }
    const scalar_expr<R>& slot() const { return scalar_; }
    const pattern& first() const { return children_[0]; }
    const pattern& second() const { return children_[1]; }
    const pattern& child(int which) const { return children_[static_cast<std::size_t>(which)]; }

    friend bool operator==(const pattern&, const pattern&) = default;

private:
    static pattern leaf(term_kind k)
    {
        pattern p;
        p.kind_ = k;
        return p;
    }
    static pattern node(term_kind k, pattern a, pattern b)
    {
        pattern p;
        p.kind_ = k;
        p.children_ = {std::move(a), std::move(b)};
        return p;
    }

    term_kind kind_ = term_kind::id;
    std::size_t wires_ = 0;
    scalar_expr<R> scalar_;
    std::vector<pattern> children_;
};

namespace detail {

template <rig R>
value_t<R> evaluate_slot(const scalar_expr<R>& e, const scalar_bindings<R>& env)
{
    using op = typename scalar_expr<R>::op;
    switch (e.kind) {
    case op::variable: {
        auto it = env.find(e.name);
        if (it == env.end()) throw config_error("unbound scalar variable '" + e.name + "'");
        return it->second;
    }
    case op::constant: return e.value;
    case op::sum: return R::add(evaluate_slot(e.args[0], env), evaluate_slot(e.args[1], env));
    case op::product: return R::mul(evaluate_slot(e.args[0], env), evaluate_slot(e.args[1], env));
    }
    return R::zero();
}

template <rig R>
void collect_variables(const pattern<R>& p, std::vector<std::string>& out);

template <rig R>
void collect_slot_variables(const scalar_expr<R>& e, std::vector<std::string>& out)
{
    if (e.kind == scalar_expr<R>::op::variable) {
        if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    }
    for (const auto& a : e.args) collect_slot_variables(a, out);
}

template <rig R>
void collect_variables(const pattern<R>& p, std::vector<std::string>& out)
{
    if (p.is(term_kind::scalar)) collect_slot_variables(p.slot(), out);
    if (p.is_binary()) {
        collect_variables(p.first(), out);
        collect_variables(p.second(), out);
    }
}

} // namespace detail

/// Closed term obtained by filling every slot from the bindings.
template <rig R>
term<R> instantiate(const pattern<R>& p, const scalar_bindings<R>& env)
{
    switch (p.kind()) {
    case term_kind::id: return term<R>::id(p.wires());
    case term_kind::swap: return term<R>::swap();
    case term_kind::mu: return term<R>::mu();
    case term_kind::eta: return term<R>::eta();
    case term_kind::delta: return term<R>::delta();
    case term_kind::eps: return term<R>::eps();
    case term_kind::scalar: return term<R>::scalar(detail::evaluate_slot(p.slot(), env));
    case term_kind::seq: return term<R>::seq(instantiate(p.first(), env), instantiate(p.second(), env));
    case term_kind::par: return term<R>::par(instantiate(p.first(), env), instantiate(p.second(), env));
    }
    return {};
}

template <rig R>
std::vector<std::string> pattern_variables(const pattern<R>& p)
{
    std::vector<std::string> out;
    detail::collect_variables(p, out);
    return out;
}

// ---------------------------------------------------------------------------
// Rules

enum class rule_direction { both, left_to_right };
enum class orientation { forward, backward };

template <rig R>
struct rewrite_rule {
    std::string name;
    pattern<R> lhs;
    pattern<R> rhs;
    rule_direction direction = rule_direction::both;
    rig_flags requires_flags{};

    /// Side matched when applying in the given orientation.
    const pattern<R>& source(orientation o) const { return o == orientation::forward ? lhs : rhs; }
    const pattern<R>& target(orientation o) const { return o == orientation::forward ? rhs : lhs; }
};

template <rig R>
struct rule_set {
    std::vector<rewrite_rule<R>> rules;
    rig_flags flags{};

    const rewrite_rule<R>& find(std::string_view name) const
    {
        for (const auto& r : rules)
            if (r.name == name) return r;
        throw config_error("no rule named '" + std::string(name) + "'");
    }

    bool contains(std::string_view name) const
    {
        for (const auto& r : rules)
            if (r.name == name) return true;
        return false;
    }
};

namespace detail {

template <rig R>
rewrite_rule<R> make_rule(std::string name, const pattern<R>& lhs, const pattern<R>& rhs,
                          rule_direction dir = rule_direction::both, rig_flags needs = {})
{
    return {std::move(name), strictify(lhs), strictify(rhs), dir, needs};
}

} // namespace detail

/**
 * The fourteen relations every bicommutative bimonoid with a scalar action
 * satisfies, in registration order: monoid (unit, assoc, comm), comonoid
 * (counit, coassoc, cocomm), bimonoid compatibility (the mu/delta exchange,
 * delta.eta, eps.mu, eps.eta) and the scalar laws (sum, product, one, zero).
 * The sum and product laws only run left to right.
 */
template <rig R>
rule_set<R> base_rules()
{
    using P = pattern<R>;
    using E = scalar_expr<R>;
    const P id1 = P::id(1);
    std::vector<rewrite_rule<R>> rules;

    rules.push_back(detail::make_rule<R>("monoid-unit", P::seq(P::par(P::eta(), id1), P::mu()), id1));
    rules.push_back(detail::make_rule<R>("monoid-assoc", P::seq(P::par(P::mu(), id1), P::mu()),
                                        P::seq(P::par(id1, P::mu()), P::mu())));
    rules.push_back(detail::make_rule<R>("monoid-comm", P::seq(P::swap(), P::mu()), P::mu()));

    rules.push_back(detail::make_rule<R>("counit-left", P::seq(P::delta(), P::par(P::eps(), id1)), id1));
    rules.push_back(detail::make_rule<R>("comonoid-coassoc", P::seq(P::delta(), P::par(P::delta(), id1)),
                                        P::seq(P::delta(), P::par(id1, P::delta()))));
    rules.push_back(detail::make_rule<R>("comonoid-cocomm", P::seq(P::delta(), P::swap()), P::delta()));

    rules.push_back(detail::make_rule<R>(
        "bimonoid", P::seq(P::mu(), P::delta()),
        P::seq(P::par(P::delta(), P::delta()),
               P::seq(P::par(id1, P::par(P::swap(), id1)), P::par(P::mu(), P::mu())))));
    rules.push_back(detail::make_rule<R>("bimonoid-unit", P::seq(P::eta(), P::delta()), P::par(P::eta(), P::eta())));
    rules.push_back(detail::make_rule<R>("bimonoid-counit", P::seq(P::mu(), P::eps()), P::par(P::eps(), P::eps())));
    rules.push_back(detail::make_rule<R>("bimonoid-void", P::seq(P::eta(), P::eps()), P::id(0)));

    const P r = P::scalar(E::var("r"));
    const P s = P::scalar(E::var("s"));
    rules.push_back(detail::make_rule<R>("phi-sum", P::seq(P::delta(), P::seq(P::par(r, s), P::mu())),
                                        P::scalar(E::plus(E::var("r"), E::var("s"))), rule_direction::left_to_right));
    rules.push_back(detail::make_rule<R>("phi-product", P::seq(r, s), P::scalar(E::times(E::var("s"), E::var("r"))),
                                        rule_direction::left_to_right));
    rules.push_back(detail::make_rule<R>("phi-one", P::scalar(E::lit(R::one())), id1));
    rules.push_back(detail::make_rule<R>("phi-zero", P::scalar(E::lit(R::zero())), P::seq(P::eps(), P::eta())));

    return {std::move(rules), {}};
}

/// Flag set named by a rule-set selector word.
inline rig_flag parse_rule_flag(std::string_view word)
{
    if (word == "special" || word == "idempotent-add") return rig_flag::idempotent_add;
    if (word == "chartwo" || word == "char-two") return rig_flag::char_two;
    if (word == "antipode" || word == "additive-inverses") return rig_flag::additive_inverses;
    throw config_error("unknown rule flag '" + std::string(word) + "'");
}

/**
 * Base rules plus the extensions the requested flags unlock: "special"
 * (mu.delta = id) for idempotent addition, "char-two" (mu.delta = eta.eps)
 * for characteristic two, and the two antipode laws with S = scalar(-1)
 * when every element has a negative. Asking for a flag the rig lacks is a
 * configuration error, since the rule would be unsound there.
 */
template <rig R>
rule_set<R> extended_rules(rig_flags flags)
{
    if (!R::flags.includes(flags))
        throw config_error("rig '" + std::string(R::name) + "' does not carry every requested flag");

    using P = pattern<R>;
    rule_set<R> out = base_rules<R>();
    out.flags = flags;
    const P id1 = P::id(1);
    const P zero = P::seq(P::eps(), P::eta());

    if (flags.contains(rig_flag::idempotent_add))
        out.rules.push_back(detail::make_rule<R>("special", P::seq(P::delta(), P::mu()), id1, rule_direction::both,
                                                 {rig_flag::idempotent_add}));
    if (flags.contains(rig_flag::char_two))
        out.rules.push_back(detail::make_rule<R>("char-two", P::seq(P::delta(), P::mu()), zero, rule_direction::both,
                                                 {rig_flag::char_two}));
    if constexpr (ring<R>) {
        if (flags.contains(rig_flag::additive_inverses)) {
            const P antipode = P::scalar(scalar_expr<R>::lit(minus_one<R>()));
            out.rules.push_back(detail::make_rule<R>("antipode-left",
                                                     P::seq(P::delta(), P::seq(P::par(antipode, id1), P::mu())), zero,
                                                     rule_direction::both, {rig_flag::additive_inverses}));
            out.rules.push_back(detail::make_rule<R>("antipode-right",
                                                     P::seq(P::delta(), P::seq(P::par(id1, antipode), P::mu())), zero,
                                                     rule_direction::both, {rig_flag::additive_inverses}));
        }
    }
    return out;
}

/// Every extension the rig supports.
template <rig R>
rule_set<R> auto_rules()
{
    return extended_rules<R>(R::flags);
}

// ---------------------------------------------------------------------------
// Matching

namespace detail {

template <rig R>
bool match_slot(const scalar_expr<R>& e, const value_t<R>& v, scalar_bindings<R>& env)
{
    using op = typename scalar_expr<R>::op;
    switch (e.kind) {
    case op::variable: {
        auto [it, inserted] = env.emplace(e.name, v);
        return inserted || it->second == v;
    }
    case op::constant: return e.value == v;
    default: return false;
    }
}

template <rig R>
bool match_exact(const pattern<R>& p, const term<R>& t, scalar_bindings<R>& env);

/// Matches pattern chain elements against the leading term chain elements.
/// With `allow_prefix` the term chain may be longer; returns how many term
/// elements were consumed, or nullopt.
template <rig R>
std::optional<std::size_t> match_chain(const pattern<R>& p, const term<R>& t, bool allow_prefix,
                                       scalar_bindings<R>& env)
{
    if (!t.is(p.kind())) return std::nullopt;
    std::vector<pattern<R>> ps;
    std::vector<term<R>> ts;
    chain_elements(p, p.kind(), ps);
    chain_elements(t, t.kind(), ts);
    if (ts.size() < ps.size() || (!allow_prefix && ts.size() != ps.size())) return std::nullopt;
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (!match_exact(ps[k], ts[k], env)) return std::nullopt;
    return ps.size();
}

template <rig R>
bool match_exact(const pattern<R>& p, const term<R>& t, scalar_bindings<R>& env)
{
    switch (p.kind()) {
    case term_kind::id: return t.is(term_kind::id) && t.wires() == p.wires();
    case term_kind::scalar: return t.is(term_kind::scalar) && match_slot(p.slot(), t.value(), env);
    case term_kind::seq:
    case term_kind::par: return match_chain(p, t, false, env).has_value();
    default: return t.is(p.kind());
    }
}

struct match_site {
    std::size_t consumed = 0; ///< chain elements replaced; 0 for a whole non-chain node
};

template <rig R>
std::optional<match_site> match_at(const pattern<R>& p, const term<R>& t, scalar_bindings<R>& env)
{
    if (p.is_binary()) {
        auto used = match_chain(p, t, true, env);
        if (!used) return std::nullopt;
        return match_site{*used};
    }
    if (!match_exact(p, t, env)) return std::nullopt;
    return match_site{0};
}

/// Term at a match site after substitution; `t` is the matched node.
template <rig R>
term<R> splice(const term<R>& t, const match_site& site, const term<R>& replacement)
{
    if (site.consumed == 0) return replacement;
    std::vector<term<R>> parts;
    chain_elements(t, t.kind(), parts);
    if (site.consumed == parts.size()) return replacement;
    std::vector<term<R>> rest(parts.begin() + static_cast<std::ptrdiff_t>(site.consumed), parts.end());
    const term<R> tail = t.is(term_kind::seq) ? seq_all(rest, 0) : par_all(rest);
    return t.is(term_kind::seq) ? term<R>::seq(replacement, tail) : term<R>::par(replacement, tail);
}

template <rig R>
std::optional<term<R>> try_apply(const term<R>& whole, const term_path& path, const rewrite_rule<R>& rule,
                                 orientation o)
{
    const term<R>& node = subterm(whole, path);
    scalar_bindings<R> env;
    auto site = match_at(rule.source(o), node, env);
    if (!site) return std::nullopt;
    const term<R> replacement = instantiate(rule.target(o), env);
    return strictify(replace_subterm(whole, path, splice(node, *site, replacement)));
}

inline void check_orientation(std::string_view rule, rule_direction d, orientation o)
{
    if (o == orientation::backward && d == rule_direction::left_to_right)
        throw config_error("rule '" + std::string(rule) + "' only runs left to right");
}

} // namespace detail

/**
 * One rewrite step at `path` of the strict normal form of `t`. The result is
 * again in strict normal form.
 */
template <rig R>
term<R> apply_at(const term<R>& t, const term_path& path, const rewrite_rule<R>& rule,
                 orientation o = orientation::forward)
{
    detail::check_orientation(rule.name, rule.direction, o);
    const term<R> normal = strictify(t);
    subterm(normal, path);
    auto out = detail::try_apply(normal, path, rule, o);
    if (!out) throw no_match("rule '" + rule.name + "' does not match at " + format_path(path));
    return *out;
}

/// A rule application that would succeed, for enumeration and fuzzing.
struct redex {
    std::size_t rule_index = 0;
    term_path path;
    orientation direction = orientation::forward;
};

/// Every (rule, position, orientation) that applies to the strict form of t.
template <rig R>
std::vector<redex> find_redexes(const term<R>& t, const rule_set<R>& rs, bool include_backward = true)
{
    const term<R> normal = strictify(t);
    const auto paths = postorder_paths(normal);
    std::vector<redex> out;
    for (std::size_t k = 0; k < rs.rules.size(); ++k) {
        const auto& rule = rs.rules[k];
        for (const auto& path : paths) {
            scalar_bindings<R> env;
            if (detail::match_at(rule.lhs, subterm(normal, path), env)) out.push_back({k, path, orientation::forward});
            if (!include_backward || rule.direction != rule_direction::both) continue;
            env.clear();
            if (detail::match_at(rule.rhs, subterm(normal, path), env)) out.push_back({k, path, orientation::backward});
        }
    }
    return out;
}

struct rewrite_step {
    std::size_t index = 0; ///< 1-based step number
    std::string rule;
    term_path path;
    std::string before;
    std::string after;
};

template <rig R>
struct rewrite_result {
    term<R> result;
    std::vector<rewrite_step> trace;
    bool bound_reached = false;
};

/**
 * Left-to-right rewriting with at most `max_steps` steps. Rules are tried in
 * registration order; for each rule, positions are visited leftmost-innermost
 * (post-order), and the first hit is taken. Hitting the bound while a redex
 * remains sets bound_reached.
 */
template <rig R>
rewrite_result<R> rewrite_bounded(const term<R>& t, const rule_set<R>& rs, std::size_t max_steps)
{
    rewrite_result<R> out{strictify(t), {}, false};

    auto next = [&](const term<R>& current) -> std::optional<std::pair<term<R>, rewrite_step>> {
        const auto paths = postorder_paths(current);
        for (const auto& rule : rs.rules) {
            for (const auto& path : paths) {
                if (auto rewritten = detail::try_apply(current, path, rule, orientation::forward))
                    return std::pair{*rewritten, rewrite_step{0, rule.name, path, print_term(current), print_term(*rewritten)}};
            }
        }
        return std::nullopt;
    };

    while (true) {
        auto step = next(out.result);
        if (!step) break;
        if (out.trace.size() == max_steps) {
            out.bound_reached = true;
            break;
        }
        step->second.index = out.trace.size() + 1;
        out.result = step->first;
        out.trace.push_back(std::move(step->second));
    }
    return out;
}

/// "step <k>: <rule> at <path> : <before> => <after>", one line per step.
inline std::string format_step(const rewrite_step& s)
{
    return "step " + std::to_string(s.index) + ": " + s.rule + " at " + format_path(s.path) + " : " + s.before +
           " => " + s.after;
}

template <rig R>
std::string format_trace(const rewrite_result<R>& r)
{
    std::string out;
    for (const auto& s : r.trace) out += format_step(s) + "\n";
    if (r.bound_reached) out += "bound reached after " + std::to_string(r.trace.size()) + " steps\n";
    return out;
}

} // namespace rigprop
