#pragma once

/**
 * @file instances.hpp
 * @brief Relations, spans and the Hopf antipode, each with a brute-force oracle.
 *
 * Relations m -> n correspond to n x m boolean matrices, spans to natural
 * number matrices counting the apex elements over each (input, output) pair.
 * The compose oracles below deliberately avoid matrix arithmetic.
 */

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigprop/axioms.hpp"
#include "rigprop/error.hpp"
#include "rigprop/matrix.hpp"
#include "rigprop/rig.hpp"
#include "rigprop/semantics.hpp"
#include "rigprop/term.hpp"

namespace rigprop {

// ---------------------------------------------------------------------------
// Relations

/// A relation between {0..dom-1} and {0..cod-1}, stored as (input, output) pairs.
struct relation {
    std::size_t dom = 0;
    std::size_t cod = 0;
    std::set<std::pair<std::size_t, std::size_t>> pairs;

    bool relates(std::size_t in, std::size_t out) const { return pairs.contains({in, out}); }

    void validate() const
    {
        for (const auto& [i, j] : pairs)
            if (i >= dom || j >= cod)
                throw index_error("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range for " +
                                  std::to_string(dom) + " -> " + std::to_string(cod));
    }

    static relation identity(std::size_t n)
    {
        relation r{n, n, {}};
        for (std::size_t k = 0; k < n; ++k) r.pairs.emplace(k, k);
        return r;
    }

    friend bool operator==(const relation&, const relation&) = default;
};

inline matrix<boolean_rig> rel_to_matrix(const relation& r)
{
    r.validate();
    matrix<boolean_rig> m(r.cod, r.dom);
    for (const auto& [i, j] : r.pairs) m(j, i) = true;
    return m;
}

inline relation matrix_to_rel(const matrix<boolean_rig>& m)
{
    relation r{m.dom(), m.cod(), {}};
    for (std::size_t out = 0; out < m.cod(); ++out)
        for (std::size_t in = 0; in < m.dom(); ++in)
            if (m(out, in).value) r.pairs.emplace(in, out);
    return r;
}

/// Only boolean matrices are relations.
template <rig R>
relation matrix_to_rel(const matrix<R>&)
{
    throw rig_mismatch("relations need a bool matrix, got one over '" + std::string(R::name) + "'");
}

/// r first, then s: (i, k) whenever some j has (i, j) in r and (j, k) in s.
inline relation rel_compose_oracle(const relation& s, const relation& r)
{
    if (r.cod != s.dom)
        throw shape_error("cannot compose relations " + std::to_string(r.dom) + " -> " + std::to_string(r.cod) +
                          " and " + std::to_string(s.dom) + " -> " + std::to_string(s.cod));
    relation out{r.dom, s.cod, {}};
    for (std::size_t i = 0; i < r.dom; ++i)
        for (std::size_t k = 0; k < s.cod; ++k)
            for (std::size_t j = 0; j < r.cod; ++j)
                if (r.relates(i, j) && s.relates(j, k)) {
                    out.pairs.emplace(i, k);
                    break;
                }
    return out;
}

// ---------------------------------------------------------------------------
// Spans

/// dom <- apex -> cod, with the legs as index arrays over the apex.
struct span {
    std::size_t dom = 0;
    std::size_t cod = 0;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    std::size_t apex() const { return left.size(); }

    void validate() const
    {
        if (left.size() != right.size()) throw shape_error("span legs have different apex sizes");
        for (std::size_t a = 0; a < left.size(); ++a)
            if (left[a] >= dom || right[a] >= cod)
                throw index_error("apex element " + std::to_string(a) + " maps out of range");
    }

    static span identity(std::size_t n)
    {
        span s{n, n, {}, {}};
        for (std::size_t k = 0; k < n; ++k) {
            s.left.push_back(k);
            s.right.push_back(k);
        }
        return s;
    }
};

/// Entry (i, j) counts the apex elements over input j and output i.
inline matrix<natural_rig> span_to_matrix(const span& s)
{
    s.validate();
    matrix<natural_rig> m(s.cod, s.dom);
    for (std::size_t a = 0; a < s.apex(); ++a) m(s.right[a], s.left[a]) += 1;
    return m;
}

/// Canonical span of a matrix: one apex element per unit of each entry,
/// enumerated column by column.
inline span matrix_to_span(const matrix<natural_rig>& m)
{
    span s{m.dom(), m.cod(), {}, {}};
    for (std::size_t j = 0; j < m.dom(); ++j)
        for (std::size_t i = 0; i < m.cod(); ++i)
            for (big_int c = 0; c < m(i, j); ++c) {
                s.left.push_back(j);
                s.right.push_back(i);
            }
    return s;
}

template <rig R>
span matrix_to_span(const matrix<R>&)
{
    throw rig_mismatch("spans need a nat matrix, got one over '" + std::string(R::name) + "'");
}

/// Pullback composite: apex pairs (a, b) with s.right[a] == t.left[b].
inline span span_compose_oracle(const span& t, const span& s)
{
    if (s.cod != t.dom)
        throw shape_error("cannot compose spans " + std::to_string(s.dom) + " -> " + std::to_string(s.cod) + " and " +
                          std::to_string(t.dom) + " -> " + std::to_string(t.cod));
    span out{s.dom, t.cod, {}, {}};
    for (std::size_t a = 0; a < s.apex(); ++a)
        for (std::size_t b = 0; b < t.apex(); ++b)
            if (s.right[a] == t.left[b]) {
                out.left.push_back(s.left[a]);
                out.right.push_back(t.right[b]);
            }
    return out;
}

// ---------------------------------------------------------------------------
// Text formats

namespace detail {

/// Header words plus the remaining non-empty lines, split into words.
struct record_file {
    std::vector<std::pair<std::string_view, std::size_t>> header;
    std::vector<std::vector<std::pair<std::string_view, std::size_t>>> lines;
};

inline record_file read_records(std::string_view text)
{
    record_file f;
    std::size_t start = 0;
    bool first = true;
    while (start <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', start), text.size());
        auto w = words(text.substr(start, eol - start), start);
        if (!w.empty()) {
            if (first) f.header = std::move(w);
            else f.lines.push_back(std::move(w));
            first = false;
        }
        start = eol + 1;
    }
    return f;
}

inline void expect_keyword(const record_file& f, std::string_view keyword, std::size_t counts)
{
    if (f.header.empty() || f.header[0].first != keyword || f.header.size() != counts + 1) {
        const std::size_t at = f.header.empty() ? 0 : f.header[0].second;
        throw parse_error("header must be '" + std::string(keyword) + "' followed by " + std::to_string(counts) +
                              " counts",
                          {at, at + (f.header.empty() ? 0 : f.header[0].first.size())});
    }
}

inline std::size_t parse_index(const std::pair<std::string_view, std::size_t>& w, std::size_t bound)
{
    const std::size_t v = parse_count(w.first, w.second);
    if (v >= bound)
        throw parse_error("index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")",
                          {w.second, w.second + w.first.size()});
    return v;
}

} // namespace detail

/// "rel <m> <n>" followed by one "<input> <output>" line per pair.
inline relation read_relation(std::string_view text)
{
    const auto f = detail::read_records(text);
    detail::expect_keyword(f, "rel", 2);
    relation r;
    r.dom = detail::parse_count(f.header[1].first, f.header[1].second);
    r.cod = detail::parse_count(f.header[2].first, f.header[2].second);
    for (const auto& line : f.lines) {
        if (line.size() != 2)
            throw parse_error("relation lines hold two indices", {line[0].second, line.back().second + line.back().first.size()});
        r.pairs.emplace(detail::parse_index(line[0], r.dom), detail::parse_index(line[1], r.cod));
    }
    return r;
}

inline std::string write_relation(const relation& r)
{
    std::string out = "rel " + std::to_string(r.dom) + " " + std::to_string(r.cod) + "\n";
    for (const auto& [i, j] : r.pairs) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

/// "span <m> <n> <k>" followed by k "<left> <right>" lines.
inline span read_span(std::string_view text)
{
    const auto f = detail::read_records(text);
    detail::expect_keyword(f, "span", 3);
    span s;
    s.dom = detail::parse_count(f.header[1].first, f.header[1].second);
    s.cod = detail::parse_count(f.header[2].first, f.header[2].second);
    const std::size_t k = detail::parse_count(f.header[3].first, f.header[3].second);
    if (f.lines.size() != k)
        throw parse_error("span declares " + std::to_string(k) + " apex elements but lists " +
                              std::to_string(f.lines.size()),
                          {text.size(), text.size()});
    for (const auto& line : f.lines) {
        if (line.size() != 2)
            throw parse_error("span lines hold two indices", {line[0].second, line.back().second + line.back().first.size()});
        s.left.push_back(detail::parse_index(line[0], s.dom));
        s.right.push_back(detail::parse_index(line[1], s.cod));
    }
    return s;
}

inline std::string write_span(const span& s)
{
    std::string out =
        "span " + std::to_string(s.dom) + " " + std::to_string(s.cod) + " " + std::to_string(s.apex()) + "\n";
    for (std::size_t a = 0; a < s.apex(); ++a) out += std::to_string(s.left[a]) + " " + std::to_string(s.right[a]) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Antipode and special checks

/// Antipode S = scalar(-1).
template <ring R>
term<R> antipode()
{
    return term<R>::scalar(minus_one<R>());
}

/**
 * Hopf laws for S = scalar(-1) as matrix identities: both antipode laws,
 * S;S = id, S + id = 0, and the (anti)homomorphism conditions relating S to
 * the four generators.
 */
template <rig R>
std::vector<check_result> antipode_checks()
{
    if constexpr (!ring<R>) {
        throw precondition_error("rig '" + std::string(R::name) + "' has no additive inverses, so no antipode");
    } else {
        using T = term<R>;
        const T S = antipode<R>();
        const T id1 = T::id(1);
        const T zero = T::seq(T::eps(), T::eta());
        auto same = [](const T& a, const T& b) { return eval(a) == eval(b); };
        return {
            {"antipode-left", same(seq_all<T>({T::delta(), T::par(S, id1), T::mu()}, 1), zero)},
            {"antipode-right", same(seq_all<T>({T::delta(), T::par(id1, S), T::mu()}, 1), zero)},
            {"involution", same(T::seq(S, S), id1)},
            {"sum-with-identity", same(add_terms(S, id1), zero)},
            {"reverses-mu", same(T::seq(T::mu(), S), seq_all<T>({T::swap(), T::par(S, S), T::mu()}, 2))},
            {"reverses-delta", same(T::seq(S, T::delta()), seq_all<T>({T::delta(), T::par(S, S), T::swap()}, 1))},
            {"fixes-eta", same(T::seq(T::eta(), S), T::eta())},
            {"fixes-eps", same(T::seq(S, T::eps()), T::eps())},
        };
    }
}

/// Whether mu . delta is the identity, i.e. the bimonoid is special.
template <rig R>
bool special_check()
{
    using T = term<R>;
    return eval(T::seq(T::delta(), T::mu())) == identity<R>(1);
}

} // namespace rigprop
