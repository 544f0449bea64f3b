#pragma once

/**
 * @file matrix.hpp
 * @brief Mat(R): matrices over a commutative rig as morphisms of a PROP.
 *
 * A morphism m -> n is an n x m matrix. Row i is output wire i, column j is
 * input wire j, so compose(g, f) is the ordinary product g * f. Shapes are
 * stored explicitly, which keeps the 0 x k and k x 0 morphisms (unit,
 * counit, initial/terminal maps) distinct from each other.
 */

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rigprop/error.hpp"
#include "rigprop/rig.hpp"

namespace rigprop {

/// The four structure maps on the generating object 1.
enum class generator { mu, eta, delta, eps };

template <rig R>
class matrix {
public:
    using value_type = value_t<R>;

    matrix() = default;

    /// All-zeros morphism dom -> cod (a cod x dom array).
    matrix(std::size_t cod, std::size_t dom) : dom_(dom), cod_(cod), entries_(cod * dom, R::zero()) {}

    /// Row-major construction; each row has `dom` entries.
    static matrix from_rows(std::size_t cod, std::size_t dom, std::vector<value_type> entries)
    {
        if (entries.size() != cod * dom)
            throw shape_error("matrix entries do not fill " + std::to_string(cod) + "x" + std::to_string(dom));
        matrix out;
        out.dom_ = dom;
        out.cod_ = cod;
        out.entries_ = std::move(entries);
        return out;
    }

    std::size_t dom() const { return dom_; }
    std::size_t cod() const { return cod_; }
    std::size_t rows() const { return cod_; }
    std::size_t cols() const { return dom_; }

    const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * dom_ + j]; }
    value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * dom_ + j]; }

    const std::vector<value_type>& entries() const { return entries_; }

    friend bool operator==(const matrix& a, const matrix& b)
    {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dom_ = 0;
    std::size_t cod_ = 0;
    std::vector<value_type> entries_;
};

inline std::string shape_string(std::size_t cod, std::size_t dom)
{
    return std::to_string(cod) + "x" + std::to_string(dom);
}

template <rig R>
std::string shape_string(const matrix<R>& m)
{
    return shape_string(m.cod(), m.dom());
}

/// g after f: entry (i, j) = sum_k g(i, k) f(k, j).
template <rig R>
matrix<R> compose(const matrix<R>& g, const matrix<R>& f)
{
    if (f.cod() != g.dom())
        throw shape_error("cannot compose " + shape_string(g) + " after " + shape_string(f) + ": " +
                          std::to_string(f.cod()) + " outputs feed " + std::to_string(g.dom()) + " inputs");
    matrix<R> out(g.cod(), f.dom());
    for (std::size_t i = 0; i < g.cod(); ++i) {
        for (std::size_t k = 0; k < g.dom(); ++k) {
            const auto& gik = g(i, k);
            if (R::is_zero(gik)) continue;
            for (std::size_t j = 0; j < f.dom(); ++j) {
                const auto& fkj = f(k, j);
                if (R::is_zero(fkj)) continue;
                out(i, j) = R::add(out(i, j), R::mul(gik, fkj));
            }
        }
    }
    return out;
}

/// Block-diagonal sum with f in the upper-left block.
template <rig R>
matrix<R> tensor(const matrix<R>& f, const matrix<R>& g)
{
    matrix<R> out(f.cod() + g.cod(), f.dom() + g.dom());
    for (std::size_t i = 0; i < f.cod(); ++i)
        for (std::size_t j = 0; j < f.dom(); ++j) out(i, j) = f(i, j);
    for (std::size_t i = 0; i < g.cod(); ++i)
        for (std::size_t j = 0; j < g.dom(); ++j) out(f.cod() + i, f.dom() + j) = g(i, j);
    return out;
}

/// Entry-wise sum; the enrichment of Mat(R) over commutative monoids.
template <rig R>
matrix<R> add(const matrix<R>& f, const matrix<R>& g)
{
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw shape_error("cannot add " + shape_string(f) + " and " + shape_string(g));
    matrix<R> out(f.cod(), f.dom());
    for (std::size_t i = 0; i < f.cod(); ++i)
        for (std::size_t j = 0; j < f.dom(); ++j) out(i, j) = R::add(f(i, j), g(i, j));
    return out;
}

template <rig R>
matrix<R> identity(std::size_t n)
{
    matrix<R> out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = R::one();
    return out;
}

template <rig R>
matrix<R> zero_matrix(std::size_t cod, std::size_t dom)
{
    return matrix<R>(cod, dom);
}

/// Exchanges the first m wires with the last n: input k < m goes to output
/// k + n, input m + k goes to output k.
template <rig R>
matrix<R> symmetry(std::size_t m, std::size_t n)
{
    matrix<R> out(m + n, m + n);
    for (std::size_t k = 0; k < m; ++k) out(k + n, k) = R::one();
    for (std::size_t k = 0; k < n; ++k) out(k, m + k) = R::one();
    return out;
}

/// Permutation matrix sending input wire k to output wire perm[k].
template <rig R>
matrix<R> permutation_matrix(const std::vector<std::size_t>& perm)
{
    matrix<R> out(perm.size(), perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        if (perm[k] >= perm.size()) throw index_error("permutation target out of range");
        out(perm[k], k) = R::one();
    }
    return out;
}

template <rig R>
matrix<R> transpose(const matrix<R>& f)
{
    matrix<R> out(f.dom(), f.cod());
    for (std::size_t i = 0; i < f.cod(); ++i)
        for (std::size_t j = 0; j < f.dom(); ++j) out(j, i) = f(i, j);
    return out;
}

/// m x n matrix that is r at (i, j) and zero elsewhere. Indices are 1-based.
template <rig R>
matrix<R> elementary(std::size_t i, std::size_t j, std::size_t m, std::size_t n, const value_t<R>& r)
{
    if (i < 1 || i > m || j < 1 || j > n)
        throw index_error("elementary index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                          shape_string(m, n));
    matrix<R> out(m, n);
    out(i - 1, j - 1) = r;
    return out;
}

/// mu = (1 1), eta the unique 1x0, delta = (1;1), eps the unique 0x1.
template <rig R>
matrix<R> generator_matrix(generator which)
{
    switch (which) {
    case generator::mu: return matrix<R>::from_rows(1, 2, {R::one(), R::one()});
    case generator::eta: return matrix<R>(1, 0);
    case generator::delta: return matrix<R>::from_rows(2, 1, {R::one(), R::one()});
    case generator::eps: return matrix<R>(0, 1);
    }
    return {};
}

/// 1x1 matrix (r).
template <rig R>
matrix<R> scalar_matrix(const value_t<R>& r)
{
    return matrix<R>::from_rows(1, 1, {r});
}

/// Applies a rig homomorphism entry-wise; functorial in the rig.
template <rig Src, rig Dst>
matrix<Dst> map_entries(const rig_hom<Src, Dst>& h, const matrix<Src>& f)
{
    std::vector<value_t<Dst>> entries;
    entries.reserve(f.entries().size());
    for (const auto& e : f.entries()) entries.push_back(h(e));
    return matrix<Dst>::from_rows(f.cod(), f.dom(), std::move(entries));
}

// ---------------------------------------------------------------------------
// Text format
//
//   <rig-name> <cod> <dom>
//   cod lines of dom whitespace-separated literals

template <rig R>
std::string write_matrix(const matrix<R>& f)
{
    std::string out = std::string(R::name) + " " + std::to_string(f.cod()) + " " + std::to_string(f.dom()) + "\n";
    if (f.dom() == 0) return out;
    for (std::size_t i = 0; i < f.cod(); ++i) {
        for (std::size_t j = 0; j < f.dom(); ++j) {
            if (j) out += ' ';
            out += R::print(f(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace detail {

struct matrix_header {
    std::string rig;
    std::size_t cod = 0;
    std::size_t dom = 0;
    std::size_t body = 0; ///< offset of the first byte after the header line
};

inline std::size_t parse_count(std::string_view word, std::size_t at)
{
    if (word.empty() || word.find_first_not_of("0123456789") != std::string_view::npos || word.size() > 6)
        throw parse_error("expected a wire count, got '" + std::string(word) + "'", {at, at + word.size()});
    return static_cast<std::size_t>(std::stoul(std::string(word)));
}

/// Splits text into whitespace-separated words, remembering offsets.
inline std::vector<std::pair<std::string_view, std::size_t>> words(std::string_view text, std::size_t base)
{
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        pos = text.find_first_not_of(" \t\r\n", pos);
        if (pos == std::string_view::npos) break;
        std::size_t end = text.find_first_of(" \t\r\n", pos);
        if (end == std::string_view::npos) end = text.size();
        out.emplace_back(text.substr(pos, end - pos), base + pos);
        pos = end;
    }
    return out;
}

inline matrix_header read_matrix_header(std::string_view text)
{
    const std::size_t eol = std::min(text.find('\n'), text.size());
    const auto head = words(text.substr(0, eol), 0);
    if (head.size() != 3) throw parse_error("matrix header must be '<rig> <cod> <dom>'", {0, eol});
    matrix_header h;
    h.rig = std::string(head[0].first);
    h.cod = parse_count(head[1].first, head[1].second);
    h.dom = parse_count(head[2].first, head[2].second);
    h.body = eol;
    return h;
}

} // namespace detail

/// Name of the rig declared in a matrix file header.
inline std::string matrix_rig_name(std::string_view text)
{
    return detail::read_matrix_header(text).rig;
}

template <rig R>
matrix<R> read_matrix(std::string_view text)
{
    const auto h = detail::read_matrix_header(text);
    if (h.rig != R::name)
        throw rig_mismatch("matrix is over '" + h.rig + "' but '" + std::string(R::name) + "' was expected");
    std::vector<value_t<R>> entries;
    entries.reserve(h.cod * h.dom);
    std::size_t line_start = h.body < text.size() ? h.body + 1 : text.size();
    std::size_t row = 0;
    while (line_start < text.size()) {
        std::size_t eol = std::min(text.find('\n', line_start), text.size());
        const auto cells = detail::words(text.substr(line_start, eol - line_start), line_start);
        if (!cells.empty()) {
            if (row >= h.cod) throw parse_error("more rows than the header declares", {line_start, eol});
            if (cells.size() != h.dom)
                throw parse_error("row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                                      " entries, expected " + std::to_string(h.dom),
                                  {line_start, eol});
            for (const auto& [word, at] : cells) entries.push_back(R::parse(word, at));
            ++row;
        }
        line_start = eol + 1;
    }
    if (h.dom != 0 && row != h.cod)
        throw parse_error("expected " + std::to_string(h.cod) + " rows, found " + std::to_string(row),
                          {text.size(), text.size()});
    if (h.dom == 0) entries.clear();
    return matrix<R>::from_rows(h.cod, h.dom, std::move(entries));
}

template <rig R>
std::ostream& operator<<(std::ostream& os, const matrix<R>& f)
{
    return os << write_matrix(f);
}

} // namespace rigprop
