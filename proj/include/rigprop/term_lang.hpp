#pragma once

/**
 * @file term_lang.hpp
 * @brief Concrete syntax for terms: parser, printer and Graphviz renderer.
 *
 * Grammar:
 *
 *     term := par (';' par)*
 *     par  := atom ('*' atom)*
 *     atom := 'id' '[' nat ']' | 'swap' | 'mu' | 'eta' | 'delta' | 'eps'
 *           | 'scalar' '(' literal ')' | '(' term ')'
 *
 * ';' is sequential composition in diagram order and binds loosest; both
 * operators associate to the left. A term file may start with a
 * "#rig <name>" line.
 */

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigprop/error.hpp"
#include "rigprop/rig.hpp"
#include "rigprop/term.hpp"

namespace rigprop {

namespace detail {

template <rig R>
class term_parser {
public:
    struct parsed {
        term<R> value;
        arity shape;
        source_span span;
    };

    term_parser(std::string_view text, std::size_t start) : text_(text), pos_(start) {}

    term<R> parse_all()
    {
        parsed p = parse_seq();
        skip_space();
        if (pos_ < text_.size()) throw parse_error("unexpected '" + std::string(1, text_[pos_]) + "'", here());
        return p.value;
    }

private:
    parsed parse_seq()
    {
        parsed acc = parse_par();
        while (accept(';')) {
            parsed rhs = parse_par();
            const source_span span{acc.span.start, rhs.span.end};
            if (acc.shape.cod != rhs.shape.dom)
                throw typecheck_error("cannot compose " + to_string(acc.shape) + " with " + to_string(rhs.shape) +
                                          ": " + std::to_string(acc.shape.cod) + " outputs feed " +
                                          std::to_string(rhs.shape.dom) + " inputs",
                                      span);
            acc = {term<R>::seq(acc.value, rhs.value), {acc.shape.dom, rhs.shape.cod}, span};
        }
        return acc;
    }

    parsed parse_par()
    {
        parsed acc = parse_atom();
        while (accept('*')) {
            parsed rhs = parse_atom();
            acc = {term<R>::par(acc.value, rhs.value),
                   {acc.shape.dom + rhs.shape.dom, acc.shape.cod + rhs.shape.cod},
                   {acc.span.start, rhs.span.end}};
        }
        return acc;
    }

    parsed parse_atom()
    {
        skip_space();
        const std::size_t start = pos_;
        if (accept('(')) {
            parsed inner = parse_seq();
            if (!accept(')')) throw parse_error("expected ')'", here());
            inner.span = {start, pos_};
            return inner;
        }
        const std::string_view word = identifier();
        if (word.empty()) {
            if (pos_ >= text_.size()) throw parse_error("unexpected end of input, expected a term", here());
            throw parse_error("unexpected '" + std::string(1, text_[pos_]) + "', expected a term", here());
        }
        auto leaf = [&](term<R> t) { return parsed{t, arity_of(t), {start, pos_}}; };
        if (word == "swap") return leaf(term<R>::swap());
        if (word == "mu") return leaf(term<R>::mu());
        if (word == "eta") return leaf(term<R>::eta());
        if (word == "delta") return leaf(term<R>::delta());
        if (word == "eps") return leaf(term<R>::eps());
        if (word == "id") {
            if (!accept('[')) throw parse_error("expected '[' after id", here());
            skip_space();
            const std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == digits || pos_ - digits > 6) throw parse_error("expected a wire count", {digits, pos_});
            const std::size_t n = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
            if (!accept(']')) throw parse_error("expected ']'", here());
            return leaf(term<R>::id(n));
        }
        if (word == "scalar") {
            if (!accept('(')) throw parse_error("expected '(' after scalar", here());
            const std::size_t lit = pos_;
            int depth = 1;
            while (pos_ < text_.size()) {
                if (text_[pos_] == '(') ++depth;
                if (text_[pos_] == ')' && --depth == 0) break;
                ++pos_;
            }
            if (pos_ >= text_.size()) throw parse_error("unterminated scalar literal", {start, text_.size()});
            const std::string_view literal = text_.substr(lit, pos_ - lit);
            ++pos_;
            return leaf(term<R>::scalar(R::parse(literal, lit)));
        }
        throw parse_error("unknown generator '" + std::string(word) + "'", {start, pos_});
    }

    std::string_view identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    source_span here() const { return {pos_, pos_ < text_.size() ? pos_ + 1 : text_.size()}; }

    std::string_view text_;
    std::size_t pos_;
};

struct directive {
    std::optional<std::string> rig;
    std::size_t body = 0;
};

inline directive read_directive(std::string_view text)
{
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos || text.substr(first, 4) != "#rig") return {};
    const std::size_t eol = std::min(text.find('\n', first), text.size());
    std::string_view rest = text.substr(first + 4, eol - first - 4);
    const std::size_t a = rest.find_first_not_of(" \t\r");
    const std::size_t b = rest.find_last_not_of(" \t\r");
    if (a == std::string_view::npos) throw parse_error("#rig directive needs a rig name", {first, eol});
    return {std::string(rest.substr(a, b - a + 1)), eol};
}

} // namespace detail

/// Rig named by a leading "#rig <name>" line, if present.
inline std::optional<std::string> term_rig_directive(std::string_view text)
{
    return detail::read_directive(text).rig;
}

/// Parses and typechecks a term. Errors carry byte spans into `text`.
template <rig R>
term<R> parse_term(std::string_view text)
{
    const auto dir = detail::read_directive(text);
    if (dir.rig && *dir.rig != R::name)
        throw rig_mismatch("term file declares rig '" + *dir.rig + "' but '" + std::string(R::name) + "' is in use");
    return detail::term_parser<R>(text, dir.body).parse_all();
}

namespace detail {

enum class print_context { top, seq_operand, par_operand };

template <rig R>
void print_term(const term<R>& t, print_context ctx, std::string& out)
{
    switch (t.kind()) {
    case term_kind::id: out += "id[" + std::to_string(t.wires()) + "]"; return;
    case term_kind::swap: out += "swap"; return;
    case term_kind::mu: out += "mu"; return;
    case term_kind::eta: out += "eta"; return;
    case term_kind::delta: out += "delta"; return;
    case term_kind::eps: out += "eps"; return;
    case term_kind::scalar: out += "scalar(" + R::print(t.value()) + ")"; return;
    case term_kind::seq:
    case term_kind::par: {
        const bool is_seq = t.is(term_kind::seq);
        const bool wrap = ctx == (is_seq ? print_context::par_operand : print_context::seq_operand);
        std::vector<term<R>> parts;
        chain_elements(t, t.kind(), parts);
        if (wrap) out += '(';
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k) out += is_seq ? " ; " : " * ";
            print_term(parts[k], is_seq ? print_context::seq_operand : print_context::par_operand, out);
        }
        if (wrap) out += ')';
        return;
    }
    }
}

} // namespace detail

/**
 * Chains print flat ("a ; b ; c"), a par chain used as a stage of a seq
 * chain is parenthesized for readability, and a seq chain inside a par chain
 * is parenthesized because it must be.
 */
template <rig R>
std::string print_term(const term<R>& t)
{
    std::string out;
    detail::print_term(t, detail::print_context::top, out);
    return out;
}

template <rig R>
std::ostream& operator<<(std::ostream& os, const term<R>& t)
{
    return os << print_term(t);
}

// ---------------------------------------------------------------------------
// Graphviz rendering

namespace detail {

inline std::string dot_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

template <rig R>
class dot_builder {
public:
    std::string run(const term<R>& t)
    {
        const arity a = arity_of(t);
        std::vector<std::string> wires;
        for (std::size_t k = 0; k < a.dom; ++k) wires.push_back("in" + std::to_string(k));
        wires = wire(t, wires);

        std::string out = "digraph diagram {\n  rankdir=TB;\n  node [shape=box];\n";
        if (a.dom > 0) {
            out += "  { rank=source;";
            for (std::size_t k = 0; k < a.dom; ++k) out += " in" + std::to_string(k) + " [label=\"in" + std::to_string(k) + "\", shape=plaintext];";
            out += " }\n";
        }
        if (a.cod > 0) {
            out += "  { rank=sink;";
            for (std::size_t k = 0; k < a.cod; ++k) out += " out" + std::to_string(k) + " [label=\"out" + std::to_string(k) + "\", shape=plaintext];";
            out += " }\n";
        }
        for (const auto& n : nodes_) out += "  " + n + ";\n";
        for (const auto& e : edges_) out += "  " + e + ";\n";
        for (std::size_t k = 0; k < wires.size(); ++k) out += "  " + wires[k] + " -> out" + std::to_string(k) + ";\n";
        out += "}\n";
        return out;
    }

private:
    /// Threads the incoming wire sources through t and returns the outgoing ones.
    std::vector<std::string> wire(const term<R>& t, const std::vector<std::string>& in)
    {
        switch (t.kind()) {
        case term_kind::id: return in;
        case term_kind::seq: return wire(t.second(), wire(t.first(), in));
        case term_kind::par: {
            const std::size_t split = arity_of(t.first()).dom;
            std::vector<std::string> left(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(split));
            std::vector<std::string> right(in.begin() + static_cast<std::ptrdiff_t>(split), in.end());
            auto out = wire(t.first(), left);
            auto tail = wire(t.second(), right);
            out.insert(out.end(), tail.begin(), tail.end());
            return out;
        }
        default: {
            const std::string name = "n" + std::to_string(nodes_.size());
            std::string label;
            switch (t.kind()) {
            case term_kind::swap: label = "swap"; break;
            case term_kind::mu: label = "mu"; break;
            case term_kind::eta: label = "eta"; break;
            case term_kind::delta: label = "delta"; break;
            case term_kind::eps: label = "eps"; break;
            default: label = "scalar:" + R::print(t.value()); break;
            }
            nodes_.push_back(name + " [label=\"" + dot_escape(label) + "\"]");
            for (const auto& src : in) edges_.push_back(src + " -> " + name);
            return std::vector<std::string>(generator_arity(t.kind()).cod, name);
        }
        }
    }

    std::vector<std::string> nodes_;
    std::vector<std::string> edges_;
};

} // namespace detail

/// Graphviz digraph: one node per generator occurrence, one edge per wire
/// segment, input ports on the source rank and output ports on the sink rank.
template <rig R>
std::string render_dot(const term<R>& t)
{
    return detail::dot_builder<R>().run(t);
}

} // namespace rigprop
