#pragma once

/**
 * @file error.hpp
 * @brief Exception types shared by every rigprop component.
 *
 * Each failure class maps to one exception type so callers (and the CLI's
 * exit-code table) can tell parse problems from shape problems without
 * inspecting message text.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigprop {

/// Byte range [start, end) inside some parsed input.
struct source_span {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const source_span&, const source_span&) = default;
};

/// Address of a subterm: 0 selects the first/left child, 1 the second/right.
using term_path = std::vector<int>;

inline std::string format_path(const term_path& path)
{
    if (path.empty()) return "root";
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(path[i]);
    }
    return out;
}

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text: term syntax, literals, matrix/relation/span files.
class parse_error : public error {
public:
    parse_error(const std::string& what, source_span span)
        : error(what + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
          span_(span)
    {
    }

    const source_span& span() const noexcept { return span_; }

private:
    source_span span_;
};

/// Well-formed literal outside the rig's carrier (e.g. "-1" in nat).
class domain_error : public parse_error {
public:
    using parse_error::parse_error;
};

/// Sequential composition whose middle wire counts disagree. Terms built in
/// code report the node's path; terms read from text also carry the span.
class typecheck_error : public error {
public:
    typecheck_error(const std::string& what, term_path path)
        : error(what + " (at " + format_path(path) + ")"), path_(std::move(path))
    {
    }

    typecheck_error(const std::string& what, source_span span)
        : error(what + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)), span_(span)
    {
    }

    const term_path& path() const noexcept { return path_; }
    const std::optional<source_span>& span() const noexcept { return span_; }

private:
    term_path path_;
    std::optional<source_span> span_;
};

/// Operands or files drawn from different rigs.
class rig_mismatch : public error {
public:
    using error::error;
};

/// Dimension disagreement in a matrix or term operation.
class shape_error : public error {
public:
    using error::error;
};

class index_error : public shape_error {
public:
    using shape_error::shape_error;
};

/// Equivalence asked of two terms whose arities differ.
class not_comparable : public shape_error {
public:
    using shape_error::shape_error;
};

class no_match : public error {
public:
    using error::error;
};

class path_error : public error {
public:
    using error::error;
};

/// Bad rule-set flags, unknown rig names and similar setup mistakes.
class config_error : public error {
public:
    using error::error;
};

class precondition_error : public error {
public:
    using error::error;
};

} // namespace rigprop
