#pragma once

/**
 * @file numeric.hpp
 * @brief Arbitrary-precision integers and rationals plus the small scanner
 *        used by every literal grammar.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "rigprop/error.hpp"

namespace rigprop {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const big_int& v) { return v.str(); }

inline std::string to_string(const big_rational& v)
{
    const big_int num = boost::multiprecision::numerator(v);
    const big_int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

/// Cursor over literal text. Offsets reported in errors are shifted by `base`
/// so that literals embedded in a larger input point at the right bytes.
class scanner {
public:
    explicit scanner(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }
    std::size_t base() const { return base_; }
    std::string_view text() const { return text_; }

    void skip_space()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    /// Optional sign followed by decimal digits.
    big_int integer()
    {
        skip_space();
        const std::size_t start = pos_;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        const std::size_t digits = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        big_int value(std::string(text_.substr(digits, pos_ - digits)));
        return negative ? big_int(-value) : value;
    }

    /// int ('/' int)? with a nonzero denominator.
    big_rational rational()
    {
        skip_space();
        const std::size_t start = pos_;
        big_int num = integer();
        if (accept('/')) {
            skip_space();
            if (peek() == '+' || peek() == '-') fail("signed denominator");
            big_int den = integer();
            if (den == 0) throw parse_error("zero denominator", span_from(start));
            return big_rational(num, den);
        }
        return big_rational(num);
    }

    void finish()
    {
        skip_space();
        if (!done()) fail("trailing characters");
    }

    source_span span_from(std::size_t start) const
    {
        return {base_ + start, base_ + std::max(pos_, start)};
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        const std::size_t end = pos_ < text_.size() ? pos_ + 1 : text_.size();
        throw parse_error(what + " in literal '" + std::string(text_) + "'", {base_ + pos_, base_ + end});
    }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

} // namespace detail

} // namespace rigprop
