#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials over Q and the reduced rational functions
 *        that make up the carrier of Q(s).
 *
 * A rational_function is always stored in canonical form: numerator and
 * denominator share no common factor and the denominator is monic. Equality
 * is therefore plain structural comparison.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigprop/error.hpp"
#include "rigprop/numeric.hpp"

namespace rigprop {

class polynomial {
public:
    polynomial() = default;

    /// Coefficients from the constant term upward.
    explicit polynomial(std::vector<big_rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static polynomial constant(big_rational c) { return polynomial({std::move(c)}); }
    static polynomial variable() { return polynomial({big_rational(0), big_rational(1)}); }
    static polynomial monomial(big_rational c, std::size_t degree)
    {
        std::vector<big_rational> coeffs(degree + 1);
        coeffs[degree] = std::move(c);
        return polynomial(std::move(coeffs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Degree of the zero polynomial is reported as 0; check is_zero() first.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const big_rational& leading() const { return coeffs_.back(); }
    const std::vector<big_rational>& coefficients() const { return coeffs_; }

    big_rational coefficient(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : big_rational(0);
    }

    friend bool operator==(const polynomial&, const polynomial&) = default;

    friend polynomial operator+(const polynomial& a, const polynomial& b)
    {
        std::vector<big_rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
        return polynomial(std::move(out));
    }

    friend polynomial operator-(const polynomial& a)
    {
        std::vector<big_rational> out = a.coeffs_;
        for (auto& c : out) c = -c;
        return polynomial(std::move(out));
    }

    friend polynomial operator-(const polynomial& a, const polynomial& b) { return a + (-b); }

    friend polynomial operator*(const polynomial& a, const polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<big_rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return polynomial(std::move(out));
    }

    polynomial scaled(const big_rational& c) const
    {
        std::vector<big_rational> out = coeffs_;
        for (auto& x : out) x *= c;
        return polynomial(std::move(out));
    }

    /// Euclidean division; the divisor must be nonzero.
    static std::pair<polynomial, polynomial> divmod(const polynomial& a, const polynomial& b)
    {
        if (b.is_zero()) throw precondition_error("polynomial division by zero");
        polynomial rem = a;
        if (rem.is_zero() || rem.degree() < b.degree()) return {polynomial{}, rem};
        const std::size_t db = b.degree();
        std::vector<big_rational> r = rem.coeffs_;
        std::vector<big_rational> quot(r.size() - db);
        for (std::size_t top = r.size(); top-- > db;) {
            if (r[top] == 0) continue;
            const big_rational factor = r[top] / b.leading();
            quot[top - db] = factor;
            for (std::size_t k = 0; k <= db; ++k) r[top - db + k] -= factor * b.coeffs_[k];
        }
        r.resize(db);
        return {polynomial(std::move(quot)), polynomial(std::move(r))};
    }

    polynomial monic() const { return is_zero() ? *this : scaled(1 / leading()); }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    static polynomial gcd(polynomial a, polynomial b)
    {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Sum of terms, highest degree first: "1/2*s^2-s+3".
    std::string str() const
    {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const big_rational& c = coeffs_[k];
            if (c == 0) continue;
            std::string term;
            if (k == 0) {
                term = to_string(c);
            } else {
                if (c == 1)
                    term.clear();
                else if (c == -1)
                    term = "-";
                else
                    term = to_string(c) + "*";
                term += k == 1 ? "s" : "s^" + std::to_string(k);
            }
            if (!out.empty() && term.front() != '-') out += '+';
            out += term;
        }
        return out;
    }

    /// poly := term (('+'|'-') term)* ; term := c | c*s^k | c*s | s^k | s.
    static polynomial parse(detail::scanner& in)
    {
        polynomial acc;
        in.skip_space();
        bool negative = false;
        if (in.peek() == '+' || in.peek() == '-') {
            negative = in.peek() == '-';
            in.accept(in.peek());
        }
        while (true) {
            polynomial term = parse_term(in);
            acc = acc + (negative ? -term : term);
            in.skip_space();
            if (in.peek() == '+' || in.peek() == '-') {
                negative = in.peek() == '-';
                in.accept(in.peek());
                continue;
            }
            return acc;
        }
    }

private:
    static polynomial parse_term(detail::scanner& in)
    {
        in.skip_space();
        big_rational coeff(1);
        if (in.peek() != 's') {
            coeff = in.rational();
            if (!in.accept('*')) return constant(coeff);
            in.skip_space();
        }
        if (in.peek() != 's') in.fail("expected 's'");
        in.accept('s');
        std::size_t degree = 1;
        if (in.accept('^')) {
            in.skip_space();
            if (in.peek() == '-' || in.peek() == '+') in.fail("signed exponent");
            const big_int k = in.integer();
            if (k > 4096) in.fail("exponent too large");
            degree = k.convert_to<std::size_t>();
        }
        return monomial(coeff, degree);
    }

    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<big_rational> coeffs_;
};

/// Element of Q(s) in lowest terms with a monic denominator.
class rational_function {
public:
    rational_function() : den_(polynomial::constant(1)) {}

    explicit rational_function(polynomial num) : num_(std::move(num)), den_(polynomial::constant(1)) {}

    rational_function(polynomial num, polynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw precondition_error("rational function with zero denominator");
        reduce();
    }

    static rational_function constant(big_rational c) { return rational_function(polynomial::constant(std::move(c))); }

    const polynomial& numerator() const { return num_; }
    const polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend bool operator==(const rational_function&, const rational_function&) = default;

    friend rational_function operator+(const rational_function& a, const rational_function& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend rational_function operator-(const rational_function& a)
    {
        rational_function out = a;
        out.num_ = -out.num_;
        return out;
    }

    friend rational_function operator*(const rational_function& a, const rational_function& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_one()) return b;
        if (b.is_one()) return a;
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    /// "p" when the denominator is 1, otherwise "(p)/(q)".
    std::string str() const
    {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    /// Accepts "poly", "(poly)" and "(poly)/(poly)".
    static rational_function parse(std::string_view text, std::size_t base = 0)
    {
        detail::scanner in(text, base);
        in.skip_space();
        rational_function out;
        if (in.peek() == '(') {
            in.expect('(');
            polynomial num = polynomial::parse(in);
            in.expect(')');
            if (in.accept('/')) {
                const std::size_t at = in.pos();
                in.expect('(');
                polynomial den = polynomial::parse(in);
                in.expect(')');
                if (den.is_zero()) throw parse_error("zero denominator polynomial", in.span_from(at));
                out = rational_function(std::move(num), std::move(den));
            } else {
                out = rational_function(std::move(num));
            }
        } else {
            out = rational_function(polynomial::parse(in));
        }
        in.finish();
        return out;
    }

private:
    void reduce()
    {
        if (num_.is_zero()) {
            den_ = polynomial::constant(1);
            return;
        }
        const polynomial g = polynomial::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = polynomial::divmod(num_, g).first;
            den_ = polynomial::divmod(den_, g).first;
        }
        const big_rational lead = den_.leading();
        if (lead != 1) {
            num_ = num_.scaled(1 / lead);
            den_ = den_.scaled(1 / lead);
        }
    }

    polynomial num_;
    polynomial den_;
};

} // namespace rigprop
