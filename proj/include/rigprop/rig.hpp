#pragma once

/**
 * @file rig.hpp
 * @brief The commutative-rig abstraction and the rigs shipped with rigprop.
 *
 * A rig is described by a stateless traits struct: the carrier type, the two
 * constants, addition, multiplication, and a literal grammar. Everything else
 * in the library (matrices, terms, evaluation) is a template over such a
 * struct, so operands from different rigs cannot be mixed by construction.
 *
 * Shipped rigs: B (bool), N (nat), Z (int), F2 (f2), Q (rat),
 * non-negative Q (nnrat) and Q(s) (ratfunc).
 */

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>

#include "rigprop/error.hpp"
#include "rigprop/numeric.hpp"
#include "rigprop/polynomial.hpp"

namespace rigprop {

/// Algebraic properties a rig may carry. Rule sets key off these.
enum class rig_flag : unsigned {
    idempotent_add = 1u << 0,    ///< 1 + 1 = 1
    additive_inverses = 1u << 1, ///< every element has a negation
    char_two = 1u << 2,          ///< 1 + 1 = 0
};

class rig_flags {
public:
    constexpr rig_flags() = default;
    constexpr rig_flags(std::initializer_list<rig_flag> flags)
    {
        for (auto f : flags) bits_ |= static_cast<unsigned>(f);
    }

    constexpr bool contains(rig_flag f) const { return (bits_ & static_cast<unsigned>(f)) != 0; }
    constexpr bool includes(rig_flags other) const { return (bits_ & other.bits_) == other.bits_; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr rig_flags& operator|=(rig_flags other)
    {
        bits_ |= other.bits_;
        return *this;
    }
    constexpr rig_flags& operator|=(rig_flag f)
    {
        bits_ |= static_cast<unsigned>(f);
        return *this;
    }

    friend constexpr bool operator==(rig_flags, rig_flags) = default;

private:
    unsigned bits_ = 0;
};

inline std::string_view flag_name(rig_flag f)
{
    switch (f) {
    case rig_flag::idempotent_add: return "idempotent-add";
    case rig_flag::additive_inverses: return "additive-inverses";
    case rig_flag::char_two: return "char-two";
    }
    return "?";
}

template <class R>
concept rig = requires(const typename R::value_type& a, std::string_view text, std::size_t base) {
    typename R::value_type;
    requires std::equality_comparable<typename R::value_type>;
    { R::name } -> std::convertible_to<std::string_view>;
    { R::flags } -> std::convertible_to<rig_flags>;
    { R::zero() } -> std::same_as<typename R::value_type>;
    { R::one() } -> std::same_as<typename R::value_type>;
    { R::add(a, a) } -> std::same_as<typename R::value_type>;
    { R::mul(a, a) } -> std::same_as<typename R::value_type>;
    { R::is_zero(a) } -> std::same_as<bool>;
    { R::parse(text, base) } -> std::same_as<typename R::value_type>;
    { R::print(a) } -> std::same_as<std::string>;
};

/// A rig whose additive monoid is a group.
template <class R>
concept ring = rig<R> && requires(const typename R::value_type& a) {
    { R::neg(a) } -> std::same_as<typename R::value_type>;
};

template <rig R>
using value_t = typename R::value_type;

// ---------------------------------------------------------------------------
// Shipped rigs

/// One bit. Kept distinct from bool so matrices store it in a plain vector.
struct bit {
    bool value = false;

    constexpr bit() = default;
    constexpr bit(bool v) : value(v) {}

    friend constexpr bool operator==(bit, bit) = default;
};

/// Booleans under (or, and). FinRel lives here.
struct boolean_rig {
    using value_type = bit;
    static constexpr std::string_view name = "bool";
    static constexpr rig_flags flags{rig_flag::idempotent_add};

    static bit zero() { return false; }
    static bit one() { return true; }
    static bit add(bit a, bit b) { return a.value || b.value; }
    static bit mul(bit a, bit b) { return a.value && b.value; }
    static bool is_zero(bit a) { return !a.value; }

    static bit parse(std::string_view text, std::size_t base = 0)
    {
        const auto first = text.find_first_not_of(" \t\r\n");
        const auto last = text.find_last_not_of(" \t\r\n");
        const auto word = first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1);
        if (word == "1" || word == "true") return true;
        if (word == "0" || word == "false") return false;
        throw parse_error("expected 0, 1, false or true in literal '" + std::string(text) + "'",
                          {base, base + text.size()});
    }

    static std::string print(bit a) { return a.value ? "1" : "0"; }
};

/// Natural numbers, arbitrary precision. FinSpan lives here.
struct natural_rig {
    using value_type = big_int;
    static constexpr std::string_view name = "nat";
    static constexpr rig_flags flags{};

    static big_int zero() { return 0; }
    static big_int one() { return 1; }
    static big_int add(const big_int& a, const big_int& b) { return a + b; }
    static big_int mul(const big_int& a, const big_int& b) { return a * b; }
    static bool is_zero(const big_int& a) { return a.is_zero(); }

    static big_int parse(std::string_view text, std::size_t base = 0)
    {
        detail::scanner in(text, base);
        big_int v = in.integer();
        in.finish();
        if (v < 0) throw domain_error("negative literal '" + std::string(text) + "' in nat", {base, base + text.size()});
        return v;
    }

    static std::string print(const big_int& a) { return to_string(a); }
};

struct integer_rig {
    using value_type = big_int;
    static constexpr std::string_view name = "int";
    static constexpr rig_flags flags{rig_flag::additive_inverses};

    static big_int zero() { return 0; }
    static big_int one() { return 1; }
    static big_int add(const big_int& a, const big_int& b) { return a + b; }
    static big_int mul(const big_int& a, const big_int& b) { return a * b; }
    static big_int neg(const big_int& a) { return -a; }
    static bool is_zero(const big_int& a) { return a.is_zero(); }

    static big_int parse(std::string_view text, std::size_t base = 0)
    {
        detail::scanner in(text, base);
        big_int v = in.integer();
        in.finish();
        return v;
    }

    static std::string print(const big_int& a) { return to_string(a); }
};

/// The two-element field, where 1 + 1 = 0.
struct f2_rig {
    using value_type = bit;
    static constexpr std::string_view name = "f2";
    static constexpr rig_flags flags{rig_flag::additive_inverses, rig_flag::char_two};

    static bit zero() { return false; }
    static bit one() { return true; }
    static bit add(bit a, bit b) { return a.value != b.value; }
    static bit mul(bit a, bit b) { return a.value && b.value; }
    static bit neg(bit a) { return a; }
    static bool is_zero(bit a) { return !a.value; }

    static bit parse(std::string_view text, std::size_t base = 0)
    {
        detail::scanner in(text, base);
        in.skip_space();
        bool value = false;
        if (in.accept('1'))
            value = true;
        else if (!in.accept('0'))
            in.fail("expected 0 or 1");
        in.finish();
        return value;
    }

    static std::string print(bit a) { return a.value ? "1" : "0"; }
};

struct rational_rig {
    using value_type = big_rational;
    static constexpr std::string_view name = "rat";
    static constexpr rig_flags flags{rig_flag::additive_inverses};

    static big_rational zero() { return 0; }
    static big_rational one() { return 1; }
    static big_rational add(const big_rational& a, const big_rational& b) { return a + b; }
    static big_rational mul(const big_rational& a, const big_rational& b) { return a * b; }
    static big_rational neg(const big_rational& a) { return -a; }
    static bool is_zero(const big_rational& a) { return a == 0; }

    static big_rational parse(std::string_view text, std::size_t base = 0)
    {
        detail::scanner in(text, base);
        big_rational v = in.rational();
        in.finish();
        return v;
    }

    static std::string print(const big_rational& a) { return to_string(a); }
};

/// Exact stand-in for the half-line [0, inf): non-negative rationals.
struct nonneg_rational_rig {
    using value_type = big_rational;
    static constexpr std::string_view name = "nnrat";
    static constexpr rig_flags flags{};

    static big_rational zero() { return 0; }
    static big_rational one() { return 1; }
    static big_rational add(const big_rational& a, const big_rational& b) { return a + b; }
    static big_rational mul(const big_rational& a, const big_rational& b) { return a * b; }
    static bool is_zero(const big_rational& a) { return a == 0; }

    static big_rational parse(std::string_view text, std::size_t base = 0)
    {
        detail::scanner in(text, base);
        big_rational v = in.rational();
        in.finish();
        if (v < 0) throw domain_error("negative literal '" + std::string(text) + "' in nnrat", {base, base + text.size()});
        return v;
    }

    static std::string print(const big_rational& a) { return to_string(a); }
};

/// Rational functions in one variable s, the signal-flow rig.
struct rational_function_rig {
    using value_type = rational_function;
    static constexpr std::string_view name = "ratfunc";
    static constexpr rig_flags flags{rig_flag::additive_inverses};

    static rational_function zero() { return {}; }
    static rational_function one() { return rational_function::constant(1); }
    static rational_function add(const rational_function& a, const rational_function& b) { return a + b; }
    static rational_function mul(const rational_function& a, const rational_function& b) { return a * b; }
    static rational_function neg(const rational_function& a) { return -a; }
    static bool is_zero(const rational_function& a) { return a.is_zero(); }

    static rational_function parse(std::string_view text, std::size_t base = 0)
    {
        return rational_function::parse(text, base);
    }

    static std::string print(const rational_function& a) { return a.str(); }
};

using shipped_rigs = std::tuple<boolean_rig, natural_rig, integer_rig, f2_rig, rational_rig,
                                nonneg_rational_rig, rational_function_rig>;

/// Calls `f.template operator()<R>()` for every shipped rig, in declaration order.
template <class F>
void for_each_rig(F&& f)
{
    [&]<class... Rs>(std::type_identity<std::tuple<Rs...>>) {
        (f.template operator()<Rs>(), ...);
    }(std::type_identity<shipped_rigs>{});
}

/// Resolves a rig name at run time and invokes `f.template operator()<R>()`.
template <class F>
decltype(auto) with_rig(std::string_view name, F&& f)
{
    if (name == boolean_rig::name) return f.template operator()<boolean_rig>();
    if (name == natural_rig::name) return f.template operator()<natural_rig>();
    if (name == integer_rig::name) return f.template operator()<integer_rig>();
    if (name == f2_rig::name) return f.template operator()<f2_rig>();
    if (name == rational_rig::name) return f.template operator()<rational_rig>();
    if (name == nonneg_rational_rig::name) return f.template operator()<nonneg_rational_rig>();
    if (name == rational_function_rig::name) return f.template operator()<rational_function_rig>();
    throw config_error("unknown rig '" + std::string(name) + "'");
}

inline bool is_rig_name(std::string_view name)
{
    bool found = false;
    for_each_rig([&]<rig R>() { found = found || R::name == name; });
    return found;
}

// ---------------------------------------------------------------------------
// Element helpers

template <rig R>
value_t<R> parse_literal(std::string_view text, std::size_t base = 0)
{
    return R::parse(text, base);
}

template <rig R>
std::string print_literal(const value_t<R>& a)
{
    return R::print(a);
}

/// n * 1 computed by double-and-add, so it works in every rig.
template <rig R>
value_t<R> from_natural(const big_int& n)
{
    if (n < 0) throw precondition_error("from_natural of a negative integer");
    value_t<R> result = R::zero();
    value_t<R> power = R::one();
    big_int k = n;
    while (k > 0) {
        if ((k & 1) != 0) result = R::add(result, power);
        power = R::add(power, power);
        k >>= 1;
    }
    return result;
}

template <ring R>
value_t<R> from_integer(const big_int& n)
{
    return n < 0 ? R::neg(from_natural<R>(-n)) : from_natural<R>(n);
}

/// Minus one, for rigs that have it.
template <ring R>
value_t<R> minus_one()
{
    return R::neg(R::one());
}

// ---------------------------------------------------------------------------
// Rig homomorphisms

/// Structure-preserving map between two rigs. Used for coercions and as the
/// scalar action when evaluating terms written over one rig into another.
template <rig Src, rig Dst>
struct rig_hom {
    using source = Src;
    using target = Dst;

    std::string name;
    std::function<value_t<Dst>(const value_t<Src>&)> map;

    value_t<Dst> operator()(const value_t<Src>& a) const { return map(a); }
};

template <rig R>
rig_hom<R, R> identity_hom()
{
    return {"id", [](const value_t<R>& a) { return a; }};
}

/// The unique rig map out of N (N is initial among rigs).
template <rig R>
rig_hom<natural_rig, R> natural_hom()
{
    return {"nat->" + std::string(R::name), [](const big_int& n) { return from_natural<R>(n); }};
}

/// The unique rig map out of Z into a ring.
template <ring R>
rig_hom<integer_rig, R> integer_hom()
{
    return {"int->" + std::string(R::name), [](const big_int& n) { return from_integer<R>(n); }};
}

inline rig_hom<rational_rig, rational_function_rig> constant_hom()
{
    return {"rat->ratfunc", [](const big_rational& q) { return rational_function::constant(q); }};
}

inline rig_hom<nonneg_rational_rig, rational_rig> nonneg_inclusion_hom()
{
    return {"nnrat->rat", [](const big_rational& q) { return q; }};
}

} // namespace rigprop
