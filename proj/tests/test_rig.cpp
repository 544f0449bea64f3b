#include <gtest/gtest.h>

#include <type_traits>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rigprop;
using rigprop::testing::gen;
using rigprop::testing::random_value;

template <class R>
class RigLaws : public ::testing::Test {};

using AllRigs = ::testing::Types<boolean_rig, natural_rig, integer_rig, f2_rig, rational_rig, nonneg_rational_rig,
                                 rational_function_rig>;
TYPED_TEST_SUITE(RigLaws, AllRigs);

TYPED_TEST(RigLaws, CommutativeRigAxiomsOnSamples)
{
    using R = TypeParam;
    gen g(1);
    for (int n = 0; n < 200; ++n) {
        const auto a = random_value<R>(g), b = random_value<R>(g), c = random_value<R>(g);
        EXPECT_EQ(R::add(R::add(a, b), c), R::add(a, R::add(b, c)));
        EXPECT_EQ(R::add(a, b), R::add(b, a));
        EXPECT_EQ(R::add(a, R::zero()), a);
        EXPECT_EQ(R::mul(R::mul(a, b), c), R::mul(a, R::mul(b, c)));
        EXPECT_EQ(R::mul(a, b), R::mul(b, a));
        EXPECT_EQ(R::mul(a, R::one()), a);
        EXPECT_EQ(R::mul(a, R::add(b, c)), R::add(R::mul(a, b), R::mul(a, c)));
        EXPECT_EQ(R::mul(a, R::zero()), R::zero());
    }
}

TYPED_TEST(RigLaws, FlagsMatchArithmetic)
{
    using R = TypeParam;
    gen g(2);
    bool idempotent = true;
    for (int n = 0; n < 200; ++n) {
        const auto a = random_value<R>(g);
        idempotent = idempotent && R::add(a, a) == a;
    }
    EXPECT_EQ(idempotent, R::flags.contains(rig_flag::idempotent_add));
    EXPECT_EQ(R::add(R::one(), R::one()) == R::zero(), R::flags.contains(rig_flag::char_two));
    EXPECT_EQ(ring<R>, R::flags.contains(rig_flag::additive_inverses));
    if constexpr (ring<R>) {
        for (int n = 0; n < 200; ++n) {
            const auto a = random_value<R>(g);
            EXPECT_EQ(R::add(a, R::neg(a)), R::zero());
        }
    }
}

TYPED_TEST(RigLaws, PrintThenParseIsIdentity)
{
    using R = TypeParam;
    gen g(3);
    for (int n = 0; n < 200; ++n) {
        const auto a = random_value<R>(g);
        EXPECT_EQ(R::parse(R::print(a)), a) << R::print(a);
    }
}

TYPED_TEST(RigLaws, NaturalHomPreservesStructure)
{
    using R = TypeParam;
    gen g(4);
    const auto h = natural_hom<R>();
    EXPECT_EQ(h(big_int(0)), R::zero());
    EXPECT_EQ(h(big_int(1)), R::one());
    for (int n = 0; n < 200; ++n) {
        const big_int a = random_value<natural_rig>(g) % 50, b = random_value<natural_rig>(g) % 50;
        EXPECT_EQ(h(a + b), R::add(h(a), h(b)));
        EXPECT_EQ(h(a * b), R::mul(h(a), h(b)));
    }
}

TEST(Rig, ExamplesFromTheDefinitions)
{
    EXPECT_EQ(boolean_rig::add(true, true), bit{true});
    EXPECT_EQ(f2_rig::add(true, true), bit{false});
    EXPECT_EQ(natural_rig::add(0, 7), big_int(7));
    EXPECT_EQ(boolean_rig::mul(true, true), bit{true});
    EXPECT_EQ(integer_rig::mul(-1, -1), big_int(1));
    EXPECT_EQ(integer_rig::print(-5), "-5");
    EXPECT_EQ(f2_rig::print(true), "1");
    EXPECT_EQ(boolean_rig::parse("true"), bit{true});
    EXPECT_EQ(rational_rig::parse("3/6"), big_rational(1, 2));
    EXPECT_EQ(rational_rig::print(rational_rig::parse("3/6")), "1/2");
}

TEST(Rig, RationalFunctionProductMatchesConvolution)
{
    const auto p = rational_function_rig::parse("s+1");
    const auto q = rational_function_rig::parse("s-1");
    const auto prod = rational_function_rig::mul(p, q);
    EXPECT_EQ(rational_function_rig::print(prod), "s^2-1");
    EXPECT_EQ(prod.numerator().coefficients(),
              rigprop::testing::convolve(p.numerator().coefficients(), q.numerator().coefficients()));

    gen g(5);
    for (int n = 0; n < 100; ++n) {
        const auto a = rigprop::testing::random_polynomial(g, 3);
        const auto b = rigprop::testing::random_polynomial(g, 3);
        EXPECT_EQ((a * b).coefficients(), rigprop::testing::convolve(a.coefficients(), b.coefficients()));
    }
}

TEST(Rig, RationalFunctionCanonicalForm)
{
    const auto f = rational_function_rig::parse("(s^2+1)/(2*s)");
    EXPECT_EQ(f.denominator(), polynomial::variable());
    EXPECT_EQ(f.numerator(), polynomial({big_rational(1, 2), big_rational(0), big_rational(1, 2)}));
    EXPECT_EQ(rational_function_rig::print(f), "(1/2*s^2+1/2)/(s)");

    // Common factors cancel and the denominator is monic.
    const auto g = rational_function_rig::parse("(2*s^2-2)/(4*s+4)");
    EXPECT_EQ(rational_function_rig::print(g), "1/2*s-1/2");

    const auto h = rational_function_rig::parse("(s)/(s+2)");
    EXPECT_EQ(rational_function_rig::print(h), "(s)/(s+2)");
    EXPECT_EQ(rational_function_rig::parse(rational_function_rig::print(h)), h);
}

TEST(Rig, PolynomialGcdDividesBoth)
{
    gen g(6);
    for (int n = 0; n < 100; ++n) {
        const auto a = rigprop::testing::random_polynomial(g, 3);
        const auto b = rigprop::testing::random_polynomial(g, 3);
        const auto d = polynomial::gcd(a, b);
        if (d.is_zero()) continue;
        EXPECT_EQ(d.leading(), 1);
        EXPECT_TRUE(polynomial::divmod(a, d).second.is_zero());
        EXPECT_TRUE(polynomial::divmod(b, d).second.is_zero());
    }
}

TEST(Rig, BigIntegersDoNotOverflow)
{
    big_int x = 1;
    for (int k = 0; k < 100; ++k) x = natural_rig::mul(x, 10);
    EXPECT_EQ(natural_rig::print(x), "1" + std::string(100, '0'));
}

TEST(Rig, LiteralErrors)
{
    EXPECT_THROW(natural_rig::parse("-1"), domain_error);
    EXPECT_THROW(nonneg_rational_rig::parse("-1/2"), domain_error);
    EXPECT_THROW(rational_rig::parse("1/0"), parse_error);
    EXPECT_THROW(f2_rig::parse("2"), parse_error);
    EXPECT_THROW(boolean_rig::parse("yes"), parse_error);
    EXPECT_THROW(rational_function_rig::parse("(s)/(0)"), parse_error);
    EXPECT_THROW(integer_rig::parse("12x"), parse_error);
    try {
        integer_rig::parse("12x", 40);
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_GE(e.span().start, 40u);
        EXPECT_LE(e.span().end, 43u);
    }
}

TEST(Rig, RuntimeLookup)
{
    int visited = 0;
    for_each_rig([&]<rig R>() {
        ++visited;
        EXPECT_TRUE(is_rig_name(R::name));
        EXPECT_EQ(with_rig(R::name, []<rig S>() { return std::string(S::name); }), R::name);
    });
    EXPECT_EQ(visited, 7);
    EXPECT_FALSE(is_rig_name("complex"));
    EXPECT_THROW(with_rig("complex", []<rig S>() { return 0; }), config_error);
}

TEST(Rig, InterRigHomomorphisms)
{
    gen g(7);
    const auto into_int = integer_hom<rational_rig>();
    const auto consts = constant_hom();
    const auto incl = nonneg_inclusion_hom();
    for (int n = 0; n < 200; ++n) {
        const auto a = random_value<integer_rig>(g), b = random_value<integer_rig>(g);
        EXPECT_EQ(into_int(a + b), into_int(a) + into_int(b));
        EXPECT_EQ(into_int(a * b), into_int(a) * into_int(b));
        const auto p = random_value<rational_rig>(g), q = random_value<rational_rig>(g);
        EXPECT_EQ(consts(p + q), consts(p) + consts(q));
        EXPECT_EQ(consts(p * q), consts(p) * consts(q));
        const auto u = random_value<nonneg_rational_rig>(g), v = random_value<nonneg_rational_rig>(g);
        EXPECT_EQ(incl(u + v), incl(u) + incl(v));
        EXPECT_EQ(incl(u * v), incl(u) * incl(v));
    }
    EXPECT_EQ(natural_hom<boolean_rig>()(big_int(2)), bit{true});
    EXPECT_EQ(natural_hom<f2_rig>()(big_int(2)), bit{false});
}

// Operands from different rigs do not type-check; the rig is part of the type.
static_assert(!std::is_invocable_v<decltype(&natural_rig::add), bit, bit>);
static_assert(!std::is_convertible_v<matrix<natural_rig>, matrix<boolean_rig>>);
