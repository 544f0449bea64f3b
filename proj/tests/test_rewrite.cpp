#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace rigprop;
using namespace rigprop::testing;

namespace {

using N = natural_rig;
using T = term<N>;

template <rig R>
scalar_bindings<R> sample_bindings(gen& g)
{
    return {{"r", random_value<R>(g)}, {"s", random_value<R>(g)}};
}

template <rig R>
rule_set<R> only(const rewrite_rule<R>& rule)
{
    return {{rule}, rule.requires_flags};
}

} // namespace

TEST(Rewrite, BaseRulesInRegistrationOrder)
{
    const auto rs = base_rules<N>();
    std::vector<std::string> names;
    for (const auto& r : rs.rules) names.push_back(r.name);
    EXPECT_EQ(names, (std::vector<std::string>{"monoid-unit", "monoid-assoc", "monoid-comm", "counit-left",
                                               "comonoid-coassoc", "comonoid-cocomm", "bimonoid", "bimonoid-unit",
                                               "bimonoid-counit", "bimonoid-void", "phi-sum", "phi-product",
                                               "phi-one", "phi-zero"}));
    EXPECT_EQ(rs.find("phi-sum").direction, rule_direction::left_to_right);
    EXPECT_EQ(rs.find("phi-product").direction, rule_direction::left_to_right);
    EXPECT_EQ(rs.find("phi-one").direction, rule_direction::both);

    EXPECT_EQ(instantiate(rs.find("phi-one").lhs, {}), T::scalar(big_int(1)));
    EXPECT_EQ(instantiate(rs.find("phi-one").rhs, {}), T::id(1));
    EXPECT_EQ(instantiate(rs.find("counit-left").lhs, {}), strictify(parse_term<N>("delta ; (eps * id[1])")));
    EXPECT_EQ(instantiate(rs.find("bimonoid-unit").lhs, {}), parse_term<N>("eta ; delta"));
    EXPECT_EQ(instantiate(rs.find("bimonoid-unit").rhs, {}), parse_term<N>("eta * eta"));
    EXPECT_THROW(rs.find("nonexistent"), config_error);
}

TEST(Rewrite, ExtendedRulesFollowFlags)
{
    EXPECT_EQ(auto_rules<boolean_rig>().rules.size(), 15u);
    EXPECT_TRUE(auto_rules<boolean_rig>().contains("special"));
    EXPECT_EQ(auto_rules<N>().rules.size(), 14u);
    EXPECT_TRUE(auto_rules<f2_rig>().contains("char-two"));
    EXPECT_TRUE(auto_rules<f2_rig>().contains("antipode-left"));
    EXPECT_TRUE(auto_rules<integer_rig>().contains("antipode-right"));
    EXPECT_FALSE(auto_rules<integer_rig>().contains("special"));

    const auto special = extended_rules<boolean_rig>({rig_flag::idempotent_add}).find("special");
    EXPECT_EQ(instantiate(special.lhs, {}), parse_term<boolean_rig>("delta ; mu"));
    EXPECT_EQ(instantiate(special.rhs, {}), term<boolean_rig>::id(1));
    const auto chartwo = extended_rules<f2_rig>({rig_flag::char_two}).find("char-two");
    EXPECT_EQ(instantiate(chartwo.rhs, {}), parse_term<f2_rig>("eps ; eta"));
    const auto antipode = extended_rules<integer_rig>({rig_flag::additive_inverses}).find("antipode-left");
    EXPECT_EQ(instantiate(antipode.lhs, {}), strictify(parse_term<integer_rig>("delta ; (scalar(-1) * id[1]) ; mu")));

    EXPECT_THROW(extended_rules<N>({rig_flag::idempotent_add}), config_error);
    EXPECT_THROW(extended_rules<integer_rig>({rig_flag::char_two}), config_error);
    EXPECT_THROW(parse_rule_flag("frobenius"), config_error);
    EXPECT_EQ(parse_rule_flag("chartwo"), rig_flag::char_two);
}

TEST(Rewrite, EveryRuleIsSoundInEveryApplicableRig)
{
    gen g(51);
    for_each_rig([&]<rig R>() {
        for (const auto& rule : auto_rules<R>().rules) {
            EXPECT_TRUE(R::flags.includes(rule.requires_flags));
            for (int n = 0; n < 20; ++n) {
                const auto env = sample_bindings<R>(g);
                const term<R> l = instantiate(rule.lhs, env);
                const term<R> r = instantiate(rule.rhs, env);
                EXPECT_EQ(arity_of(l), arity_of(r)) << rule.name;
                EXPECT_EQ(eval(l), eval(r)) << rule.name << " over " << R::name;
            }
        }
    });
}

TEST(Rewrite, ApplyAtExamples)
{
    const auto rs = base_rules<N>();
    EXPECT_EQ(apply_at(T::scalar(big_int(1)), {}, rs.find("phi-one")), T::id(1));
    EXPECT_EQ(apply_at(T::id(1), {}, rs.find("phi-one"), orientation::backward), T::scalar(big_int(1)));

    // Under a par context.
    const T t = parse_term<N>("(swap ; mu) * delta");
    const T out = apply_at(t, {0}, rs.find("monoid-comm"));
    EXPECT_EQ(out, parse_term<N>("mu * delta"));
    EXPECT_EQ(eval(out), eval(t));

    EXPECT_THROW(apply_at(t, {1}, rs.find("monoid-comm")), no_match);
    EXPECT_THROW(apply_at(t, {0, 0, 0}, rs.find("monoid-comm")), path_error);
    EXPECT_THROW(apply_at(T::scalar(big_int(6)), {}, rs.find("phi-product"), orientation::backward), config_error);
}

TEST(Rewrite, ApplyMatchesInsideLongerChains)
{
    const auto rs = base_rules<N>();
    // The rule's two stages are the tail of a three-stage chain.
    const T t = parse_term<N>("eta ; delta ; (eps * id[1])");
    EXPECT_EQ(apply_at(t, {1}, rs.find("counit-left")), T::eta());
    // ...and the head of another.
    const T u = parse_term<N>("eta ; delta ; swap ; mu");
    EXPECT_EQ(apply_at(u, {}, rs.find("bimonoid-unit")), strictify(parse_term<N>("(eta * eta) ; swap ; mu")));
    // Scalar variables bind consistently.
    EXPECT_EQ(apply_at(parse_term<N>("scalar(2) ; scalar(3)"), {}, rs.find("phi-product")), T::scalar(big_int(6)));
    EXPECT_EQ(apply_at(parse_term<N>("delta ; (scalar(2) * scalar(3)) ; mu"), {}, rs.find("phi-sum")),
              T::scalar(big_int(5)));
}

TEST(Rewrite, RandomSingleStepsPreserveEval)
{
    gen g(52);
    int applied = 0;
    for_each_rig([&]<rig R>() {
        const auto rs = auto_rules<R>();
        int local = 0;
        while (local < 80) {
            const term<R> t = random_term<R>(g);
            const auto redexes = find_redexes(t, rs);
            if (redexes.empty()) continue;
            const auto& rx = redexes[g.size(0, redexes.size() - 1)];
            const term<R> out = apply_at(t, rx.path, rs.rules[rx.rule_index], rx.direction);
            EXPECT_EQ(arity_of(out), arity_of(t));
            EXPECT_EQ(eval(out), eval(t)) << print_term(t) << " via " << rs.rules[rx.rule_index].name;
            ++local;
        }
        applied += local;
    });
    EXPECT_GE(applied, 500);
}

TEST(Rewrite, BoundedRewritingExamples)
{
    const auto rs = base_rules<N>();
    const auto a = rewrite_bounded(parse_term<N>("eta ; (delta ; (eps * id[1]))"), rs, 10);
    EXPECT_EQ(a.result, T::eta());
    EXPECT_LE(a.trace.size(), 2u);
    EXPECT_FALSE(a.bound_reached);

    const auto b = rewrite_bounded(T::mu(), rs, 10);
    EXPECT_TRUE(b.trace.empty());
    EXPECT_EQ(b.result, T::mu());

    const auto c = rewrite_bounded(parse_term<N>("scalar(1) ; scalar(1)"), rs, 10);
    EXPECT_EQ(c.result, T::id(1));
    ASSERT_EQ(c.trace.size(), 2u);
    EXPECT_EQ(c.trace[0].rule, "phi-product");
    EXPECT_EQ(c.trace[1].rule, "phi-one");
    EXPECT_EQ(format_step(c.trace[0]), "step 1: phi-product at root : scalar(1) ; scalar(1) => scalar(1)");
    EXPECT_EQ(format_trace(c),
              "step 1: phi-product at root : scalar(1) ; scalar(1) => scalar(1)\n"
              "step 2: phi-one at root : scalar(1) => id[1]\n");
}

TEST(Rewrite, BoundIsRespectedAndMarked)
{
    const auto rs = base_rules<N>();
    const T t = parse_term<N>("scalar(2) ; scalar(3) ; scalar(5) ; scalar(7)");
    const auto r = rewrite_bounded(t, rs, 1);
    EXPECT_EQ(r.trace.size(), 1u);
    EXPECT_TRUE(r.bound_reached);
    EXPECT_NE(format_trace(r).find("bound reached"), std::string::npos);
    EXPECT_EQ(eval(r.result), eval(t));

    const auto zero = rewrite_bounded(t, rs, 0);
    EXPECT_TRUE(zero.trace.empty());
    EXPECT_TRUE(zero.bound_reached);
    EXPECT_EQ(zero.result, strictify(t));

    const auto full = rewrite_bounded(t, rs, 10);
    EXPECT_EQ(full.result, T::scalar(big_int(210)));
    EXPECT_FALSE(full.bound_reached);
}

TEST(Rewrite, DeterministicTraces)
{
    gen g(53);
    const auto rs = auto_rules<integer_rig>();
    for (int n = 0; n < 30; ++n) {
        const auto t = random_term<integer_rig>(g);
        EXPECT_EQ(format_trace(rewrite_bounded(t, rs, 15)), format_trace(rewrite_bounded(t, rs, 15)));
    }
}

TEST(Rewrite, BoundedRewritingPreservesEval)
{
    gen g(54);
    for_each_rig([&]<rig R>() {
        const auto rs = auto_rules<R>();
        for (int n = 0; n < 30; ++n) {
            const term<R> t = random_term<R>(g);
            const auto r = rewrite_bounded(t, rs, 25);
            EXPECT_TRUE(equal_terms(t, r.result)) << print_term(t);
            EXPECT_LE(r.trace.size(), 25u);
        }
    });
}

TEST(Rewrite, EachBaseRelationDerivesItsRightSide)
{
    gen g(55);
    for_each_rig([&]<rig R>() {
        for (const auto& rule : base_rules<R>().rules) {
            const auto env = sample_bindings<R>(g);
            const term<R> lhs = instantiate(rule.lhs, env);
            const auto r = rewrite_bounded(lhs, only(rule), 3);
            EXPECT_EQ(r.result, strictify(instantiate(rule.rhs, env))) << rule.name << " over " << R::name;
            EXPECT_LE(r.trace.size(), 3u);
        }
    });
}
