#include <gtest/gtest.h>

#include "qtkern/shuffle.hpp"
#include "qtkern/shuffle/checks.hpp"

using namespace qtkern;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }

const MacdonaldContext& ctx() {
    static const MacdonaldContext c;
    return c;
}

Points pts(std::initializer_list<const char*> v) {
    Points out;
    for (const char* s : v) out.push_back(R(s));
    return out;
}

}  // namespace

TEST(Omega, Values) {
    Parameters par;
    EXPECT_EQ(omega_eval(R("z"), R("w"), par), R("(z-w/q)*(z-t*w)*(z-q*w/t)/(z-w)^3"));
    EXPECT_TRUE(omega_eval(par.q1() * R("w"), R("w"), par).zero());
    EXPECT_TRUE(omega_eval(par.q2() * R("w"), R("w"), par).zero());
    EXPECT_TRUE(omega_eval(par.q3() * R("w"), R("w"), par).zero());
    EXPECT_THROW(omega_eval(R("z"), R("z"), par), PoleError);
}

TEST(Omega, GammaPairCases) {
    Parameters par;
    EXPECT_EQ(gamma_pair(1, 1, R("z"), R("w"), par), epsilon_pair(R("z"), R("w"), par.t));
    EXPECT_EQ(gamma_pair(1, 2, R("z"), R("w"), par), omega_eval(R("z"), R("w"), par));
    EXPECT_EQ(gamma_pair(2, 1, R("z"), R("w"), par), omega_eval(R("w"), R("z"), par));
}

TEST(Epsilon, Values) {
    EXPECT_EQ(epsilon_eval(0, {}, R("p")), RatFunc(1));
    EXPECT_EQ(epsilon_eval(1, pts({"z"}), R("p")), RatFunc(1));
    EXPECT_EQ(epsilon_eval(2, pts({"z", "w"}), R("p")), R("(z-p*w)*(z-w/p)/(z-w)^2"));
    EXPECT_EQ(epsilon_eval(2, pts({"z", "w"}), R("p")), epsilon_eval(2, pts({"w", "z"}), R("p")));
    EXPECT_EQ(epsilon_eval(2, pts({"2", "3"}), R("5")), RatFunc(Scalar(-91, 5)));
    EXPECT_THROW(epsilon_eval(2, pts({"z"}), R("p")), DomainError);
}

TEST(Star, SimpleProduct) {
    Parameters par;
    AElement one = AElement::epsilon(Partition{1}, EpsilonParameter::t);
    Points z = pts({"z1", "z2"});
    EXPECT_EQ(star_eval(one, one, z, par), (omega_eval(z[0], z[1], par) + omega_eval(z[1], z[0], par)) / 2);
    EXPECT_THROW(star_eval(one, one, pts({"z1"}), par), DomainError);
}

TEST(Star, ConstantIsUnit) {
    Parameters par = Parameters::numeric(Scalar(2, 3), Scalar(5, 7));
    AElement one = AElement::constant(RatFunc(1));
    AElement e2 = AElement::epsilon(Partition{2}, EpsilonParameter::q);
    Points z = pts({"2", "-3"});
    EXPECT_EQ(star_eval(one, e2, z, par), e2.evaluate(z, par));
}

TEST(Star, CommutativeAndAssociative) {
    for (const auto& r : star_checks(1, 1, 1, 5)) EXPECT_TRUE(r.verdict) << r.check;
    for (const auto& r : star_checks(1, 2, 1, 6)) EXPECT_TRUE(r.verdict) << r.check;
}

TEST(Wheel, EpsilonAndF) {
    EXPECT_TRUE(wheel_check(AElement::epsilon(Partition{3}, EpsilonParameter::t), 2, 1));
    EXPECT_TRUE(wheel_check(AElement::epsilon(Partition{2, 1}, EpsilonParameter::q), 2, 2));
    EXPECT_TRUE(wheel_check(F_lambda(ctx(), Partition{2, 1}, FRoute::via_g), 2, 3));
}

TEST(Wheel, DetectsViolation) {
    // the constant function 1 in three variables is not in the wheel ideal
    ParametricEvaluator one = [](const Points&, const Parameters&) { return RatFunc(1); };
    EXPECT_FALSE(wheel_check(one, 3, 1, 1));
    EXPECT_TRUE(wheel_check(one, 2, 1, 1));
}

TEST(F, DegreeOne) {
    Parameters par;
    EXPECT_EQ(F_lambda(ctx(), Partition{1}, FRoute::via_g).evaluate(pts({"z"}), par), R("-1/(1-t)"));
    EXPECT_EQ(F_lambda(ctx(), Partition{1}, FRoute::via_e).evaluate(pts({"z"}), par), R("-1/(1-t)"));
}

TEST(F, RoutesAgree) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : partitions_of(n)) EXPECT_TRUE(F_routes_check(ctx(), l, 2, 9).verdict) << l.to_string();
}

TEST(F, IotaChecks) {
    for (const auto& l : partitions_of(2))
        for (const auto& r : iota_checks(ctx(), l, 4)) EXPECT_TRUE(r.verdict) << r.check << " " << l.to_string();
}

TEST(Kernel, SmallCases) {
    EXPECT_EQ(kernel_K(ctx(), 0, KernelForm::gamma_sum, pts({"x1"}), {}), RatFunc(1));
    for (auto form : {KernelForm::gamma_sum, KernelForm::eps_sum, KernelForm::QF_sum})
        EXPECT_EQ(to_string(kernel_K(ctx(), 1, form, pts({"x1", "x2"}), pts({"z1"}))), "-(x1+x2)/(1-q)");
    EXPECT_THROW(kernel_K(ctx(), 2, KernelForm::gamma_sum, pts({"x1"}), pts({"z1"})), DomainError);
}

TEST(Kernel, DegreeTwoOneVariable) {
    // one x: only i1 = i2 = 1, so K_2 = x^2 eps_2(z;t) / (2 (1-q)^2)
    Points z = pts({"z1", "z2"});
    RatFunc expected = R("x^2") * epsilon_pair(z[0], z[1], R("t")) / (2 * R("(1-q)^2"));
    for (auto form : {KernelForm::gamma_sum, KernelForm::eps_sum, KernelForm::QF_sum})
        EXPECT_EQ(kernel_K(ctx(), 2, form, pts({"x"}), z), expected);
}

TEST(Kernel, TripleCheck) {
    EXPECT_TRUE(kernel_triple_check(ctx(), 2, 2, 2, 7).verdict);
}

TEST(Specialize, Points) {
    Parameters par;
    SpecializationPlan plan = tilde_plan(Partition{2, 1}, par);
    Points z = specialization_points(plan, pts({"y"}));
    ASSERT_EQ(z.size(), 3u);
    EXPECT_EQ(z[0], R("y"));
    EXPECT_EQ(z[1], R("y/q"));
    EXPECT_EQ(z[2], R("zeta*y"));
    EXPECT_THROW(specialization_points(plan, pts({"y", "w"})), DomainError);
    SpecializationPlan plain{Partition{1, 1}, R("p"), std::nullopt};
    EXPECT_EQ(specialization_points(plain, pts({"a", "b"})), pts({"a", "b"}));
    Evaluator sum = [](const Points& p) { return p[0] + p[1]; };
    EXPECT_EQ(specialize(sum, plain, pts({"a", "b"})), R("a+b"));
}

TEST(Specialize, SpecializationLimitSmall) {
    for (int n = 1; n <= 2; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n)) EXPECT_TRUE(verify_tableau_theorem(ctx(), l, mu, 3).verdict);
    for (const auto& r : verify_b_psi(ctx(), Partition{2, 1}, 2, 3)) EXPECT_TRUE(r.verdict) << r.check << " " << r.note;
}

TEST(Boundary, F21) {
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(boundary_check(ctx(), Partition{2, 1}, k, 2).verdict) << k;
}

TEST(PochhammerIdentities, AllHold) {
    for (const auto& r : verify_pochhammer_lemmas(3, 1, 3)) EXPECT_TRUE(r.verdict) << r.check;
}

TEST(PochhammerIdentities, FactoredComparisonCatchesMutation) {
    using detail::BinomialProduct;
    const RatFunc q = q_pow(1), t = t_pow(1);
    BinomialProduct lhs, rhs, mutated;
    detail::gamma_factors(lhs, true, q_pow(-1), q_pow(-2));
    rhs.one_minus_u(t, 2).one_minus_u(q, -2).pochhammer_u(q, 2).pochhammer_u(t, 2, -1);
    mutated.one_minus_u(t, 2).one_minus_u(q, -2).pochhammer_u(q, 3).pochhammer_u(t, 2, -1);
    EXPECT_TRUE(lhs == rhs) << lhs.describe() << " vs " << rhs.describe();
    EXPECT_FALSE(lhs == mutated);
    BinomialProduct a, b;
    a.one_minus_v(q).one_minus_v(t);
    b.one_minus_v(t).one_minus_v(q);
    EXPECT_TRUE(a == b);
    b.one_minus_v(q, -1);
    EXPECT_FALSE(a == b);
}

TEST(Sampler, Deterministic) {
    Sampler a(42), b(42);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(a.rational(), b.rational());
    Points p = Sampler(1).points(6);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) EXPECT_NE(p[i], p[j]);
}
