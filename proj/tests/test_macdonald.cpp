#include <fstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "qtkern/macdonald.hpp"

using namespace qtkern;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }

const MacdonaldContext& ctx() {
    static const MacdonaldContext c;
    return c;
}

SymFunc el(Basis b, std::initializer_list<int> parts) { return SymFunc::basis_element(b, Partition(parts)); }

SymFunc at(const SymFunc& f, const Substitution& s) {
    SymFunc r{f.basis, f.degree, {}};
    for (const auto& [l, c] : f.coeffs) r.add(l, substitute(c, s));
    return r;
}

}  // namespace

TEST(Convert, ClassicalBases) {
    EXPECT_EQ(to_string(ctx().convert(el(Basis::e, {2, 1}), Basis::m)), "m[2,1]+(3)*m[1,1,1]");
    EXPECT_EQ(to_string(ctx().convert(el(Basis::p, {2, 1}), Basis::m)), "m[3]+m[2,1]");
    EXPECT_EQ(ctx().convert(el(Basis::e, {2}), Basis::m), el(Basis::m, {1, 1}));
    EXPECT_EQ(ctx().convert(el(Basis::g, {1}), Basis::p), el(Basis::p, {1}).scaled(R("(1-t)/(1-q)")));
}

TEST(Convert, EmptyPartition) {
    SymFunc one = el(Basis::P, {});
    EXPECT_EQ(ctx().convert(one, Basis::m), el(Basis::m, {}));
    EXPECT_EQ(ctx().b(Partition{}), RatFunc(1));
}

TEST(Convert, WrongDegreeRejected) {
    SymFunc bad{Basis::m, 3, {{Partition{2}, RatFunc(1)}}};
    EXPECT_THROW(ctx().to_p(bad), DomainError);
}

TEST(ScalarProduct, PowerSums) {
    EXPECT_EQ(ctx().scalar_product(el(Basis::p, {1}), el(Basis::p, {1})), R("(1-q)/(1-t)"));
    EXPECT_EQ(ctx().scalar_product(el(Basis::p, {2}), el(Basis::p, {2})), R("2*(1-q^2)/(1-t^2)"));
    EXPECT_TRUE(ctx().scalar_product(el(Basis::p, {2}), el(Basis::p, {1, 1})).zero());
    EXPECT_EQ(ctx().scalar_product(el(Basis::p, {1, 1}), el(Basis::p, {1, 1})), R("2*(1-q)^2/(1-t)^2"));
}

TEST(ScalarProduct, MonomialAndG) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                EXPECT_EQ(ctx().scalar_product(SymFunc::basis_element(Basis::m, a), SymFunc::basis_element(Basis::g, b)),
                          RatFunc(a == b ? 1 : 0));
}

TEST(MacdonaldP, SmallDegrees) {
    EXPECT_EQ(to_string(ctx().P(Partition{1})), "m[1]");
    EXPECT_EQ(to_string(ctx().P(Partition{2})), "m[2]+((1+q-t-q*t)/(1-q*t))*m[1,1]");
    EXPECT_EQ(ctx().P(Partition{1, 1}), el(Basis::m, {1, 1}));
    EXPECT_EQ(ctx().P(Partition{2, 1}).coefficient(Partition{1, 1, 1}), R("(1-t)*(2+q+t+2*q*t)/(1-q*t^2)"));
    EXPECT_EQ(ctx().P(Partition{3}).coefficient(Partition{3}), RatFunc(1));
}

TEST(MacdonaldP, Specializations) {
    const Substitution q_is_t{{sym("q"), var("t")}}, t_is_one{{sym("t"), RatFunc(1)}};
    // q = t gives Schur functions
    EXPECT_EQ(at(ctx().P(Partition{2, 1}), q_is_t), el(Basis::m, {2, 1}) + el(Basis::m, {1, 1, 1}).scaled(RatFunc(2)));
    SymFunc s22 = el(Basis::m, {2, 2}) + el(Basis::m, {2, 1, 1}) + el(Basis::m, {1, 1, 1, 1}).scaled(RatFunc(2));
    EXPECT_EQ(at(ctx().P(Partition{2, 2}), q_is_t), s22);
    // t = 1 gives monomials
    for (const auto& l : partitions_of(4)) EXPECT_EQ(at(ctx().P(l), t_is_one), SymFunc::basis_element(Basis::m, l));
}

TEST(MacdonaldB, Values) {
    EXPECT_EQ(to_string(ctx().b(Partition{1})), "(1-t)/(1-q)");
    EXPECT_EQ(ctx().b(Partition{2}), R("(1-t)*(1-q*t)/((1-q)*(1-q^2))"));
    EXPECT_EQ(ctx().b(Partition{1, 1}), R("(1-t)*(1-t^2)/((1-q)*(1-q*t))"));
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n))
            EXPECT_EQ(b_norm(ctx(), l, BMethod::inner_product), b_norm(ctx(), l, BMethod::factorized)) << l.to_string();
}

TEST(MacdonaldQ, IsDualToP) {
    SymFunc q = ctx().Q(Partition{2, 1});
    EXPECT_EQ(q, ctx().P(Partition{2, 1}).scaled(ctx().b(Partition{2, 1})));
    EXPECT_EQ(ctx().scalar_product(q, ctx().P(Partition{2, 1})), RatFunc(1));
    EXPECT_TRUE(ctx().scalar_product(q, ctx().P(Partition{3})).zero());
    EXPECT_EQ(ctx().convert(el(Basis::Q, {1}), Basis::m), el(Basis::m, {1}).scaled(R("(1-t)/(1-q)")));
}

TEST(Checks, DegreeChecksPass) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(triangularity_check(ctx(), n).verdict) << n;
        EXPECT_TRUE(orthogonality_check(ctx(), n).verdict) << n;
        EXPECT_TRUE(duality_check(ctx(), n).verdict) << n;
        EXPECT_TRUE(gram_order_check(ctx(), n).verdict) << n;
        EXPECT_TRUE(round_trip_check(ctx(), n).verdict) << n;
        EXPECT_TRUE(qtom_check(ctx(), n).verdict) << n;
    }
}

TEST(Tableau, PsiValues) {
    EXPECT_EQ(to_string(psi_skew(Partition{2}, Partition{1})), "(1+q-t-q*t)/(1-q*t)");
    EXPECT_EQ(psi_skew(Partition{1}, Partition{}), RatFunc(1));
    EXPECT_EQ(psi_skew(Partition{2}, Partition{2}), RatFunc(1));
}

TEST(Tableau, ExpansionMatchesGramSchmidt) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : partitions_of(n))
            for (int m = 1; m <= 3; ++m)
                EXPECT_EQ(tableau_expand(l, m), restrict_to(ctx(), ctx().P(l), m)) << l.to_string() << " m=" << m;
}

TEST(Tableau, PsiVanishesOffSemistandard) {
    EXPECT_TRUE(psi_vanishing_check(Partition{1, 1}, 1).empty());
    EXPECT_TRUE(psi_vanishing_check(Partition{2, 1}, 3).empty());
    EXPECT_TRUE(psi_vanishing_check(Partition{2, 2}, 2).empty());
}

TEST(Cauchy, LowDegrees) {
    for (int d = 0; d <= 2; ++d) EXPECT_TRUE(cauchy_check(ctx(), d, 2, 2).ok()) << d;
    EXPECT_THROW(cauchy_check(ctx(), 5, 2, 2), DomainError);
}

TEST(Json, RoundTrip) {
    SymFunc p = ctx().P(Partition{2, 1});
    auto j = to_json(p);
    EXPECT_EQ(j.at("basis"), "m");
    EXPECT_EQ(j.at("entries").at(0).at("partition"), "2,1");
    EXPECT_EQ(symfunc_from_json(j), p);
    EXPECT_EQ(symfunc_from_json(nlohmann::json::parse(j.dump())), p);
    EXPECT_THROW(parse_basis("s"), MalformedInput);
}

TEST(Cache, PersistsAcrossContexts) {
    auto dir = std::filesystem::temp_directory_path() / ("qtkern-test-cache-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    {
        MacdonaldContext a(dir);
        EXPECT_TRUE(a.disk()->degrees().empty());
        a.P(Partition{3});
        a.P(Partition{});
        EXPECT_EQ(a.disk()->degrees(), (std::vector<int>{3}));
    }
    MacdonaldContext b(dir);
    EXPECT_EQ(b.P(Partition{2, 1}), ctx().P(Partition{2, 1}));
    EXPECT_EQ(b.b(Partition{3}), ctx().b(Partition{3}));
    b.disk()->clear();
    EXPECT_TRUE(b.disk()->degrees().empty());
    std::filesystem::remove_all(dir);
}

TEST(Cache, CorruptFileIsRecomputed) {
    auto dir = std::filesystem::temp_directory_path() / ("qtkern-test-corrupt-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    DiskCache cache(dir);
    std::ofstream(cache.file_for(2)) << "{not json";
    MacdonaldContext c(dir);
    EXPECT_EQ(c.P(Partition{2}), ctx().P(Partition{2}));
    std::filesystem::remove_all(dir);
}
