// Acceptance criteria 1-12. Each criterion is one gtest case that checks the
// statement as written. A few statements are known not to hold verbatim; for
// those a "corrected" case runs the repaired form next to it. The binary
// prints one PASS/FAIL line per criterion, then exits 0 only when the set of
// failing criteria is exactly the documented one and every repair passes.
// --strict makes any failing criterion fatal.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <set>

#include <gtest/gtest.h>

#include "qtkern/suites.hpp"

using namespace qtkern;

namespace {

constexpr std::uint64_t kSeed = 1;

const MacdonaldContext& ctx() {
    static const MacdonaldContext c(default_cache_dir());
    return c;
}

struct Outcome {
    bool pass = true;
    std::size_t checks = 0;
    double seconds = 0;
    std::string first_failure;
};

std::map<std::string, Outcome>& outcomes() {
    static std::map<std::string, Outcome> o;
    return o;
}

// Records every check of one case and fails the gtest case on each miss.
class Tally {
public:
    explicit Tally(std::string key) : key_(std::move(key)), t0_(std::chrono::steady_clock::now()) {}
    ~Tally() {
        out_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        outcomes()[key_] = out_;
    }

    void add(const CheckRecord& r) {
        ++out_.checks;
        EXPECT_TRUE(r.verdict) << describe(r);
        if (!r.verdict && out_.pass) out_.first_failure = describe(r);
        out_.pass = out_.pass && r.verdict;
    }
    void add(const std::vector<CheckRecord>& rs) {
        for (const auto& r : rs) add(r);
    }

private:
    static std::string describe(const CheckRecord& r) {
        std::string s = r.check;
        if (!r.lambda.empty()) s += " lambda=" + r.lambda;
        if (!r.mu.empty()) s += " mu=" + r.mu;
        for (const auto& [k, v] : r.witness)
            if (k == "m" || k == "n" || k == "i" || k == "k") s += " " + k + "=" + v;
        if (!r.note.empty()) s += ": " + r.note;
        return s.size() > 300 ? s.substr(0, 297) + "..." : s;
    }

    std::string key_;
    std::chrono::steady_clock::time_point t0_;
    Outcome out_;
};

CheckRecord plain(const std::string& name, bool ok, const std::string& note = {}) {
    CheckRecord r{name};
    r.verdict = ok;
    r.note = note;
    return r;
}

}  // namespace

TEST(Acceptance, C01_MacdonaldConsistency) {
    Tally t("01");
    for (int n = 1; n <= 5; ++n) {
        for (const auto& l : partitions_of(n)) t.add(tableau_vs_gram(ctx(), l, 5));
        t.add(orthogonality_check(ctx(), n));
    }
}

TEST(Acceptance, C02_NormIdentity) {
    Tally t("02");
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : partitions_of(n)) t.add(b_methods_check(ctx(), l));
}

TEST(Acceptance, C03_KernelTripleIdentity) {
    Tally t("03");
    for (int n = 0; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) t.add(kernel_triple_check(ctx(), n, m, 5, kSeed + static_cast<std::uint64_t>(10 * n + m)));
}

TEST(Acceptance, C04_SpecializationLimit) {
    Tally t("04");
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n)) t.add(verify_tableau_theorem(ctx(), l, mu, kSeed));
}

TEST(Acceptance, C05_PsiVanishing) {
    Tally t("05");
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n))
            for (int m = 1; m <= 4; ++m) t.add(psi_vanishing_record(l, m));
}

TEST(Acceptance, C06_BAndPsiLimits) {
    Tally t("06");
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n))
            for (int m = l.length(); m <= 4; ++m) t.add(verify_b_psi(ctx(), l, m, kSeed));
}

TEST(Acceptance, C07_FWellDefined) {
    Tally t("07");
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n)) {
            t.add(F_routes_check(ctx(), l, 3, kSeed));
            if (n >= 3) t.add(wheel_record("F " + l.to_string(), F_lambda(ctx(), l, FRoute::via_g), 3, kSeed));
        }
}

TEST(Acceptance, C08_PochhammerIdentities) {
    Tally t("08");
    t.add(verify_pochhammer_lemmas(5, 2, kSeed));
}

// The displayed identities, including Lambda*_k with every Lambda_i (i < k)
// taken at p^{k-1} z.
TEST(Acceptance, C09_CurrentStructure) {
    Tally t("09");
    for (int m = 2; m <= 4; ++m) {
        t.add(verify_lambda_ope(m));
        for (auto r : verify_lambda_identities(m)) {
            r.informational = false;
            t.add(r);
        }
        t.add(verify_commutants(m));
    }
}

TEST(Acceptance, C09_CurrentStructure_corrected) {
    Tally t("09c");
    for (int m = 2; m <= 4; ++m) {
        t.add(verify_lambda_ope(m));
        for (const auto& r : verify_lambda_identities(m))
            if (!r.informational) t.add(r);
        t.add(verify_commutants(m));
    }
}

TEST(Acceptance, C10_DeltaRelations) {
    Tally t("10");
    for (int m = 2; m <= 3; ++m) {
        t.add(verify_quadratic(m, QuadraticRelation::Att).record());
        t.add(verify_quadratic(m, QuadraticRelation::Btt_star).record());
        for (int i = 1; i < m; ++i) {
            t.add(verify_quadratic(m, QuadraticRelation::TT_1i, i).record());
            t.add(verify_quadratic_series(m, i));
        }
        t.add(verify_quadratic(m, QuadraticRelation::TT_mm).record());
    }
}

TEST(Acceptance, C10_DeltaRelations_corrected) {
    Tally t("10c");
    for (int m = 2; m <= 3; ++m) {
        t.add(verify_quadratic(m, QuadraticRelation::Att).record());
        t.add(verify_quadratic(m, QuadraticRelation::Btt_star).record());
        for (int i = 1; i < m; ++i) {
            t.add(verify_quadratic(m, QuadraticRelation::TT_1i, i, RelationForm::corrected).record());
            t.add(verify_quadratic_series(m, i, RelationForm::corrected));
        }
        t.add(verify_quadratic(m, QuadraticRelation::TT_mm, 0, RelationForm::corrected).record());
    }
}

TEST(Acceptance, C11_CorrelationKernel) {
    Tally t("11");
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) t.add(verify_kernel_correlation(ctx(), m, n, 5, kSeed, CorrelationForm::literal));
}

TEST(Acceptance, C11_CorrelationKernel_corrected) {
    Tally t("11c");
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            t.add(verify_kernel_correlation(ctx(), m, n, 5, kSeed, CorrelationForm::corrected));
}

TEST(Acceptance, C12_CauchyKernel) {
    Tally t("12");
    t.add(cauchy_record(ctx(), 3, 3, 3));
    t.add(plain("cauchy_lower_degrees", cauchy_check(ctx(), 2, 3, 3).ok() && cauchy_check(ctx(), 1, 3, 3).ok()));
}

namespace {

const std::pair<const char*, const char*> kCriteria[] = {
    {"01", "Macdonald consistency (Gram-Schmidt = tableau sum, orthogonality), n <= 5"},
    {"02", "norm identity, inner product vs factorized b, |lambda| <= 5"},
    {"03", "kernel triple identity, n <= 3, m <= 3, 5 points each"},
    {"04", "specialization limit of F_mu/F_lambda is delta, n <= 4"},
    {"05", "psi_T vanishes off semistandard fillings, |lambda| <= 4, m <= 4"},
    {"06", "b and psi limits, n <= 4, m = l(lambda)..4"},
    {"07", "F via e = F via g, wheel conditions, |lambda| <= 4"},
    {"08", "q-Pochhammer identities, theta, rho <= 5"},
    {"09", "Lambda current identities and A, B = f, 2 <= m <= 4"},
    {"10", "delta relations Att, Btt*, TT_1i, TT_mm, m = 2, 3"},
    {"11", "correlator equals K_n(y,z;q,p), n <= 3, m = 2, 3"},
    {"12", "Cauchy kernel to degree 3 in 3+3 variables"},
};

// Criteria whose statement fails verbatim; the repair runs as "<id>c".
const std::set<std::string> kDocumentedFailures{"09", "10", "11"};

}  // namespace

int main(int argc, char** argv) {
    bool strict = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--strict") == 0) strict = true;
    ::testing::InitGoogleTest(&argc, argv);
    const int gtest_status = RUN_ALL_TESTS();

    std::cout << "\n== acceptance criteria ==\n";
    bool expected_shape = true;
    int passed = 0;
    for (const auto& [id, text] : kCriteria) {
        auto it = outcomes().find(id);
        if (it == outcomes().end()) {
            std::cout << "SKIP " << id << "  " << text << " (filtered out)\n";
            continue;
        }
        const Outcome& o = it->second;
        passed += o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << id << "  " << text << "  [" << o.checks << " checks, " << std::fixed
                  << std::setprecision(1) << o.seconds << " s]\n";
        if (!o.pass) std::cout << "       first failure: " << o.first_failure << "\n";
        auto c = outcomes().find(std::string(id) + "c");
        if (c != outcomes().end())
            std::cout << "       corrected form: " << (c->second.pass ? "pass" : "fail") << " [" << c->second.checks
                      << " checks, " << c->second.seconds << " s]\n";
        const bool documented = kDocumentedFailures.count(id) > 0;
        if (o.pass == documented) expected_shape = false;
        if (documented && (c == outcomes().end() || !c->second.pass)) expected_shape = false;
    }
    std::cout << passed << " of " << std::size(kCriteria) << " criteria pass as stated";
    if (!kDocumentedFailures.empty()) {
        std::cout << "; documented failures:";
        for (const auto& id : kDocumentedFailures) std::cout << " " << id;
    }
    std::cout << "\n";
    if (strict) return gtest_status;
    if (!expected_shape) std::cout << "unexpected acceptance outcome\n";
    return expected_shape ? 0 : 1;
}
