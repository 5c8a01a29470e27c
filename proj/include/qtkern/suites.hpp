#pragma once

#include <chrono>
#include <functional>

#include "qtkern/macdonald.hpp"
#include "qtkern/shuffle.hpp"
#include "qtkern/shuffle/checks.hpp"
#include "qtkern/wfock.hpp"

namespace qtkern {

inline constexpr int kMaxSuiteSize = 6;

struct SuiteOptions {
    int max_size = 5;
    std::uint64_t seed = 1;
};

struct Job {
    CheckRecord record;
    double runtime_ms = 0;
};

struct SuiteReport {
    std::string suite;
    SuiteOptions options;
    std::vector<Job> jobs;

    bool pass() const {
        for (const auto& j : jobs)
            if (!j.record.verdict && !j.record.informational) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& j : jobs) n += !j.record.verdict && !j.record.informational;
        return n;
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"macdonald", "kernel", "tableau", "shuffle", "wfock"};
    return names;
}

namespace detail {

class JobRunner {
public:
    explicit JobRunner(SuiteReport& rep) : rep_(rep) {}

    void one(const std::function<CheckRecord()>& f) {
        many([&] { return std::vector<CheckRecord>{f()}; });
    }

    void many(const std::function<std::vector<CheckRecord>()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckRecord> rs;
        try {
            rs = f();
        } catch (const Error& e) {
            CheckRecord r{"error"};
            r.note = e.what();
            rs.push_back(r);
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        for (auto& r : rs) rep_.jobs.push_back({std::move(r), ms / static_cast<double>(rs.size())});
    }

private:
    SuiteReport& rep_;
};

inline void macdonald_suite(const MacdonaldContext& ctx, int N, JobRunner& run) {
    const int n5 = std::min(N, 5), n4 = std::min(N, 4);
    for (int n = 1; n <= n5; ++n) {
        run.one([&] { return triangularity_check(ctx, n); });
        run.one([&] { return orthogonality_check(ctx, n); });
        run.one([&] { return duality_check(ctx, n); });
        for (const auto& l : partitions_of(n)) {
            run.one([&] { return b_methods_check(ctx, l); });
            run.one([&] { return tableau_vs_gram(ctx, l, 5); });
        }
    }
    for (int n = 1; n <= std::min(N, 6); ++n) run.one([&] { return round_trip_check(ctx, n); });
    for (int n = 1; n <= n4; ++n) {
        run.one([&] { return gram_order_check(ctx, n); });
        run.one([&] { return qtom_check(ctx, n); });
        for (const auto& l : partitions_of(n))
            for (int m = 1; m <= 4; ++m) {
                run.one([&] { return tableau_vs_gram(ctx, l, m); });
                run.one([&] { return psi_vanishing_record(l, m); });
            }
    }
    for (int d = 0; d <= std::min(N, 3); ++d) run.one([&] { return cauchy_record(ctx, d, 3, 3); });
}

inline void kernel_suite(const MacdonaldContext& ctx, int N, std::uint64_t seed, JobRunner& run) {
    for (int n = 0; n <= std::min(N, 3); ++n)
        for (int m = 1; m <= 3; ++m)
            run.one([&] { return kernel_triple_check(ctx, n, m, 5, seed + static_cast<std::uint64_t>(10 * n + m)); });
}

inline void tableau_suite(const MacdonaldContext& ctx, int N, std::uint64_t seed, JobRunner& run) {
    for (int n = 1; n <= std::min(N, 4); ++n) {
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n)) run.one([&] { return verify_tableau_theorem(ctx, l, mu, seed); });
        for (const auto& l : partitions_of(n))
            for (int m = l.length(); m <= 4; ++m) run.many([&] { return verify_b_psi(ctx, l, m, seed); });
    }
}

inline void shuffle_suite(const MacdonaldContext& ctx, int N, std::uint64_t seed, JobRunner& run) {
    const int n4 = std::min(N, 4), n3 = std::min(N, 3);
    for (int n = 1; n <= n4; ++n)
        for (const auto& l : partitions_of(n)) run.one([&] { return F_routes_check(ctx, l, 3, seed); });
    for (int n = 3; n <= n4; ++n)
        for (const auto& l : partitions_of(n)) {
            run.one([&] { return wheel_record("eps_q " + l.to_string(), AElement::epsilon(l, EpsilonParameter::q), 3, seed); });
            run.one([&] { return wheel_record("eps_t " + l.to_string(), AElement::epsilon(l, EpsilonParameter::t), 3, seed); });
            run.one([&] { return wheel_record("F " + l.to_string(), F_lambda(ctx, l, FRoute::via_g), 3, seed); });
        }
    for (int n = 1; n <= n3; ++n)
        for (const auto& l : partitions_of(n)) {
            run.many([&] { return iota_checks(ctx, l, seed); });
            for (int k = 0; k <= n; ++k) run.one([&] { return boundary_check(ctx, l, k, seed); });
        }
    const int shapes[][3] = {{1, 1, 1}, {1, 2, 1}, {2, 1, 2}};
    for (const auto& s : shapes)
        if (s[0] + s[1] + s[2] <= std::max(N, 3)) run.many([&] { return star_checks(s[0], s[1], s[2], seed); });
    run.many([&] { return verify_pochhammer_lemmas(5, 2, seed); });
}

inline void wfock_suite(const MacdonaldContext& ctx, int N, std::uint64_t seed, JobRunner& run) {
    const int top = std::clamp(N, 2, 4), top_rel = std::clamp(N, 2, 3);
    run.many([] { return verify_level_one(); });
    for (int m = 2; m <= top; ++m) {
        run.many([m] { return verify_lambda_ope(m); });
        run.many([m] { return verify_lambda_identities(m); });
        run.many([m] { return verify_commutants(m); });
    }
    auto quadratic = [&](int m, QuadraticRelation rel, int i, bool has_correction) {
        run.one([&] {
            CheckRecord r = verify_quadratic(m, rel, i).record();
            r.informational = has_correction;
            return r;
        });
        if (has_correction)
            run.one([&] { return verify_quadratic(m, rel, i, RelationForm::corrected).record(); });
    };
    for (int m = 2; m <= top_rel; ++m) {
        quadratic(m, QuadraticRelation::Att, 0, false);
        quadratic(m, QuadraticRelation::Btt_star, 0, false);
        for (int i = 1; i < m; ++i) {
            quadratic(m, QuadraticRelation::TT_1i, i, true);
            run.one([&] { return verify_quadratic_series(m, i, RelationForm::corrected); });
        }
        quadratic(m, QuadraticRelation::TT_mm, 0, true);
    }
    for (int m = 2; m <= top_rel; ++m)
        for (int n = 1; n <= std::min(N, 3); ++n) {
            run.one([&] {
                CheckRecord r = verify_kernel_correlation(ctx, m, n, 5, seed, CorrelationForm::literal);
                r.informational = true;
                return r;
            });
            run.one([&] { return verify_kernel_correlation(ctx, m, n, 5, seed, CorrelationForm::corrected); });
        }
}

}  // namespace detail

/// Runs one named suite. Sizes above kMaxSuiteSize raise ResourceLimit.
inline SuiteReport run_suite(const MacdonaldContext& ctx, const std::string& name, const SuiteOptions& opt) {
    if (opt.max_size < 0) throw DomainError("max-size must be non-negative");
    if (opt.max_size > kMaxSuiteSize)
        throw ResourceLimit("max-size " + std::to_string(opt.max_size) + " exceeds the bound " +
                            std::to_string(kMaxSuiteSize));
    SuiteReport rep{name, opt, {}};
    detail::JobRunner run(rep);
    const int N = opt.max_size;
    if (name == "macdonald")
        detail::macdonald_suite(ctx, N, run);
    else if (name == "kernel")
        detail::kernel_suite(ctx, N, opt.seed, run);
    else if (name == "tableau")
        detail::tableau_suite(ctx, N, opt.seed, run);
    else if (name == "shuffle")
        detail::shuffle_suite(ctx, N, opt.seed, run);
    else if (name == "wfock")
        detail::wfock_suite(ctx, N, opt.seed, run);
    else
        throw MalformedInput("unknown suite '" + name + "'");
    return rep;
}

inline nlohmann::json to_json(const SuiteReport& rep, bool with_runtimes = true) {
    nlohmann::json j{{"suite", rep.suite},
                     {"seed", rep.options.seed},
                     {"max_size", rep.options.max_size},
                     {"verdict", rep.pass() ? "pass" : "fail"},
                     {"jobs", nlohmann::json::array()}};
    for (const auto& job : rep.jobs) {
        nlohmann::json r = to_json(job.record);
        if (with_runtimes) r["runtime_ms"] = job.runtime_ms;
        j["jobs"].push_back(std::move(r));
    }
    return j;
}

inline std::string to_markdown(const SuiteReport& rep) {
    std::string s = "## " + rep.suite + " (max-size " + std::to_string(rep.options.max_size) + ", seed " +
                    std::to_string(rep.options.seed) + "): " + (rep.pass() ? "pass" : "fail") + "\n\n";
    s += "| check | params | verdict | value |\n|---|---|---|---|\n";
    for (const auto& job : rep.jobs) {
        const auto& r = job.record;
        std::string params = r.lambda;
        if (!r.mu.empty()) params += " / " + r.mu;
        for (const auto& [k, v] : r.witness)
            if (k == "m" || k == "n" || k == "i" || k == "k" || k == "T" || k == "degree")
                params += (params.empty() ? "" : " ") + k + "=" + v;
        std::string verdict = r.verdict ? "pass" : "fail";
        if (r.informational) verdict += " (info)";
        std::string value = r.value.size() > 60 ? r.value.substr(0, 57) + "..." : r.value;
        s += "| " + r.check + " | " + params + " | " + verdict + " | " + value + " |\n";
    }
    return s;
}

}  // namespace qtkern
