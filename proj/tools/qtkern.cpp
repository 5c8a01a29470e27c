#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtkern/suites.hpp"

using namespace qtkern;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, resource = 3 };

constexpr int kMaxDegree = 6;
constexpr int kMaxKernel = 3;
constexpr int kMaxLevel = 4;

struct ComputeArgs {
    std::string object;
    std::string lambda = "1";
    std::string mu;
    std::string route = "via_g";
    std::string form = "gamma_sum";
    std::string method = "inner_product";
    std::string basis = "m";
    std::string format = "text";
    int n = 1;
    int m = 2;
    int i = 1;
};

Partition checked_partition(const std::string& s) {
    Partition p = Partition::parse(s);
    if (p.size() > kMaxDegree)
        throw ResourceLimit("degree " + std::to_string(p.size()) + " exceeds " + std::to_string(kMaxDegree));
    return p;
}

std::string describe(const AElement& f) {
    const char* p = f.basis == EpsilonParameter::q ? "q" : "t";
    std::string s;
    for (auto it = f.expansion.rbegin(); it != f.expansion.rend(); ++it) {
        if (!s.empty()) s += "+";
        s += "(" + to_string(it->second) + ")*eps[" + it->first.to_string() + "](z;" + p + ")";
    }
    return s.empty() ? "0" : s;
}

std::string describe(const OperatorSum& sum) {
    std::string s;
    for (const auto& t : sum) {
        if (!s.empty()) s += "\n";
        s += to_string(t.coefficient * t.op.prefactor()) + " * " + to_string(t.op);
    }
    return s;
}

int run_compute(const ComputeArgs& a, const MacdonaldContext& ctx) {
    const bool json = a.format == "json";
    auto emit = [&](const std::string& text, nlohmann::json j) {
        std::cout << (json ? j.dump(1) : text) << "\n";
        return ok;
    };
    if (a.object == "P" || a.object == "Q") {
        Partition l = checked_partition(a.lambda);
        SymFunc f = a.object == "P" ? ctx.P(l) : ctx.convert(ctx.Q(l), Basis::m);
        f = ctx.convert(f, parse_basis(a.basis));
        return emit(to_string(f), to_json(f));
    }
    if (a.object == "b") {
        Partition l = checked_partition(a.lambda);
        if (a.method != "inner_product" && a.method != "factorized")
            throw MalformedInput("unknown method '" + a.method + "'");
        RatFunc b = b_norm(ctx, l, a.method == "factorized" ? BMethod::factorized : BMethod::inner_product);
        return emit(to_string(b), {{"lambda", l.to_string()}, {"method", a.method}, {"b", to_string(b)}});
    }
    if (a.object == "psi") {
        Partition l = checked_partition(a.lambda), mu = checked_partition(a.mu);
        RatFunc v = psi_skew(l, mu);
        return emit(to_string(v), {{"lambda", l.to_string()}, {"mu", mu.to_string()}, {"psi", to_string(v)}});
    }
    if (a.object == "F") {
        Partition l = checked_partition(a.lambda);
        if (a.route != "via_e" && a.route != "via_g") throw MalformedInput("unknown route '" + a.route + "'");
        AElement f = F_lambda(ctx, l, a.route == "via_e" ? FRoute::via_e : FRoute::via_g);
        nlohmann::json j{{"lambda", l.to_string()}, {"route", a.route}, {"entries", nlohmann::json::array()}};
        for (const auto& [mu, c] : f.expansion) j["entries"].push_back({{"partition", mu.to_string()}, {"coefficient", to_string(c)}});
        return emit(describe(f), j);
    }
    if (a.object == "K") {
        if (a.n < 0 || a.m < 1) throw MalformedInput("K needs n >= 0 and m >= 1");
        if (a.n > kMaxKernel || a.m > kMaxLevel) throw ResourceLimit("K is bounded to n <= 3, m <= 4");
        KernelForm form = a.form == "gamma_sum" ? KernelForm::gamma_sum
                          : a.form == "eps_sum" ? KernelForm::eps_sum
                          : a.form == "QF_sum"  ? KernelForm::QF_sum
                                                : throw MalformedInput("unknown form '" + a.form + "'");
        Points x, z;
        for (int k = 1; k <= a.m; ++k) x.emplace_back(sym("x", k));
        for (int k = 1; k <= a.n; ++k) z.emplace_back(sym("z", k));
        RatFunc v = kernel_K(ctx, a.n, form, x, z);
        return emit(to_string(v), {{"n", a.n}, {"m", a.m}, {"form", a.form}, {"K", to_string(v)}});
    }
    if (a.object == "T") {
        if (a.m < 2) throw MalformedInput("T needs m >= 2");
        if (a.m > kMaxLevel) throw ResourceLimit("T is bounded to m <= 4");
        if (a.i < 1 || a.i > a.m) throw MalformedInput("T needs 1 <= i <= m");
        OperatorSum t = build_level_m(a.m).T(a.i);
        nlohmann::json j{{"m", a.m}, {"i", a.i}, {"terms", nlohmann::json::array()}};
        for (const auto& term : t)
            j["terms"].push_back({{"coefficient", to_string(term.coefficient * term.op.prefactor())}, {"operator", to_string(term.op)}});
        return emit(describe(t), j);
    }
    throw MalformedInput("unknown object '" + a.object + "'");
}

int run_verify(const std::string& suite, const SuiteOptions& opt, const std::string& report, const std::string& format,
               const MacdonaldContext& ctx) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    std::vector<SuiteReport> reps;
    bool pass = true;
    for (const auto& name : names) {
        reps.push_back(run_suite(ctx, name, opt));
        const auto& r = reps.back();
        double ms = 0;
        for (const auto& j : r.jobs) ms += j.runtime_ms;
        std::cout << name << ": " << (r.pass() ? "pass" : "fail") << " (" << r.jobs.size() << " checks, "
                  << r.failures() << " failed, " << static_cast<long>(ms) << " ms)\n";
        pass = pass && r.pass();
    }
    if (!report.empty()) {
        std::filesystem::path path(report);
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write report " + report);
        if (format == "markdown") {
            for (const auto& r : reps) out << to_markdown(r) << "\n";
        } else {
            nlohmann::json j{{"seed", opt.seed}, {"max_size", opt.max_size}, {"verdict", pass ? "pass" : "fail"},
                             {"suites", nlohmann::json::array()}};
            for (const auto& r : reps) j["suites"].push_back(to_json(r));
            out << j.dump(1) << "\n";
        }
    }
    if (!pass) {
        std::cout << "verification failed";
        if (!report.empty()) std::cout << "; report written to " << report;
        std::cout << "\n";
    }
    return pass ? ok : failed;
}

int run_cache(const std::string& action) {
    DiskCache cache(default_cache_dir());
    if (action == "status") {
        auto degrees = cache.degrees();
        if (degrees.empty()) {
            std::cout << "empty\n";
        } else {
            std::cout << "degrees";
            for (int d : degrees) std::cout << " " << d;
            std::cout << " in " << cache.dir().string() << "\n";
        }
    } else {
        cache.clear();
        std::cout << "cleared " << cache.dir().string() << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald kernels, shuffle algebra and deformed W currents: exact computation and checks"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute and print one object");
    compute->add_option("object", ca.object, "P, Q, b, psi, F, K or T")
        ->required()
        ->check(CLI::IsMember({"P", "Q", "b", "psi", "F", "K", "T"}));
    compute->add_option("--lambda", ca.lambda, "Partition as a comma list");
    compute->add_option("--mu", ca.mu, "Inner partition for psi");
    compute->add_option("--n", ca.n, "Number of z variables (K)");
    compute->add_option("--m", ca.m, "Number of x variables (K) or level (T)");
    compute->add_option("--i", ca.i, "Current index (T)");
    compute->add_option("--route", ca.route, "via_e or via_g (F)");
    compute->add_option("--form", ca.form, "gamma_sum, eps_sum or QF_sum (K)");
    compute->add_option("--method", ca.method, "inner_product or factorized (b)");
    compute->add_option("--basis", ca.basis, "Output basis for P and Q");
    compute->add_option("--format", ca.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string suite, report, format = "json";
    SuiteOptions opt;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "macdonald, kernel, tableau, shuffle, wfock or all")
        ->required()
        ->check(CLI::IsMember({"macdonald", "kernel", "tableau", "shuffle", "wfock", "all"}));
    verify->add_option("--max-size", opt.max_size, "Largest partition size, kernel degree or level");
    verify->add_option("--seed", opt.seed, "Seed for sampled points");
    verify->add_option("--report", report, "Write the report here");
    verify->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

    std::string action;
    auto* cache = app.add_subcommand("cache", "Inspect or clear the transition-table cache");
    cache->add_option("action", action, "status or clear")->required()->check(CLI::IsMember({"status", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*cache) return run_cache(action);
        MacdonaldContext ctx(default_cache_dir());
        if (*compute) return run_compute(ca, ctx);
        return run_verify(suite, opt, report, format, ctx);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return resource;
    } catch (const MalformedInput& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    }
}
