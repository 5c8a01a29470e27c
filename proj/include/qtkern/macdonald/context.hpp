#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "qtkern/macdonald/transition.hpp"

namespace qtkern {

/// Bumped whenever the persisted tables could change.
inline constexpr int kCacheVersion = 1;

/// Directory from QTKERN_CACHE, else a per-user data directory.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("QTKERN_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "qtkern";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".local" / "share" / "qtkern";
    return std::filesystem::temp_directory_path() / "qtkern";
}

/// On-disk store of Macdonald P tables keyed by (degree, version).
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::filesystem::path file_for(int n) const {
        return dir_ / ("P_n" + std::to_string(n) + "_v" + std::to_string(kCacheVersion) + ".json");
    }

    std::optional<Matrix> load(const DegreeData& d) const {
        std::ifstream in(file_for(d.n));
        if (!in) return std::nullopt;
        try {
            auto j = nlohmann::json::parse(in);
            if (j.at("degree").get<int>() != d.n || j.at("version").get<int>() != kCacheVersion) return std::nullopt;
            const std::size_t N = d.parts.size();
            Matrix P(N, std::vector<RatFunc>(N));
            for (const auto& row : j.at("entries")) {
                std::size_t i = d.index.at(Partition::parse(row.at("partition").get<std::string>()));
                for (const auto& t : row.at("m_expansion"))
                    P[i][d.index.at(Partition::parse(t.at("partition").get<std::string>()))] =
                        parse_ratfunc(t.at("coefficient").get<std::string>());
            }
            return P;
        } catch (const std::exception&) {
            return std::nullopt;  // corrupt entries are recomputed
        }
    }

    void store(const DegreeData& d) const {
        nlohmann::json j;
        j["basis"] = "P";
        j["degree"] = d.n;
        j["version"] = kCacheVersion;
        j["entries"] = nlohmann::json::array();
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            nlohmann::json row;
            row["partition"] = d.parts[i].to_string();
            row["m_expansion"] = nlohmann::json::array();
            for (std::size_t k = 0; k < d.parts.size(); ++k)
                if (!d.P_to_m[i][k].zero())
                    row["m_expansion"].push_back({{"partition", d.parts[k].to_string()},
                                                  {"coefficient", to_string(d.P_to_m[i][k])}});
            j["entries"].push_back(row);
        }
        std::filesystem::create_directories(dir_);
        auto tmp = file_for(d.n);
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            out << j.dump(1) << "\n";
        }
        std::filesystem::rename(tmp, file_for(d.n));
    }

    /// Degrees with a table for the current version, ascending.
    std::vector<int> degrees() const {
        std::vector<int> out;
        if (!std::filesystem::exists(dir_)) return out;
        const std::string suffix = "_v" + std::to_string(kCacheVersion) + ".json";
        for (const auto& e : std::filesystem::directory_iterator(dir_)) {
            std::string name = e.path().filename().string();
            if (name.rfind("P_n", 0) == 0 && name.size() > suffix.size() &&
                name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
                out.push_back(std::stoi(name.substr(3, name.size() - 3 - suffix.size())));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void clear() const {
        if (!std::filesystem::exists(dir_)) return;
        for (const auto& e : std::filesystem::directory_iterator(dir_)) {
            std::string name = e.path().filename().string();
            if (name.rfind("P_n", 0) == 0) std::filesystem::remove(e.path());
        }
    }

private:
    std::filesystem::path dir_;
};

/// Symmetric-function machinery over F = Q(q,t), with per-degree transition
/// tables computed once and then shared read-only.
class MacdonaldContext {
public:
    MacdonaldContext() = default;
    explicit MacdonaldContext(std::filesystem::path cache_dir) : disk_(std::in_place, std::move(cache_dir)) {}

    /// Transition tables for degree n (without Macdonald data).
    const DegreeData& base(int n) const { return entry(n, false); }
    /// Transition tables including P, Q and b.
    const DegreeData& full(int n) const { return entry(n, true); }

    SymFunc to_p(const SymFunc& f) const {
        const DegreeData& d = f.basis == Basis::P || f.basis == Basis::Q ? full(f.degree) : base(f.degree);
        const std::size_t N = d.parts.size();
        std::vector<RatFunc> v(N);
        for (const auto& [l, c] : f.coeffs) {
            std::size_t i = index_of(d, l);
            auto add_row = [&](const Matrix& M, std::size_t row, const RatFunc& scale) {
                for (std::size_t j = 0; j < N; ++j)
                    if (!M[row][j].zero()) v[j] += scale * M[row][j];
            };
            switch (f.basis) {
                case Basis::p: v[i] += c; break;
                case Basis::m: add_row(d.m_to_p, i, c); break;
                case Basis::e: add_row(d.e_to_p, i, c); break;
                case Basis::g: add_row(d.g_to_p, i, c); break;
                case Basis::P:
                case Basis::Q: {
                    RatFunc s = f.basis == Basis::Q ? c * d.b[i] : c;
                    for (std::size_t k = 0; k < N; ++k)
                        if (!d.P_to_m[i][k].zero()) add_row(d.m_to_p, k, s * d.P_to_m[i][k]);
                    break;
                }
            }
        }
        return from_vector(Basis::p, d, v);
    }

    SymFunc convert(const SymFunc& f, Basis target) const {
        if (f.basis == target) return f;
        SymFunc pf = to_p(f);
        if (target == Basis::p) return pf;
        const DegreeData& d = target == Basis::P || target == Basis::Q ? full(f.degree) : base(f.degree);
        const std::size_t N = d.parts.size();
        std::vector<RatFunc> v(N);
        auto push = [&](const Matrix& M, std::size_t row, const RatFunc& scale, std::vector<RatFunc>& out) {
            for (std::size_t j = 0; j < N; ++j)
                if (!M[row][j].zero()) out[j] += scale * M[row][j];
        };
        for (const auto& [rho, c] : pf.coeffs) {
            std::size_t r = d.index.at(rho);
            switch (target) {
                case Basis::m:
                case Basis::P:
                case Basis::Q: push(d.p_to_m, r, c, v); break;
                case Basis::e: push(d.p_to_e, r, c, v); break;
                case Basis::g: push(d.p_to_g, r, c, v); break;
                case Basis::p: break;
            }
        }
        if (target == Basis::P || target == Basis::Q) {
            std::vector<RatFunc> w(N);
            for (std::size_t k = 0; k < N; ++k)
                if (!v[k].zero()) push(d.m_to_P, k, v[k], w);
            if (target == Basis::Q)
                for (std::size_t i = 0; i < N; ++i)
                    if (!w[i].zero()) w[i] /= d.b[i];
            v = std::move(w);
        }
        return from_vector(target, d, v);
    }

    RatFunc scalar_product(const SymFunc& f, const SymFunc& g) const {
        if (f.degree != g.degree) throw DomainError("scalar product of different degrees");
        SymFunc a = to_p(f), b = to_p(g);
        const DegreeData& d = base(f.degree);
        RatFunc s;
        for (const auto& [rho, c] : a.coeffs) {
            auto it = b.coeffs.find(rho);
            if (it != b.coeffs.end()) s += c * it->second * d.p_norm[d.index.at(rho)];
        }
        return s;
    }

    SymFunc P(const Partition& lambda) const {
        const DegreeData& d = full(lambda.size());
        SymFunc f{Basis::m, lambda.size(), {}};
        std::size_t i = index_of(d, lambda);
        for (std::size_t k = 0; k < d.parts.size(); ++k) f.add(d.parts[k], d.P_to_m[i][k]);
        return f;
    }

    SymFunc Q(const Partition& lambda) const { return P(lambda).scaled(b(lambda)); }

    RatFunc b(const Partition& lambda) const {
        const DegreeData& d = full(lambda.size());
        return d.b[index_of(d, lambda)];
    }

    /// c^{e->P}: P_lambda = sum_mu c[mu] e_mu.
    SymFunc P_in(const Partition& lambda, Basis target) const {
        return convert(SymFunc{Basis::P, lambda.size(), {{lambda, RatFunc(1)}}}, target);
    }

    const DiskCache* disk() const { return disk_ ? &*disk_ : nullptr; }

private:
    static std::size_t index_of(const DegreeData& d, const Partition& l) {
        auto it = d.index.find(l);
        if (it == d.index.end()) throw DomainError("partition " + l.to_string() + " not of degree " + std::to_string(d.n));
        return it->second;
    }

    static SymFunc from_vector(Basis b, const DegreeData& d, const std::vector<RatFunc>& v) {
        SymFunc f{b, d.n, {}};
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].zero()) f.coeffs.emplace(d.parts[i], v[i]);
        return f;
    }

    const DegreeData& entry(int n, bool macdonald) const {
        if (n < 0) throw DomainError("negative degree");
        std::lock_guard<std::mutex> lock(mutex_);
        auto& slot = data_[n];
        if (!slot) slot = std::make_unique<DegreeData>(build_degree_data(n));
        if (macdonald && !slot->has_macdonald) {
            std::optional<Matrix> loaded;
            if (disk_) loaded = disk_->load(*slot);
            add_macdonald_data(*slot, loaded);
            if (disk_ && !loaded && n > 0) disk_->store(*slot);
        }
        return *slot;
    }

    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<DegreeData>> data_;
    std::optional<DiskCache> disk_;
};

}  // namespace qtkern
