#pragma once

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lmg/classical.hpp"

namespace lmgmqc {

using nlohmann::json;

#ifndef LMG_VERSION
#define LMG_VERSION "0.0.0"
#endif
#ifndef LMG_GIT_SHA
#define LMG_GIT_SHA "unknown"
#endif

/// "start:stop:step" -> inclusive grid (endpoint kept when it lands
/// within half a step).
inline std::vector<double> parse_grid(const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = spec.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("grid spec must be start:stop:step, got '" + spec + "'");
    const double start = std::stod(spec.substr(0, first));
    const double stop = std::stod(spec.substr(first + 1, second - first - 1));
    const double step = std::stod(spec.substr(second + 1));
    if (!(step > 0.0) || stop < start)
        throw std::invalid_argument("grid spec needs stop >= start and step > 0");

    const int count = static_cast<int>(std::floor((stop - start) / step + 0.5)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double v = start + i * step;
        if (v <= stop + 0.5 * step) grid.push_back(v);
    }
    return grid;
}

inline std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        const auto comma = spec.find(',', pos);
        const std::string tok = spec.substr(pos, comma == std::string::npos ? spec.npos
                                                                            : comma - pos);
        if (!tok.empty()) values.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.empty()) throw std::invalid_argument("empty integer list");
    return values;
}

/// kappa / chi may come in directly or as ratios of the critical values;
/// exactly one spelling each. Ratios are resolved here so every module
/// below the CLI sees plain numbers.
struct CouplingChoice {
    std::optional<double> kappa;
    std::optional<double> kappa_ratio;

    double resolve_kappa() const {
        if (kappa && kappa_ratio)
            throw std::invalid_argument("pass either --kappa or --kappa-ratio, not both");
        if (kappa) return *kappa;
        if (kappa_ratio) return *kappa_ratio * lmg::kKappaCritical;
        throw std::invalid_argument("missing --kappa or --kappa-ratio");
    }
};

struct QuenchChoice {
    std::optional<double> chi;
    std::optional<double> chi_ratio;

    bool given() const { return chi.has_value() || chi_ratio.has_value(); }

    double resolve_chi(double kappa) const {
        if (chi && chi_ratio)
            throw std::invalid_argument("pass either --chi or --chi-ratio, not both");
        if (chi) return *chi;
        if (chi_ratio) return *chi_ratio * lmg::critical_quench_strength(kappa);
        throw std::invalid_argument("missing --chi or --chi-ratio");
    }

    double as_ratio(double kappa) const {
        const double chi_c = lmg::critical_quench_strength(kappa);
        return resolve_chi(kappa) / chi_c;
    }
};

inline std::string default_output_dir() {
    if (const char* env = std::getenv("LMGMQC_OUTPUT_DIR")) return env;
    return ".";
}

class RunContext {
public:
    RunContext(std::string subcommand, std::string out_dir)
        : subcommand_(std::move(subcommand)),
          out_dir_(std::move(out_dir)),
          start_(std::chrono::steady_clock::now()) {
        std::filesystem::create_directories(out_dir_);
    }

    std::string path(const std::string& filename) const {
        return (std::filesystem::path(out_dir_) / filename).string();
    }

    /// Written once at the end of the run; timestamp and wall time are
    /// the only fields that may differ between identical runs.
    void write_manifest(const json& resolved_config) const {
        const auto elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        json manifest;
        manifest["subcommand"] = subcommand_;
        manifest["config"] = resolved_config;
        manifest["version"] = std::string(LMG_VERSION) + "+" + LMG_GIT_SHA;
        manifest["wall_time_seconds"] = elapsed;
        manifest["timestamp"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::system_clock::now().time_since_epoch())
                                    .count();
        std::ofstream out(path("manifest.json"), std::ios::binary);
        out << manifest.dump(2) << '\n';
    }

private:
    std::string subcommand_;
    std::string out_dir_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace lmgmqc
