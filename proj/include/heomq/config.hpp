// config.hpp — Run configuration for the scenario runner

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heomq {

enum class Scenario {
    fig1,
    fig2_correlated,
    fig2_factorized,
    redfield_fig1,
    redfield_fig2,
    toymodel,
    convergence_sweep,
};

Scenario parse_scenario(std::string_view name);
std::string_view to_string(Scenario s);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Keys in config files and --override arguments use the field names below
/// (epsilon, J, lambda, gamma, beta, L, M, dt, tEnd, sampleStride, scenario,
/// outputPath, tEq, stationarityTol, zeroTol).
struct RunConfig {
    double epsilon{1.5};
    double J{1.0};
    double lambda{0.3};
    double gamma{0.5};
    double beta{2.5};
    int L{6};
    int M{2};
    double dt{1e-3};
    double tEnd{10.0};
    int sampleStride{10};
    Scenario scenario{Scenario::fig1};
    std::string outputPath{"trajectory.csv"};

    double tEq{60.0};
    double stationarityTol{1e-7};
    double zeroTol{1e-6};

    /// Sets one key from its textual value. Throws ConfigError on an unknown
    /// key or a malformed value.
    void set(std::string_view key, std::string_view value);

    /// Throws ConfigError when a value is out of range.
    void validate() const;
};

/// Parses `key = value` lines; blank lines and `#` comments are ignored.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Applies a single `key=value` override.
void apply_override(RunConfig& cfg, std::string_view assignment);

} // namespace heomq
