#include "heomq/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

namespace heomq {

namespace {

constexpr std::array<std::pair<std::string_view, Scenario>, 7> scenario_names{{
    {"fig1", Scenario::fig1},
    {"fig2-correlated", Scenario::fig2_correlated},
    {"fig2-factorized", Scenario::fig2_factorized},
    {"redfield-fig1", Scenario::redfield_fig1},
    {"redfield-fig2", Scenario::redfield_fig2},
    {"toymodel", Scenario::toymodel},
    {"convergence-sweep", Scenario::convergence_sweep},
}};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("invalid value '" + std::string(value) + "' for key '" + std::string(key) + "'");
    return out;
}

} // namespace

Scenario parse_scenario(std::string_view name) {
    for (const auto& [n, s] : scenario_names)
        if (n == name)
            return s;
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

std::string_view to_string(Scenario s) {
    for (const auto& [n, v] : scenario_names)
        if (v == s)
            return n;
    return "unknown";
}

void RunConfig::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "epsilon") epsilon = parse_number<double>(key, value);
    else if (key == "J") J = parse_number<double>(key, value);
    else if (key == "lambda") lambda = parse_number<double>(key, value);
    else if (key == "gamma") gamma = parse_number<double>(key, value);
    else if (key == "beta") beta = parse_number<double>(key, value);
    else if (key == "L") L = parse_number<int>(key, value);
    else if (key == "M") M = parse_number<int>(key, value);
    else if (key == "dt") dt = parse_number<double>(key, value);
    else if (key == "tEnd") tEnd = parse_number<double>(key, value);
    else if (key == "sampleStride") sampleStride = parse_number<int>(key, value);
    else if (key == "scenario") scenario = parse_scenario(value);
    else if (key == "outputPath") outputPath = std::string(value);
    else if (key == "tEq") tEq = parse_number<double>(key, value);
    else if (key == "stationarityTol") stationarityTol = parse_number<double>(key, value);
    else if (key == "zeroTol") zeroTol = parse_number<double>(key, value);
    else throw ConfigError("unknown key '" + std::string(key) + "'");
}

void RunConfig::validate() const {
    auto require = [](bool ok, const char* msg) {
        if (!ok)
            throw ConfigError(msg);
    };
    require(epsilon > 0.0, "epsilon must be positive");
    require(lambda >= 0.0, "lambda must be non-negative");
    require(gamma > 0.0, "gamma must be positive");
    require(beta > 0.0, "beta must be positive");
    require(L >= 0, "L must be non-negative");
    require(M >= 0, "M must be non-negative");
    require(dt > 0.0, "dt must be positive");
    require(tEnd > 0.0, "tEnd must be positive");
    require(sampleStride >= 1, "sampleStride must be at least 1");
    require(tEq > 0.0, "tEq must be positive");
    require(stationarityTol > 0.0, "stationarityTol must be positive");
    require(zeroTol >= 0.0, "zeroTol must be non-negative");
    require(!outputPath.empty(), "outputPath must not be empty");
}

RunConfig parse_config(std::string_view text, RunConfig cfg) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        try {
            cfg.set(line.substr(0, eq), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

void apply_override(RunConfig& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("override '" + std::string(assignment) + "' is not of the form key=value");
    cfg.set(assignment.substr(0, eq), assignment.substr(eq + 1));
}

} // namespace heomq
