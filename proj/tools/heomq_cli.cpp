// heomq — scenario runner for the two-qubit HEOM entanglement experiments
//
//   heomq run --config <path> [--scenario <name>] [--out <path>] [--override key=value ...]
//
// Writes the trajectory CSV (or the toy-model table) to the output path, a
// `key = value` summary next to it (<out>.summary) and the same summary on
// stdout. Failures print one `error: kind=<kind> message="<text>"` line on
// stderr and exit nonzero.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heomq/scenario.hpp"

namespace {

enum ExitCode : int {
    ok = 0,
    failure = 1,
    config_error = 2,
    integration_error = 3,
    stationarity_error = 4,
    io_error = 5,
};

int report(const char* kind, const std::string& message, int code) {
    std::string escaped;
    for (char c : message) {
        if (c == '"' || c == '\\')
            escaped += '\\';
        escaped += (c == '\n' ? ' ' : c);
    }
    std::cerr << "error: kind=" << kind << " message=\"" << escaped << "\"\n";
    return code;
}

int run(const std::string& config_path, const std::string& scenario, const std::string& out_path,
        const std::vector<std::string>& overrides) {
    heomq::RunConfig cfg;
    try {
        cfg = heomq::load_config(config_path);
        if (!scenario.empty())
            cfg.scenario = heomq::parse_scenario(scenario);
        if (!out_path.empty())
            cfg.outputPath = out_path;
        for (const auto& o : overrides)
            heomq::apply_override(cfg, o);
        cfg.validate();
    } catch (const heomq::ConfigError& e) {
        return report("config", e.what(), config_error);
    }

    heomq::ScenarioResult result;
    try {
        result = heomq::run_scenario(cfg);
    } catch (const heomq::heom::IntegrationError& e) {
        return report("integration", e.what(), integration_error);
    } catch (const heomq::heom::StationarityError& e) {
        return report("stationarity", e.what(), stationarity_error);
    } catch (const std::invalid_argument& e) {
        return report("invalid-argument", e.what(), config_error);
    } catch (const std::exception& e) {
        return report("runtime", e.what(), failure);
    }

    try {
        if (cfg.scenario == heomq::Scenario::toymodel) {
            std::ofstream out(cfg.outputPath);
            if (!out)
                throw std::runtime_error("cannot open '" + cfg.outputPath + "' for writing");
            heomq::write_toy_table(out, result.toy_table);
        } else {
            heomq::emit_csv(result.trajectory, cfg.outputPath);
        }
        std::ofstream summary(cfg.outputPath + ".summary");
        if (!summary)
            throw std::runtime_error("cannot open '" + cfg.outputPath + ".summary' for writing");
        heomq::write_summary(summary, cfg, result);
    } catch (const std::exception& e) {
        return report("io", e.what(), io_error);
    }

    heomq::write_summary(std::cout, cfg, result);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit entanglement dynamics with hierarchical equations of motion"};
    app.require_subcommand(1);

    std::string config_path;
    std::string scenario;
    std::string out_path;
    std::vector<std::string> overrides;

    auto* run_cmd = app.add_subcommand("run", "Run one scenario from a config file");
    run_cmd->add_option("--config", config_path, "Config file of key = value lines")->required();
    run_cmd->add_option("--scenario", scenario,
                        "fig1 | fig2-correlated | fig2-factorized | redfield-fig1 | redfield-fig2 | toymodel | "
                        "convergence-sweep");
    run_cmd->add_option("--out", out_path, "Output CSV path (overrides outputPath)");
    run_cmd->add_option("--override", overrides, "key=value, may be repeated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        return report("usage", e.what(), config_error);
    }

    return run(config_path, scenario, out_path, overrides);
}
