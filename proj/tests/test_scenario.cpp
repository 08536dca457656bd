#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "heomq/config.hpp"
#include "heomq/scenario.hpp"

using namespace heomq;

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, sep))
        out.push_back(cell);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        out.push_back(line);
    return out;
}

// A cheap configuration: shallow hierarchy, short times, loose stationarity.
RunConfig small(Scenario s) {
    RunConfig cfg;
    cfg.scenario = s;
    cfg.L = 2;
    cfg.M = 1;
    cfg.dt = 1e-2;
    cfg.tEnd = 1.0;
    cfg.sampleStride = 5;
    cfg.tEq = 2.0;
    cfg.stationarityTol = 1.0;
    return cfg;
}

} // namespace

TEST_CASE("scenario names round-trip") {
    for (auto s : {Scenario::fig1, Scenario::fig2_correlated, Scenario::fig2_factorized, Scenario::redfield_fig1,
                   Scenario::redfield_fig2, Scenario::toymodel, Scenario::convergence_sweep})
        CHECK(parse_scenario(to_string(s)) == s);
    CHECK(to_string(Scenario::fig2_correlated) == "fig2-correlated");
    CHECK_THROWS_AS(parse_scenario("fig3"), ConfigError);
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config(R"(
# comment line
scenario = redfield-fig2
epsilon = 2.0   # trailing comment
J=0.5
L = 4
outputPath = out/run.csv
)");
    CHECK(cfg.scenario == Scenario::redfield_fig2);
    CHECK(cfg.epsilon == 2.0);
    CHECK(cfg.J == 0.5);
    CHECK(cfg.L == 4);
    CHECK(cfg.M == 2);  // untouched default
    CHECK(cfg.outputPath == "out/run.csv");

    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_config("nonsense = 1"), ConfigError);
        CHECK_THROWS_AS(parse_config("epsilon = abc"), ConfigError);
        CHECK_THROWS_AS(parse_config("epsilon = 1.5x"), ConfigError);
        CHECK_THROWS_AS(parse_config("L = 2.5"), ConfigError);
        CHECK_THROWS_AS(parse_config("just a line"), ConfigError);
        CHECK_THROWS_AS(parse_config("dt = -1").validate(), ConfigError);
        CHECK_THROWS_AS(parse_config("sampleStride = 0").validate(), ConfigError);
        CHECK_THROWS_AS(load_config("/nonexistent/heomq.cfg"), ConfigError);
    }

    SUBCASE("overrides") {
        RunConfig c2 = cfg;
        apply_override(c2, "tEnd=3.5");
        apply_override(c2, "scenario=fig1");
        CHECK(c2.tEnd == 3.5);
        CHECK(c2.scenario == Scenario::fig1);
        CHECK_THROWS_AS(apply_override(c2, "tEnd"), ConfigError);
        CHECK_THROWS_AS(apply_override(c2, "foo=1"), ConfigError);
    }

    SUBCASE("shipped configs load") {
        for (const auto& e : std::filesystem::directory_iterator(HEOMQ_CONFIG_DIR)) {
            const auto c = load_config(e.path());
            CHECK(to_string(c.scenario) == e.path().stem().string());
            CHECK(c.L == 6);
            CHECK(c.M == 2);
        }
    }
}

TEST_CASE("sample count") {
    CHECK(expected_sample_count(10.0, 1e-3, 10) == 1001);
    CHECK(expected_sample_count(1.0, 0.01, 7) == 15);
    CHECK(expected_sample_count(1.0, 0.01, 1) == 101);
}

TEST_CASE("CSV output") {
    const auto header = split(csv_header());
    REQUIRE(header.size() == 37);
    CHECK(header[0] == "t");
    CHECK(header[1] == "C");
    CHECK(header[2] == "eof");
    CHECK(header[3] == "re_rho_00");
    CHECK(header[18] == "re_rho_33");
    CHECK(header[19] == "im_rho_00");
    CHECK(header[34] == "im_rho_33");
    CHECK(header[35] == "trace_error");
    CHECK(header[36] == "min_eig");

    SUBCASE("empty trajectory is just the header") {
        std::ostringstream os;
        write_csv(os, Trajectory{});
        CHECK(os.str() == csv_header() + "\n");
    }

    SUBCASE("single sample") {
        Trajectory traj;
        traj.samples.push_back(make_sample(0.25, bell_initial_state()));
        std::ostringstream os;
        write_csv(os, traj);
        const auto rows = lines_of(os.str());
        REQUIRE(rows.size() == 2);
        const auto cells = split(rows[1]);
        REQUIRE(cells.size() == 37);
        CHECK(std::stod(cells[0]) == 0.25);
        CHECK(std::stod(cells[1]) == doctest::Approx(1.0));
        CHECK(std::stod(cells[3 + 5]) == doctest::Approx(0.5));    // re rho_11
        CHECK(std::stod(cells[3 + 6]) == doctest::Approx(-0.5));   // re rho_12
        CHECK(std::stod(cells[19 + 6]) == 0.0);
    }

    SUBCASE("write failure") {
        CHECK_THROWS_AS(emit_csv(Trajectory{}, "/nonexistent/dir/out.csv"), std::runtime_error);
    }
}

TEST_CASE("scenario runs") {
    SUBCASE("fig1 row count and determinism") {
        const auto cfg = small(Scenario::fig1);
        const auto a = run_scenario(cfg);
        const auto b = run_scenario(cfg);
        CHECK(a.trajectory.size() == expected_sample_count(cfg.tEnd, cfg.dt, cfg.sampleStride));
        std::ostringstream sa, sb;
        write_csv(sa, a.trajectory);
        write_csv(sb, b.trajectory);
        CHECK(sa.str() == sb.str());
        CHECK(lines_of(sa.str()).size() == a.trajectory.size() + 1);
        CHECK(a.trajectory.samples.front().C == doctest::Approx(1.0));
    }

    SUBCASE("fig2 variants share the pre-pulse and post-pulse reduced state") {
        const auto corr = run_scenario(small(Scenario::fig2_correlated));
        const auto fact = run_scenario(small(Scenario::fig2_factorized));
        REQUIRE(corr.pre_pulse_rho.has_value());
        REQUIRE(fact.pre_pulse_rho.has_value());
        CHECK((corr.pre_pulse_rho->array() == fact.pre_pulse_rho->array()).all());
        CHECK((corr.trajectory.samples.front().rho.array() == fact.trajectory.samples.front().rho.array()).all());
        // they differ once the hierarchy has evolved
        CHECK(std::abs(corr.trajectory.samples.back().C - fact.trajectory.samples.back().C) > 0.0);
    }

    SUBCASE("redfield baselines") {
        const auto r1 = run_scenario(small(Scenario::redfield_fig1));
        CHECK(r1.trajectory.size() == 21);
        CHECK(r1.trajectory.samples.front().C == doctest::Approx(1.0));
        const auto r2 = run_scenario(small(Scenario::redfield_fig2));
        REQUIRE(r2.pre_pulse_rho.has_value());
        const auto corr = run_scenario(small(Scenario::fig2_correlated));
        CHECK((r2.pre_pulse_rho->array() == corr.pre_pulse_rho->array()).all());
        CHECK(r2.gibbs_concurrence == doctest::Approx(r1.gibbs_concurrence));
    }

    SUBCASE("toy table") {
        const auto r = run_scenario(small(Scenario::toymodel));
        CHECK(r.toy_table.size() == 125);
        std::ostringstream os;
        write_toy_table(os, r.toy_table);
        const auto rows = lines_of(os.str());
        REQUIRE(rows.size() == 126);
        CHECK(rows[0] == "epsilon,g,beta,closed_form,numeric,abs_diff");
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(std::stod(split(rows[i]).back()) <= 1e-12);
    }

    SUBCASE("convergence sweep reports both deltas") {
        auto cfg = small(Scenario::convergence_sweep);
        cfg.L = 1;
        const auto r = run_scenario(cfg);
        REQUIRE(r.convergence.has_value());
        CHECK(r.convergence->depth > 0.0);
        CHECK(r.convergence->matsubara > 0.0);
    }

    SUBCASE("summary record") {
        const auto cfg = small(Scenario::fig1);
        const auto r = run_scenario(cfg);
        std::ostringstream os;
        write_summary(os, cfg, r);
        const auto text = os.str();
        CHECK(text.find("scenario = fig1\n") != std::string::npos);
        CHECK(text.find("samples = 21\n") != std::string::npos);
        CHECK(text.find("death_intervals = ") != std::string::npos);
        CHECK(text.find("revival_times = ") != std::string::npos);
    }

    SUBCASE("stationarity failure surfaces") {
        auto cfg = small(Scenario::fig2_correlated);
        cfg.stationarityTol = 1e-12;
        CHECK_THROWS_AS(run_scenario(cfg), heom::StationarityError);
    }
}
