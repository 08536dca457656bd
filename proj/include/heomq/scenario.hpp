// scenario.hpp — The entanglement experiments: Bell-state decay, pulsed equilibrium, baselines

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heomq/config.hpp"
#include "heomq/heom.hpp"
#include "heomq/redfield.hpp"
#include "heomq/toymodel.hpp"

namespace heomq {

/// Single-excitation Bell state (|10> - |01>) / sqrt(2).
Matrix4 bell_initial_state();

struct ToyRow {
    toy::ToyParams params;
    toy::Coherence coherence;
};

struct ConvergenceDeltas {
    double depth{0.0};      // sup |C(L, M) - C(L+2, M)|
    double matsubara{0.0};  // sup |C(L, M) - C(L, M+1)|
};

struct ScenarioResult {
    Scenario scenario{Scenario::fig1};
    Trajectory trajectory;
    DeathRevivalReport report;
    /// Reduced state just before the pulse (fig2 scenarios only).
    std::optional<Matrix4> pre_pulse_rho;
    std::vector<ToyRow> toy_table;
    std::optional<ConvergenceDeltas> convergence;
    /// Numeric Gibbs concurrence of H_S and the closed form for the exchange Hamiltonian.
    double gibbs_concurrence{0.0};
    double gibbs_concurrence_exchange{0.0};
};

SystemModel make_system(const RunConfig& cfg);
bath::DrudeParams make_drude(const RunConfig& cfg);
heom::HeomOperator make_operator(const RunConfig& cfg);

/// Correlated system-bath equilibrium of the hierarchy (fig2 preparation).
HierarchyState prepare_equilibrium(const heom::HeomOperator& op, const RunConfig& cfg);

/// Pulse on qubit 1 applied to `equilibrium`, optionally after discarding
/// the system-bath coherence, then HEOM propagation to tEnd.
Trajectory run_pulsed(const heom::HeomOperator& op, const HierarchyState& equilibrium, bool factorized,
                      const RunConfig& cfg);

Trajectory run_fig1(const heom::HeomOperator& op, const RunConfig& cfg);

/// Mean concurrence over the last 10% of samples.
double equilibrium_concurrence(const Trajectory& traj);

/// Dispatches on cfg.scenario.
ScenarioResult run_scenario(const RunConfig& cfg);

/// CSV header: t,C,eof,re_rho_00..re_rho_33,im_rho_00..im_rho_33,trace_error,min_eig
std::string csv_header();
void write_csv(std::ostream& out, const Trajectory& traj);
/// Throws std::runtime_error on I/O failure.
void emit_csv(const Trajectory& traj, const std::string& path);

void write_toy_table(std::ostream& out, const std::vector<ToyRow>& rows);

/// `key = value` summary record.
void write_summary(std::ostream& out, const RunConfig& cfg, const ScenarioResult& result);

/// floor(tEnd / (dt * sampleStride)) + 1, the number of samples a run records.
std::size_t expected_sample_count(double t_end, double dt, int stride);

} // namespace heomq
