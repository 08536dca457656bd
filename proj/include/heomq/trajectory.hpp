// trajectory.hpp — Sampled reduced-state time series with entanglement diagnostics

#pragma once

#include <vector>

#include "heomq/entangle.hpp"
#include "heomq/qmat.hpp"

namespace heomq {

struct Sample {
    double t{0.0};
    Matrix4 rho{Matrix4::Zero()};
    double C{0.0};
    double eof{0.0};
    double trace_error{0.0};
    double herm_defect{0.0};
    double min_eig{0.0};
};

struct Trajectory {
    std::vector<Sample> samples;

    std::vector<double> times() const;
    std::vector<double> concurrences() const;
    bool empty() const { return samples.empty(); }
    std::size_t size() const { return samples.size(); }
};

/// Diagnostics and entanglement measures of one reduced state. The positivity
/// tolerance is looser than for DensityMatrix construction because the
/// truncated hierarchy only conserves positivity approximately.
Sample make_sample(double t, const Matrix4& rho, const ConcurrenceOptions& opt = {.pos_tol = 1e-6, .tol = 1e-6});

/// sup_t |C_a(t) - C_b(t)| over matching sample times.
double concurrence_sup_diff(const Trajectory& a, const Trajectory& b);

DeathRevivalReport detect_death_revival(const Trajectory& traj, double zero_tol = 1e-6);

} // namespace heomq
