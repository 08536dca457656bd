// redfield.hpp — Secular Redfield (Born-Markov) baseline in the system eigenbasis

#pragma once

#include "heomq/bath.hpp"
#include "heomq/qmat.hpp"
#include "heomq/system.hpp"
#include "heomq/trajectory.hpp"

namespace heomq::redfield {

/// Populations follow a classical master equation with golden-rule rates
///   down (E_i > E_j): sum_a |<j|V_a|i>|^2 2 J(w) (n(w) + 1),  w = E_i - E_j
///   up   (reverse):   sum_a |<j|V_a|i>|^2 2 J(w) n(w)
/// and every coherence rho_ij decays independently at half the summed
/// out-rates of levels i and j while rotating at E_i - E_j.
struct RedfieldGenerator {
    Eigen::Vector4d energies;         // ascending
    Matrix4 basis;                    // column i is eigenvector i, site basis
    Eigen::Matrix4d rate;             // rate(i, j) = transition rate i -> j
    Eigen::Matrix4d population_generator;  // dP/dt = W P
    Eigen::Vector4d out_rate;         // sum_j rate(i, j)
};

/// Throws std::invalid_argument when two eigenvalues of H_S lie within 1e-9.
/// lambda = 0 and beta = +inf are accepted.
RedfieldGenerator build_redfield(const SystemModel& sys, const bath::DrudeParams& params);

/// Applies the generator to a site-basis density matrix.
Matrix4 apply(const RedfieldGenerator& gen, const Matrix4& rho);

/// Exact propagation rho(t) = exp(t G) rho0, sampled every dt * sample_stride.
Trajectory propagate_redfield(const RedfieldGenerator& gen, const Matrix4& rho0, double dt, double t_end,
                              int sample_stride = 1);

/// Stationary state from the null space of the population generator.
Matrix4 stationary_state(const RedfieldGenerator& gen);

} // namespace heomq::redfield
