// entangle.hpp — Two-qubit entanglement measures and death/revival detection

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "heomq/qmat.hpp"

namespace heomq {

struct ConcurrenceOptions {
    /// Eigenvalues of rho down to -pos_tol are clipped to zero; anything more
    /// negative is rejected as unphysical.
    double pos_tol{1e-8};
    /// Hermiticity and trace tolerance.
    double tol{1e-8};
};

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), l_i the descending square
/// roots of the eigenvalues of rho (sy x sy) rho^* (sy x sy).
double concurrence(const Matrix4& rho, const ConcurrenceOptions& opt = {});

/// Magnitude of the most negative eigenvalue removed by the last clipping in
/// concurrence() on this thread (0 when nothing was clipped).
double last_clipped_magnitude();

/// h((1 + sqrt(1 - C^2)) / 2) with h the binary entropy in bits.
double entanglement_of_formation(double C);

/// Equilibrium concurrence of the exchange Hamiltonian
/// eps (n_1 + n_2) + J (c_1^dag c_2 + h.c.) in closed form, clipped at zero.
double gibbs_concurrence_closed_form(double epsilon, double J, double beta);

struct DeathRevivalReport {
    std::vector<std::pair<double, double>> death_intervals;
    std::vector<double> revival_times;
};

/// Maximal runs of samples with C <= zero_tol. A revival is the right end of
/// a death interval that does not reach the last sample.
DeathRevivalReport detect_death_revival(std::span<const double> t, std::span<const double> C,
                                        double zero_tol = 1e-6);

} // namespace heomq
