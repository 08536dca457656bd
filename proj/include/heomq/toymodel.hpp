// toymodel.hpp — Two-level system coupled to a single two-level "bath" in thermal equilibrium

#pragma once

#include <complex>

#include "heomq/qmat.hpp"

namespace heomq::toy {

/// H = eps c_S^dag c_S + eps c_B^dag c_B + g (c_S^dag c_B + c_B^dag c_S)
struct ToyParams {
    double epsilon{1.0};
    double g{0.5};
    double beta{1.0};
};

Matrix4 toy_hamiltonian(const ToyParams& p);

/// exp(-beta H) / Z over (|0_S 0_B>, |0_S 1_B>, |1_S 0_B>, |1_S 1_B>).
Matrix4 toy_thermal_state(const ToyParams& p);

/// Z = 1 + 2 exp(-beta eps) cosh(beta g) + exp(-2 beta eps)
double partition_function(const ToyParams& p);

struct Coherence {
    std::complex<double> closed_form;  // -(1/Z) exp(-beta eps) sinh(beta g)
    std::complex<double> numeric;      // <0_S 1_B| R |1_S 0_B> from toy_thermal_state
};

/// Throws std::runtime_error if the two values differ by more than 1e-12.
Coherence system_bath_coherence(const ToyParams& p);

/// Partial trace of the thermal state over the bath two-level system.
Matrix2 reduced_system_state(const ToyParams& p);

/// Partial trace over the system.
Matrix2 reduced_bath_state(const ToyParams& p);

} // namespace heomq::toy
