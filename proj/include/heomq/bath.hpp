// bath.hpp — Drude-Lorentz spectral density and its Matsubara expansion

#pragma once

#include <complex>
#include <vector>

namespace heomq::bath {

/// Drude-Lorentz bath. Energies in units of J, beta in units of 1/J.
struct DrudeParams {
    double lambda{0.3};  // reorganization energy
    double gamma{0.5};   // bath relaxation rate (inverse bath timescale)
    double beta{2.5};    // inverse temperature
};

/// Relative distance to the cot / c_k poles below which construction fails.
inline constexpr double pole_tol = 1e-9;

/// Throws std::invalid_argument for non-positive parameters or when
/// beta*gamma/2 sits on a multiple of pi.
void validate(const DrudeParams& p);

/// J(w) = w * 2 lambda gamma / (gamma^2 + w^2)
double spectral_density(const DrudeParams& p, double omega);

/// Bose-Einstein occupation 1 / (exp(beta w) - 1), w > 0.
double bose(double beta, double omega);

/// L(t) = sum_k c_k exp(-nu_k |t|) truncated at k = M, plus the counter-term
/// Delta(M) that compensates the dropped Matsubara terms in the hierarchy.
struct BathExpansion {
    DrudeParams params;
    int M{0};
    std::vector<double> nu;                  // M+1 decay rates
    std::vector<std::complex<double>> c;     // M+1 prefactors
    double delta{0.0};                       // Re of 2 lambda/(beta gamma) - i lambda - sum c_k/nu_k
    double delta_imag{0.0};                  // residual imaginary part, zero up to rounding
};

BathExpansion build_expansion(const DrudeParams& p, int M);

/// Truncated Matsubara series sum_{k<=M} c_k exp(-nu_k t), t >= 0.
std::complex<double> correlation_function(const BathExpansion& exp, double t);

} // namespace heomq::bath
