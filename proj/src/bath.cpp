#include "heomq/bath.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace heomq::bath {

void validate(const DrudeParams& p) {
    if (!(p.lambda > 0.0) || !(p.gamma > 0.0) || !(p.beta > 0.0))
        throw std::invalid_argument("DrudeParams: lambda, gamma and beta must all be positive");
    const double x = p.beta * p.gamma / 2.0;
    const double n = std::round(x / std::numbers::pi);
    if (n >= 1.0 && std::abs(x - n * std::numbers::pi) < pole_tol)
        throw std::invalid_argument("DrudeParams: beta*gamma/2 is a multiple of pi (cot pole)");
}

double spectral_density(const DrudeParams& p, double omega) {
    return omega * 2.0 * p.lambda * p.gamma / (p.gamma * p.gamma + omega * omega);
}

double bose(double beta, double omega) {
    return 1.0 / std::expm1(beta * omega);
}

BathExpansion build_expansion(const DrudeParams& p, int M) {
    validate(p);
    if (M < 0)
        throw std::invalid_argument("build_expansion: Matsubara cutoff must be non-negative");

    BathExpansion e;
    e.params = p;
    e.M = M;
    e.nu.resize(static_cast<std::size_t>(M) + 1);
    e.c.resize(static_cast<std::size_t>(M) + 1);

    const double lg = p.lambda * p.gamma;
    e.nu[0] = p.gamma;
    e.c[0] = lg * std::complex<double>(1.0 / std::tan(p.beta * p.gamma / 2.0), -1.0);
    for (int k = 1; k <= M; ++k) {
        const double nu = 2.0 * std::numbers::pi * k / p.beta;
        if (std::abs(nu - p.gamma) < pole_tol)
            throw std::invalid_argument("build_expansion: gamma coincides with Matsubara frequency nu_" +
                                        std::to_string(k));
        e.nu[k] = nu;
        e.c[k] = (4.0 * lg / p.beta) * nu / (nu * nu - p.gamma * p.gamma);
    }

    std::complex<double> d(2.0 * p.lambda / (p.beta * p.gamma), -p.lambda);
    for (int k = 0; k <= M; ++k)
        d -= e.c[k] / e.nu[k];
    e.delta = d.real();
    e.delta_imag = d.imag();
    return e;
}

std::complex<double> correlation_function(const BathExpansion& e, double t) {
    if (t < 0.0)
        throw std::invalid_argument("correlation_function: t must be non-negative");
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t k = 0; k < e.nu.size(); ++k)
        sum += e.c[k] * std::exp(-e.nu[k] * t);
    return sum;
}

} // namespace heomq::bath
