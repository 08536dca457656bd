#include "heomq/toymodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "heomq/system.hpp"

namespace heomq::toy {

namespace {

void check(const ToyParams& p) {
    if (!(p.beta > 0.0))
        throw std::invalid_argument("ToyParams: beta must be positive");
}

} // namespace

Matrix4 toy_hamiltonian(const ToyParams& p) {
    // The system plays the role of the left tensor factor, the bath the right one.
    return exchange_hamiltonian(p.epsilon, p.g);
}

Matrix4 toy_thermal_state(const ToyParams& p) {
    check(p);
    const ComplexMatrix boltz = matrix_exp(-p.beta * ComplexMatrix(toy_hamiltonian(p)));
    const Matrix4 r = boltz / boltz.trace();
    return 0.5 * (r + r.adjoint());
}

double partition_function(const ToyParams& p) {
    const double x = std::exp(-p.beta * p.epsilon);
    return 1.0 + 2.0 * x * std::cosh(p.beta * p.g) + x * x;
}

Coherence system_bath_coherence(const ToyParams& p) {
    check(p);
    Coherence c;
    c.closed_form = -std::exp(-p.beta * p.epsilon) * std::sinh(p.beta * p.g) / partition_function(p);
    c.numeric = toy_thermal_state(p)(1, 2);
    const double diff = std::abs(c.closed_form - c.numeric);
    if (diff > 1e-12)
        throw std::runtime_error("system_bath_coherence: closed form and thermal state disagree by " +
                                 std::to_string(diff));
    return c;
}

Matrix2 reduced_system_state(const ToyParams& p) {
    const Matrix4 r = toy_thermal_state(p);
    Matrix2 s = Matrix2::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int k = 0; k < 2; ++k)
                s(a, b) += r(2 * a + k, 2 * b + k);
    return s;
}

Matrix2 reduced_bath_state(const ToyParams& p) {
    const Matrix4 r = toy_thermal_state(p);
    Matrix2 s = Matrix2::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int k = 0; k < 2; ++k)
                s(a, b) += r(2 * k + a, 2 * k + b);
    return s;
}

} // namespace heomq::toy
