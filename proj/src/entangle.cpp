#include "heomq/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "heomq/system.hpp"

namespace heomq {

namespace {

thread_local double g_last_clip = 0.0;

const Matrix4& spin_flip() {
    static const Matrix4 yy = kron(ops::sigma_y(), ops::sigma_y());
    return yy;
}

double binary_entropy(double p) {
    auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
    return term(p) + term(1.0 - p);
}

} // namespace

double concurrence(const Matrix4& rho, const ConcurrenceOptions& opt) {
    const double defect = hermiticity_defect(rho);
    if (defect > opt.tol)
        throw std::invalid_argument("concurrence: rho not Hermitian (defect " + std::to_string(defect) + ")");
    const double trace_err = std::abs(rho.trace() - 1.0);
    if (trace_err > opt.tol)
        throw std::invalid_argument("concurrence: trace of rho off by " + std::to_string(trace_err));

    Eigen::SelfAdjointEigenSolver<Matrix4> eig(0.5 * (rho + rho.adjoint()));
    Eigen::Vector4d w = eig.eigenvalues();
    if (w.minCoeff() < -opt.pos_tol)
        throw std::invalid_argument("concurrence: rho has eigenvalue " + std::to_string(w.minCoeff()) +
                                    " below -" + std::to_string(opt.pos_tol));
    g_last_clip = std::max(0.0, -w.minCoeff());
    w = w.cwiseMax(0.0);

    // With rho = X X^dag, the l_i are the singular values of X^T (sy x sy) X.
    // Taking singular values directly avoids square roots of near-zero
    // eigenvalues, which would turn rounding noise into ~1e-8 errors for
    // nearly pure states.
    const Matrix4 X = eig.eigenvectors() * w.cwiseSqrt().cast<cplx>().asDiagonal();
    const Matrix4 tau = X.transpose() * spin_flip() * X;
    Eigen::JacobiSVD<Matrix4> svd(tau);
    Eigen::Vector4d l = svd.singularValues();
    std::sort(l.data(), l.data() + 4, std::greater<>());
    return std::clamp(l(0) - l(1) - l(2) - l(3), 0.0, 1.0);
}

double last_clipped_magnitude() { return g_last_clip; }

double entanglement_of_formation(double C) {
    if (!(C >= 0.0 && C <= 1.0))
        throw std::invalid_argument("entanglement_of_formation: C must lie in [0, 1]");
    return binary_entropy((1.0 + std::sqrt(1.0 - C * C)) / 2.0);
}

double gibbs_concurrence_closed_form(double epsilon, double J, double beta) {
    if (!(beta > 0.0))
        throw std::invalid_argument("gibbs_concurrence_closed_form: beta must be positive");
    const double c = (-1.0 + std::sinh(beta * J)) / (std::cosh(beta * epsilon) + std::cosh(beta * J));
    return std::max(0.0, c);
}

DeathRevivalReport detect_death_revival(std::span<const double> t, std::span<const double> C, double zero_tol) {
    if (t.size() != C.size())
        throw std::invalid_argument("detect_death_revival: time and concurrence lengths differ");
    DeathRevivalReport rep;
    std::size_t i = 0;
    while (i < C.size()) {
        if (C[i] > zero_tol) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < C.size() && C[j + 1] <= zero_tol)
            ++j;
        rep.death_intervals.emplace_back(t[i], t[j]);
        if (j + 1 < C.size())
            rep.revival_times.push_back(t[j]);
        i = j + 1;
    }
    return rep;
}

} // namespace heomq
