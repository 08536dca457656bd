#include "heomq/redfield.hpp"

#include <cmath>
#include <stdexcept>

namespace heomq::redfield {

RedfieldGenerator build_redfield(const SystemModel& sys, const bath::DrudeParams& params) {
    // No Matsubara poles here, so lambda = 0 and beta = inf are both fine.
    if (!(params.lambda >= 0.0) || !(params.gamma > 0.0) || !(params.beta > 0.0))
        throw std::invalid_argument("build_redfield: need lambda >= 0, gamma > 0, beta > 0");
    const auto eig = hermitian_eigen(sys.hs);

    RedfieldGenerator g;
    g.energies = eig.values;
    g.basis = eig.vectors;
    for (int i = 0; i + 1 < 4; ++i)
        if (g.energies(i + 1) - g.energies(i) < 1e-9)
            throw std::invalid_argument("build_redfield: degenerate system spectrum, secular limit undefined");

    std::array<Matrix4, 2> v_eig;
    for (int a = 0; a < 2; ++a)
        v_eig[a] = g.basis.adjoint() * sys.V[a] * g.basis;

    g.rate.setZero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                continue;
            double coupling = 0.0;
            for (int a = 0; a < 2; ++a)
                coupling += std::norm(v_eig[a](j, i));
            const double w = std::abs(g.energies(i) - g.energies(j));
            const double n = bath::bose(params.beta, w);
            const double golden = 2.0 * bath::spectral_density(params, w);
            g.rate(i, j) = coupling * golden * (g.energies(i) > g.energies(j) ? n + 1.0 : n);
        }
    }
    g.out_rate = g.rate.rowwise().sum();
    g.population_generator = g.rate.transpose();
    g.population_generator.diagonal() -= g.out_rate;
    return g;
}

Matrix4 apply(const RedfieldGenerator& g, const Matrix4& rho) {
    const Matrix4 r = g.basis.adjoint() * rho * g.basis;
    Matrix4 d = Matrix4::Zero();
    const Eigen::Vector4d p = r.diagonal().real();
    const Eigen::Vector4d dp = g.population_generator * p;
    for (int i = 0; i < 4; ++i) {
        d(i, i) = dp(i);
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                continue;
            const cplx rate{0.5 * (g.out_rate(i) + g.out_rate(j)), g.energies(i) - g.energies(j)};
            d(i, j) = -rate * r(i, j);
        }
    }
    return g.basis * d * g.basis.adjoint();
}

namespace {

Matrix4 evolve(const RedfieldGenerator& g, const Matrix4& r0_eig, double t) {
    const ComplexMatrix w = g.population_generator.cast<cplx>() * t;
    const ComplexMatrix prop = matrix_exp(w);
    const Eigen::Vector4cd p = prop * r0_eig.diagonal();
    Matrix4 r = Matrix4::Zero();
    for (int i = 0; i < 4; ++i) {
        r(i, i) = p(i).real();
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                continue;
            const cplx rate{0.5 * (g.out_rate(i) + g.out_rate(j)), g.energies(i) - g.energies(j)};
            r(i, j) = r0_eig(i, j) * std::exp(-rate * t);
        }
    }
    return g.basis * r * g.basis.adjoint();
}

} // namespace

Trajectory propagate_redfield(const RedfieldGenerator& g, const Matrix4& rho0, double dt, double t_end,
                              int sample_stride) {
    if (!(dt > 0.0))
        throw std::invalid_argument("propagate_redfield: dt must be positive");
    if (sample_stride < 1)
        throw std::invalid_argument("propagate_redfield: sample stride must be at least 1");
    const Matrix4 r0 = g.basis.adjoint() * rho0 * g.basis;
    const auto steps = static_cast<long long>(std::llround(t_end / dt));
    Trajectory traj;
    for (long long s = 0; s <= steps; s += sample_stride) {
        const double t = static_cast<double>(s) * dt;
        Matrix4 rho = evolve(g, r0, t);
        rho = 0.5 * (rho + rho.adjoint()).eval();
        traj.samples.push_back(make_sample(t, rho));
    }
    return traj;
}

Matrix4 stationary_state(const RedfieldGenerator& g) {
    Eigen::FullPivLU<Eigen::Matrix4d> lu(g.population_generator);
    const Eigen::MatrixXd kernel = lu.kernel();
    if (kernel.cols() != 1)
        throw std::runtime_error("stationary_state: population generator null space is not one-dimensional");
    Eigen::Vector4d p = kernel.col(0);
    p /= p.sum();
    const Matrix4 r = p.cast<cplx>().asDiagonal();
    return g.basis * r * g.basis.adjoint();
}

} // namespace heomq::redfield
