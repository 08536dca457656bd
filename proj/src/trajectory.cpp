#include "heomq/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace heomq {

std::vector<double> Trajectory::times() const {
    std::vector<double> v;
    v.reserve(samples.size());
    for (const auto& s : samples)
        v.push_back(s.t);
    return v;
}

std::vector<double> Trajectory::concurrences() const {
    std::vector<double> v;
    v.reserve(samples.size());
    for (const auto& s : samples)
        v.push_back(s.C);
    return v;
}

Sample make_sample(double t, const Matrix4& rho, const ConcurrenceOptions& opt) {
    Sample s;
    s.t = t;
    s.rho = rho;
    s.trace_error = std::abs(rho.trace() - 1.0);
    s.herm_defect = hermiticity_defect(rho);
    Eigen::SelfAdjointEigenSolver<Matrix4> eig(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    s.min_eig = eig.eigenvalues().minCoeff();
    s.C = concurrence(rho, opt);
    s.eof = entanglement_of_formation(s.C);
    return s;
}

double concurrence_sup_diff(const Trajectory& a, const Trajectory& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("concurrence_sup_diff: trajectories have different sample counts");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.samples[i].t - b.samples[i].t) > 1e-9)
            throw std::invalid_argument("concurrence_sup_diff: sample times differ");
        d = std::max(d, std::abs(a.samples[i].C - b.samples[i].C));
    }
    return d;
}

DeathRevivalReport detect_death_revival(const Trajectory& traj, double zero_tol) {
    const auto t = traj.times();
    const auto c = traj.concurrences();
    return detect_death_revival(std::span<const double>(t), std::span<const double>(c), zero_tol);
}

} // namespace heomq
