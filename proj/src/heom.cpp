#include "heomq/heom.hpp"

#include <cmath>
#include <string>

namespace heomq::heom {

namespace {

// Returns true and fills the index maps if v has exactly one unit entry per row and column.
bool as_permutation(const Matrix4& v, std::array<int, 4>& row_src, std::array<int, 4>& col_src) {
    for (int i = 0; i < 4; ++i) {
        int hits = 0;
        for (int j = 0; j < 4; ++j) {
            if (v(i, j) == cplx(1.0, 0.0)) {
                row_src[i] = j;
                col_src[j] = i;
                ++hits;
            } else if (v(i, j) != cplx(0.0, 0.0)) {
                return false;
            }
        }
        if (hits != 1)
            return false;
    }
    std::array<bool, 4> seen{};
    for (int j : row_src)
        seen[j] = true;
    return seen[0] && seen[1] && seen[2] && seen[3];
}

inline Matrix4 permute_rows(const Matrix4& r, const std::array<int, 4>& src) {
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
        out.row(i) = r.row(src[i]);
    return out;
}

inline Matrix4 permute_cols(const Matrix4& r, const std::array<int, 4>& src) {
    Matrix4 out;
    for (int j = 0; j < 4; ++j)
        out.col(j) = r.col(src[j]);
    return out;
}

} // namespace

HeomOperator::HeomOperator(const SystemModel& sys, const bath::BathExpansion& bath,
                           std::shared_ptr<const HierarchyIndexSet> indices)
    : sys_(sys), bath_(bath), indices_(std::move(indices)) {
    if (!indices_)
        throw std::invalid_argument("HeomOperator: null index set");
    if (indices_->M() != bath_.M)
        throw std::invalid_argument("HeomOperator: index set has M=" + std::to_string(indices_->M()) +
                                    " but bath expansion has M=" + std::to_string(bath_.M));
    permutation_v_ = true;
    for (int a = 0; a < 2; ++a) {
        permutation_v_ = permutation_v_ && as_permutation(sys_.V[a], row_src_[a], col_src_[a]);
    }

    const int width = indices_->width();
    const int kmax = bath_.M + 1;
    damping_.resize(indices_->size());
    for (std::size_t n = 0; n < indices_->size(); ++n) {
        const auto ix = indices_->index(n);
        double g = 0.0;
        for (int j = 0; j < width; ++j)
            g += ix[j] * bath_.nu[j % kmax];
        damping_[n] = g;
    }
}

void HeomOperator::apply(std::span<const Matrix4> in, std::span<Matrix4> out) const {
    if (in.size() != indices_->size() || out.size() != indices_->size())
        throw std::invalid_argument("HeomOperator::apply: state size does not match the index set");
    if (permutation_v_)
        apply_impl<true>(in, out);
    else
        apply_impl<false>(in, out);
}

template <bool Permutation>
void HeomOperator::apply_impl(std::span<const Matrix4> in, std::span<Matrix4> out) const {
    const HierarchyIndexSet& idx = *indices_;
    const auto count = static_cast<std::ptrdiff_t>(idx.size());
    const int kmax = bath_.M + 1;
    const Matrix4& H = sys_.hs;
    const cplx mi{0.0, -1.0};
    const double delta = bath_.delta;

    auto left = [&](int a, const Matrix4& x) -> Matrix4 {
        if constexpr (Permutation)
            return permute_rows(x, row_src_[a]);
        else
            return sys_.V[a] * x;
    };
    auto right = [&](int a, const Matrix4& x) -> Matrix4 {
        if constexpr (Permutation)
            return permute_cols(x, col_src_[a]);
        else
            return x * sys_.V[a];
    };

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < count; ++n) {
        const Matrix4& r = in[n];
        const auto ix = idx.index(static_cast<std::size_t>(n));

        Matrix4 d = mi * (H * r - r * H) - damping_[n] * r;

        for (int a = 0; a < 2; ++a) {
            // [V, [V, r]] = V V r - 2 V r V + r V V
            const Matrix4 Vr = left(a, r);
            d -= delta * (left(a, Vr) - 2.0 * right(a, Vr) + right(a, right(a, r)));

            Matrix4 up = Matrix4::Zero();
            Matrix4 down_l = Matrix4::Zero();
            Matrix4 down_r = Matrix4::Zero();
            bool any_up = false;
            bool any_down = false;
            for (int k = 0; k < kmax; ++k) {
                const int j = HierarchyIndexSet::component(a, k, bath_.M);
                if (const auto p = idx.raised(n, j); p != HierarchyIndexSet::none) {
                    up += in[p];
                    any_up = true;
                }
                if (const auto m = idx.lowered(n, j); m != HierarchyIndexSet::none) {
                    const double nk = ix[j];
                    down_l += (nk * bath_.c[k]) * in[m];
                    down_r += (nk * std::conj(bath_.c[k])) * in[m];
                    any_down = true;
                }
            }
            if (any_up)
                d += mi * (left(a, up) - right(a, up));
            if (any_down)
                d += mi * (left(a, down_l) - right(a, down_r));
        }
        out[n] = d;
    }
}

std::vector<Matrix4> rhs(const HierarchyState& state, const SystemModel& sys, const bath::BathExpansion& bath) {
    if (!state.indices)
        throw std::invalid_argument("rhs: state has no index set");
    if (state.indices->M() != bath.M)
        throw std::invalid_argument("rhs: state has M=" + std::to_string(state.indices->M()) +
                                    " but bath expansion has M=" + std::to_string(bath.M));
    HeomOperator op(sys, bath, state.indices);
    std::vector<Matrix4> out(state.size());
    op.apply(state.ados, out);
    return out;
}

namespace {

struct Rk4Workspace {
    std::vector<Matrix4> k, acc, tmp;
    explicit Rk4Workspace(std::size_t n) : k(n), acc(n), tmp(n) {}
};

void rk4_step(std::vector<Matrix4>& y, const HeomOperator& op, double h, Rk4Workspace& w) {
    const auto n = static_cast<std::ptrdiff_t>(y.size());

    op.apply(y, w.k);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        w.acc[i] = w.k[i];
        w.tmp[i] = y[i] + (0.5 * h) * w.k[i];
    }

    op.apply(w.tmp, w.k);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        w.acc[i] += 2.0 * w.k[i];
        w.tmp[i] = y[i] + (0.5 * h) * w.k[i];
    }

    op.apply(w.tmp, w.k);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        w.acc[i] += 2.0 * w.k[i];
        w.tmp[i] = y[i] + h * w.k[i];
    }

    op.apply(w.tmp, w.k);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        y[i] += (h / 6.0) * (w.acc[i] + w.k[i]);
}

bool all_finite(std::span<const Matrix4> ados) {
    for (const auto& a : ados)
        if (!a.allFinite())
            return false;
    return true;
}

} // namespace

void rk4_step(HierarchyState& state, const HeomOperator& op, double dt) {
    Rk4Workspace w(state.size());
    rk4_step(state.ados, op, dt, w);
    state.t += dt;
}

Trajectory propagate(HierarchyState& state, const HeomOperator& op, const PropagateOptions& opt,
                     const Observer& observer) {
    if (!(opt.dt > 0.0))
        throw std::invalid_argument("propagate: dt must be positive");
    if (opt.sample_stride < 1)
        throw std::invalid_argument("propagate: sample stride must be at least 1");
    if (!(opt.t_end > state.t))
        throw std::invalid_argument("propagate: t_end must lie after the current time");
    if (state.size() != op.indices().size())
        throw std::invalid_argument("propagate: state does not match the operator's hierarchy");

    const double t0 = state.t;
    const auto steps = static_cast<long long>(std::llround((opt.t_end - t0) / opt.dt));
    Rk4Workspace w(state.size());
    Trajectory traj;

    auto sample = [&] {
        if (opt.record)
            traj.samples.push_back(make_sample(state.t, state.rho()));
        if (observer)
            observer(state);
    };

    sample();
    for (long long s = 1; s <= steps; ++s) {
        rk4_step(state.ados, op, opt.dt, w);
        state.t = t0 + static_cast<double>(s) * opt.dt;
        if (!all_finite(state.ados))
            throw IntegrationError("propagate: non-finite ADO at t=" + std::to_string(state.t), state.t);
        if (s % opt.sample_stride == 0)
            sample();
    }
    return traj;
}

Trajectory propagate(HierarchyState& state, const SystemModel& sys, const bath::BathExpansion& bath,
                     const PropagateOptions& opt, const Observer& observer) {
    HeomOperator op(sys, bath, state.indices);
    return propagate(state, op, opt, observer);
}

HierarchyState equilibrate(const HeomOperator& op, const Matrix4& rho0, const EquilibrateOptions& opt) {
    if (!(opt.t_eq > 0.0))
        throw std::invalid_argument("equilibrate: t_eq must be positive");
    HierarchyState state(op.indices_ptr(), rho0, 0.0);
    propagate(state, op, {.dt = opt.dt, .t_end = opt.t_eq, .sample_stride = 1, .record = false});

    std::vector<Matrix4> d(state.size());
    op.apply(state.ados, d);
    const double residual = max_abs(d);
    if (!(residual <= opt.stationarity_tol))
        throw StationarityError("equilibrate: hierarchy not stationary after t_eq=" + std::to_string(opt.t_eq) +
                                    " (residual " + std::to_string(residual) + ")",
                                residual);
    state.t = 0.0;
    return state;
}

HierarchyState equilibrate_from_gibbs(const HeomOperator& op, const EquilibrateOptions& opt) {
    const Matrix4 gibbs = gibbs_state(op.system().hs, op.bath().params.beta);
    return equilibrate(op, gibbs, opt);
}

HierarchyState apply_pulse(HierarchyState state, int qubit) {
    const Matrix4 U = on_qubit(ops::sigma_y(), qubit);
    const Matrix4 Ud = U.adjoint();
    for (auto& a : state.ados)
        a = U * a * Ud;
    return state;
}

HierarchyState factorize(HierarchyState state) {
    for (std::size_t n = 1; n < state.size(); ++n)
        state.ados[n].setZero();
    return state;
}

} // namespace heomq::heom
