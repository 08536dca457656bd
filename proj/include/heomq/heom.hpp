// heom.hpp — Hierarchical equations of motion for two qubits with independent Drude baths

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "heomq/bath.hpp"
#include "heomq/hierarchy.hpp"
#include "heomq/system.hpp"
#include "heomq/trajectory.hpp"

namespace heomq::heom {

/// Linear generator of the truncated hierarchy. For every ADO rho^n:
///
///   d rho^n = -(i H^x + sum n_ak nu_k) rho^n - Delta sum_a V_a^x V_a^x rho^n
///             - i sum_a V_a^x sum_k rho^{n + e_ak}
///             - i sum_a sum_k n_ak (c_k V_a rho^{n - e_ak} - c_k^* rho^{n - e_ak} V_a)
///
/// with A^x B = [A, B]. Neighbours above tier L are taken as zero.
class HeomOperator {
public:
    HeomOperator(const SystemModel& sys, const bath::BathExpansion& bath,
                 std::shared_ptr<const HierarchyIndexSet> indices);

    const HierarchyIndexSet& indices() const { return *indices_; }
    const std::shared_ptr<const HierarchyIndexSet>& indices_ptr() const { return indices_; }
    const SystemModel& system() const { return sys_; }
    const bath::BathExpansion& bath() const { return bath_; }

    /// out = generator(in). OpenMP-parallel over ADOs; each output ADO reads
    /// only its own input and its fixed neighbours, in a fixed order, so the
    /// result does not depend on the thread count.
    void apply(std::span<const Matrix4> in, std::span<Matrix4> out) const;

private:
    SystemModel sys_;
    bath::BathExpansion bath_;
    std::shared_ptr<const HierarchyIndexSet> indices_;
    std::vector<double> damping_;
    // Set when both V_a are 0/1 permutation matrices: V r picks rows
    // row_src_[a][i], r V picks columns col_src_[a][j].
    bool permutation_v_{false};
    std::array<std::array<int, 4>, 2> row_src_{};
    std::array<std::array<int, 4>, 2> col_src_{};

    template <bool Permutation>
    void apply_impl(std::span<const Matrix4> in, std::span<Matrix4> out) const;
};

/// Term-by-term serial evaluation of the same generator on dynamic matrices.
/// Slow; kept as the reference the parallel kernel is tested against.
void apply_reference(const SystemModel& sys, const bath::BathExpansion& bath, const HierarchyIndexSet& indices,
                     std::span<const Matrix4> in, std::span<Matrix4> out);

/// Time derivative of every ADO. Throws std::invalid_argument if the state's
/// Matsubara cutoff differs from the bath expansion's.
std::vector<Matrix4> rhs(const HierarchyState& state, const SystemModel& sys, const bath::BathExpansion& bath);

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
    double time() const { return t_; }

private:
    double t_;
};

class StationarityError : public std::runtime_error {
public:
    StationarityError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

struct PropagateOptions {
    double dt{1e-3};
    double t_end{10.0};      // absolute end time
    int sample_stride{10};   // record every sample_stride steps, starting with the initial state
    bool record{true};       // build a Trajectory of reduced-state samples
};

using Observer = std::function<void(const HierarchyState&)>;

/// Classical RK4 with fixed step. Advances `state` in place to opt.t_end and
/// returns the sampled trajectory. Throws IntegrationError on a non-finite ADO.
Trajectory propagate(HierarchyState& state, const HeomOperator& op, const PropagateOptions& opt,
                     const Observer& observer = {});

Trajectory propagate(HierarchyState& state, const SystemModel& sys, const bath::BathExpansion& bath,
                     const PropagateOptions& opt, const Observer& observer = {});

/// A single RK4 step of size dt (no sampling).
void rk4_step(HierarchyState& state, const HeomOperator& op, double dt);

struct EquilibrateOptions {
    double t_eq{60.0};
    double stationarity_tol{1e-7};
    double dt{1e-3};
};

/// Propagates from ados[0] = rho0 (all other ADOs zero) for t_eq, then checks
/// that the max-norm of the full-hierarchy derivative is below the tolerance.
/// The returned state has t = 0. Throws StationarityError otherwise.
HierarchyState equilibrate(const HeomOperator& op, const Matrix4& rho0, const EquilibrateOptions& opt = {});

/// Same, starting from the Gibbs state of H_S.
HierarchyState equilibrate_from_gibbs(const HeomOperator& op, const EquilibrateOptions& opt = {});

/// Conjugates every ADO by sigma_y on `qubit` (1 or 2).
HierarchyState apply_pulse(HierarchyState state, int qubit);

/// Keeps ados[0] and zeroes every other ADO, discarding system-bath coherence.
HierarchyState factorize(HierarchyState state);

} // namespace heomq::heom
