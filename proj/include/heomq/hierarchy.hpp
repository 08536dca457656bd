// hierarchy.hpp — Multi-index bookkeeping and state container for the HEOM

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "heomq/qmat.hpp"

namespace heomq {

/// All multi-indices n = (n_{1,0..M}, n_{2,0..M}) with sum(n) <= L, in graded
/// order: by tier, and inside a tier lexicographically descending, so that
/// M=0, L=1 gives (0,0), (1,0), (0,1). Component j = alpha * (M+1) + k
/// with alpha in {0, 1} for baths 1 and 2.
class HierarchyIndexSet {
public:
    static constexpr std::int32_t none = -1;

    HierarchyIndexSet(int M, int L);

    int M() const { return M_; }
    int L() const { return L_; }
    /// Number of index components, 2(M+1).
    int width() const { return width_; }
    std::size_t size() const { return tier_.size(); }

    std::span<const std::uint16_t> index(std::size_t n) const {
        return {components_.data() + n * width_, static_cast<std::size_t>(width_)};
    }
    int tier(std::size_t n) const { return tier_[n]; }

    /// Position of n with component j raised / lowered by one, or `none` when
    /// that index is outside the truncated set (tier > L or a negative entry).
    std::int32_t raised(std::size_t n, int j) const { return up_[n * width_ + j]; }
    std::int32_t lowered(std::size_t n, int j) const { return down_[n * width_ + j]; }

    /// Position of a multi-index, or `none`.
    std::int32_t find(std::span<const std::uint16_t> n) const;

    static int component(int alpha, int k, int M) { return alpha * (M + 1) + k; }

private:
    int M_;
    int L_;
    int width_;
    std::vector<std::uint16_t> components_;
    std::vector<int> tier_;
    std::vector<std::int32_t> up_;
    std::vector<std::int32_t> down_;
};

/// Binomial coefficient C(L + K, K): the number of multi-indices of width K
/// with tier <= L.
std::size_t hierarchy_size(int M, int L);

/// Every auxiliary density operator of a truncated hierarchy. ados[0] is the
/// physical reduced density matrix.
struct HierarchyState {
    std::shared_ptr<const HierarchyIndexSet> indices;
    std::vector<Matrix4> ados;
    double t{0.0};

    HierarchyState() = default;
    HierarchyState(std::shared_ptr<const HierarchyIndexSet> idx, const Matrix4& rho0, double t0 = 0.0);

    const Matrix4& rho() const { return ados.front(); }
    std::size_t size() const { return ados.size(); }
};

/// Largest |entry| over every ADO.
double max_abs(std::span<const Matrix4> ados);

} // namespace heomq
