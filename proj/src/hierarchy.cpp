#include "heomq/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace heomq {

namespace {

// Compositions of `total` into `parts` non-negative entries, lexicographically descending.
void compositions(int total, int parts, std::vector<std::uint16_t>& prefix,
                  std::vector<std::uint16_t>& out) {
    if (parts == 1) {
        prefix.push_back(static_cast<std::uint16_t>(total));
        out.insert(out.end(), prefix.begin(), prefix.end());
        prefix.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        prefix.push_back(static_cast<std::uint16_t>(first));
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::size_t hierarchy_size(int M, int L) {
    const std::size_t k = 2 * static_cast<std::size_t>(M + 1);
    std::size_t c = 1;
    for (std::size_t i = 1; i <= k; ++i)
        c = c * (static_cast<std::size_t>(L) + i) / i;
    return c;
}

HierarchyIndexSet::HierarchyIndexSet(int M, int L) : M_(M), L_(L), width_(2 * (M + 1)) {
    if (M < 0 || L < 0)
        throw std::invalid_argument("HierarchyIndexSet: M and L must be non-negative");

    std::vector<std::uint16_t> prefix;
    for (int tier = 0; tier <= L; ++tier) {
        const std::size_t before = components_.size();
        compositions(tier, width_, prefix, components_);
        tier_.insert(tier_.end(), (components_.size() - before) / width_, tier);
    }

    std::map<std::vector<std::uint16_t>, std::int32_t> lookup;
    for (std::size_t n = 0; n < size(); ++n) {
        auto ix = index(n);
        lookup.emplace(std::vector<std::uint16_t>(ix.begin(), ix.end()), static_cast<std::int32_t>(n));
    }

    up_.assign(size() * width_, none);
    down_.assign(size() * width_, none);
    std::vector<std::uint16_t> probe(width_);
    for (std::size_t n = 0; n < size(); ++n) {
        auto ix = index(n);
        for (int j = 0; j < width_; ++j) {
            std::copy(ix.begin(), ix.end(), probe.begin());
            if (tier_[n] < L) {
                ++probe[j];
                up_[n * width_ + j] = lookup.at(probe);
                --probe[j];
            }
            if (probe[j] > 0) {
                --probe[j];
                down_[n * width_ + j] = lookup.at(probe);
            }
        }
    }
}

std::int32_t HierarchyIndexSet::find(std::span<const std::uint16_t> n) const {
    if (n.size() != static_cast<std::size_t>(width_))
        return none;
    // Indices are few enough (thousands) that a linear scan is fine here; the
    // kernels only use the neighbour tables.
    for (std::size_t m = 0; m < size(); ++m)
        if (std::ranges::equal(index(m), n))
            return static_cast<std::int32_t>(m);
    return none;
}

HierarchyState::HierarchyState(std::shared_ptr<const HierarchyIndexSet> idx, const Matrix4& rho0, double t0)
    : indices(std::move(idx)), ados(indices->size(), Matrix4::Zero()), t(t0) {
    ados[0] = rho0;
}

double max_abs(std::span<const Matrix4> ados) {
    double m = 0.0;
    for (const auto& a : ados)
        m = std::max(m, a.cwiseAbs().maxCoeff());
    return m;
}

} // namespace heomq
