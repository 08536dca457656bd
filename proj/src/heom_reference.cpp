// Serial reference evaluation of the hierarchy generator. Written term by term
// with dynamic matrices and its own index lookup so that it shares nothing with
// the parallel kernel except the index ordering.

#include <map>
#include <vector>

#include "heomq/heom.hpp"

namespace heomq::heom {

void apply_reference(const SystemModel& sys, const bath::BathExpansion& bath, const HierarchyIndexSet& indices,
                     std::span<const Matrix4> in, std::span<Matrix4> out) {
    if (in.size() != indices.size() || out.size() != indices.size())
        throw std::invalid_argument("apply_reference: state size does not match the index set");
    if (indices.M() != bath.M)
        throw std::invalid_argument("apply_reference: inconsistent Matsubara cutoff");

    const int M = bath.M;
    const cplx i{0.0, 1.0};

    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t n = 0; n < indices.size(); ++n) {
        auto ix = indices.index(n);
        position[std::vector<int>(ix.begin(), ix.end())] = n;
    }
    auto lookup = [&](const std::vector<int>& key) -> const Matrix4* {
        auto it = position.find(key);
        return it == position.end() ? nullptr : &in[it->second];
    };

    for (std::size_t n = 0; n < indices.size(); ++n) {
        const auto span_ix = indices.index(n);
        const std::vector<int> ix(span_ix.begin(), span_ix.end());
        const ComplexMatrix rho = in[n];
        const ComplexMatrix H = sys.hs;

        double gamma_sum = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int k = 0; k <= M; ++k)
                gamma_sum += ix[HierarchyIndexSet::component(a, k, M)] * bath.nu[k];

        // drift
        ComplexMatrix d = -i * commutator(H, rho) - gamma_sum * rho;

        for (int a = 0; a < 2; ++a) {
            const ComplexMatrix V = sys.V[a];

            // counter-term for the Matsubara terms beyond M
            d -= bath.delta * commutator(V, commutator(V, rho));

            for (int k = 0; k <= M; ++k) {
                const int j = HierarchyIndexSet::component(a, k, M);

                std::vector<int> plus = ix;
                ++plus[j];
                if (const Matrix4* rp = lookup(plus))
                    d -= i * commutator(V, ComplexMatrix(*rp));

                if (ix[j] > 0) {
                    std::vector<int> minus = ix;
                    --minus[j];
                    if (const Matrix4* rm = lookup(minus)) {
                        const ComplexMatrix r = *rm;
                        d -= i * static_cast<double>(ix[j]) * (bath.c[k] * V * r - std::conj(bath.c[k]) * r * V);
                    }
                }
            }
        }
        out[n] = d;
    }
}

} // namespace heomq::heom
