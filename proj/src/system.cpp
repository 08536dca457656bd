#include "heomq/system.hpp"

#include <stdexcept>

namespace heomq {

Matrix4 on_qubit(const Matrix2& op, int qubit) {
    const ComplexMatrix id = Matrix2::Identity();
    switch (qubit) {
    case 1: return kron(op, id);
    case 2: return kron(id, op);
    default: throw std::invalid_argument("on_qubit: qubit must be 1 or 2");
    }
}

SystemModel build_system(double epsilon, double J) {
    const Matrix4 c1 = on_qubit(ops::lower(), 1);
    const Matrix4 c2 = on_qubit(ops::lower(), 2);
    const Matrix4 x1 = c1 + c1.adjoint();
    const Matrix4 x2 = c2 + c2.adjoint();

    SystemModel s;
    s.epsilon = epsilon;
    s.J = J;
    s.hs = epsilon * (c1.adjoint() * c1 + c2.adjoint() * c2) + J * x1 * x2;
    s.V = {x1, x2};
    return s;
}

Matrix4 exchange_hamiltonian(double epsilon, double J) {
    const Matrix4 c1 = on_qubit(ops::lower(), 1);
    const Matrix4 c2 = on_qubit(ops::lower(), 2);
    return epsilon * (c1.adjoint() * c1 + c2.adjoint() * c2) + J * (c1.adjoint() * c2 + c2.adjoint() * c1);
}

} // namespace heomq
