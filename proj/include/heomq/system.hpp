// system.hpp — Two coupled qubits and their bath coupling operators

#pragma once

#include <array>

#include "heomq/qmat.hpp"

namespace heomq {

/// H_S = eps (n_1 + n_2) + J (c_1 + c_1^dag)(c_2 + c_2^dag), with one bath
/// per qubit coupling through V_a = c_a + c_a^dag.
struct SystemModel {
    double epsilon{1.5};
    double J{1.0};
    Matrix4 hs;
    std::array<Matrix4, 2> V;
};

SystemModel build_system(double epsilon, double J);

/// Number-conserving exchange Hamiltonian eps (n_1 + n_2) + J (c_1^dag c_2 + c_2^dag c_1).
Matrix4 exchange_hamiltonian(double epsilon, double J);

/// Single-qubit operator embedded on `qubit` (1 or 2) of the two-qubit space.
Matrix4 on_qubit(const Matrix2& op, int qubit);

} // namespace heomq
