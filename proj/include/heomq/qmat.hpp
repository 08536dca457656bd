// qmat.hpp — Small dense complex linear algebra for one- and two-qubit operators

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace heomq {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr cplx I_UNIT{0.0, 1.0};

namespace ops {

Matrix2 sigma_x();
Matrix2 sigma_y();
Matrix2 sigma_z();
/// Lowering operator c = |0><1| in the (|0>, |1>) basis.
Matrix2 lower();
/// Raising operator c^dagger = |1><0|.
Matrix2 raise();

} // namespace ops

/// Tensor product a (x) b; `a` is the left (slow-index) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// [a, x] = a x - x a. Throws std::invalid_argument on a shape mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& x);

struct EigenDecomposition {
    Eigen::VectorXd values;   // ascending
    ComplexMatrix vectors;    // column i belongs to values(i)
};

/// Eigen-decomposition of a Hermitian matrix. Inputs whose anti-Hermitian
/// part exceeds `herm_tol` in max-norm are rejected.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double herm_tol = 1e-10);

/// exp(m) by scaling and squaring with a truncated Taylor series.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);

/// Two-qubit density matrix over (|00>, |01>, |10>, |11>), qubit 1 first.
/// Construction checks Hermiticity and unit trace.
class DensityMatrix {
public:
    static constexpr double construction_tol = 1e-12;

    explicit DensityMatrix(const Matrix4& m, double tol = construction_tol);

    static DensityMatrix from_pure(const Eigen::Vector4cd& psi);

    const Matrix4& matrix() const { return m_; }
    double min_eigenvalue() const;
    bool is_physical(double pos_tol = 1e-8) const { return min_eigenvalue() >= -pos_tol; }

private:
    Matrix4 m_;
};

/// Gibbs state exp(-beta h) / Tr exp(-beta h), built from the spectrum.
ComplexMatrix gibbs_state(const ComplexMatrix& h, double beta);

} // namespace heomq
