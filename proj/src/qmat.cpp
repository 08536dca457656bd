#include "heomq/qmat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace heomq {

namespace ops {

Matrix2 sigma_x() {
    Matrix2 m;
    m << 0, 1,
         1, 0;
    return m;
}

Matrix2 sigma_y() {
    Matrix2 m;
    m << 0, -I_UNIT,
         I_UNIT, 0;
    return m;
}

Matrix2 sigma_z() {
    Matrix2 m;
    m << 1, 0,
         0, -1;
    return m;
}

Matrix2 lower() {
    Matrix2 m;
    m << 0, 1,
         0, 0;
    return m;
}

Matrix2 raise() { return lower().adjoint(); }

} // namespace ops

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& x) {
    if (a.rows() != a.cols() || x.rows() != x.cols() || a.rows() != x.rows())
        throw std::invalid_argument("commutator: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(x.rows()) + "x" +
                                    std::to_string(x.cols()) + ")");
    return a * x - x * a;
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double herm_tol) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    const double defect = hermiticity_defect(m);
    if (defect > herm_tol)
        throw std::invalid_argument("hermitian_eigen: input not Hermitian (defect " + std::to_string(defect) + ")");
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix_exp: matrix is not square");
    const Eigen::Index n = m.rows();
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5)
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const ComplexMatrix a = m / std::ldexp(1.0, squarings);

    // ||a|| <= 1/2, so 20 Taylor terms put the remainder far below double epsilon.
    ComplexMatrix result = ComplexMatrix::Identity(n, n);
    ComplexMatrix term = ComplexMatrix::Identity(n, n);
    for (int k = 1; k <= 20; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s)
        result = result * result;
    return result;
}

ComplexMatrix gibbs_state(const ComplexMatrix& h, double beta) {
    const auto eig = hermitian_eigen(h);
    const double e0 = eig.values.minCoeff();
    Eigen::VectorXd w = (-beta * (eig.values.array() - e0)).exp();
    w /= w.sum();
    return eig.vectors * w.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
}

DensityMatrix::DensityMatrix(const Matrix4& m, double tol) : m_(m) {
    const double defect = hermiticity_defect(m);
    if (defect > tol)
        throw std::invalid_argument("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
    const double trace_err = std::abs(m.trace() - 1.0);
    if (trace_err > tol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1 by " + std::to_string(trace_err));
}

DensityMatrix DensityMatrix::from_pure(const Eigen::Vector4cd& psi) {
    const Eigen::Vector4cd v = psi.normalized();
    return DensityMatrix(v * v.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eigen(m_, 1e-8).values.minCoeff();
}

} // namespace heomq
