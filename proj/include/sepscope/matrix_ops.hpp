// matrix_ops.hpp
// Dense complex matrix primitives: Kronecker products, Hilbert-Schmidt
// inner products and norms, Hermitian eigendecompositions, unitarity checks.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "sepscope/errors.hpp"
#include "sepscope/tolerances.hpp"

namespace sepscope {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline bool all_finite(const Matrix& m) {
    return m.allFinite();
}

// Kronecker product with row-major basis ordering: the composite index of
// |i> (x) |j> is i*cols(b)+j, so block (i,j) of the result equals a(i,j)*b.
inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// tr(A B), no adjoint on either argument.
inline Complex trace_product(const Matrix& a, const Matrix& b) {
    return (a.array() * b.transpose().array()).sum();
}

// Hilbert-Schmidt inner product <A,B> = tr(A^dag B).
inline Complex hs_inner(const Matrix& a, const Matrix& b) {
    return (a.conjugate().array() * b.array()).sum();
}

// ||A||_HS^2 = tr(A A^dag). Defined for square operators.
inline double hs_norm_sq(const Matrix& a) {
    if (a.rows() != a.cols()) throw NotSquareError(a.rows(), a.cols());
    return a.squaredNorm();
}

inline double hs_norm(const Matrix& a) { return std::sqrt(hs_norm_sq(a)); }

inline double hs_distance(const Matrix& a, const Matrix& b) {
    return (a - b).norm();
}

// Sum of singular values.
inline double trace_norm(const Matrix& a) {
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues().sum();
}

// Eigenvalues of a Hermitian matrix, ascending.
inline RealVector hermitian_eigenvalues(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

inline double min_eigenvalue(const Matrix& a) {
    return hermitian_eigenvalues(a)(0);
}

inline double hermiticity_violation(const Matrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline double unitarity_violation(const Matrix& u) {
    if (u.rows() != u.cols()) throw NotSquareError(u.rows(), u.cols());
    Matrix g = u.adjoint() * u;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Matrix& u, double tol = default_tolerances().unitary) {
    return u.rows() == u.cols() && unitarity_violation(u) <= tol;
}

// Stacks Re and Im parts into one real vector; Euclidean norm of the result
// equals the Hilbert-Schmidt norm of the matrix.
inline RealVector real_vectorize(const Matrix& a) {
    RealVector v(2 * a.size());
    Eigen::Map<const Eigen::VectorXcd> flat(a.data(), a.size());
    v.head(a.size()) = flat.real();
    v.tail(a.size()) = flat.imag();
    return v;
}

}  // namespace sepscope
