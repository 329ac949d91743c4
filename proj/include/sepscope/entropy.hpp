// entropy.hpp
// Von Neumann entropy and quantum relative entropy, natural-log convention.

#pragma once

#include <cmath>
#include <limits>

#include "sepscope/density_matrix.hpp"

namespace sepscope {

// S(rho) = -sum_i lambda_i ln lambda_i with 0 ln 0 := 0. Eigenvalues in
// [-tol_psd, 0) are numerical noise and count as zero. Totals below
// kEntropyNoiseFloor are eigensolver noise on a pure state (the sub-dominant
// spectrum sits at the rounding level) and read as exactly zero.
inline constexpr double kEntropyNoiseFloor = 1e-12;

inline double vn_entropy(const DensityMatrix& rho) {
    const RealVector eigs = hermitian_eigenvalues(rho.matrix());
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        const double lam = eigs(i);
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return s < kEntropyNoiseFloor ? 0.0 : s;
}

// S(rho||sigma) = -tr(rho ln sigma) - S(rho). Returns +infinity when the
// support of rho is not contained in the support of sigma; infinity is a
// reportable value here, not an error.
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                               const Tolerances& tol = default_tolerances()) {
    if (rho.dim() != sigma.dim())
        throw DimMismatchError("relative entropy of states with dims " +
                               std::to_string(rho.dim()) + " and " + std::to_string(sigma.dim()));

    Eigen::SelfAdjointEigenSolver<Matrix> es_sigma(sigma.matrix());
    const RealVector s_eigs = es_sigma.eigenvalues();
    const Matrix& basis = es_sigma.eigenvectors();
    // Diagonal of rho in sigma's eigenbasis; real for Hermitian rho.
    const RealVector rho_diag =
        (basis.adjoint() * rho.matrix() * basis).diagonal().real();

    double cross = 0.0;  // tr(rho ln sigma)
    for (Eigen::Index i = 0; i < s_eigs.size(); ++i) {
        const double s = s_eigs(i);
        const double p = rho_diag(i);
        if (s <= tol.psd) {
            if (p > tol.psd) return std::numeric_limits<double>::infinity();
            continue;  // no mass on the null space
        }
        cross += p * std::log(s);
    }

    const double value = -cross - vn_entropy(rho);
    return value < 0.0 ? 0.0 : value;
}

}  // namespace sepscope
