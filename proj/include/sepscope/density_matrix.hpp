// density_matrix.hpp
// Validated quantum states: Hermitian, unit-trace, positive semidefinite
// complex matrices, optionally tagged with a bipartite factorization (N, K).

#pragma once

#include <optional>
#include <utility>

#include "sepscope/matrix_ops.hpp"

namespace sepscope {

using FactorDims = std::pair<int, int>;

enum class Subsystem { A = 1, B = 2 };

class DensityMatrix {
public:
    const Matrix& matrix() const noexcept { return mat_; }
    int dim() const noexcept { return static_cast<int>(mat_.rows()); }
    const std::optional<FactorDims>& factor_dims() const noexcept { return factor_dims_; }

    FactorDims require_factor_dims() const {
        if (!factor_dims_) throw NoFactorDimsError();
        return *factor_dims_;
    }

    // Construction path for matrices already known to satisfy the state
    // invariants (convex mixtures of valid states, partial traces, ...).
    static DensityMatrix trusted(Matrix m, std::optional<FactorDims> factor_dims = std::nullopt) {
        return DensityMatrix(std::move(m), factor_dims);
    }

    DensityMatrix with_factor_dims(FactorDims fd) const {
        if (static_cast<long>(fd.first) * fd.second != mat_.rows())
            throw DimMismatchError("factor dims " + std::to_string(fd.first) + "x" +
                                   std::to_string(fd.second) + " incompatible with dim " +
                                   std::to_string(mat_.rows()));
        return DensityMatrix(mat_, fd);
    }

private:
    DensityMatrix(Matrix m, std::optional<FactorDims> fd)
        : mat_(std::move(m)), factor_dims_(fd) {}

    Matrix mat_;
    std::optional<FactorDims> factor_dims_;
};

// Full validation: square shape, factor-dim consistency, Hermiticity, unit
// trace and positivity within tolerance. The matrix is stored as given; no
// silent symmetrization happens anywhere.
inline DensityMatrix validate_density(const Matrix& m,
                                      std::optional<FactorDims> factor_dims = std::nullopt,
                                      const Tolerances& tol = default_tolerances()) {
    if (m.rows() != m.cols()) throw NotSquareError(m.rows(), m.cols());
    if (m.rows() == 0) throw DimMismatchError("empty matrix");
    if (!all_finite(m)) throw BadParameterError("matrix has non-finite entries");
    if (factor_dims) {
        const auto [n, k] = *factor_dims;
        if (n < 1 || k < 1 || static_cast<long>(n) * k != m.rows())
            throw DimMismatchError("factor dims " + std::to_string(n) + "x" + std::to_string(k) +
                                   " do not multiply to dim " + std::to_string(m.rows()));
    }
    const double herm = hermiticity_violation(m);
    if (herm > tol.herm) throw NotHermitianError(herm);
    const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_dev > tol.trace) throw TraceNotOneError(trace_dev);
    const double min_eig = min_eigenvalue(m);
    if (min_eig < -tol.psd) throw NotPositiveError(min_eig);
    return DensityMatrix::trusted(m, factor_dims);
}

// Reduced state of one subsystem; keep = A gives the N x N state, keep = B
// the K x K one. Composite index convention: |i>(x)|j| sits at i*K + j.
inline DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    const auto [n, k] = rho.require_factor_dims();
    const Matrix& m = rho.matrix();
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int ip = 0; ip < n; ++ip)
                for (int j = 0; j < k; ++j)
                    out(i, ip) += m(i * k + j, ip * k + j);
        return DensityMatrix::trusted(std::move(out));
    }
    Matrix out = Matrix::Zero(k, k);
    for (int j = 0; j < k; ++j)
        for (int jp = 0; jp < k; ++jp)
            for (int i = 0; i < n; ++i)
                out(j, jp) += m(i * k + j, i * k + jp);
    return DensityMatrix::trusted(std::move(out));
}

// Tensor product of two states, tagged with the induced factorization.
inline DensityMatrix tensor_state(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix::trusted(tensor_product(a.matrix(), b.matrix()),
                                  FactorDims{a.dim(), b.dim()});
}

}  // namespace sepscope
