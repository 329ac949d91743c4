// simplex_lsq.hpp
// Least squares over the probability simplex:
//
//   minimize ||A w - b||_2   subject to  w >= 0,  sum(w) = 1.
//
// Since sum(w) = 1, the residual is A w - b = (A - b 1^T) w, so the problem
// is exactly the minimum-norm point in the convex hull of the shifted
// columns a_j - b. That is Wolfe's min-norm-point setting, and his
// major/minor cycle is what runs below: the affine minimizer over the
// current corral is computed exactly through a null-space least squares,
// ratio tests clip at the nonnegativity boundary, and the entering rule and
// stopping test use inner products against the current point, which keeps
// every tolerance relative to the residual itself (a plain KKT test on the
// unshifted problem loses the degenerate cases, where the gradient slack
// scales with the squared residual and sinks below rounding noise).
// Deterministic for fixed input; ties break toward the lowest index.

#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "sepscope/matrix_ops.hpp"

namespace sepscope {

struct SimplexFit {
    RealVector weights;  // >= 0, sums to 1
    double residual = 0.0;
};

namespace detail {

// Exact minimizer of ||A mu - b|| over the affine slice sum(mu) = 1, via
// mu = mu0 + N y with N spanning {z : sum(z) = 0}. Sign constraints are the
// caller's problem.
inline RealVector affine_refit(const RealMatrix& a, const RealVector& b) {
    const Eigen::Index p = a.cols();
    RealVector mu0 = RealVector::Constant(p, 1.0 / static_cast<double>(p));
    if (p == 1) return mu0;
    RealMatrix null_basis = RealMatrix::Zero(p, p - 1);
    for (Eigen::Index i = 0; i + 1 < p; ++i) {
        null_basis(i, i) = 1.0;
        null_basis(p - 1, i) = -1.0;
    }
    const RealMatrix an = a * null_basis;
    const RealVector rhs = b - a * mu0;
    const RealVector y = an.colPivHouseholderQr().solve(rhs);
    return mu0 + null_basis * y;
}

}  // namespace detail

inline SimplexFit solve_simplex_lsq(const RealMatrix& a, const RealVector& b) {
    const Eigen::Index n = a.cols();
    if (n == 0) throw BadParameterError("simplex least squares needs at least one column");
    if (n == 1) return SimplexFit{RealVector::Ones(1), (a.col(0) - b).norm()};

    const RealMatrix shifted = a.colwise() - b;  // columns a_j - b
    double max_col_norm = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
        max_col_norm = std::max(max_col_norm, shifted.col(j).norm());

    // Start from the shortest shifted column.
    Eigen::Index first = 0;
    double first_norm = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double r = shifted.col(j).norm();
        if (r < first_norm) {
            first_norm = r;
            first = j;
        }
    }
    RealVector w = RealVector::Zero(n);
    w(first) = 1.0;
    std::vector<Eigen::Index> corral{first};
    RealVector x = shifted.col(first);  // current point, = shifted * w

    auto finalize = [&](RealVector v) {
        v = v.cwiseMax(0.0);
        v /= v.sum();
        return SimplexFit{v, (a * v - b).norm()};
    };
    SimplexFit best = finalize(w);

    const int max_major = 4 * static_cast<int>(n) + 40;
    for (int major = 0; major < max_major; ++major) {
        // Entering column: most negative inner product against x.
        Eigen::Index entering = -1;
        double lowest = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < n; ++j) {
            const double ip = x.dot(shifted.col(j));
            if (ip < lowest) {
                lowest = ip;
                entering = j;
            }
        }
        // Wolfe's optimality test, resolved relative to ||x||.
        const double tol = 1e-12 * max_col_norm * x.norm() + 1e-30;
        if (lowest >= x.squaredNorm() - tol) break;
        if (std::find(corral.begin(), corral.end(), entering) != corral.end()) break;
        corral.push_back(entering);

        // Minor cycle: affine minimum over the corral, clipped to w >= 0.
        for (int minor = 0; minor < max_major; ++minor) {
            RealMatrix as(shifted.rows(), static_cast<Eigen::Index>(corral.size()));
            for (std::size_t c = 0; c < corral.size(); ++c)
                as.col(static_cast<Eigen::Index>(c)) = shifted.col(corral[c]);
            const RealVector mu_s =
                detail::affine_refit(as, RealVector::Zero(shifted.rows()));

            if (mu_s.minCoeff() >= -1e-12) {
                w.setZero();
                for (std::size_t c = 0; c < corral.size(); ++c)
                    w(corral[c]) = std::max(mu_s(static_cast<Eigen::Index>(c)), 0.0);
                w /= w.sum();
                break;
            }
            double alpha = 1.0;
            for (std::size_t c = 0; c < corral.size(); ++c) {
                const double wi = w(corral[c]);
                const double di = mu_s(static_cast<Eigen::Index>(c)) - wi;
                if (di < -1e-15) alpha = std::min(alpha, wi / -di);
            }
            RealVector w_next = RealVector::Zero(n);
            for (std::size_t c = 0; c < corral.size(); ++c)
                w_next(corral[c]) =
                    w(corral[c]) + alpha * (mu_s(static_cast<Eigen::Index>(c)) - w(corral[c]));
            w = w_next.cwiseMax(0.0);
            std::vector<Eigen::Index> kept;
            for (const Eigen::Index i : corral)
                if (w(i) > 1e-14) kept.push_back(i);
            if (kept.empty()) {
                kept.push_back(entering);
                w.setZero();
                w(entering) = 1.0;
            }
            corral = std::move(kept);
        }

        x = shifted * w;
        const SimplexFit candidate = finalize(w);
        if (candidate.residual < best.residual) best = candidate;
    }

    const SimplexFit last = finalize(w);
    if (last.residual < best.residual) best = last;
    return best;
}

// Euclidean projection onto the probability simplex.
inline RealVector project_to_simplex(const RealVector& v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        cumulative += u[static_cast<std::size_t>(k)];
        const double candidate = (1.0 - cumulative) / static_cast<double>(k + 1);
        if (u[static_cast<std::size_t>(k)] + candidate > 0.0) theta = candidate;
    }
    return (v.array() + theta).cwiseMax(0.0);
}

}  // namespace sepscope
