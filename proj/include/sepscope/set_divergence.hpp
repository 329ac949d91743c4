// set_divergence.hpp
// Relative entropy between convex sets, S(C||C') = inf over rho in C and
// sigma in C' of S(rho||sigma), estimated from above. The joint problem is
// nonconvex, so the result is an upper bound: every vertex pair is scored,
// the best pairs seed a multi-start alternating projected-gradient descent
// over the two weight simplices, and the minimum over everything visited is
// reported. Deterministic for fixed inputs and budget, and nonincreasing as
// the budget grows. Values may be +infinity (support mismatch everywhere).

#pragma once

#include <algorithm>
#include <limits>

#include "sepscope/convex_maps.hpp"
#include "sepscope/entropy.hpp"

namespace sepscope {

struct SetDivergenceResult {
    double value = std::numeric_limits<double>::infinity();  // approximate upper bound
    RealVector rho_weights;    // argmin weights over the first vertex list
    RealVector sigma_weights;  // argmin weights over the second vertex list
};

namespace detail {

constexpr double kLogFloor = 1e-18;

inline Matrix mix(const std::vector<DensityMatrix>& vertices, const RealVector& w) {
    Matrix m = Matrix::Zero(vertices.front().dim(), vertices.front().dim());
    for (Eigen::Index i = 0; i < w.size(); ++i)
        m += w(i) * vertices[static_cast<std::size_t>(i)].matrix();
    return m;
}

// Matrix logarithm with eigenvalues floored away from zero; turns the
// relative entropy into a finite, differentiable surrogate near the
// boundary of the state space.
inline Matrix log_floored(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    RealVector lam = es.eigenvalues().cwiseMax(kLogFloor);
    return es.eigenvectors() * lam.array().log().matrix().asDiagonal() *
           es.eigenvectors().adjoint();
}

inline double surrogate_value(const Matrix& rho, const Matrix& sigma) {
    return (trace_product(rho, log_floored(rho)) - trace_product(rho, log_floored(sigma))).real();
}

// d/dw_i of the surrogate on the rho side (up to a uniform shift, which the
// simplex projection ignores).
inline RealVector rho_gradient(const std::vector<DensityMatrix>& verts, const Matrix& rho,
                               const Matrix& sigma) {
    const Matrix diff = log_floored(rho) - log_floored(sigma);
    RealVector g(static_cast<Eigen::Index>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        g(static_cast<Eigen::Index>(i)) = trace_product(verts[i].matrix(), diff).real();
    return g;
}

// d/dw_j of -tr(rho ln sigma(w)) via the Frechet derivative of the matrix
// log: in sigma's eigenbasis, (D ln)[H]_ab = H_ab * phi(s_a, s_b) with the
// divided difference phi.
inline RealVector sigma_gradient(const std::vector<DensityMatrix>& verts, const Matrix& rho,
                                 const Matrix& sigma) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
    const RealVector s = es.eigenvalues().cwiseMax(kLogFloor);
    const Matrix& v = es.eigenvectors();
    const Eigen::Index d = s.size();
    RealMatrix phi(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) {
            const double sa = s(a), sb = s(b);
            phi(a, b) = std::abs(sa - sb) > 1e-14 * std::max(sa, sb)
                            ? (std::log(sa) - std::log(sb)) / (sa - sb)
                            : 1.0 / sa;
        }
    const Matrix rho_t = v.adjoint() * rho * v;
    RealVector g(static_cast<Eigen::Index>(verts.size()));
    for (std::size_t j = 0; j < verts.size(); ++j) {
        const Matrix b_t = v.adjoint() * verts[j].matrix() * v;
        Complex acc(0.0, 0.0);
        for (Eigen::Index a = 0; a < d; ++a)
            for (Eigen::Index b = 0; b < d; ++b) acc += rho_t(a, b) * b_t(b, a) * phi(b, a);
        g(static_cast<Eigen::Index>(j)) = -acc.real();
    }
    return g;
}

}  // namespace detail

inline SetDivergenceResult set_relative_entropy(const ProductPolytope& c,
                                                const ProductPolytope& cprime, int budget,
                                                int n_starts = 8,
                                                const Tolerances& tol = default_tolerances()) {
    if (c.factor_dims != cprime.factor_dims)
        throw DimMismatchError("set relative entropy of polytopes with factors (" +
                               std::to_string(c.factor_dims.first) + "," +
                               std::to_string(c.factor_dims.second) + ") and (" +
                               std::to_string(cprime.factor_dims.first) + "," +
                               std::to_string(cprime.factor_dims.second) + ")");
    const auto& av = c.vertices;
    const auto& bv = cprime.vertices;
    const Eigen::Index na = static_cast<Eigen::Index>(av.size());
    const Eigen::Index nb = static_cast<Eigen::Index>(bv.size());

    SetDivergenceResult best;
    best.rho_weights = RealVector::Zero(na);
    best.sigma_weights = RealVector::Zero(nb);
    best.rho_weights(0) = 1.0;
    best.sigma_weights(0) = 1.0;

    auto record = [&](const RealVector& wa, const RealVector& wb) {
        const auto rho = DensityMatrix::trusted(detail::mix(av, wa), c.factor_dims);
        const auto sigma = DensityMatrix::trusted(detail::mix(bv, wb), cprime.factor_dims);
        const double value = relative_entropy(rho, sigma, tol);
        if (value < best.value) {
            best.value = value;
            best.rho_weights = wa;
            best.sigma_weights = wb;
        }
        return value;
    };

    // Score every vertex pair; the scan both bounds the result and ranks
    // starting points for the descent. The barycenter pair is always kept as
    // a start since interior optima are invisible to the pair scan.
    struct Start {
        double score;
        RealVector wa, wb;
    };
    std::vector<Start> starts;
    starts.reserve(static_cast<std::size_t>(na * nb));
    for (Eigen::Index i = 0; i < na; ++i)
        for (Eigen::Index j = 0; j < nb; ++j) {
            RealVector wa = RealVector::Zero(na);
            RealVector wb = RealVector::Zero(nb);
            wa(i) = 1.0;
            wb(j) = 1.0;
            record(wa, wb);
            const double score = detail::surrogate_value(
                av[static_cast<std::size_t>(i)].matrix(), bv[static_cast<std::size_t>(j)].matrix());
            starts.push_back(Start{score, std::move(wa), std::move(wb)});
        }
    std::stable_sort(starts.begin(), starts.end(),
                     [](const Start& x, const Start& y) { return x.score < y.score; });
    if (n_starts > 1 && static_cast<int>(starts.size()) > n_starts - 1)
        starts.resize(static_cast<std::size_t>(n_starts) - 1);
    {
        RealVector wa = RealVector::Constant(na, 1.0 / static_cast<double>(na));
        RealVector wb = RealVector::Constant(nb, 1.0 / static_cast<double>(nb));
        record(wa, wb);
        starts.push_back(Start{0.0, std::move(wa), std::move(wb)});
    }

    if (budget <= 0 || (na == 1 && nb == 1)) return best;

    for (const Start& s : starts) {
        RealVector wa = s.wa;
        RealVector wb = s.wb;
        double step_a = 1.0, step_b = 1.0;
        for (int it = 0; it < budget; ++it) {
            // rho side
            {
                Matrix rho = detail::mix(av, wa);
                Matrix sigma = detail::mix(bv, wb);
                const double f0 = detail::surrogate_value(rho, sigma);
                RealVector g = detail::rho_gradient(av, rho, sigma);
                const double gmax_a = g.cwiseAbs().maxCoeff();
                if (gmax_a > 1.0) g /= gmax_a;  // direction only; magnitude can blow up near rank drops
                double t = step_a;
                for (int h = 0; h < 40; ++h) {
                    const RealVector trial = project_to_simplex(wa - t * g);
                    if (detail::surrogate_value(detail::mix(av, trial), sigma) < f0 - 1e-14) {
                        wa = trial;
                        step_a = std::min(t * 2.0, 1e6);
                        break;
                    }
                    t *= 0.5;
                    if (t < 1e-14) break;
                }
            }
            // sigma side
            {
                Matrix rho = detail::mix(av, wa);
                Matrix sigma = detail::mix(bv, wb);
                const double f0 = detail::surrogate_value(rho, sigma);
                RealVector g = detail::sigma_gradient(bv, rho, sigma);
                const double gmax_b = g.cwiseAbs().maxCoeff();
                if (gmax_b > 1.0) g /= gmax_b;
                double t = step_b;
                for (int h = 0; h < 40; ++h) {
                    const RealVector trial = project_to_simplex(wb - t * g);
                    if (detail::surrogate_value(rho, detail::mix(bv, trial)) < f0 - 1e-14) {
                        wb = trial;
                        step_b = std::min(t * 2.0, 1e6);
                        break;
                    }
                    t *= 0.5;
                    if (t < 1e-14) break;
                }
            }
            record(wa, wb);
        }
    }
    return best;
}

// F~(C) = S(lambda_tau(C) || C): zero whenever C is a convex separable
// subset, and more generally whenever lambda_tau(C) intersects C.
inline double f_tilde(const ProductPolytope& c, int budget,
                      const Tolerances& tol = default_tolerances()) {
    return set_relative_entropy(lambda_tau(c, tol), c, budget, 8, tol).value;
}

}  // namespace sepscope
