// polytope.hpp
// Convex subsets of state space in vertex (V-) representation, and hull
// membership with convex-weight certificates. Only generator lists are ever
// stored; membership questions go through simplex least squares.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sepscope/density_matrix.hpp"
#include "sepscope/simplex_lsq.hpp"

namespace sepscope {

// Convex subset of a single subsystem's states.
struct FactorPolytope {
    int dim = 0;
    std::vector<DensityMatrix> vertices;
};

// Convex subset of the joint state space, all vertices bipartite (N, K).
struct ProductPolytope {
    FactorDims factor_dims{0, 0};
    std::vector<DensityMatrix> vertices;
};

inline FactorPolytope make_factor_polytope(std::vector<DensityMatrix> vertices) {
    if (vertices.empty()) throw BadParameterError("polytope needs at least one vertex");
    const int dim = vertices.front().dim();
    for (const auto& v : vertices)
        if (v.dim() != dim) throw DimMismatchError("factor polytope vertices differ in dimension");
    return FactorPolytope{dim, std::move(vertices)};
}

inline ProductPolytope make_product_polytope(std::vector<DensityMatrix> vertices) {
    if (vertices.empty()) throw BadParameterError("polytope needs at least one vertex");
    const FactorDims dims = vertices.front().require_factor_dims();
    for (const auto& v : vertices)
        if (v.require_factor_dims() != dims)
            throw DimMismatchError("product polytope vertices differ in factor dims");
    return ProductPolytope{dims, std::move(vertices)};
}

// Drops vertices within HS distance `tol` of an earlier one; order otherwise
// preserved.
inline std::vector<DensityMatrix> prune_duplicates(const std::vector<DensityMatrix>& vertices,
                                                   double tol = default_tolerances().dedup) {
    std::vector<DensityMatrix> kept;
    kept.reserve(vertices.size());
    for (const auto& v : vertices) {
        bool dup = false;
        for (const auto& u : kept) {
            if (hs_distance(u.matrix(), v.matrix()) <= tol) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(v);
    }
    return kept;
}

struct HullCertificate {
    bool inside = false;
    std::optional<RealVector> coefficients;  // convex weights over the vertex list
    double residual = 0.0;                   // HS distance achieved
};

namespace detail {

inline HullCertificate hull_membership_impl(const DensityMatrix& x,
                                            const std::vector<DensityMatrix>& vertices,
                                            double tol_hull) {
    const Eigen::Index n = static_cast<Eigen::Index>(vertices.size());

    // A vertex coinciding with the query settles membership without a solve.
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = hs_distance(vertices[static_cast<std::size_t>(i)].matrix(), x.matrix());
        if (d <= tol_hull) {
            RealVector w = RealVector::Zero(n);
            w(i) = 1.0;
            return HullCertificate{true, w, d};
        }
    }

    const RealVector target = real_vectorize(x.matrix());
    RealMatrix a(target.size(), n);
    for (Eigen::Index i = 0; i < n; ++i)
        a.col(i) = real_vectorize(vertices[static_cast<std::size_t>(i)].matrix());

    SimplexFit fit = solve_simplex_lsq(a, target);
    return HullCertificate{fit.residual <= tol_hull, fit.weights, fit.residual};
}

}  // namespace detail

inline HullCertificate hull_membership(const DensityMatrix& x, const ProductPolytope& p,
                                       const Tolerances& tol = default_tolerances()) {
    const FactorDims xd = x.require_factor_dims();
    if (xd != p.factor_dims)
        throw DimMismatchError("query state dims (" + std::to_string(xd.first) + "," +
                               std::to_string(xd.second) + ") vs polytope (" +
                               std::to_string(p.factor_dims.first) + "," +
                               std::to_string(p.factor_dims.second) + ")");
    return detail::hull_membership_impl(x, p.vertices, tol.hull);
}

inline HullCertificate hull_membership(const DensityMatrix& x, const FactorPolytope& p,
                                       const Tolerances& tol = default_tolerances()) {
    if (x.dim() != p.dim)
        throw DimMismatchError("query state dim " + std::to_string(x.dim()) + " vs polytope dim " +
                               std::to_string(p.dim));
    return detail::hull_membership_impl(x, p.vertices, tol.hull);
}

// Mutual hull inclusion of the vertex lists: Conv(a) == Conv(b).
inline bool polytope_equal(const ProductPolytope& a, const ProductPolytope& b,
                           const Tolerances& tol = default_tolerances()) {
    if (a.factor_dims != b.factor_dims)
        throw DimMismatchError("polytope factor dims (" + std::to_string(a.factor_dims.first) +
                               "," + std::to_string(a.factor_dims.second) + ") vs (" +
                               std::to_string(b.factor_dims.first) + "," +
                               std::to_string(b.factor_dims.second) + ")");
    for (const auto& v : a.vertices)
        if (!hull_membership(v, b, tol).inside) return false;
    for (const auto& v : b.vertices)
        if (!hull_membership(v, a, tol).inside) return false;
    return true;
}

// Largest vertex residual seen while checking mutual inclusion; pairs with
// polytope_equal for diagnostics.
inline double polytope_equal_max_residual(const ProductPolytope& a, const ProductPolytope& b,
                                          const Tolerances& tol = default_tolerances()) {
    double worst = 0.0;
    for (const auto& v : a.vertices)
        worst = std::max(worst, hull_membership(v, b, tol).residual);
    for (const auto& v : b.vertices)
        worst = std::max(worst, hull_membership(v, a, tol).residual);
    return worst;
}

}  // namespace sepscope
