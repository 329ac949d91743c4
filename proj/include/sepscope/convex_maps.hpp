// convex_maps.hpp
// The set-level maps between joint and subsystem state spaces: tau pushes a
// convex set down through the partial traces, the quasi-tensor composes two
// factor sets elementwise, and lambda lifts a pair of factor sets back up as
// the hull of their quasi-tensor. Their composition lambda_tau generalizes
// rho -> rho^A (x) rho^B from points to convex sets; its fixed points are
// exactly the sets recoverable from their subsystem descriptions.

#pragma once

#include "sepscope/polytope.hpp"

namespace sepscope {

// Images of the vertex list under both partial traces. Partial trace is
// linear, so the images of the generators generate the image hulls.
inline std::pair<FactorPolytope, FactorPolytope> tau(const ProductPolytope& p,
                                                     const Tolerances& tol = default_tolerances()) {
    std::vector<DensityMatrix> first, second;
    first.reserve(p.vertices.size());
    second.reserve(p.vertices.size());
    for (const auto& v : p.vertices) {
        first.push_back(partial_trace(v, Subsystem::A));
        second.push_back(partial_trace(v, Subsystem::B));
    }
    return {make_factor_polytope(prune_duplicates(first, tol.dedup)),
            make_factor_polytope(prune_duplicates(second, tol.dedup))};
}

// Generator set of C1 (x~) C2: all pairwise tensor products of vertices.
// The full quasi-tensor set is infinite, but its hull equals the hull of
// these vertex products.
inline std::vector<DensityMatrix> quasi_tensor(const FactorPolytope& c1,
                                               const FactorPolytope& c2) {
    std::vector<DensityMatrix> products;
    products.reserve(c1.vertices.size() * c2.vertices.size());
    for (const auto& v : c1.vertices)
        for (const auto& w : c2.vertices) products.push_back(tensor_state(v, w));
    return products;
}

// Conv(C1 (x~) C2) in vertex representation.
inline ProductPolytope lambda(const FactorPolytope& c1, const FactorPolytope& c2) {
    return make_product_polytope(quasi_tensor(c1, c2));
}

inline ProductPolytope lambda_tau(const ProductPolytope& p,
                                  const Tolerances& tol = default_tolerances()) {
    const auto [c1, c2] = tau(p, tol);
    return lambda(c1, c2);
}

// A convex separable subset is a fixed point of lambda_tau.
inline bool is_css(const ProductPolytope& p, const Tolerances& tol = default_tolerances()) {
    return polytope_equal(lambda_tau(p, tol), p, tol);
}

// Idempotence check: lambda_tau applied twice agrees with applying it once.
// True for every input; exposed so the property is directly testable.
inline bool css_projection_check(const ProductPolytope& p,
                                 const Tolerances& tol = default_tolerances()) {
    const ProductPolytope once = lambda_tau(p, tol);
    return polytope_equal(lambda_tau(once, tol), once, tol);
}

// Vertex-wise conjugation by U1 (x) U2. Sends invariant polytopes to
// invariant polytopes and commutes with lambda_tau.
inline ProductPolytope local_unitary_transform(const ProductPolytope& p, const Matrix& u1,
                                               const Matrix& u2,
                                               const Tolerances& tol = default_tolerances()) {
    if (u1.rows() != p.factor_dims.first || u2.rows() != p.factor_dims.second)
        throw DimMismatchError("unitary dims (" + std::to_string(u1.rows()) + "," +
                               std::to_string(u2.rows()) + ") vs polytope factors (" +
                               std::to_string(p.factor_dims.first) + "," +
                               std::to_string(p.factor_dims.second) + ")");
    const double v1 = unitarity_violation(u1);
    if (v1 > tol.unitary) throw NotUnitaryError(v1);
    const double v2 = unitarity_violation(u2);
    if (v2 > tol.unitary) throw NotUnitaryError(v2);

    const Matrix u = tensor_product(u1, u2);
    std::vector<DensityMatrix> vertices;
    vertices.reserve(p.vertices.size());
    for (const auto& v : p.vertices)
        vertices.push_back(
            DensityMatrix::trusted(u * v.matrix() * u.adjoint(), p.factor_dims));
    return make_product_polytope(std::move(vertices));
}

}  // namespace sepscope
