// separability.hpp
// Separability verdicts and constructions: the product-state test, invariant
// polytopes built from separable decompositions, the segment test with a
// partial-transpose oracle, and the pure-state criteria.

#pragma once

#include <string>
#include <vector>

#include "sepscope/convex_maps.hpp"
#include "sepscope/entropy.hpp"

namespace sepscope {

// Omega(rho) = rho^A (x) rho^B. Idempotent; product states are exactly its
// fixed points.
inline DensityMatrix omega(const DensityMatrix& rho) {
    const FactorDims dims = rho.require_factor_dims();
    return tensor_state(partial_trace(rho, Subsystem::A), partial_trace(rho, Subsystem::B))
        .with_factor_dims(dims);
}

inline bool is_product(const DensityMatrix& rho, const Tolerances& tol = default_tolerances()) {
    const double dist_sq = hs_norm_sq(rho.matrix() - omega(rho).matrix());
    return dist_sq <= tol.product * tol.product;
}

// Convex combination of aligned products: rho = sum_k w_k a_k (x) b_k.
struct SeparableDecomposition {
    RealVector weights;
    std::vector<DensityMatrix> factors_a;
    std::vector<DensityMatrix> factors_b;

    std::size_t terms() const noexcept { return factors_a.size(); }
};

inline void check_decomposition(const SeparableDecomposition& dec) {
    const std::size_t n = dec.factors_a.size();
    if (n == 0) throw InvalidDecompositionError("no terms");
    if (dec.factors_b.size() != n || static_cast<std::size_t>(dec.weights.size()) != n)
        throw InvalidDecompositionError("weights and factor lists differ in length");
    double sum = 0.0;
    for (Eigen::Index k = 0; k < dec.weights.size(); ++k) {
        if (dec.weights(k) < -1e-12)
            throw InvalidDecompositionError("negative weight at term " + std::to_string(k));
        sum += dec.weights(k);
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidDecompositionError("weights sum to " + detail::fmt_double(sum));
    const int da = dec.factors_a.front().dim();
    const int db = dec.factors_b.front().dim();
    for (const auto& f : dec.factors_a)
        if (f.dim() != da) throw InvalidDecompositionError("factor_a dims differ");
    for (const auto& f : dec.factors_b)
        if (f.dim() != db) throw InvalidDecompositionError("factor_b dims differ");
}

inline FactorDims decomposition_dims(const SeparableDecomposition& dec) {
    return {dec.factors_a.front().dim(), dec.factors_b.front().dim()};
}

// sum_k w_k a_k (x) b_k as a state.
inline DensityMatrix assemble(const SeparableDecomposition& dec) {
    check_decomposition(dec);
    const auto [da, db] = decomposition_dims(dec);
    Matrix m = Matrix::Zero(da * db, da * db);
    for (std::size_t k = 0; k < dec.terms(); ++k)
        m += dec.weights(static_cast<Eigen::Index>(k)) *
             tensor_product(dec.factors_a[k].matrix(), dec.factors_b[k].matrix());
    return DensityMatrix::trusted(std::move(m), FactorDims{da, db});
}

// The polytope M spanned by all n^2 cross products of the decomposition's
// factors. It contains the assembled state and is a fixed point of
// lambda_tau. All cross products are kept as vertices even when fewer would
// span the same hull.
inline ProductPolytope invariant_polytope(const SeparableDecomposition& dec) {
    check_decomposition(dec);
    std::vector<DensityMatrix> vertices;
    vertices.reserve(dec.terms() * dec.terms());
    for (const auto& a : dec.factors_a)
        for (const auto& b : dec.factors_b) vertices.push_back(tensor_state(a, b));
    return make_product_polytope(std::move(vertices));
}

// Partial transpose on subsystem B: (i,j),(i',j') -> (i,j'),(i',j).
inline Matrix partial_transpose(const DensityMatrix& rho) {
    const auto [n, k] = rho.require_factor_dims();
    const Matrix& m = rho.matrix();
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < n; ++i)
        for (int ip = 0; ip < n; ++ip)
            for (int j = 0; j < k; ++j)
                for (int jp = 0; jp < k; ++jp)
                    out(i * k + j, ip * k + jp) = m(i * k + jp, ip * k + j);
    return out;
}

// Peres-Horodecki oracle. A negative value certifies entanglement in any
// dimension; nonnegativity certifies separability only for 2x2 and 2x3.
inline double ppt_min_eigenvalue(const DensityMatrix& rho) {
    return min_eigenvalue(partial_transpose(rho));
}

inline bool ppt_conclusive_dims(FactorDims dims) {
    const int lo = std::min(dims.first, dims.second);
    const int hi = std::max(dims.first, dims.second);
    return lo == 2 && hi <= 3;
}

// The segment L_rho = { x rho + (1-x) Omega(rho) : x in [0,1] }, sampled at
// n uniform points with exact endpoints: x=0 is Omega(rho), x=1 is rho.
inline std::vector<DensityMatrix> segment(const DensityMatrix& rho, int n) {
    const FactorDims dims = rho.require_factor_dims();
    if (n < 2) throw BadCountError("segment needs at least 2 points, got " + std::to_string(n));
    const DensityMatrix base = omega(rho);
    std::vector<DensityMatrix> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            points.push_back(base);
        } else if (i == n - 1) {
            points.push_back(rho);
        } else {
            const double x = static_cast<double>(i) / (n - 1);
            points.push_back(DensityMatrix::trusted(
                x * rho.matrix() + (1.0 - x) * base.matrix(), dims));
        }
    }
    return points;
}

enum class SegmentVerdict { EntangledDetected, NoViolationFound };

inline std::string to_string(SegmentVerdict v) {
    return v == SegmentVerdict::EntangledDetected ? "EntangledDetected" : "NoViolationFound";
}

struct SegmentScanReport {
    int n_points = 0;
    std::vector<double> x_values;
    std::vector<double> min_pt_eigenvalues;
    SegmentVerdict verdict = SegmentVerdict::NoViolationFound;
    bool conclusive = false;  // NoViolationFound settles separability only for 2x2 / 2x3
};

// Runs the PPT oracle along the segment. EntangledDetected is sound in all
// dimensions; NoViolationFound is conclusive only where PPT is (the report
// says which).
inline SegmentScanReport segment_scan(const DensityMatrix& rho, int n = 101,
                                      const Tolerances& tol = default_tolerances()) {
    const FactorDims dims = rho.require_factor_dims();
    const std::vector<DensityMatrix> points = segment(rho, n);
    SegmentScanReport report;
    report.n_points = n;
    report.x_values.reserve(points.size());
    report.min_pt_eigenvalues.reserve(points.size());
    bool violation = false;
    for (int i = 0; i < n; ++i) {
        const double x = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
        const double min_eig = ppt_min_eigenvalue(points[static_cast<std::size_t>(i)]);
        report.x_values.push_back(x);
        report.min_pt_eigenvalues.push_back(min_eig);
        if (min_eig < -tol.psd) violation = true;
    }
    report.verdict =
        violation ? SegmentVerdict::EntangledDetected : SegmentVerdict::NoViolationFound;
    report.conclusive = violation || ppt_conclusive_dims(dims);
    return report;
}

// Pure-state criterion, both routes: the reduced-state entropy and the
// Omega fixed-point distance. They agree outside a vanishing tolerance band;
// tests pin the agreement.
struct PureSeparabilityReport {
    bool separable = false;        // entropy route, the primary verdict
    bool omega_fixed_point = false;  // Omega(|psi><psi|) == |psi><psi| within tol
    double reduced_entropy = 0.0;
};

inline PureSeparabilityReport pure_separability_report(
    const Vector& psi, FactorDims dims, const Tolerances& tol = default_tolerances()) {
    if (psi.size() != static_cast<Eigen::Index>(dims.first) * dims.second)
        throw DimMismatchError("vector length " + std::to_string(psi.size()) +
                               " vs dims product " + std::to_string(dims.first * dims.second));
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-9) throw NotNormalizedError(norm);

    const DensityMatrix proj =
        DensityMatrix::trusted(psi * psi.adjoint(), dims);
    PureSeparabilityReport report;
    report.reduced_entropy = vn_entropy(partial_trace(proj, Subsystem::A));
    report.separable = report.reduced_entropy <= tol.entropy;
    report.omega_fixed_point = is_product(proj, tol);
    return report;
}

inline bool pure_separability(const Vector& psi, FactorDims dims,
                              const Tolerances& tol = default_tolerances()) {
    return pure_separability_report(psi, dims, tol).separable;
}

// invariant_polytope restricted to decompositions with pure factors; the
// resulting vertices are pure products, so the entropy minimum over the
// polytope is zero.
inline ProductPolytope p_pure_polytope(const SeparableDecomposition& dec,
                                       const Tolerances& tol = default_tolerances()) {
    check_decomposition(dec);
    auto check_pure = [&](const std::vector<DensityMatrix>& factors, char side) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const RealVector eigs = hermitian_eigenvalues(factors[i].matrix());
            const double second = eigs.size() >= 2 ? eigs(eigs.size() - 2) : 0.0;
            if (second > tol.entropy) throw FactorNotPureError(side, i, second);
        }
    };
    check_pure(dec.factors_a, 'a');
    check_pure(dec.factors_b, 'b');
    return invariant_polytope(dec);
}

// Entropy is concave, so its minimum over a polytope sits at a vertex.
inline double min_entropy_over(const ProductPolytope& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : p.vertices) best = std::min(best, vn_entropy(v));
    return best;
}

}  // namespace sepscope
