// fano.hpp
// Expansion of a bipartite state over the SU(N) (x) SU(K) generator basis:
//
//   rho = (1/NK) ( 1_NK + sum_i ta_i s_i (x) 1_K
//                       + sum_j tb_j 1_N (x) s_j
//                       + sum_ij beta_ij s_i (x) s_j )
//
// ta/tb are the subsystem Bloch vectors, beta the correlation block, and
// m_ij = beta_ij - ta_i tb_j the correlation tensor that survives when the
// product of the reduced states is subtracted off.

#pragma once

#include "sepscope/density_matrix.hpp"
#include "sepscope/su_generators.hpp"

namespace sepscope {

struct FanoDecomposition {
    FactorDims dims{0, 0};
    RealVector tau_a;     // length N^2 - 1
    RealVector tau_b;     // length K^2 - 1
    RealMatrix beta;      // (N^2-1) x (K^2-1)
    RealMatrix m_tensor;  // beta_ij - tau_a_i * tau_b_j
};

inline FanoDecomposition fano_decompose(const DensityMatrix& rho) {
    const auto [n, k] = rho.require_factor_dims();
    const GeneratorBasis ga = su_generators(n);
    const GeneratorBasis gb = su_generators(k);
    const int na = static_cast<int>(ga.generators.size());
    const int nb = static_cast<int>(gb.generators.size());

    const Matrix red_a = partial_trace(rho, Subsystem::A).matrix();
    const Matrix red_b = partial_trace(rho, Subsystem::B).matrix();

    FanoDecomposition out;
    out.dims = {n, k};
    out.tau_a.resize(na);
    out.tau_b.resize(nb);
    for (int i = 0; i < na; ++i)
        out.tau_a(i) = 0.5 * n * trace_product(red_a, ga.generators[i]).real();
    for (int j = 0; j < nb; ++j)
        out.tau_b(j) = 0.5 * k * trace_product(red_b, gb.generators[j]).real();

    out.beta.resize(na, nb);
    const double quarter_nk = 0.25 * n * k;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            out.beta(i, j) =
                quarter_nk *
                trace_product(rho.matrix(), tensor_product(ga.generators[i], gb.generators[j]))
                    .real();

    out.m_tensor = out.beta - out.tau_a * out.tau_b.transpose();
    return out;
}

// Assembles the expansion back into a matrix and validates it as a state.
// Hand-crafted coefficients may fail positivity; that surfaces as the usual
// NotPositiveError rather than a silent repair.
inline DensityMatrix fano_reconstruct(const FanoDecomposition& dec,
                                      const Tolerances& tol = default_tolerances()) {
    const auto [n, k] = dec.dims;
    if (n < 2 || k < 2) throw DimMismatchError("fano dims must both be >= 2");
    const GeneratorBasis ga = su_generators(n);
    const GeneratorBasis gb = su_generators(k);
    const int na = static_cast<int>(ga.generators.size());
    const int nb = static_cast<int>(gb.generators.size());
    if (dec.tau_a.size() != na || dec.tau_b.size() != nb || dec.beta.rows() != na ||
        dec.beta.cols() != nb)
        throw DimMismatchError("fano coefficient blocks do not match dims");

    const int d = n * k;
    Matrix m = Matrix::Identity(d, d);
    const Matrix id_a = Matrix::Identity(n, n);
    const Matrix id_b = Matrix::Identity(k, k);
    for (int i = 0; i < na; ++i)
        m += dec.tau_a(i) * tensor_product(ga.generators[i], id_b);
    for (int j = 0; j < nb; ++j)
        m += dec.tau_b(j) * tensor_product(id_a, gb.generators[j]);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            m += dec.beta(i, j) * tensor_product(ga.generators[i], gb.generators[j]);
    m /= static_cast<double>(d);

    return validate_density(m, FactorDims{n, k}, tol);
}

}  // namespace sepscope
