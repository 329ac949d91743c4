// measures.hpp
// Entanglement measures built on the distance between a state and the
// product of its reduced states.

#pragma once

#include <functional>

#include "sepscope/fano.hpp"

namespace sepscope {

// rho^A (x) rho^B, the product of the reduced states.
inline DensityMatrix reduced_product(const DensityMatrix& rho) {
    return tensor_state(partial_trace(rho, Subsystem::A), partial_trace(rho, Subsystem::B));
}

// ||rho - rho^A (x) rho^B||_HS^2. Zero exactly on product states, positive
// elsewhere, invariant under local unitaries.
inline double sm_measure(const DensityMatrix& rho) {
    return hs_norm_sq(rho.matrix() - reduced_product(rho).matrix());
}

// Two-qubit correlation sum: sum_{ij} C^2 over the Pauli pairs, with
// C(s_i, s_j) = <s_i (x) s_j> - <s_i (x) 1><1 (x) s_j>. Equals
// 4 tr[(rho - rho^A (x) rho^B)^2] on two qubits.
inline double correlation_sum(const DensityMatrix& rho) {
    const auto [n, k] = rho.require_factor_dims();
    if (n != 2 || k != 2)
        throw UnsupportedDimsError("correlation sum is defined for qubit-qubit states, got " +
                                   std::to_string(n) + "x" + std::to_string(k));
    const GeneratorBasis pauli = su_generators(2);
    const Matrix red_a = partial_trace(rho, Subsystem::A).matrix();
    const Matrix red_b = partial_trace(rho, Subsystem::B).matrix();
    double total = 0.0;
    for (const Matrix& si : pauli.generators) {
        const double ea = trace_product(red_a, si).real();
        for (const Matrix& sj : pauli.generators) {
            const double eb = trace_product(red_b, sj).real();
            const double eab = trace_product(rho.matrix(), tensor_product(si, sj)).real();
            const double c = eab - ea * eb;
            total += c * c;
        }
    }
    return total;
}

enum class MatrixNorm { HS, Trace };

using MatrixTransform = std::function<Matrix(const Matrix&)>;

// W(rho) = ||F(rho - rho^A (x) rho^B)|| for a linear transform F and a
// choice of norm. Identity transform with the HS norm gives the square root
// of sm_measure.
inline double w_measure(const DensityMatrix& rho, const MatrixTransform& transform,
                        MatrixNorm norm) {
    Matrix core = rho.matrix() - reduced_product(rho).matrix();
    if (transform) core = transform(core);
    switch (norm) {
        case MatrixNorm::HS:
            return core.norm();
        case MatrixNorm::Trace:
            return trace_norm(core);
    }
    throw BadParameterError("unknown matrix norm");
}

inline double w_measure(const DensityMatrix& rho, MatrixNorm norm = MatrixNorm::HS) {
    return w_measure(rho, MatrixTransform{}, norm);
}

// Raw squared Frobenius norm of the correlation tensor, tr(M M^dag). The
// library reports this and the HS measure separately; with the extraction
// conventions used here they are proportional, factor (NK)^2 / 4.
inline double m_tensor_norm_sq(const DensityMatrix& rho) {
    return fano_decompose(rho).m_tensor.squaredNorm();
}

}  // namespace sepscope
