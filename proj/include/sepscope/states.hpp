// states.hpp
// Reference states and seeded random ensembles. All randomness flows through
// Rng, a mt19937_64 wrapper with hand-rolled uniform/Gaussian conversion so
// streams are identical across standard libraries.

#pragma once

#include <cstdint>
#include <random>

#include "sepscope/separability.hpp"

namespace sepscope {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re, im);
    }

    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline DensityMatrix make_bell(BellKind kind = BellKind::PhiPlus) {
    Vector psi = Vector::Zero(4);
    const double a = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case BellKind::PhiPlus:  psi(0) = a; psi(3) = a; break;
        case BellKind::PhiMinus: psi(0) = a; psi(3) = -a; break;
        case BellKind::PsiPlus:  psi(1) = a; psi(2) = a; break;
        case BellKind::PsiMinus: psi(1) = a; psi(2) = -a; break;
    }
    return DensityMatrix::trusted(psi * psi.adjoint(), FactorDims{2, 2});
}

// p |Phi+><Phi+| + (1-p) I/4.
inline DensityMatrix make_werner(double p) {
    if (p < 0.0 || p > 1.0)
        throw BadParameterError("werner parameter must lie in [0,1], got " + detail::fmt_double(p));
    const Matrix bell = make_bell().matrix();
    return DensityMatrix::trusted(p * bell + (1.0 - p) * Matrix::Identity(4, 4) / 4.0,
                                  FactorDims{2, 2});
}

// Pure-product decomposition of a Werner state on its separable range
// p in [0, 1/3]. At the boundary the state is exactly the uniform mixture of
// |a_k><a_k| (x) |a_k*><a_k*| over the six Pauli eigenvectors; below it that
// mixture is blended with the computational-basis decomposition of I/4.
inline SeparableDecomposition werner_pure_decomposition(double p) {
    if (p < 0.0 || p > 1.0 / 3.0 + 1e-12)
        throw BadParameterError(
            "no separable decomposition: Werner states are entangled for p > 1/3, got " +
            detail::fmt_double(p));
    const double alpha = std::min(3.0 * p, 1.0);

    std::vector<Vector> kets;
    const double s = 1.0 / std::sqrt(2.0);
    for (int axis = 0; axis < 3; ++axis)
        for (int sign = 0; sign < 2; ++sign) {
            Vector v(2);
            const double pm = sign == 0 ? 1.0 : -1.0;
            if (axis == 0) v << s, pm * s;
            else if (axis == 1) v << s, Complex(0.0, pm) * s;
            else v << (sign == 0 ? 1.0 : 0.0), (sign == 0 ? 0.0 : 1.0);
            kets.push_back(v);
        }

    SeparableDecomposition dec;
    std::vector<double> weights;
    if (alpha > 0.0) {
        for (const Vector& a : kets) {
            const Vector b = a.conjugate();
            dec.factors_a.push_back(DensityMatrix::trusted(a * a.adjoint()));
            dec.factors_b.push_back(DensityMatrix::trusted(b * b.adjoint()));
            weights.push_back(alpha / 6.0);
        }
    }
    if (alpha < 1.0) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Vector ei = Vector::Zero(2), ej = Vector::Zero(2);
                ei(i) = 1.0;
                ej(j) = 1.0;
                dec.factors_a.push_back(DensityMatrix::trusted(ei * ei.adjoint()));
                dec.factors_b.push_back(DensityMatrix::trusted(ej * ej.adjoint()));
                weights.push_back((1.0 - alpha) / 4.0);
            }
    }
    dec.weights = Eigen::Map<const RealVector>(weights.data(),
                                               static_cast<Eigen::Index>(weights.size()));
    return dec;
}

// Haar-random unit vector.
inline Vector random_pure(int dim, Rng& rng) {
    if (dim < 1) throw BadParameterError("dimension must be positive");
    Vector psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = rng.complex_gaussian();
    psi /= psi.norm();
    return psi;
}

// Hilbert-Schmidt ensemble: G G^dag / tr(G G^dag) with Ginibre G.
inline DensityMatrix random_state(int dim, Rng& rng) {
    if (dim < 1) throw BadParameterError("dimension must be positive");
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::trusted(std::move(rho));
}

inline DensityMatrix random_state(FactorDims dims, Rng& rng) {
    return random_state(dims.first * dims.second, rng).with_factor_dims(dims);
}

// Haar-distributed unitary via QR of a Ginibre matrix with phase fixing.
inline Matrix random_unitary(int dim, Rng& rng) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
}

// Flat Dirichlet weights plus Hilbert-Schmidt factors on each side.
inline SeparableDecomposition random_separable(int n_terms, FactorDims dims, Rng& rng) {
    if (n_terms < 1) throw BadParameterError("need at least one term");
    SeparableDecomposition dec;
    dec.weights.resize(n_terms);
    double sum = 0.0;
    for (int k = 0; k < n_terms; ++k) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        dec.weights(k) = -std::log(u);
        sum += dec.weights(k);
    }
    dec.weights /= sum;
    dec.factors_a.reserve(static_cast<std::size_t>(n_terms));
    dec.factors_b.reserve(static_cast<std::size_t>(n_terms));
    for (int k = 0; k < n_terms; ++k) {
        dec.factors_a.push_back(random_state(dims.first, rng));
        dec.factors_b.push_back(random_state(dims.second, rng));
    }
    return dec;
}

}  // namespace sepscope
