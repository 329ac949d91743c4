// su_generators.hpp
// Generalized Gell-Mann matrices: the d^2-1 traceless Hermitian generators
// of SU(d), normalized so tr(s_i s_j) = 2 delta_ij. Order is fixed:
// symmetric off-diagonal pairs, antisymmetric off-diagonal pairs, diagonal.
// For d = 2 this yields exactly sigma_x, sigma_y, sigma_z.

#pragma once

#include <vector>

#include "sepscope/matrix_ops.hpp"

namespace sepscope {

struct GeneratorBasis {
    int dim = 0;
    std::vector<Matrix> generators;
};

inline GeneratorBasis su_generators(int d) {
    if (d < 2) throw DimTooSmallError(d);
    GeneratorBasis basis;
    basis.dim = d;
    basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);

    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.generators.push_back(std::move(m));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = Complex(0.0, -1.0);
            m(k, j) = Complex(0.0, 1.0);
            basis.generators.push_back(std::move(m));
        }
    for (int l = 1; l < d; ++l) {
        Matrix m = Matrix::Zero(d, d);
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) m(j, j) = scale;
        m(l, l) = -scale * l;
        basis.generators.push_back(std::move(m));
    }
    return basis;
}

}  // namespace sepscope
