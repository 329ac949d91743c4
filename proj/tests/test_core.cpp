#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "sepscope/density_matrix.hpp"
#include "sepscope/entropy.hpp"
#include "sepscope/states.hpp"

using namespace sepscope;
using Catch::Approx;

namespace {

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix from_oracle(const oracle::Mat& a) {
    Matrix m(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i][j];
    return m;
}

}  // namespace

TEST_CASE("validate_density accepts and classifies", "[core]") {
    SECTION("maximally mixed qubit") {
        const DensityMatrix rho = validate_density(Matrix::Identity(2, 2) / 2.0);
        REQUIRE(rho.dim() == 2);
        REQUIRE_FALSE(rho.factor_dims().has_value());
    }
    SECTION("trace 1.1 is rejected with the deviation") {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = 0.5;
        m(1, 1) = 0.6;
        try {
            validate_density(m);
            FAIL("expected TraceNotOneError");
        } catch (const TraceNotOneError& e) {
            REQUIRE(e.deviation() == Approx(0.1).margin(1e-12));
        }
    }
    SECTION("indefinite matrix is rejected with the min eigenvalue") {
        // eigenvalues 0.5 +- 0.6 by the 2x2 closed form
        Matrix m(2, 2);
        m << 0.5, 0.6, 0.6, 0.5;
        try {
            validate_density(m);
            FAIL("expected NotPositiveError");
        } catch (const NotPositiveError& e) {
            REQUIRE(e.min_eigenvalue() == Approx(-0.1).margin(1e-12));
        }
    }
    SECTION("non-square is rejected") {
        REQUIRE_THROWS_AS(validate_density(Matrix::Zero(2, 3)), NotSquareError);
    }
    SECTION("non-Hermitian is rejected with the violation") {
        Matrix m = Matrix::Identity(2, 2) / 2.0;
        m(0, 1) = Complex(0.0, 1e-6);
        try {
            validate_density(m);
            FAIL("expected NotHermitianError");
        } catch (const NotHermitianError& e) {
            REQUIRE(e.max_violation() == Approx(1e-6).margin(1e-12));
        }
    }
    SECTION("factor dims must multiply to the dimension") {
        REQUIRE_THROWS_AS(validate_density(Matrix::Identity(4, 4) / 4.0, FactorDims{2, 3}),
                          DimMismatchError);
    }
}

TEST_CASE("validate_density tolerance boundaries", "[core]") {
    // Perturb a valid state just inside and just past each tolerance.
    const Matrix base = Matrix::Identity(2, 2) / 2.0;

    SECTION("hermiticity") {
        Matrix in = base, out = base;
        in(0, 1) = Complex(0.0, 0.4e-9);   // violation 0.4e-9 < 1e-9
        out(0, 1) = Complex(0.0, 2.0e-9);  // violation 2e-9 > 1e-9
        REQUIRE_NOTHROW(validate_density(in));
        REQUIRE_THROWS_AS(validate_density(out), NotHermitianError);
    }
    SECTION("trace") {
        Matrix in = base, out = base;
        in(0, 0) += 0.5e-9;
        out(0, 0) += 2e-9;
        REQUIRE_NOTHROW(validate_density(in));
        REQUIRE_THROWS_AS(validate_density(out), TraceNotOneError);
    }
    SECTION("positivity") {
        Matrix in(2, 2), out(2, 2);
        in << 1.0 + 0.5e-9, 0, 0, -0.5e-9;
        out << 1.0 + 5e-9, 0, 0, -5e-9;
        REQUIRE_NOTHROW(validate_density(in));
        REQUIRE_THROWS_AS(validate_density(out), NotPositiveError);
    }
}

TEST_CASE("tensor_product basics", "[core]") {
    REQUIRE((tensor_product(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) -
             Matrix::Identity(4, 4))
                .norm() == 0.0);

    // |0><0| (x) |1><1| = diag(0,1,0,0) under the |00>,|01>,|10>,|11> ordering
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const Matrix t = tensor_product(p0, p1);
    Matrix expected = Matrix::Zero(4, 4);
    expected(1, 1) = 1.0;
    REQUIRE((t - expected).norm() == 0.0);

    Matrix sz(2, 2);
    sz << 1, 0, 0, -1;
    const Matrix zz = tensor_product(sz, sz);
    Matrix zz_expected = Matrix::Zero(4, 4);
    zz_expected.diagonal() << 1, -1, -1, 1;
    REQUIRE((zz - zz_expected).norm() == 0.0);
}

TEST_CASE("partial_trace examples", "[core]") {
    Rng rng(7);
    SECTION("product state reduces to its factors") {
        const DensityMatrix a = random_state(2, rng);
        const DensityMatrix b = random_state(3, rng);
        const DensityMatrix ab = tensor_state(a, b);
        REQUIRE(hs_distance(partial_trace(ab, Subsystem::A).matrix(), a.matrix()) < 1e-12);
        REQUIRE(hs_distance(partial_trace(ab, Subsystem::B).matrix(), b.matrix()) < 1e-12);
    }
    SECTION("Bell state reduces to I/2, against the loop oracle") {
        const DensityMatrix bell = make_bell();
        const Matrix reduced = partial_trace(bell, Subsystem::B).matrix();
        REQUIRE(hs_distance(reduced, Matrix::Identity(2, 2) / 2.0) < 1e-14);
        const oracle::Mat ref = oracle::ptrace(oracle::bell_phi_plus(), 2, 2, 2);
        REQUIRE(hs_distance(reduced, from_oracle(ref)) < 1e-14);
    }
    SECTION("I4/4 reduces to I2/2") {
        const DensityMatrix mixed =
            DensityMatrix::trusted(Matrix::Identity(4, 4) / 4.0, FactorDims{2, 2});
        REQUIRE(hs_distance(partial_trace(mixed, Subsystem::B).matrix(),
                            Matrix::Identity(2, 2) / 2.0) < 1e-14);
    }
    SECTION("missing factor dims") {
        const DensityMatrix plain = DensityMatrix::trusted(Matrix::Identity(4, 4) / 4.0);
        REQUIRE_THROWS_AS(partial_trace(plain, Subsystem::A), NoFactorDimsError);
    }
}

TEST_CASE("partial_trace is linear and consistent with tensor products", "[core][property]") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = random_state(FactorDims{2, 3}, rng);
        const DensityMatrix sig = random_state(FactorDims{2, 3}, rng);
        const double alpha = rng.uniform();
        const Matrix mixed = alpha * rho.matrix() + (1.0 - alpha) * sig.matrix();
        const DensityMatrix mix = DensityMatrix::trusted(mixed, FactorDims{2, 3});
        const Matrix lhs = partial_trace(mix, Subsystem::B).matrix();
        const Matrix rhs = alpha * partial_trace(rho, Subsystem::B).matrix() +
                           (1.0 - alpha) * partial_trace(sig, Subsystem::B).matrix();
        REQUIRE((lhs - rhs).norm() < 1e-10);

        const DensityMatrix a = random_state(2, rng);
        const DensityMatrix b = random_state(3, rng);
        const DensityMatrix ab = tensor_state(a, b);
        REQUIRE(hs_distance(partial_trace(ab, Subsystem::A).matrix(), a.matrix()) < 1e-10);
        REQUIRE(hs_distance(partial_trace(ab, Subsystem::B).matrix(), b.matrix()) < 1e-10);
    }
}

TEST_CASE("hs_norm_sq", "[core]") {
    REQUIRE(hs_norm_sq(Matrix::Zero(3, 3)) == 0.0);
    REQUIRE(hs_norm_sq(Matrix::Identity(2, 2)) == Approx(2.0));
    REQUIRE(hs_norm_sq(pauli_x()) == Approx(2.0));
    REQUIRE_THROWS_AS(hs_norm_sq(Matrix::Zero(2, 3)), NotSquareError);
}

TEST_CASE("hs norm is unitarily invariant", "[core][property]") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = rng.complex_gaussian();
        const Matrix u = random_unitary(4, rng);
        const Matrix v = random_unitary(4, rng);
        REQUIRE(hs_norm_sq(u * a * v) == Approx(hs_norm_sq(a)).margin(1e-9));
    }
}

TEST_CASE("vn_entropy", "[core]") {
    Rng rng(17);
    SECTION("pure states have zero entropy") {
        const Vector psi = random_pure(4, rng);
        const DensityMatrix rho = DensityMatrix::trusted(psi * psi.adjoint());
        REQUIRE(vn_entropy(rho) == Approx(0.0).margin(1e-12));
    }
    SECTION("I/2 gives ln 2") {
        REQUIRE(vn_entropy(DensityMatrix::trusted(Matrix::Identity(2, 2) / 2.0)) ==
                Approx(std::log(2.0)).margin(1e-12));
    }
    SECTION("diag(3/4, 1/4)") {
        // -(0.75 ln 0.75 + 0.25 ln 0.25) by scalar arithmetic
        const double expected = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25));
        REQUIRE(expected == Approx(0.562335).margin(1e-6));
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = 0.75;
        m(1, 1) = 0.25;
        REQUIRE(vn_entropy(DensityMatrix::trusted(m)) == Approx(expected).margin(1e-12));
    }
    SECTION("unitary invariance") {
        for (int trial = 0; trial < 50; ++trial) {
            const DensityMatrix rho = random_state(4, rng);
            const Matrix u = random_unitary(4, rng);
            const DensityMatrix rotated = DensityMatrix::trusted(u * rho.matrix() * u.adjoint());
            REQUIRE(vn_entropy(rotated) == Approx(vn_entropy(rho)).margin(1e-9));
        }
    }
}

TEST_CASE("relative_entropy", "[core]") {
    Rng rng(19);
    SECTION("S(rho||rho) = 0") {
        const DensityMatrix rho = random_state(4, rng);
        REQUIRE(relative_entropy(rho, rho) == Approx(0.0).margin(1e-10));
    }
    SECTION("S(|0><0| || I/2) = ln 2") {
        Matrix p0 = Matrix::Zero(2, 2);
        p0(0, 0) = 1.0;
        const DensityMatrix pure = DensityMatrix::trusted(p0);
        const DensityMatrix mixed = DensityMatrix::trusted(Matrix::Identity(2, 2) / 2.0);
        REQUIRE(relative_entropy(pure, mixed) == Approx(std::log(2.0)).margin(1e-12));
    }
    SECTION("support violation is the +infinity sentinel, not an error") {
        Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
        p0(0, 0) = 1.0;
        p1(1, 1) = 1.0;
        const double v = relative_entropy(DensityMatrix::trusted(p0), DensityMatrix::trusted(p1));
        REQUIRE(std::isinf(v));
        REQUIRE(v > 0.0);
    }
    SECTION("strictly positive on distinct states") {
        for (int trial = 0; trial < 25; ++trial) {
            const DensityMatrix rho = random_state(4, rng);
            const DensityMatrix sigma = random_state(4, rng);
            REQUIRE(relative_entropy(rho, sigma) > 1e-6);
        }
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(
            relative_entropy(DensityMatrix::trusted(Matrix::Identity(2, 2) / 2.0),
                             DensityMatrix::trusted(Matrix::Identity(3, 3) / 3.0)),
            DimMismatchError);
    }
}
