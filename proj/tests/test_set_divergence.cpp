#include <catch2/catch_amalgamated.hpp>

#include "sepscope/set_divergence.hpp"
#include "sepscope/states.hpp"

using namespace sepscope;
using Catch::Approx;

TEST_CASE("set_relative_entropy", "[divergence]") {
    Rng rng(151);

    SECTION("identical polytopes give zero") {
        std::vector<DensityMatrix> verts;
        for (int i = 0; i < 3; ++i) verts.push_back(random_state(FactorDims{2, 2}, rng));
        const ProductPolytope p = make_product_polytope(verts);
        const SetDivergenceResult r = set_relative_entropy(p, p, 5);
        REQUIRE(r.value == Approx(0.0).margin(1e-10));
    }
    SECTION("shared vertex gives zero") {
        const DensityMatrix shared = random_state(FactorDims{2, 2}, rng);
        const ProductPolytope a =
            make_product_polytope({shared, random_state(FactorDims{2, 2}, rng)});
        const ProductPolytope b =
            make_product_polytope({random_state(FactorDims{2, 2}, rng), shared});
        REQUIRE(set_relative_entropy(a, b, 5).value == Approx(0.0).margin(1e-10));
    }
    SECTION("point versus point reduces to the plain relative entropy") {
        Matrix corner = Matrix::Zero(4, 4);
        corner(0, 0) = 1.0;
        const auto pure = DensityMatrix::trusted(corner, FactorDims{2, 2});
        const auto mixed =
            DensityMatrix::trusted(Matrix::Identity(4, 4) / 4.0, FactorDims{2, 2});
        const SetDivergenceResult r = set_relative_entropy(
            make_product_polytope({pure}), make_product_polytope({mixed}), 5);
        REQUIRE(r.value == Approx(std::log(4.0)).margin(1e-12));
    }
    SECTION("argmin weights are convex and reproduce the reported value") {
        std::vector<DensityMatrix> av, bv;
        for (int i = 0; i < 2; ++i) av.push_back(random_state(FactorDims{2, 2}, rng));
        for (int i = 0; i < 3; ++i) bv.push_back(random_state(FactorDims{2, 2}, rng));
        const ProductPolytope a = make_product_polytope(av);
        const ProductPolytope b = make_product_polytope(bv);
        const SetDivergenceResult r = set_relative_entropy(a, b, 20);
        REQUIRE(r.rho_weights.minCoeff() >= 0.0);
        REQUIRE(r.rho_weights.sum() == Approx(1.0).margin(1e-9));
        REQUIRE(r.sigma_weights.sum() == Approx(1.0).margin(1e-9));
        Matrix rho = Matrix::Zero(4, 4), sigma = Matrix::Zero(4, 4);
        for (int i = 0; i < 2; ++i) rho += r.rho_weights(i) * av[static_cast<std::size_t>(i)].matrix();
        for (int i = 0; i < 3; ++i) sigma += r.sigma_weights(i) * bv[static_cast<std::size_t>(i)].matrix();
        const double check =
            relative_entropy(DensityMatrix::trusted(rho, FactorDims{2, 2}),
                             DensityMatrix::trusted(sigma, FactorDims{2, 2}));
        REQUIRE(check == Approx(r.value).margin(1e-9));
    }
    SECTION("value is nonincreasing in the budget") {
        std::vector<DensityMatrix> av, bv;
        for (int i = 0; i < 3; ++i) av.push_back(random_state(FactorDims{2, 2}, rng));
        for (int i = 0; i < 3; ++i) bv.push_back(random_state(FactorDims{2, 2}, rng));
        const ProductPolytope a = make_product_polytope(av);
        const ProductPolytope b = make_product_polytope(bv);
        double prev = std::numeric_limits<double>::infinity();
        for (int budget : {0, 2, 8, 32}) {
            const double v = set_relative_entropy(a, b, budget).value;
            REQUIRE(v <= prev + 1e-12);
            prev = v;
        }
    }
    SECTION("descent reaches an interior optimum the pair scan cannot see") {
        // rho = diag(.5,.5,0,0) against the segment between diag(.97,.01,.01,.01)
        // and I/4. The 1-D infimum sits strictly between the vertices and away
        // from the barycenter; a dense grid over the segment is the oracle.
        Matrix rm = Matrix::Zero(4, 4);
        rm(0, 0) = 0.5;
        rm(1, 1) = 0.5;
        const auto rho = DensityMatrix::trusted(rm, FactorDims{2, 2});
        Matrix s1m = Matrix::Zero(4, 4);
        s1m.diagonal() << 0.97, 0.01, 0.01, 0.01;
        const auto s1 = DensityMatrix::trusted(s1m, FactorDims{2, 2});
        const auto s2 = DensityMatrix::trusted(Matrix::Identity(4, 4) / 4.0, FactorDims{2, 2});

        double grid_min = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 10000; ++i) {
            const double w = i / 10000.0;
            const auto sigma = DensityMatrix::trusted(
                w * s1.matrix() + (1.0 - w) * s2.matrix(), FactorDims{2, 2});
            grid_min = std::min(grid_min, relative_entropy(rho, sigma));
        }

        const ProductPolytope a = make_product_polytope({rho});
        const ProductPolytope b = make_product_polytope({s1, s2});
        const double scan_only = set_relative_entropy(a, b, 0).value;
        const double refined = set_relative_entropy(a, b, 300).value;
        REQUIRE(scan_only > grid_min + 0.01);  // neither vertices nor barycenter suffice
        REQUIRE(refined == Approx(grid_min).margin(2e-3));
    }
    SECTION("dimension mismatch") {
        const ProductPolytope a =
            make_product_polytope({random_state(FactorDims{2, 2}, rng)});
        const ProductPolytope b =
            make_product_polytope({random_state(FactorDims{2, 3}, rng)});
        REQUIRE_THROWS_AS(set_relative_entropy(a, b, 1), DimMismatchError);
    }
}

TEST_CASE("f_tilde", "[divergence]") {
    Rng rng(157);
    SECTION("zero on convex separable subsets") {
        for (int trial = 0; trial < 5; ++trial) {
            const auto dec = random_separable(2 + static_cast<int>(rng.next() % 3),
                                              FactorDims{2, 2}, rng);
            REQUIRE(f_tilde(invariant_polytope(dec), 5) == Approx(0.0).margin(1e-10));
        }
    }
    SECTION("zero on singleton products") {
        const auto p = make_product_polytope(
            {tensor_state(random_state(2, rng), random_state(2, rng))});
        REQUIRE(f_tilde(p, 5) == Approx(0.0).margin(1e-10));
    }
    SECTION("singleton Bell reports the +infinity sentinel") {
        const double v = f_tilde(make_product_polytope({make_bell()}), 5);
        REQUIRE(std::isinf(v));
        REQUIRE(v > 0.0);
    }
}
