#include <catch2/catch_amalgamated.hpp>

#include "sepscope/json_io.hpp"
#include "sepscope/states.hpp"

using namespace sepscope;
using Catch::Approx;

TEST_CASE("state JSON round trip", "[io]") {
    Rng rng(163);
    SECTION("bipartite state") {
        const DensityMatrix rho = random_state(FactorDims{2, 3}, rng);
        const DensityMatrix back = state_from_json(state_to_json(rho));
        REQUIRE(back.factor_dims() == FactorDims{2, 3});
        REQUIRE(hs_distance(back.matrix(), rho.matrix()) == 0.0);
    }
    SECTION("single-system state keeps dims = [d]") {
        const DensityMatrix rho = random_state(3, rng);
        const Json j = state_to_json(rho);
        REQUIRE(j["dims"].size() == 1);
        const DensityMatrix back = state_from_json(j);
        REQUIRE_FALSE(back.factor_dims().has_value());
        REQUIRE(hs_distance(back.matrix(), rho.matrix()) == 0.0);
    }
}

TEST_CASE("state JSON rejects malformed input", "[io]") {
    SECTION("missing keys") {
        REQUIRE_THROWS_AS(state_from_json(Json{{"dims", {2, 2}}}), ParseError);
        REQUIRE_THROWS_AS(state_from_json(Json::array()), ParseError);
    }
    SECTION("bad dims") {
        Json j = state_to_json(make_bell());
        j["dims"] = Json::array({2, 2, 2});
        REQUIRE_THROWS_AS(state_from_json(j), ParseError);
        j["dims"] = Json::array({0});
        REQUIRE_THROWS_AS(state_from_json(j), ParseError);
    }
    SECTION("ragged matrix") {
        Json j = state_to_json(make_bell());
        j["matrix"][2] = Json::array({Json::array({0.0, 0.0})});
        REQUIRE_THROWS_AS(state_from_json(j), ParseError);
    }
    SECTION("entries must be [re, im]") {
        Json j = state_to_json(make_bell());
        j["matrix"][0][0] = 0.5;
        REQUIRE_THROWS_AS(state_from_json(j), ParseError);
    }
    SECTION("structurally fine but unphysical fails validation, not parsing") {
        Json j = state_to_json(make_bell());
        j["matrix"][0][0] = Json::array({0.9, 0.0});
        REQUIRE_THROWS_AS(state_from_json(j), TraceNotOneError);
    }
}

TEST_CASE("fano JSON round trip", "[io]") {
    const FanoDecomposition dec = fano_decompose(make_werner(0.7));
    const Json j = fano_to_json(dec);
    REQUIRE(j.contains("tau_a"));
    REQUIRE(j.contains("beta"));
    REQUIRE(j.contains("m"));
    const FanoDecomposition back = fano_from_json(j);
    REQUIRE(back.dims == dec.dims);
    REQUIRE((back.tau_a - dec.tau_a).norm() == 0.0);
    REQUIRE((back.beta - dec.beta).norm() == 0.0);
    REQUIRE((back.m_tensor - dec.m_tensor).norm() == 0.0);
}

TEST_CASE("polytope JSON round trip", "[io]") {
    Rng rng(167);
    const SeparableDecomposition dec = random_separable(2, FactorDims{2, 2}, rng);
    const ProductPolytope poly = invariant_polytope(dec);
    const ProductPolytope back = polytope_from_json(polytope_to_json(poly));
    REQUIRE(back.factor_dims == poly.factor_dims);
    REQUIRE(back.vertices.size() == poly.vertices.size());
    REQUIRE(polytope_equal(back, poly));

    SECTION("empty vertex list is a parse error") {
        Json j = polytope_to_json(poly);
        j["vertices"] = Json::array();
        REQUIRE_THROWS_AS(polytope_from_json(j), ParseError);
    }
}

TEST_CASE("decomposition JSON round trip", "[io]") {
    Rng rng(173);
    const SeparableDecomposition dec = random_separable(3, FactorDims{2, 2}, rng);
    const SeparableDecomposition back = decomposition_from_json(decomposition_to_json(dec));
    REQUIRE(back.terms() == 3);
    REQUIRE(hs_distance(assemble(back).matrix(), assemble(dec).matrix()) == 0.0);

    SECTION("weights off the simplex are rejected") {
        Json j = decomposition_to_json(dec);
        j["weights"][0] = j["weights"][0].get<double>() + 0.5;
        REQUIRE_THROWS_AS(decomposition_from_json(j), InvalidDecompositionError);
    }
}

TEST_CASE("segment report serialization", "[io]") {
    const SegmentScanReport report = segment_scan(make_werner(0.9), 5);
    SECTION("JSON carries the verdict and the samples") {
        const Json j = segment_report_to_json(report);
        REQUIRE(j["n_points"] == 5);
        REQUIRE(j["verdict"] == "EntangledDetected");
        REQUIRE(j["conclusive"] == true);
        REQUIRE(j["x_values"].size() == 5);
        REQUIRE(j["min_pt_eigenvalues"].size() == 5);
    }
    SECTION("CSV uses the x,min_pt_eigenvalue columns") {
        const std::string csv = segment_report_to_csv(report);
        REQUIRE(csv.rfind("x,min_pt_eigenvalue\n", 0) == 0);
        REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 6);
    }
}

TEST_CASE("doubles survive the 17-significant-digit CSV format", "[io][property]") {
    Rng rng(179);
    for (int trial = 0; trial < 200; ++trial) {
        const double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform() * 20 - 10);
        const std::string s = format_double(v);
        REQUIRE(std::stod(s) == v);
        REQUIRE(s.find(',') == std::string::npos);
    }
}

TEST_CASE("hull certificate JSON", "[io]") {
    Rng rng(181);
    const SeparableDecomposition dec = random_separable(2, FactorDims{2, 2}, rng);
    const ProductPolytope poly = invariant_polytope(dec);
    const Json j = certificate_to_json(hull_membership(assemble(dec), poly));
    REQUIRE(j["inside"] == true);
    REQUIRE(j["residual"].get<double>() <= 1e-7);
    REQUIRE(j["coefficients"].size() == poly.vertices.size());
}
