// json_io.hpp
// JSON wire formats shared across the library and CLI, plus the CSV rules
// (17 significant digits, '.' decimal separator, no locale).
//
//   state:         {"dims":[N,K], "matrix":[[[re,im],...],...]}   ([d] for single systems)
//   fano:          {"dims":[N,K], "tau_a":[...], "tau_b":[...], "beta":[[...]], "m":[[...]]}
//   polytope:      {"factor_dims":[N,K], "vertices":[<state>, ...]}
//   decomposition: {"weights":[...], "factors_a":[<state>,...], "factors_b":[<state>,...]}

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sepscope/fano.hpp"
#include "sepscope/polytope.hpp"
#include "sepscope/separability.hpp"

namespace sepscope {

using Json = nlohmann::json;

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace detail {

inline Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex entry must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const Json& j, Eigen::Index expected_dim) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expected_dim)
        throw ParseError("matrix must have " + std::to_string(expected_dim) + " rows");
    Matrix m(expected_dim, expected_dim);
    for (Eigen::Index i = 0; i < expected_dim; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != expected_dim)
            throw ParseError("matrix row " + std::to_string(i) + " must have " +
                             std::to_string(expected_dim) + " entries");
        for (Eigen::Index k = 0; k < expected_dim; ++k)
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

inline Json real_vector_to_json(const RealVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

inline RealVector real_vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of numbers");
    RealVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw ParseError("expected a number");
        v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    }
    return v;
}

inline Json real_matrix_to_json(const RealMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RealMatrix real_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty matrix of numbers");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    RealMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw ParseError("ragged matrix row");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = row[static_cast<std::size_t>(k)].get<double>();
    }
    return m;
}

}  // namespace detail

inline Json state_to_json(const DensityMatrix& rho) {
    Json j;
    if (rho.factor_dims())
        j["dims"] = Json::array({rho.factor_dims()->first, rho.factor_dims()->second});
    else
        j["dims"] = Json::array({rho.dim()});
    j["matrix"] = detail::matrix_to_json(rho.matrix());
    return j;
}

// Parses and fully validates a state. Structural problems throw ParseError;
// physics violations throw the validate_density errors.
inline DensityMatrix state_from_json(const Json& j,
                                     const Tolerances& tol = default_tolerances()) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix"))
        throw ParseError("state object needs 'dims' and 'matrix'");
    const Json& dims = j["dims"];
    if (!dims.is_array() || dims.empty() || dims.size() > 2)
        throw ParseError("'dims' must be [d] or [N, K]");
    for (const auto& d : dims)
        if (!d.is_number_integer() || d.get<long>() < 1) throw ParseError("dims must be positive integers");

    std::optional<FactorDims> factor_dims;
    Eigen::Index total = dims[0].get<int>();
    if (dims.size() == 2) {
        factor_dims = FactorDims{dims[0].get<int>(), dims[1].get<int>()};
        total = static_cast<Eigen::Index>(factor_dims->first) * factor_dims->second;
    }
    const Matrix m = detail::matrix_from_json(j["matrix"], total);
    return validate_density(m, factor_dims, tol);
}

inline Json fano_to_json(const FanoDecomposition& dec) {
    Json j;
    j["dims"] = Json::array({dec.dims.first, dec.dims.second});
    j["tau_a"] = detail::real_vector_to_json(dec.tau_a);
    j["tau_b"] = detail::real_vector_to_json(dec.tau_b);
    j["beta"] = detail::real_matrix_to_json(dec.beta);
    j["m"] = detail::real_matrix_to_json(dec.m_tensor);
    return j;
}

inline FanoDecomposition fano_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("tau_a") || !j.contains("tau_b") ||
        !j.contains("beta"))
        throw ParseError("fano object needs 'dims', 'tau_a', 'tau_b', 'beta'");
    FanoDecomposition dec;
    dec.dims = {j["dims"][0].get<int>(), j["dims"][1].get<int>()};
    dec.tau_a = detail::real_vector_from_json(j["tau_a"]);
    dec.tau_b = detail::real_vector_from_json(j["tau_b"]);
    dec.beta = detail::real_matrix_from_json(j["beta"]);
    dec.m_tensor = j.contains("m") ? detail::real_matrix_from_json(j["m"])
                                   : RealMatrix(dec.beta - dec.tau_a * dec.tau_b.transpose());
    return dec;
}

inline Json polytope_to_json(const ProductPolytope& p) {
    Json j;
    j["factor_dims"] = Json::array({p.factor_dims.first, p.factor_dims.second});
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(state_to_json(v));
    j["vertices"] = std::move(verts);
    return j;
}

inline ProductPolytope polytope_from_json(const Json& j,
                                          const Tolerances& tol = default_tolerances()) {
    if (!j.is_object() || !j.contains("factor_dims") || !j.contains("vertices"))
        throw ParseError("polytope object needs 'factor_dims' and 'vertices'");
    const Json& fd = j["factor_dims"];
    if (!fd.is_array() || fd.size() != 2) throw ParseError("'factor_dims' must be [N, K]");
    const FactorDims dims{fd[0].get<int>(), fd[1].get<int>()};
    const Json& verts = j["vertices"];
    if (!verts.is_array() || verts.empty()) throw ParseError("'vertices' must be a nonempty array");

    std::vector<DensityMatrix> vertices;
    vertices.reserve(verts.size());
    for (const auto& vj : verts) {
        DensityMatrix v = state_from_json(vj, tol);
        if (!v.factor_dims()) v = v.with_factor_dims(dims);
        if (*v.factor_dims() != dims)
            throw DimMismatchError("vertex dims disagree with polytope factor_dims");
        vertices.push_back(std::move(v));
    }
    return make_product_polytope(std::move(vertices));
}

inline Json decomposition_to_json(const SeparableDecomposition& dec) {
    Json j;
    j["weights"] = detail::real_vector_to_json(dec.weights);
    Json fa = Json::array(), fb = Json::array();
    for (const auto& f : dec.factors_a) fa.push_back(state_to_json(f));
    for (const auto& f : dec.factors_b) fb.push_back(state_to_json(f));
    j["factors_a"] = std::move(fa);
    j["factors_b"] = std::move(fb);
    return j;
}

inline SeparableDecomposition decomposition_from_json(
    const Json& j, const Tolerances& tol = default_tolerances()) {
    if (!j.is_object() || !j.contains("weights") || !j.contains("factors_a") ||
        !j.contains("factors_b"))
        throw ParseError("decomposition object needs 'weights', 'factors_a', 'factors_b'");
    SeparableDecomposition dec;
    dec.weights = detail::real_vector_from_json(j["weights"]);
    for (const auto& fj : j["factors_a"]) dec.factors_a.push_back(state_from_json(fj, tol));
    for (const auto& fj : j["factors_b"]) dec.factors_b.push_back(state_from_json(fj, tol));
    check_decomposition(dec);
    return dec;
}

inline Json certificate_to_json(const HullCertificate& cert) {
    Json j;
    j["inside"] = cert.inside;
    j["residual"] = cert.residual;
    j["coefficients"] =
        cert.coefficients ? detail::real_vector_to_json(*cert.coefficients) : Json(nullptr);
    return j;
}

inline Json segment_report_to_json(const SegmentScanReport& report) {
    Json j;
    j["n_points"] = report.n_points;
    j["x_values"] = report.x_values;
    j["min_pt_eigenvalues"] = report.min_pt_eigenvalues;
    j["verdict"] = to_string(report.verdict);
    j["conclusive"] = report.conclusive;
    return j;
}

inline std::string segment_report_to_csv(const SegmentScanReport& report) {
    std::ostringstream out;
    out << "x,min_pt_eigenvalue\n";
    for (std::size_t i = 0; i < report.x_values.size(); ++i)
        out << format_double(report.x_values[i]) << ","
            << format_double(report.min_pt_eigenvalues[i]) << "\n";
    return out.str();
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

}  // namespace sepscope
