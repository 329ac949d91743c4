// tolerances.hpp
// Named numerical tolerances used across the library. Defaults are sized for
// double-precision eigensolvers on dimensions up to a few dozen.

#pragma once

#include <optional>
#include <string_view>

namespace sepscope {

struct Tolerances {
    double herm = 1e-9;      // max |a_ij - conj(a_ji)| for Hermiticity
    double trace = 1e-9;     // |tr - 1| for unit trace
    double psd = 1e-9;       // -min eigenvalue for positivity
    double hull = 1e-7;      // Hilbert-Schmidt residual for hull membership
    double dedup = 1e-9;     // Hilbert-Schmidt distance for duplicate-vertex pruning
    double product = 1e-7;   // Hilbert-Schmidt distance to Omega(rho) for product test
    double entropy = 1e-9;   // reduced-state entropy for pure-state separability
    double unitary = 1e-9;   // max |(U^dag U - I)_ij| for unitarity

    // Sets the tolerance named by `key`; returns false for unknown keys.
    bool set(std::string_view key, double value) {
        if (key == "herm") herm = value;
        else if (key == "trace") trace = value;
        else if (key == "psd") psd = value;
        else if (key == "hull") hull = value;
        else if (key == "dedup") dedup = value;
        else if (key == "product") product = value;
        else if (key == "entropy") entropy = value;
        else if (key == "unitary") unitary = value;
        else return false;
        return true;
    }

    std::optional<double> get(std::string_view key) const {
        if (key == "herm") return herm;
        if (key == "trace") return trace;
        if (key == "psd") return psd;
        if (key == "hull") return hull;
        if (key == "dedup") return dedup;
        if (key == "product") return product;
        if (key == "entropy") return entropy;
        if (key == "unitary") return unitary;
        return std::nullopt;
    }
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

}  // namespace sepscope
