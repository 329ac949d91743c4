// errors.hpp
// Exception types thrown by the library. Every error carries the offending
// quantity where one exists, so callers can report it without re-deriving.

#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace sepscope {

namespace detail {

inline std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace detail

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotSquareError : public Error {
public:
    NotSquareError(long rows, long cols)
        : Error("matrix is not square: " + std::to_string(rows) + "x" + std::to_string(cols)) {}
};

class NotHermitianError : public Error {
public:
    explicit NotHermitianError(double max_violation)
        : Error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = " +
                detail::fmt_double(max_violation)),
          max_violation_(max_violation) {}
    double max_violation() const noexcept { return max_violation_; }

private:
    double max_violation_;
};

class TraceNotOneError : public Error {
public:
    explicit TraceNotOneError(double deviation)
        : Error("trace deviates from one by " + detail::fmt_double(deviation)),
          deviation_(deviation) {}
    double deviation() const noexcept { return deviation_; }

private:
    double deviation_;
};

class NotPositiveError : public Error {
public:
    explicit NotPositiveError(double min_eigenvalue)
        : Error("matrix is not positive semidefinite: min eigenvalue = " +
                detail::fmt_double(min_eigenvalue)),
          min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class DimMismatchError : public Error {
public:
    explicit DimMismatchError(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

class NoFactorDimsError : public Error {
public:
    NoFactorDimsError() : Error("state carries no bipartite factor dimensions") {}
};

class UnsupportedDimsError : public Error {
public:
    explicit UnsupportedDimsError(const std::string& msg) : Error("unsupported dimensions: " + msg) {}
};

class DimTooSmallError : public Error {
public:
    explicit DimTooSmallError(int d)
        : Error("dimension must be at least 2, got " + std::to_string(d)) {}
};

class InvalidDecompositionError : public Error {
public:
    explicit InvalidDecompositionError(const std::string& msg)
        : Error("invalid separable decomposition: " + msg) {}
};

class FactorNotPureError : public Error {
public:
    FactorNotPureError(char side, std::size_t index, double second_eigenvalue)
        : Error(std::string("factor ") + side + "[" + std::to_string(index) +
                "] is not pure: second-largest eigenvalue = " +
                detail::fmt_double(second_eigenvalue)),
          side_(side), index_(index), second_eigenvalue_(second_eigenvalue) {}
    char side() const noexcept { return side_; }
    std::size_t index() const noexcept { return index_; }
    double second_eigenvalue() const noexcept { return second_eigenvalue_; }

private:
    char side_;
    std::size_t index_;
    double second_eigenvalue_;
};

class NotNormalizedError : public Error {
public:
    explicit NotNormalizedError(double norm)
        : Error("vector is not normalized: ||psi|| = " + detail::fmt_double(norm)) {}
};

class NotUnitaryError : public Error {
public:
    explicit NotUnitaryError(double violation)
        : Error("matrix is not unitary: max |(U^dag U - I)_ij| = " +
                detail::fmt_double(violation)) {}
};

class BadCountError : public Error {
public:
    explicit BadCountError(const std::string& msg) : Error("bad count: " + msg) {}
};

class BadParameterError : public Error {
public:
    explicit BadParameterError(const std::string& msg) : Error("bad parameter: " + msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace sepscope
