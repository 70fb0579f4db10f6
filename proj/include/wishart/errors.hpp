#pragma once

#include <stdexcept>
#include <string>

namespace wishart {

/// Integral does not converge (zero decay rate against an infinite limit).
struct DivergentIntegral : std::runtime_error {
    explicit DivergentIntegral(const std::string& what) : std::runtime_error(what) {}
};

/// An integration limit references the integration variable itself, or a
/// variable that is not live in the polynomial.
struct BadLimit : std::invalid_argument {
    explicit BadLimit(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact evaluation requested on a term with a nonzero exponential rate.
struct RationalExpUnsupported : std::invalid_argument {
    explicit RationalExpUnsupported(const std::string& what) : std::invalid_argument(what) {}
};

/// Degree query on the zero polynomial.
struct ZeroPolynomial : std::invalid_argument {
    explicit ZeroPolynomial(const std::string& what) : std::invalid_argument(what) {}
};

/// Every weight in an alpha vector is zero.
struct AllZeroAlpha : std::invalid_argument {
    explicit AllZeroAlpha(const std::string& what) : std::invalid_argument(what) {}
};

/// Antenna configuration outside the supported exact-computation envelope.
struct UnsupportedDimensions : std::invalid_argument {
    explicit UnsupportedDimensions(const std::string& what) : std::invalid_argument(what) {}
};

/// Eigenvalue iteration failed to reach its tolerance within the sweep cap.
struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Slope fit requested over fewer than two usable points.
struct InsufficientPoints : std::invalid_argument {
    explicit InsufficientPoints(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wishart
