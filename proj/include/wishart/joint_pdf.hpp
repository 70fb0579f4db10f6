#pragma once

#include "wishart/dimensions.hpp"
#include "wishart/exp_poly.hpp"

namespace wishart {

/// The live-variable list {1..Y} for a configuration.
std::vector<VarId> eigen_vars(const Dimensions& dims);

/// (mu_a - mu_b)^2 over `vars`; building block of the density polynomial.
ExpPoly squared_difference(const std::vector<VarId>& vars, VarId a, VarId b);

/// Fully expanded  psi = prod_i mu_i^{X-Y} * prod_{j>i} (mu_i - mu_j)^2,
/// a homogeneous pure polynomial of degree Y(X-Y) + Y(Y-1).
ExpPoly build_psi(const Dimensions& dims);

/// Joint density of the ordered eigenvalues, psi * exp(-sum mu_j). The
/// unnormalized form follows the constant-dropping convention common in the
/// diversity literature; the normalized form integrates to exactly 1.
ExpPoly build_joint_pdf(const Dimensions& dims, bool normalized);

/// Exact iterated integral over the ordered simplex
/// inf > mu_1 > ... > mu_Y > 0: innermost mu_Y over (0, mu_{Y-1}), ...,
/// outermost mu_1 over (0, inf). The polynomial must live on {1..Y} and
/// needs a positive rate on every variable for the outer integral to exist.
Rational integrate_ordered_simplex(const ExpPoly& p, const Dimensions& dims);

/// Ordered-simplex integral of the unnormalized joint density.
Rational normalization_constant(const Dimensions& dims);

}  // namespace wishart
