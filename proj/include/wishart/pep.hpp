#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wishart/dimensions.hpp"
#include "wishart/marginal.hpp"
#include "wishart/omega_poly.hpp"

namespace wishart {

/// Closed-form E[exp(-gamma sum_j alpha_j mu_j)]: the ordered-simplex
/// integral of psi * exp(-sum (1 + gamma alpha_j) mu_j) divided by the
/// normalization constant. Exact rational in (0, 1]. Supported up to
/// min(N, M) = 4; the expanded density grows combinatorially beyond that.
Rational exact_pep(const Dimensions& dims, const std::vector<Rational>& alpha,
                   const Rational& gamma);

/// Termwise ordered-domain integration of mb.r against
/// e^{-omega sum theta}: a Laurent polynomial in omega = 1 + gamma*alpha_min
/// whose leading inverse exponent is K + smallest degree of r.
OrderedIntegralResult bound_expectation(const MarginalBound& mb);

/// (N - p_1 + 1)(M - p_1 + 1), where p_1 is the smallest index carrying a
/// nonzero weight.
int diversity_exponent(const Dimensions& dims, const std::vector<Rational>& alpha);

/// 10^{db/10} rounded to 12 significant decimal digits and parsed as an
/// exact rational, so downstream arithmetic is reproducible bit for bit.
Rational db_to_gamma(double db);

enum class CurveSource { Exact, Bound, MonteCarlo };

std::string source_name(CurveSource s);
CurveSource parse_source(std::string_view text);  // "exact" | "bound" | "mc"

struct PepPoint {
    double gamma_db = 0;
    Rational gamma;
    Rational value;       // exact value (unset for the sampled source)
    double value_f = 0;   // float view of value, or the sample mean
    double stderr_f = 0;  // standard error for sampled points, else 0
};

struct PepCurve {
    Dimensions dims;
    std::vector<Rational> alpha;
    CurveSource source = CurveSource::Exact;
    std::vector<PepPoint> points;
    double fitted_slope = 0;
    int predicted_exponent = 0;
    int window = 3;  // number of trailing grid points used for the fit
};

/// "start:stop:step" in dB -> ascending grid including both endpoints
/// (stop admitted within a small tolerance of an exact multiple).
std::vector<double> parse_grid(std::string_view text);

/// Curve of exact values over a dB grid for the Exact or Bound source. The
/// Bound source evaluates the Laurent bound at omega = 1 + gamma*alpha_min
/// and divides by the normalization constant, so Exact <= Bound pointwise.
PepCurve pep_curve(const Dimensions& dims, const std::vector<Rational>& alpha,
                   const std::vector<double>& grid_db, CurveSource source, int window = 3);

/// Least-squares slope of log10(value) against log10(gamma) over the last
/// `window` points. Throws InsufficientPoints when fewer than two usable
/// (finite, positive) points are available.
double slope_fit(const PepCurve& curve, int window);

}  // namespace wishart
