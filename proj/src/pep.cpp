#include "wishart/pep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wishart/errors.hpp"
#include "wishart/joint_pdf.hpp"

namespace wishart {

namespace {

void check_alpha_length(const Dimensions& dims, const std::vector<Rational>& alpha) {
    if (static_cast<int>(alpha.size()) != dims.y())
        throw std::invalid_argument("weight vector length must equal min(N, M)");
}

}  // namespace

Rational exact_pep(const Dimensions& dims, const std::vector<Rational>& alpha,
                   const Rational& gamma) {
    check_alpha_length(dims, alpha);
    if (gamma.sign() < 0) throw std::invalid_argument("exact_pep: gamma must be nonnegative");
    if (dims.y() > 4)
        throw UnsupportedDimensions(
            "exact_pep: supported up to min(N, M) = 4; the expanded eigenvalue density "
            "grows combinatorially beyond that");
    (void)split_indices(alpha);  // validates nonnegative, not all zero

    const auto vars = eigen_vars(dims);
    std::vector<Rational> rates(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) rates[i] = Rational(1) + gamma * alpha[i];
    const ExpPoly integrand = build_psi(dims) * ExpPoly::exponential(vars, std::move(rates));
    return integrate_ordered_simplex(integrand, dims) / normalization_constant(dims);
}

OrderedIntegralResult bound_expectation(const MarginalBound& mb) {
    const int k = mb.split.k;
    std::vector<VarId> theta(k);
    std::iota(theta.begin(), theta.end(), 1);
    OmegaPoly p(theta);
    // r is a pure polynomial over the p-variables; map mu_{p_i} -> theta_i
    // and attach rate omega to every variable
    mb.r.for_each_term([&](const ExpTermView& t) {
        p.add_term(0, t.powers, std::vector<int>(k, 1), t.coeff);
    });
    return ordered_omega_integral(std::move(p));
}

int diversity_exponent(const Dimensions& dims, const std::vector<Rational>& alpha) {
    check_alpha_length(dims, alpha);
    const IndexSplit split = split_indices(alpha);
    return (dims.n - split.p1() + 1) * (dims.m - split.p1() + 1);
}

Rational db_to_gamma(double db) {
    const double g = std::pow(10.0, db / 10.0);
    if (!std::isfinite(g)) throw std::invalid_argument("db_to_gamma: grid value out of range");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", g);  // 12 significant decimal digits
    return Rational::parse(buf);
}

std::string source_name(CurveSource s) {
    switch (s) {
        case CurveSource::Exact: return "exact";
        case CurveSource::Bound: return "bound";
        case CurveSource::MonteCarlo: return "mc";
    }
    return "exact";
}

CurveSource parse_source(std::string_view text) {
    if (text == "exact") return CurveSource::Exact;
    if (text == "bound") return CurveSource::Bound;
    if (text == "mc") return CurveSource::MonteCarlo;
    throw std::invalid_argument("unknown source '" + std::string(text) +
                                "' (expected exact, bound, or mc)");
}

std::vector<double> parse_grid(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("grid must be start:stop:step in dB, got '" +
                                     std::string(text) + "'");
    };
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw bad();
    double start = 0, stop = 0, step = 0;
    try {
        std::size_t used = 0;
        const std::string a(text.substr(0, c1)), b(text.substr(c1 + 1, c2 - c1 - 1)),
            c(text.substr(c2 + 1));
        start = std::stod(a, &used);
        if (used != a.size()) throw bad();
        stop = std::stod(b, &used);
        if (used != b.size()) throw bad();
        step = std::stod(c, &used);
        if (used != c.size()) throw bad();
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
    if (!(step > 0) || stop < start) throw bad();
    std::vector<double> grid;
    const double tol = step * 1e-9;
    for (int i = 0;; ++i) {
        const double v = start + i * step;
        if (v > stop + tol) break;
        grid.push_back(v);
    }
    return grid;
}

PepCurve pep_curve(const Dimensions& dims, const std::vector<Rational>& alpha,
                   const std::vector<double>& grid_db, CurveSource source, int window) {
    check_alpha_length(dims, alpha);
    if (source == CurveSource::MonteCarlo)
        throw std::invalid_argument(
            "pep_curve handles the exact and bound sources; use the sampling harness for mc");
    if (grid_db.empty()) throw std::invalid_argument("empty dB grid");
    if (!std::is_sorted(grid_db.begin(), grid_db.end()))
        throw std::invalid_argument("dB grid must be ascending");

    PepCurve curve{dims,   alpha, source, {}, 0.0, diversity_exponent(dims, alpha),
                   window};
    const IndexSplit split = split_indices(alpha);

    OrderedIntegralResult integral;
    Rational z;
    if (source == CurveSource::Bound) {
        integral = bound_expectation(marginal_bound(dims, split));
        z = normalization_constant(dims);
    }

    for (double db : grid_db) {
        PepPoint pt;
        pt.gamma_db = db;
        pt.gamma = db_to_gamma(db);
        pt.value = source == CurveSource::Exact
                       ? exact_pep(dims, alpha, pt.gamma)
                       : integral.evaluate(Rational(1) + pt.gamma * split.alpha_min) / z;
        pt.value_f = pt.value.to_double();
        curve.points.push_back(std::move(pt));
    }
    try {
        curve.fitted_slope = slope_fit(curve, window);
    } catch (const InsufficientPoints&) {
        curve.fitted_slope = std::numeric_limits<double>::quiet_NaN();
    }
    return curve;
}

double slope_fit(const PepCurve& curve, int window) {
    const int total = static_cast<int>(curve.points.size());
    if (window < 2 || total < window)
        throw InsufficientPoints("slope fit needs at least two points in the window");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = total - window; i < total; ++i) {
        const PepPoint& pt = curve.points[i];
        if (!(pt.value_f > 0) || !std::isfinite(pt.value_f))
            throw InsufficientPoints("slope fit needs positive finite values");
        const double x = std::log10(pt.gamma.to_double());
        const double y = std::log10(pt.value_f);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = window * sxx - sx * sx;
    if (denom == 0) throw InsufficientPoints("slope fit needs distinct gamma values");
    return (window * sxy - sx * sy) / denom;
}

}  // namespace wishart
