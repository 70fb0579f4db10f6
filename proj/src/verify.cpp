#include "wishart/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wishart/curve_io.hpp"
#include "wishart/joint_pdf.hpp"
#include "wishart/marginal.hpp"
#include "wishart/monte_carlo.hpp"
#include "wishart/omega_poly.hpp"
#include "wishart/pep.hpp"

namespace wishart::verify {

namespace {

struct Ctx {
    SuiteResult r;

    explicit Ctx(std::string name) { r.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) r.failures.push_back(what);
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string tag(const Dimensions& dims, const std::vector<Rational>& alpha) {
    return "n=" + std::to_string(dims.n) + " m=" + std::to_string(dims.m) + " alpha=" +
           format_alpha(alpha);
}

/// Every (n, m) in 1..4 x 1..4 with every nonzero 0/1 weight vector.
template <class F>
void sweep_indicator_splits(F&& f) {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            const Dimensions dims(n, m);
            const int y = dims.y();
            for (unsigned mask = 1; mask < (1u << y); ++mask) {
                std::vector<Rational> alpha(y, Rational(0));
                for (int i = 0; i < y; ++i)
                    if (mask & (1u << i)) alpha[i] = Rational(1);
                f(dims, split_indices(alpha));
            }
        }
}

bool is_homogeneous(const ExpPoly& p, int degree) {
    bool ok = !p.is_zero();
    p.for_each_term([&](const ExpTermView& t) {
        int total = 0;
        for (int pw : t.powers) total += pw;
        if (total != degree) ok = false;
        for (const Rational& rate : t.rates)
            if (rate != Rational(0)) ok = false;
    });
    return ok;
}

/// g rebuilt over the full variable list so it can be multiplied against
/// psi/g and compared with psi.
ExpPoly lift_g(const Dimensions& dims, const IndexSplit& split) {
    const auto vars = eigen_vars(dims);
    const int extra = dims.x() - dims.y();
    std::vector<int> pw(vars.size(), 0);
    for (int idx : split.p) pw[idx - 1] = extra;
    ExpPoly g = ExpPoly::monomial(vars, pw);
    for (std::size_t a = 0; a < split.p.size(); ++a)
        for (std::size_t b = a + 1; b < split.p.size(); ++b)
            g = g * squared_difference(vars, split.p[a], split.p[b]);
    return g;
}

}  // namespace

std::string SuiteResult::summary() const {
    std::ostringstream os;
    os << name << ": ";
    if (ok()) {
        os << "PASS (" << checks << " checks)";
    } else {
        os << "FAIL (" << failures.size() << " of " << checks << " checks failed)";
        const std::size_t shown = std::min<std::size_t>(failures.size(), 5);
        for (std::size_t i = 0; i < shown; ++i) os << "\n  " << failures[i];
        if (failures.size() > shown)
            os << "\n  (and " << failures.size() - shown << " more)";
    }
    return os.str();
}

SuiteResult degree_sweep() {
    Ctx ctx("degree-sweep");
    sweep_indicator_splits([&](const Dimensions& dims, const IndexSplit& split) {
        const std::string at = tag(dims, split.alpha);
        const MarginalBound mb = marginal_bound(dims, split);
        const int closed_form = (dims.n - split.p1() + 1) * (dims.m - split.p1() + 1) - split.k;
        ctx.check(!mb.r.is_zero(), at + ": bound polynomial is zero");
        ctx.check(mb.r.is_pure_polynomial(), at + ": bound polynomial kept an exponential");
        ctx.check(mb.smallest_deg == mb.ledger.d_r_smallest,
                  at + ": smallest degree " + std::to_string(mb.smallest_deg) +
                      " != ledger " + std::to_string(mb.ledger.d_r_smallest));
        ctx.check(mb.smallest_deg == closed_form,
                  at + ": smallest degree " + std::to_string(mb.smallest_deg) +
                      " != closed form " + std::to_string(closed_form));
    });
    return ctx.r;
}

SuiteResult homogeneity() {
    Ctx ctx("homogeneity");
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            const Dimensions dims(n, m);
            const int x = dims.x(), y = dims.y();
            ctx.check(is_homogeneous(build_psi(dims), y * (x - y) + y * (y - 1)),
                      "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          ": density polynomial not homogeneous at its stated degree");
        }
    sweep_indicator_splits([&](const Dimensions& dims, const IndexSplit& split) {
        const std::string at = tag(dims, split.alpha);
        const DegreeLedger led = degree_ledger(dims, split);
        const ExpPoly g = lift_g(dims, split);
        const ExpPoly q = build_psi_quotient(dims, split);
        ctx.check(is_homogeneous(g, led.d_g_smallest), at + ": g not homogeneous at d_g");
        ctx.check(is_homogeneous(q, led.d_h_org), at + ": psi/g not homogeneous at d_h_org");
        ctx.check(g * q == build_psi(dims), at + ": g * (psi/g) != psi");
        ctx.check(led.d_r_smallest == led.d_g_smallest + led.d_h_org - led.d_h_vanishing +
                                          led.d_h_added,
                  at + ": ledger sum rule broken");
        const int closed_form = (dims.n - split.p1() + 1) * (dims.m - split.p1() + 1) - split.k;
        ctx.check(led.d_r_smallest == closed_form, at + ": ledger != closed form");
    });
    return ctx.r;
}

SuiteResult omega_integral(std::uint64_t seed) {
    Ctx ctx("omega-integral");
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 4);
        std::vector<int> beta(k);
        int total = 0;
        for (int& b : beta) {
            b = static_cast<int>(rng() % 5);
            total += b;
        }
        std::string at = "trial " + std::to_string(trial) + " beta=";
        for (int i = 0; i < k; ++i) at += (i ? ";" : "") + std::to_string(beta[i]);

        const OrderedIntegralResult res = ordered_exp_integral(beta);
        ctx.check(res.laurent.size() == 1, at + ": more than one surviving omega power");
        ctx.check(res.leading_exponent == k + total,
                  at + ": inverse exponent " + std::to_string(res.leading_exponent) + " != " +
                      std::to_string(k + total));
        ctx.check(res.leading_coeff > Rational(0), at + ": coefficient not positive");

        // Stepwise invariant: after integrating out the j innermost
        // variables, -omega_pow plus the total power of the next variable
        // out (its own exponent plus everything transferred inward) equals
        // (sum of the exponents from that variable inward) + j, per term.
        std::vector<VarId> vars(k);
        for (int i = 0; i < k; ++i) vars[i] = i + 1;
        OmegaPoly p(vars);
        p.add_term(0, beta, std::vector<int>(k, 1), Rational(1));
        bool balanced = true;
        for (int v = k; v >= 2; --v) {
            p = p.integrate(v, Limit::zero(), Limit::variable(v - 1));
            int target = k - v + 1;
            for (int i = v - 1; i <= k; ++i) target += beta[i - 1];
            p.for_each_term([&](const OmegaTermView& t) {
                if (-t.omega_pow + t.powers[v - 2] != target) balanced = false;
            });
        }
        p = p.integrate(1, Limit::zero(), Limit::infinity());
        p.for_each_term([&](const OmegaTermView& t) {
            if (-t.omega_pow != k + total) balanced = false;
        });
        ctx.check(balanced, at + ": exponent balance broken at an intermediate stage");

        // Same integrand with the symbolic parameter pinned to 2, via the
        // plain exponential-polynomial route.
        const auto numeric = ExpPoly::monomial(vars, beta) *
                             ExpPoly::exponential(vars, std::vector<Rational>(k, Rational(2)));
        ctx.check(res.evaluate(Rational(2)) ==
                      integrate_ordered_simplex(numeric, Dimensions(k, k)),
                  at + ": disagrees with the numeric-rate route at omega=2");
    }
    return ctx.r;
}

SuiteResult normalization() {
    Ctx ctx("normalization");
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            const Dimensions dims(n, m);
            const std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            Rational product(1);
            for (int i = 1; i <= dims.y(); ++i)
                product = product * Rational::factorial(static_cast<unsigned>(dims.x() - i)) *
                          Rational::factorial(static_cast<unsigned>(dims.y() - i));
            const Rational z = normalization_constant(dims);
            ctx.check(z == product, at + ": constant " + z.str() +
                                        " != factorial product " + product.str());
            ctx.check(integrate_ordered_simplex(build_joint_pdf(dims, true), dims) ==
                          Rational(1),
                      at + ": normalized density does not integrate to 1");
        }
    ctx.check(normalization_constant(Dimensions(2, 2)) == Rational(1), "2x2 constant != 1");
    ctx.check(normalization_constant(Dimensions(3, 2)) == Rational(2), "3x2 constant != 2");
    ctx.check(normalization_constant(Dimensions(3, 3)) == Rational(4), "3x3 constant != 4");
    return ctx.r;
}

namespace {

void check_slope(Ctx& ctx, const Dimensions& dims, const std::string& alpha_text,
                 const std::string& grid_text, int expected) {
    const auto alpha = parse_alpha(alpha_text);
    const PepCurve curve =
        pep_curve(dims, alpha, parse_grid(grid_text), CurveSource::Exact);
    const std::string at = tag(dims, alpha);
    ctx.check(curve.predicted_exponent == expected,
              at + ": predicted exponent " + std::to_string(curve.predicted_exponent) +
                  " != " + std::to_string(expected));
    const double err = std::fabs(curve.fitted_slope + expected);
    ctx.check(err <= 0.02 * expected,
              at + ": fitted slope " + num(curve.fitted_slope) + " misses -" +
                  std::to_string(expected) + " by " + num(100 * err / expected) + "%");
}

}  // namespace

SuiteResult slopes_3x3() {
    Ctx ctx("slopes-3x3");
    const Dimensions dims(3, 3);
    check_slope(ctx, dims, "1,0,0", "0:40:5", 9);
    check_slope(ctx, dims, "0,1,0", "0:40:5", 4);
    check_slope(ctx, dims, "0,0,1", "0:40:5", 1);
    check_slope(ctx, dims, "0.1,0,1", "0:40:5", 9);
    check_slope(ctx, dims, "3,0,5", "0:40:5", 9);
    return ctx.r;
}

SuiteResult slopes_4x4() {
    Ctx ctx("slopes-4x4");
    const Dimensions dims(4, 4);
    // The 0.01/1 pair needs a deeper grid: with alpha_min = 0.01 the decay
    // exponent only shows once gamma*alpha_min >> 1, i.e. beyond ~40 dB.
    check_slope(ctx, dims, "1,0,0,0", "0:60:5", 16);
    check_slope(ctx, dims, "0,0.01,0,1", "0:60:5", 9);
    check_slope(ctx, dims, "0,0,1,0", "0:60:5", 4);
    return ctx.r;
}

SuiteResult bound_chain() {
    Ctx ctx("bound-chain");
    const Dimensions dims(3, 3);
    for (const char* text : {"1,0,0", "0,1,0", "0,0,1", "0.1,0,1", "3,0,5"}) {
        const auto alpha = parse_alpha(text);
        const IndexSplit split = split_indices(alpha);
        std::vector<Rational> floored(alpha.size(), Rational(0));
        for (int idx : split.p) floored[idx - 1] = split.alpha_min;
        const OrderedIntegralResult bound = bound_expectation(marginal_bound(dims, split));
        const Rational z = normalization_constant(dims);
        for (int g : {1, 10, 100}) {
            const Rational gamma(g);
            const std::string at = tag(dims, alpha) + " gamma=" + std::to_string(g);
            const Rational lower = exact_pep(dims, alpha, gamma);
            const Rational mid = exact_pep(dims, floored, gamma);
            const Rational upper =
                bound.evaluate(Rational(1) + gamma * split.alpha_min) / z;
            ctx.check(lower <= mid, at + ": lowering weights to alpha_min decreased the "
                                         "expectation");
            ctx.check(mid <= upper, at + ": Laurent bound fell below the exact value");
        }
    }
    return ctx.r;
}

SuiteResult leading_exponent() {
    Ctx ctx("leading-exponent");
    sweep_indicator_splits([&](const Dimensions& dims, const IndexSplit& split) {
        const std::string at = tag(dims, split.alpha);
        const OrderedIntegralResult res = bound_expectation(marginal_bound(dims, split));
        const int expected = diversity_exponent(dims, split.alpha);
        ctx.check(res.leading_exponent == expected,
                  at + ": leading inverse exponent " + std::to_string(res.leading_exponent) +
                      " != " + std::to_string(expected));
        ctx.check(res.leading_coeff > Rational(0), at + ": leading coefficient not positive");
    });
    return ctx.r;
}

SuiteResult dominance(std::uint64_t seed) {
    Ctx ctx("dominance");
    std::mt19937_64 rng(seed);
    for (const auto& [n, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
        const Dimensions dims(n, m);
        const double z = normalization_constant(dims).to_double();
        for (int idx = 1; idx <= dims.y(); ++idx) {
            std::vector<Rational> alpha(dims.y(), Rational(0));
            alpha[idx - 1] = Rational(1);
            const MarginalBound mb = marginal_bound(dims, split_indices(alpha));
            const ExpPoly exact = exact_marginal(dims, {idx});
            const std::string at = tag(dims, alpha);
            int bad = 0;
            double worst = 0;
            for (int point = 0; point < 1000; ++point) {
                const double u =
                    (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;  // (0, 1]
                const double mu = -3.0 * std::log(u);
                const double f = exact.evaluate_float({mu});
                const double cap = mb.r.evaluate_float({mu}) * std::exp(-mu) / z;
                if (f > cap + 1e-12) {
                    ++bad;
                    worst = std::max(worst, f - cap);
                }
            }
            ctx.check(bad == 0, at + ": exact marginal exceeded the bound at " +
                                    std::to_string(bad) + " of 1000 points (worst excess " +
                                    num(worst) + ")");
        }
    }
    return ctx.r;
}

SuiteResult mc_cross(std::uint64_t seed, int threads) {
    Ctx ctx("mc-cross");
    const Dimensions dims(3, 3);
    const auto grid = parse_grid("0:12:2");
    constexpr std::uint64_t kSamples = 1000000;
    for (const char* text : {"0,1,0", "1,0,0"}) {
        const auto alpha = parse_alpha(text);
        const PepCurve exact = pep_curve(dims, alpha, grid, CurveSource::Exact);
        const PepCurve mc = mc_pep_curve(dims, alpha, grid, kSamples, seed, threads);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double diff = std::fabs(mc.points[i].value_f - exact.points[i].value_f);
            const std::string at = tag(dims, alpha) + " at " + num(grid[i]) + " dB";
            ctx.check(diff <= 4 * mc.points[i].stderr_f,
                      at + ": sample mean " + num(mc.points[i].value_f) + " is " +
                          num(diff) + " from exact " + num(exact.points[i].value_f) +
                          " (4*stderr = " + num(4 * mc.points[i].stderr_f) + ")");
        }
    }
    // The remaining mixed weight vectors, one point each, placed where the
    // sample mean is still resolvable: scaling every weight by w is the
    // same as scaling gamma, so the 3,0,5 expectation is already ~5e-13 by
    // 10 dB — far beyond what 10^6 draws can see — and is checked at 0 dB
    // instead (exact 2.4e-5, about 2% relative standard error).
    for (const auto& [text, db] : {std::pair<const char*, double>{"0,0,1", 10},
                                   {"0.1,0,1", 10},
                                   {"3,0,5", 0}}) {
        const auto alpha = parse_alpha(text);
        const Rational gamma = db_to_gamma(db);
        std::vector<double> alpha_d(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) alpha_d[i] = alpha[i].to_double();
        const double exact = exact_pep(dims, alpha, gamma).to_double();
        const McEstimate est =
            estimate_pep(dims, alpha_d, gamma.to_double(), kSamples, seed, threads);
        const double diff = std::fabs(est.mean - exact);
        ctx.check(diff <= 4 * est.std_error,
                  tag(dims, alpha) + " at " + num(db) + " dB: sample mean " + num(est.mean) +
                      " is " + num(diff) + " from exact " + num(exact) + " (4*stderr = " +
                      num(4 * est.std_error) + ")");
    }
    // Same seed, different thread counts: the estimate must be bit-identical.
    const std::vector<double> alpha_d{0, 1, 0};
    const double gamma = db_to_gamma(6).to_double();
    const McEstimate base = estimate_pep(dims, alpha_d, gamma, kSamples, seed, 1);
    for (int t : {2, 4}) {
        const McEstimate other = estimate_pep(dims, alpha_d, gamma, kSamples, seed, t);
        ctx.check(other.mean == base.mean && other.std_error == base.std_error,
                  "thread count " + std::to_string(t) +
                      " changed the estimate bits (mean " + num(other.mean) + " vs " +
                      num(base.mean) + ")");
    }
    return ctx.r;
}

std::vector<SuiteResult> run_suites(const std::string& token, std::uint64_t seed,
                                    int threads) {
    if (token == "theorem1") return {degree_sweep(), homogeneity()};
    if (token == "theorem2") return {omega_integral(seed), leading_exponent()};
    if (token == "normalization") return {normalization()};
    if (token == "dominance") return {dominance(seed)};
    if (token == "mc-cross") return {mc_cross(seed, threads)};
    if (token == "all")
        return {degree_sweep(),    homogeneity(), omega_integral(seed), normalization(),
                slopes_3x3(),      slopes_4x4(),  bound_chain(),        leading_exponent(),
                dominance(seed),   mc_cross(seed, threads)};
    throw std::invalid_argument(
        "unknown suite '" + token +
        "' (expected theorem1, theorem2, normalization, dominance, mc-cross, or all)");
}

}  // namespace wishart::verify
