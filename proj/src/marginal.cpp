#include "wishart/marginal.hpp"

#include <algorithm>
#include <stdexcept>

#include "wishart/joint_pdf.hpp"

namespace wishart {

namespace {

void check_split(const Dimensions& dims, const IndexSplit& split) {
    if (static_cast<int>(split.alpha.size()) != dims.y())
        throw std::invalid_argument("weight vector length must equal min(N, M)");
}

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

DegreeLedger degree_ledger(const Dimensions& dims, const IndexSplit& split) {
    check_split(dims, split);
    const int x = dims.x(), y = dims.y(), k = split.k, p1 = split.p1();
    DegreeLedger led;
    led.d_g_smallest = k * (x - y) + k * (k - 1);
    led.d_h_org = (y - k) * (x - y) + y * (y - 1) - k * (k - 1);
    if (split.alpha_case == AlphaCase::AlphaOneZero) {
        led.d_h_vanishing = (p1 - 1) * (x - y) + 2 * y * (p1 - 1) - p1 * (p1 - 1);
        led.d_h_added = y - k - p1 + 1;
    } else {
        led.d_h_vanishing = 0;
        led.d_h_added = y - k;
    }
    led.d_r_smallest = led.d_g_smallest + led.d_h_org - led.d_h_vanishing + led.d_h_added;
    return led;
}

ExpPoly build_rho_hat(const Dimensions& dims, const IndexSplit& split) {
    check_split(dims, split);
    const auto vars = eigen_vars(dims);
    std::vector<Rational> rates(vars.size(), Rational(0));
    for (int idx : split.p) rates[idx - 1] = Rational(1);
    if (split.alpha_case == AlphaCase::AlphaOneZero) rates[0] = Rational(1);
    return build_psi(dims) * ExpPoly::exponential(vars, std::move(rates));
}

ExpPoly build_psi_quotient(const Dimensions& dims, const IndexSplit& split) {
    check_split(dims, split);
    const auto vars = eigen_vars(dims);
    const int y = dims.y();
    const int extra = dims.x() - y;
    std::vector<int> pw(vars.size(), 0);
    for (int idx : split.s) pw[idx - 1] = extra;
    ExpPoly q = ExpPoly::monomial(vars, pw);
    for (int i = 1; i <= y; ++i)
        for (int j = i + 1; j <= y; ++j)
            if (!(contains(split.p, i) && contains(split.p, j)))
                q = q * squared_difference(vars, i, j);
    return q;
}

MarginalBound marginal_bound(const Dimensions& dims, const IndexSplit& split) {
    check_split(dims, split);
    const auto vars = eigen_vars(dims);
    const int extra = dims.x() - dims.y();
    const ExpPoly q = build_psi_quotient(dims, split);

    // Nested integration over the s-variables, innermost (largest index)
    // first with limits (0, mu_{index-1}). With alpha_1 == 0 the first
    // variable keeps its exponential and is integrated last to infinity;
    // otherwise every s-integral has a finite upper limit.
    ExpPoly h(vars);
    if (split.alpha_case == AlphaCase::AlphaOneZero) {
        std::vector<Rational> rates(vars.size(), Rational(0));
        rates[0] = Rational(1);
        h = q * ExpPoly::exponential(vars, std::move(rates));
        for (auto it = split.s.rbegin(); it != split.s.rend(); ++it)
            if (*it != 1) h = h.integrate(*it, Limit::zero(), Limit::variable(*it - 1));
        h = h.integrate(1, Limit::zero(), Limit::infinity());
    } else {
        h = q;
        for (auto it = split.s.rbegin(); it != split.s.rend(); ++it)
            h = h.integrate(*it, Limit::zero(), Limit::variable(*it - 1));
    }

    // g over exactly the surviving p-variables.
    ExpPoly g = ExpPoly::monomial(split.p, std::vector<int>(split.p.size(), extra));
    for (std::size_t a = 0; a < split.p.size(); ++a)
        for (std::size_t b = a + 1; b < split.p.size(); ++b)
            g = g * squared_difference(split.p, split.p[a], split.p[b]);

    MarginalBound mb{dims, split, g, h, g * h, 0, degree_ledger(dims, split)};
    mb.smallest_deg = smallest_degree(mb.r);
    return mb;
}

ExpPoly exact_marginal(const Dimensions& dims, const std::vector<int>& p) {
    const int y = dims.y();
    if (p.empty() || !std::is_sorted(p.begin(), p.end()) ||
        std::adjacent_find(p.begin(), p.end()) != p.end() || p.front() < 1 || p.back() > y)
        throw std::invalid_argument("marginal indices must be an ascending subset of 1..Y");

    ExpPoly f = build_joint_pdf(dims, true);
    std::vector<int> live = eigen_vars(dims);
    for (int v = y; v >= 1; --v) {
        if (contains(p, v)) continue;
        const auto pos = std::lower_bound(live.begin(), live.end(), v);
        const Limit upper =
            pos == live.begin() ? Limit::infinity() : Limit::variable(*std::prev(pos));
        const Limit lower =
            std::next(pos) == live.end() ? Limit::zero() : Limit::variable(*std::next(pos));
        f = f.integrate(v, lower, upper);
        live.erase(pos);
    }
    return f;
}

}  // namespace wishart
