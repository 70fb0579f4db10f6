#include "wishart/joint_pdf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace wishart {

std::vector<VarId> eigen_vars(const Dimensions& dims) {
    std::vector<VarId> vars(dims.y());
    std::iota(vars.begin(), vars.end(), 1);
    return vars;
}

ExpPoly squared_difference(const std::vector<VarId>& vars, VarId a, VarId b) {
    ExpPoly diff(vars);
    std::vector<int> pw(vars.size(), 0);
    const std::vector<Rational> rt(vars.size(), Rational(0));
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == a || vars[i] == b) {
            pw[i] = 1;
            diff.add_term(pw, rt, vars[i] == a ? Rational(1) : Rational(-1));
            pw[i] = 0;
        }
    }
    return diff * diff;
}

ExpPoly build_psi(const Dimensions& dims) {
    const auto vars = eigen_vars(dims);
    const int y = dims.y();
    const int extra = dims.x() - dims.y();

    std::vector<int> pw(vars.size(), 0);
    for (auto& p : pw) p = extra;
    ExpPoly psi = ExpPoly::monomial(vars, pw);  // prod mu_i^{X-Y}

    for (int i = 1; i <= y; ++i)
        for (int j = i + 1; j <= y; ++j) psi = psi * squared_difference(vars, i, j);
    return psi;
}

ExpPoly build_joint_pdf(const Dimensions& dims, bool normalized) {
    const auto vars = eigen_vars(dims);
    ExpPoly rho =
        build_psi(dims) * ExpPoly::exponential(vars, std::vector<Rational>(vars.size(), Rational(1)));
    if (normalized) rho = rho.scaled(Rational(1) / normalization_constant(dims));
    return rho;
}

Rational integrate_ordered_simplex(const ExpPoly& p, const Dimensions& dims) {
    if (p.vars() != eigen_vars(dims))
        throw std::invalid_argument("integrate_ordered_simplex: polynomial must live on mu_1..mu_Y");
    ExpPoly acc = p;
    for (int v = dims.y(); v >= 2; --v)
        acc = acc.integrate(v, Limit::zero(), Limit::variable(v - 1));
    acc = acc.integrate(1, Limit::zero(), Limit::infinity());
    return acc.evaluate({});
}

Rational normalization_constant(const Dimensions& dims) {
    // memoized: the constant depends only on (X, Y) and the full simplex
    // integral is the most expensive step for repeated curve evaluation
    static std::mutex guard;
    static std::map<std::pair<int, int>, Rational> cache;
    const std::pair<int, int> key{dims.x(), dims.y()};
    {
        std::lock_guard<std::mutex> lock(guard);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Rational z = integrate_ordered_simplex(build_joint_pdf(dims, false), dims);
    std::lock_guard<std::mutex> lock(guard);
    return cache.emplace(key, std::move(z)).first->second;
}

}  // namespace wishart
