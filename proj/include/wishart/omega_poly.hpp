#pragma once

#include <map>
#include <string>
#include <vector>

#include "wishart/exp_poly.hpp"

namespace wishart {

/// Read-only view of one omega-ring term:
///   coeff * omega^omega_pow * prod_i theta_i^powers[i]
///         * exp(-omega * sum_i omega_rates[i] * theta_i).
struct OmegaTermView {
    const Rational& coeff;
    int omega_pow;
    const std::vector<int>& powers;
    const std::vector<int>& omega_rates;
};

/// Sparse polynomial over theta-variables whose coefficients carry integer
/// powers of a single positive symbolic parameter omega and whose
/// exponential rates are nonnegative integer multiples of omega. Closed
/// under the same definite integration as ExpPoly (each inverse power of
/// k*omega lands in the coefficient and omega exponent), so integrating out
/// every variable leaves a Laurent polynomial in omega.
class OmegaPoly {
public:
    explicit OmegaPoly(std::vector<VarId> vars);

    static OmegaPoly monomial(std::vector<VarId> vars, std::vector<int> powers,
                              Rational coeff = Rational(1));

    const std::vector<VarId>& vars() const { return vars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int omega_pow, std::vector<int> powers, std::vector<int> omega_rates,
                  Rational coeff);

    OmegaPoly operator+(const OmegaPoly& o) const;
    OmegaPoly operator*(const OmegaPoly& o) const;
    bool operator==(const OmegaPoly& o) const;
    bool operator!=(const OmegaPoly& o) const { return !(*this == o); }

    /// Exact definite integral in `var` over (lower, upper); same closed
    /// forms and error behavior as ExpPoly::integrate with c = k*omega.
    OmegaPoly integrate(VarId var, Limit lower, Limit upper) const;

    /// Laurent coefficients {omega exponent -> coefficient}. Requires that
    /// no live variables remain.
    std::map<int, Rational> laurent() const;

    template <class F>
    void for_each_term(F&& f) const {
        for (const auto& [key, coeff] : terms_)
            f(OmegaTermView{coeff, key.omega_pow, key.powers, key.omega_rates});
    }

    std::string to_string() const;

private:
    struct Key {
        int omega_pow = 0;
        std::vector<int> powers;
        std::vector<int> omega_rates;
        bool operator<(const Key& o) const;
        bool operator==(const Key& o) const = default;
    };

    int index_of(VarId v) const;

    std::vector<VarId> vars_;
    std::map<Key, Rational> terms_;
};

/// A finished ordered-domain integral in the omega ring, reduced to its
/// Laurent coefficients. leading_exponent is the least n such that the
/// omega^{-n} coefficient is nonzero — the exponent that dominates for
/// large omega.
struct OrderedIntegralResult {
    std::map<int, Rational> laurent;  // omega exponent -> coefficient
    int leading_exponent = 0;
    Rational leading_coeff;

    /// Exact value of the Laurent polynomial at a positive rational omega.
    Rational evaluate(const Rational& omega) const;
};

/// Integrates an arbitrary omega polynomial over the ordered domain
/// inf > theta_1 > ... > theta_K > 0 (largest-index variable innermost with
/// limits (0, previous variable), theta_1 last over (0, inf)) and collects
/// the Laurent form. Requires vars = {1..K}.
OrderedIntegralResult ordered_omega_integral(OmegaPoly p);

/// Integrates theta_1^{beta_1} ... theta_K^{beta_K} e^{-omega sum theta_k}
/// over the same domain. The result is a single Laurent term
/// zeta * omega^{-(K + sum beta)} with zeta > 0.
OrderedIntegralResult ordered_exp_integral(const std::vector<int>& beta);

}  // namespace wishart
