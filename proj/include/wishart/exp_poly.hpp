#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wishart/rational.hpp"

namespace wishart {

/// Identity of an eigenvalue variable (the i in mu_i); 1-based and stable
/// across integration, which only shrinks the live-variable list.
using VarId = int;

/// An integration bound: 0, +infinity, or another live variable.
struct Limit {
    enum class Kind { Zero, Infinity, Variable };
    Kind kind = Kind::Zero;
    VarId var = 0;

    static Limit zero() { return {Kind::Zero, 0}; }
    static Limit infinity() { return {Kind::Infinity, 0}; }
    static Limit variable(VarId v) { return {Kind::Variable, v}; }
};

/// Read-only view of one stored term.
struct ExpTermView {
    const Rational& coeff;
    const std::vector<int>& powers;      // exponent of mu_i per live variable
    const std::vector<Rational>& rates;  // c_i in exp(-sum c_i mu_i), nonnegative
};

/// Sparse sum of terms  coeff * prod_i mu_i^powers[i] * exp(-sum_i rates[i] mu_i)
/// over an ordered list of live variables. Terms are kept canonical: keyed by
/// (powers, rates) under a deterministic total order, never with a zero
/// coefficient, so equal values have identical representations.
class ExpPoly {
public:
    explicit ExpPoly(std::vector<VarId> vars);

    static ExpPoly constant(std::vector<VarId> vars, Rational c);
    static ExpPoly monomial(std::vector<VarId> vars, std::vector<int> powers,
                            Rational coeff = Rational(1));
    /// coeff * exp(-sum rates[i] * mu_i)
    static ExpPoly exponential(std::vector<VarId> vars, std::vector<Rational> rates,
                               Rational coeff = Rational(1));

    const std::vector<VarId>& vars() const { return vars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_pure_polynomial() const;

    /// Merges one term into the canonical store (dropping it if the
    /// accumulated coefficient is zero).
    void add_term(std::vector<int> powers, std::vector<Rational> rates, Rational coeff);

    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const ExpPoly& o) const;
    ExpPoly operator-() const;
    ExpPoly scaled(const Rational& c) const;
    bool operator==(const ExpPoly& o) const;
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    /// Exact definite integral in `var`; the result no longer contains `var`.
    /// Closed forms: int theta^m dtheta and int theta^m e^{-c theta} dtheta.
    /// Throws DivergentIntegral when a zero-rate term meets an infinite limit
    /// and BadLimit when a limit references `var` itself or a dead variable.
    ExpPoly integrate(VarId var, Limit lower, Limit upper) const;

    /// Sets mu_var = 0: terms with a positive power vanish, rates on var drop.
    ExpPoly substitute_zero(VarId var) const;

    /// Exact evaluation; defined only for pure polynomials
    /// (throws RationalExpUnsupported otherwise).
    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate_float(const std::vector<double>& point) const;

    template <class F>
    void for_each_term(F&& f) const {
        for (const auto& [key, coeff] : terms_)
            f(ExpTermView{coeff, key.powers, key.rates});
    }

    /// One term per line: `coeff * mu_i^a * ... * exp(-c*mu_i - ...)` with
    /// exact rational literals; "0" for the zero polynomial.
    std::string to_string() const;
    static ExpPoly parse(std::vector<VarId> vars, std::string_view text);

private:
    struct Key {
        std::vector<int> powers;
        std::vector<Rational> rates;
        bool operator<(const Key& o) const;
        bool operator==(const Key& o) const { return powers == o.powers && rates == o.rates; }
    };

    int index_of(VarId v) const;  // -1 when absent

    std::vector<VarId> vars_;
    std::map<Key, Rational> terms_;
};

/// Minimum total degree over the terms of a nonzero pure polynomial.
int smallest_degree(const ExpPoly& p);

}  // namespace wishart
