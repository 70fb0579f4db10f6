#include "wishart/omega_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wishart/errors.hpp"

namespace wishart {

bool OmegaPoly::Key::operator<(const Key& o) const {
    if (omega_pow != o.omega_pow) return omega_pow < o.omega_pow;
    if (powers != o.powers) return powers < o.powers;
    return omega_rates < o.omega_rates;
}

OmegaPoly::OmegaPoly(std::vector<VarId> vars) : vars_(std::move(vars)) {}

OmegaPoly OmegaPoly::monomial(std::vector<VarId> vars, std::vector<int> powers, Rational coeff) {
    OmegaPoly p(std::move(vars));
    if (powers.size() != p.vars_.size())
        throw std::invalid_argument("OmegaPoly::monomial: power-list length mismatch");
    p.add_term(0, std::move(powers), std::vector<int>(p.vars_.size(), 0), std::move(coeff));
    return p;
}

void OmegaPoly::add_term(int omega_pow, std::vector<int> powers, std::vector<int> omega_rates,
                         Rational coeff) {
    if (powers.size() != vars_.size() || omega_rates.size() != vars_.size())
        throw std::invalid_argument("OmegaPoly::add_term: length mismatch");
    for (int p : powers)
        if (p < 0) throw std::invalid_argument("OmegaPoly::add_term: negative power");
    for (int k : omega_rates)
        if (k < 0) throw std::invalid_argument("OmegaPoly::add_term: negative rate");
    if (coeff.is_zero()) return;
    Key key{omega_pow, std::move(powers), std::move(omega_rates)};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OmegaPoly OmegaPoly::operator+(const OmegaPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("OmegaPoly: variable-list mismatch");
    OmegaPoly out = *this;
    for (const auto& [key, coeff] : o.terms_) {
        auto [it, inserted] = out.terms_.emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

OmegaPoly OmegaPoly::operator*(const OmegaPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("OmegaPoly: variable-list mismatch");
    OmegaPoly out(vars_);
    const std::size_t nv = vars_.size();
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key key;
            key.omega_pow = ka.omega_pow + kb.omega_pow;
            key.powers.resize(nv);
            key.omega_rates.resize(nv);
            for (std::size_t i = 0; i < nv; ++i) {
                key.powers[i] = ka.powers[i] + kb.powers[i];
                key.omega_rates[i] = ka.omega_rates[i] + kb.omega_rates[i];
            }
            Rational c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(std::move(key), std::move(c));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

bool OmegaPoly::operator==(const OmegaPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

int OmegaPoly::index_of(VarId v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

OmegaPoly OmegaPoly::integrate(VarId var, Limit lower, Limit upper) const {
    const int vi = index_of(var);
    if (vi < 0) throw BadLimit("integrate: variable theta_" + std::to_string(var) + " not live");
    for (const Limit& lim : {lower, upper}) {
        if (lim.kind != Limit::Kind::Variable) continue;
        if (lim.var == var)
            throw BadLimit("integrate: limit references the integration variable theta_" +
                           std::to_string(var));
        if (index_of(lim.var) < 0)
            throw BadLimit("integrate: limit references dead variable theta_" +
                           std::to_string(lim.var));
    }

    std::vector<VarId> out_vars = vars_;
    out_vars.erase(out_vars.begin() + vi);
    OmegaPoly out(out_vars);

    // Antiderivative of theta^m e^{-k omega theta}:
    //   k == 0:  theta^{m+1}/(m+1)
    //   k >= 1: -e^{-k omega theta} * sum_{i=0}^{m} m!/(m-i)!
    //                                 * theta^{m-i} * k^{-(i+1)} omega^{-(i+1)}
    for (const auto& [key, coeff] : terms_) {
        const int m = key.powers[vi];
        const int k = key.omega_rates[vi];

        std::vector<int> rest_pow = key.powers;
        rest_pow.erase(rest_pow.begin() + vi);
        std::vector<int> rest_rate = key.omega_rates;
        rest_rate.erase(rest_rate.begin() + vi);

        // emit q * omega^dw * theta^j e^{-k omega theta} |_{theta = lim}
        auto emit_at = [&](const Limit& lim, const Rational& q, int dw, int j, int sign) {
            if (q.is_zero()) return;
            switch (lim.kind) {
                case Limit::Kind::Zero:
                    if (j > 0) return;
                    out.add_term(key.omega_pow + dw, rest_pow, rest_rate, sign > 0 ? q : -q);
                    return;
                case Limit::Kind::Infinity:
                    if (k == 0)
                        throw DivergentIntegral("integrate: zero rate on theta_" +
                                                std::to_string(var) +
                                                " against an infinite limit");
                    return;
                case Limit::Kind::Variable: {
                    const int li = out.index_of(lim.var);
                    std::vector<int> pw = rest_pow;
                    std::vector<int> rt = rest_rate;
                    pw[li] += j;
                    rt[li] += k;
                    out.add_term(key.omega_pow + dw, std::move(pw), std::move(rt),
                                 sign > 0 ? q : -q);
                    return;
                }
            }
        };

        auto emit_antiderivative = [&](const Limit& lim, int sign) {
            if (k == 0) {
                emit_at(lim, coeff / Rational(m + 1), 0, m + 1, sign);
                return;
            }
            if (lim.kind == Limit::Kind::Infinity) {
                emit_at(lim, coeff, 0, 0, sign);  // keeps the divergence check reachable
                return;
            }
            Rational fall(1);  // m!/(m-i)!
            const Rational kinv = Rational(1) / Rational(k);
            Rational kpow = kinv;  // k^{-(i+1)}
            for (int i = 0; i <= m; ++i) {
                emit_at(lim, -(coeff * fall * kpow), -(i + 1), m - i, sign);
                fall *= Rational(m - i);
                kpow *= kinv;
            }
        };

        emit_antiderivative(upper, +1);
        emit_antiderivative(lower, -1);
    }
    return out;
}

std::map<int, Rational> OmegaPoly::laurent() const {
    if (!vars_.empty())
        throw std::invalid_argument("OmegaPoly::laurent: live variables remain");
    std::map<int, Rational> out;
    for (const auto& [key, coeff] : terms_) out.emplace(key.omega_pow, coeff);
    return out;
}

std::string OmegaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) os << '\n';
        first = false;
        os << coeff.str();
        if (key.omega_pow != 0) os << " * w^" << key.omega_pow;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (key.powers[i] == 0) continue;
            os << " * th_" << vars_[i];
            if (key.powers[i] > 1) os << '^' << key.powers[i];
        }
        bool any = false;
        for (int k : key.omega_rates) any = any || k != 0;
        if (any) {
            os << " * exp(";
            bool first_rate = true;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (key.omega_rates[i] == 0) continue;
                os << (first_rate ? "-" : " - ") << key.omega_rates[i] << "w*th_" << vars_[i];
                first_rate = false;
            }
            os << ')';
        }
    }
    return os.str();
}

Rational OrderedIntegralResult::evaluate(const Rational& omega) const {
    Rational total(0);
    for (const auto& [e, c] : laurent) total += c * omega.pow_int(e);
    return total;
}

OrderedIntegralResult ordered_omega_integral(OmegaPoly p) {
    const int k = static_cast<int>(p.vars().size());
    for (int i = 0; i < k; ++i)
        if (p.vars()[i] != i + 1)
            throw std::invalid_argument("ordered_omega_integral: variables must be 1..K");
    for (int v = k; v >= 2; --v) p = p.integrate(v, Limit::zero(), Limit::variable(v - 1));
    if (k >= 1) p = p.integrate(1, Limit::zero(), Limit::infinity());

    OrderedIntegralResult res;
    res.laurent = p.laurent();
    bool first = true;
    for (const auto& [e, c] : res.laurent) {
        // least n with omega^{-n} nonzero == greatest exponent present
        if (first || -e < res.leading_exponent) {
            res.leading_exponent = -e;
            res.leading_coeff = c;
            first = false;
        }
    }
    return res;
}

OrderedIntegralResult ordered_exp_integral(const std::vector<int>& beta) {
    const int k = static_cast<int>(beta.size());
    if (k < 1) throw std::invalid_argument("ordered_exp_integral: need at least one exponent");
    for (int b : beta)
        if (b < 0) throw std::invalid_argument("ordered_exp_integral: negative exponent");
    std::vector<VarId> vars(k);
    std::iota(vars.begin(), vars.end(), 1);
    OmegaPoly p(vars);
    p.add_term(0, beta, std::vector<int>(k, 1), Rational(1));
    return ordered_omega_integral(std::move(p));
}

}  // namespace wishart
