#include "wishart/exp_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wishart/errors.hpp"

namespace wishart {

bool ExpPoly::Key::operator<(const Key& o) const {
    if (powers != o.powers) return powers < o.powers;
    return std::lexicographical_compare(rates.begin(), rates.end(), o.rates.begin(),
                                        o.rates.end());
}

ExpPoly::ExpPoly(std::vector<VarId> vars) : vars_(std::move(vars)) {}

ExpPoly ExpPoly::constant(std::vector<VarId> vars, Rational c) {
    ExpPoly p(std::move(vars));
    p.add_term(std::vector<int>(p.vars_.size(), 0),
               std::vector<Rational>(p.vars_.size(), Rational(0)), std::move(c));
    return p;
}

ExpPoly ExpPoly::monomial(std::vector<VarId> vars, std::vector<int> powers, Rational coeff) {
    ExpPoly p(std::move(vars));
    if (powers.size() != p.vars_.size())
        throw std::invalid_argument("ExpPoly::monomial: power-list length mismatch");
    p.add_term(std::move(powers), std::vector<Rational>(p.vars_.size(), Rational(0)),
               std::move(coeff));
    return p;
}

ExpPoly ExpPoly::exponential(std::vector<VarId> vars, std::vector<Rational> rates,
                             Rational coeff) {
    ExpPoly p(std::move(vars));
    if (rates.size() != p.vars_.size())
        throw std::invalid_argument("ExpPoly::exponential: rate-list length mismatch");
    p.add_term(std::vector<int>(p.vars_.size(), 0), std::move(rates), std::move(coeff));
    return p;
}

bool ExpPoly::is_pure_polynomial() const {
    for (const auto& [key, coeff] : terms_)
        for (const auto& r : key.rates)
            if (!r.is_zero()) return false;
    return true;
}

void ExpPoly::add_term(std::vector<int> powers, std::vector<Rational> rates, Rational coeff) {
    if (powers.size() != vars_.size() || rates.size() != vars_.size())
        throw std::invalid_argument("ExpPoly::add_term: length mismatch");
    for (int p : powers)
        if (p < 0) throw std::invalid_argument("ExpPoly::add_term: negative power");
    for (const auto& r : rates)
        if (r.sign() < 0) throw std::invalid_argument("ExpPoly::add_term: negative rate");
    if (coeff.is_zero()) return;
    Key key{std::move(powers), std::move(rates)};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("ExpPoly: variable-list mismatch");
    ExpPoly out = *this;
    for (const auto& [key, coeff] : o.terms_) {
        auto [it, inserted] = out.terms_.emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly out(vars_);
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
    return out;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const { return *this + (-o); }

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("ExpPoly: variable-list mismatch");
    ExpPoly out(vars_);
    const std::size_t nv = vars_.size();
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key key;
            key.powers.resize(nv);
            key.rates.reserve(nv);
            for (std::size_t i = 0; i < nv; ++i) {
                key.powers[i] = ka.powers[i] + kb.powers[i];
                key.rates.push_back(ka.rates[i] + kb.rates[i]);
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

ExpPoly ExpPoly::scaled(const Rational& c) const {
    ExpPoly out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
    return out;
}

bool ExpPoly::operator==(const ExpPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

int ExpPoly::index_of(VarId v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

ExpPoly ExpPoly::integrate(VarId var, Limit lower, Limit upper) const {
    const int vi = index_of(var);
    if (vi < 0) throw BadLimit("integrate: variable mu_" + std::to_string(var) + " not live");
    for (const Limit& lim : {lower, upper}) {
        if (lim.kind != Limit::Kind::Variable) continue;
        if (lim.var == var)
            throw BadLimit("integrate: limit references the integration variable mu_" +
                           std::to_string(var));
        if (index_of(lim.var) < 0)
            throw BadLimit("integrate: limit references dead variable mu_" +
                           std::to_string(lim.var));
    }

    std::vector<VarId> out_vars = vars_;
    out_vars.erase(out_vars.begin() + vi);
    ExpPoly out(out_vars);

    // Antiderivative of theta^m e^{-c theta}:
    //   c == 0:  theta^{m+1}/(m+1)
    //   c  > 0:  -e^{-c theta} * sum_{i=0}^{m} m!/(m-i)! * theta^{m-i} / c^{i+1}
    // Each term is handled independently; `rest` carries the untouched
    // variables and F(upper) - F(lower) is accumulated into `out`.
    for (const auto& [key, coeff] : terms_) {
        const int m = key.powers[vi];
        const Rational c = key.rates[vi];

        std::vector<int> rest_pow = key.powers;
        rest_pow.erase(rest_pow.begin() + vi);
        std::vector<Rational> rest_rate = key.rates;
        rest_rate.erase(rest_rate.begin() + vi);

        // emit q * theta^k e^{-c theta} |_{theta = lim} into `out`
        auto emit_at = [&](const Limit& lim, const Rational& q, int k, int sign) {
            if (q.is_zero()) return;
            switch (lim.kind) {
                case Limit::Kind::Zero:
                    if (k > 0) return;  // theta^k -> 0
                    out.add_term(rest_pow, rest_rate, sign > 0 ? q : -q);
                    return;
                case Limit::Kind::Infinity:
                    if (c.is_zero())
                        throw DivergentIntegral(
                            "integrate: zero rate on mu_" + std::to_string(var) +
                            " against an infinite limit");
                    return;  // e^{-c inf} kills the value
                case Limit::Kind::Variable: {
                    const int li = out.index_of(lim.var);
                    std::vector<int> pw = rest_pow;
                    std::vector<Rational> rt = rest_rate;
                    pw[li] += k;
                    rt[li] += c;
                    out.add_term(std::move(pw), std::move(rt), sign > 0 ? q : -q);
                    return;
                }
            }
        };

        auto emit_antiderivative = [&](const Limit& lim, int sign) {
            if (c.is_zero()) {
                emit_at(lim, coeff / Rational(m + 1), m + 1, sign);
                return;
            }
            // guarded: when lim is Infinity the whole antiderivative vanishes,
            // but run emit_at once so the divergence check still fires
            if (lim.kind == Limit::Kind::Infinity) {
                emit_at(lim, coeff, 0, sign);
                return;
            }
            Rational fall(1);        // m!/(m-i)!
            Rational cinv = Rational(1) / c;
            Rational cpow = cinv;    // c^{-(i+1)}
            for (int i = 0; i <= m; ++i) {
                emit_at(lim, -(coeff * fall * cpow), m - i, sign);
                fall *= Rational(m - i);
                cpow *= cinv;
            }
        };

        emit_antiderivative(upper, +1);
        emit_antiderivative(lower, -1);
    }
    return out;
}

ExpPoly ExpPoly::substitute_zero(VarId var) const {
    const int vi = index_of(var);
    if (vi < 0) throw BadLimit("substitute_zero: variable mu_" + std::to_string(var) + " not live");
    std::vector<VarId> out_vars = vars_;
    out_vars.erase(out_vars.begin() + vi);
    ExpPoly out(out_vars);
    for (const auto& [key, coeff] : terms_) {
        if (key.powers[vi] > 0) continue;
        std::vector<int> pw = key.powers;
        pw.erase(pw.begin() + vi);
        std::vector<Rational> rt = key.rates;
        rt.erase(rt.begin() + vi);
        out.add_term(std::move(pw), std::move(rt), coeff);
    }
    return out;
}

Rational ExpPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("ExpPoly::evaluate: point length mismatch");
    Rational total(0);
    for (const auto& [key, coeff] : terms_) {
        for (const auto& r : key.rates)
            if (!r.is_zero())
                throw RationalExpUnsupported(
                    "ExpPoly::evaluate: exact evaluation needs all rates zero");
        Rational v = coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (key.powers[i] > 0) v *= point[i].pow_int(key.powers[i]);
        total += v;
    }
    return total;
}

double ExpPoly::evaluate_float(const std::vector<double>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("ExpPoly::evaluate_float: point length mismatch");
    double total = 0.0;
    for (const auto& [key, coeff] : terms_) {
        double v = coeff.to_double();
        double exponent = 0.0;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (int k = 0; k < key.powers[i]; ++k) v *= point[i];
            if (!key.rates[i].is_zero()) exponent -= key.rates[i].to_double() * point[i];
        }
        total += v * std::exp(exponent);
    }
    return total;
}

std::string ExpPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_line = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first_line) os << '\n';
        first_line = false;
        os << coeff.str();
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (key.powers[i] == 0) continue;
            os << " * mu_" << vars_[i];
            if (key.powers[i] > 1) os << '^' << key.powers[i];
        }
        bool any_rate = false;
        for (const auto& r : key.rates)
            if (!r.is_zero()) any_rate = true;
        if (any_rate) {
            os << " * exp(";
            bool first_rate = true;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (key.rates[i].is_zero()) continue;
                os << (first_rate ? "-" : " - ") << key.rates[i].str() << "*mu_" << vars_[i];
                first_rate = false;
            }
            os << ')';
        }
    }
    return os.str();
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// "mu_3^2" -> (3, 2); "mu_3" -> (3, 1)
std::pair<VarId, int> parse_power_factor(const std::string& tok) {
    if (tok.rfind("mu_", 0) != 0)
        throw std::invalid_argument("ExpPoly::parse: expected mu_<i>, got '" + tok + "'");
    const auto caret = tok.find('^');
    VarId v = std::stoi(tok.substr(3, caret == std::string::npos ? std::string::npos : caret - 3));
    int p = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    return {v, p};
}

}  // namespace

ExpPoly ExpPoly::parse(std::vector<VarId> vars, std::string_view text) {
    ExpPoly out(std::move(vars));
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line == "0") continue;

        // split on top-level " * " (never inside exp(...))
        std::vector<std::string> factors;
        std::size_t depth = 0, start = 0;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '(') ++depth;
            else if (line[i] == ')') --depth;
            else if (line[i] == '*' && depth == 0) {
                factors.push_back(trim(line.substr(start, i - start)));
                start = i + 1;
            }
        }
        factors.push_back(trim(line.substr(start)));

        Rational coeff = Rational::parse(factors.at(0));
        std::vector<int> powers(out.vars_.size(), 0);
        std::vector<Rational> rates(out.vars_.size(), Rational(0));
        for (std::size_t f = 1; f < factors.size(); ++f) {
            const std::string& tok = factors[f];
            if (tok.rfind("exp(", 0) == 0) {
                std::string body = tok.substr(4, tok.size() - 5);
                // entries look like "-c*mu_i", joined with " - "
                std::size_t pos = 0;
                while (pos < body.size()) {
                    auto next = body.find(" - ", pos);
                    std::string entry = trim(body.substr(pos, next == std::string::npos
                                                                  ? std::string::npos
                                                                  : next - pos));
                    pos = next == std::string::npos ? body.size() : next + 3;
                    if (entry.empty()) continue;
                    if (entry[0] == '-') entry = trim(entry.substr(1));
                    const auto star = entry.find('*');
                    if (star == std::string::npos)
                        throw std::invalid_argument("ExpPoly::parse: bad exp entry '" + entry + "'");
                    Rational rate = Rational::parse(entry.substr(0, star));
                    auto [v, p] = parse_power_factor(trim(entry.substr(star + 1)));
                    if (p != 1)
                        throw std::invalid_argument("ExpPoly::parse: nonlinear exponent argument");
                    const int idx = out.index_of(v);
                    if (idx < 0) throw std::invalid_argument("ExpPoly::parse: unknown variable");
                    rates[idx] += rate;
                }
            } else {
                auto [v, p] = parse_power_factor(tok);
                const int idx = out.index_of(v);
                if (idx < 0) throw std::invalid_argument("ExpPoly::parse: unknown variable");
                powers[idx] += p;
            }
        }
        out.add_term(std::move(powers), std::move(rates), std::move(coeff));
    }
    return out;
}

int smallest_degree(const ExpPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("smallest_degree: zero polynomial");
    if (!p.is_pure_polynomial())
        throw std::invalid_argument("smallest_degree: polynomial has exponential factors");
    int best = -1;
    p.for_each_term([&](const ExpTermView& t) {
        const int deg = std::accumulate(t.powers.begin(), t.powers.end(), 0);
        if (best < 0 || deg < best) best = deg;
    });
    return best;
}

}  // namespace wishart
