#include "wishart/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wishart {

namespace {

mpz_class mpz_from_ll(long long n) {
    // mpz_class has no long long constructor on LP64-unfriendly paths; go via string.
    if (n >= -2147483647LL && n <= 2147483647LL) return mpz_class(static_cast<long>(n));
    return mpz_class(std::to_string(n));
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long long n) : v_(mpz_from_ll(n)) {}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_from_ll(num), mpz_from_ll(den));
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // strip surrounding whitespace
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("Rational::parse: empty input");
    s = s.substr(b, e - b + 1);

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse(s.substr(0, slash));
        Rational den = parse(s.substr(slash + 1));
        return num / den;
    }

    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }

    // split off a decimal exponent if present
    long exp10 = 0;
    if (const auto ep = s.find_first_of("eE", pos); ep != std::string::npos) {
        const std::string es = s.substr(ep + 1);
        if (es.empty()) throw std::invalid_argument("Rational::parse: bad exponent in '" + s + "'");
        std::size_t idx = 0;
        try {
            exp10 = std::stol(es, &idx);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational::parse: bad exponent in '" + s + "'");
        }
        if (idx != es.size()) throw std::invalid_argument("Rational::parse: bad exponent in '" + s + "'");
        s = s.substr(0, ep);
    }

    std::string intpart, fracpart;
    if (const auto dot = s.find('.', pos); dot != std::string::npos) {
        intpart = s.substr(pos, dot - pos);
        fracpart = s.substr(dot + 1);
    } else {
        intpart = s.substr(pos);
    }
    if (intpart.empty() && fracpart.empty())
        throw std::invalid_argument("Rational::parse: no digits in '" + std::string(text) + "'");
    if (!intpart.empty() && !all_digits(intpart))
        throw std::invalid_argument("Rational::parse: bad digits in '" + std::string(text) + "'");
    if (!fracpart.empty() && !all_digits(fracpart))
        throw std::invalid_argument("Rational::parse: bad digits in '" + std::string(text) + "'");

    mpz_class mantissa(intpart.empty() ? std::string("0") : intpart);
    for (char c : fracpart) {
        mantissa *= 10;
        mantissa += c - '0';
    }
    long shift = exp10 - static_cast<long>(fracpart.size());

    mpq_class q(mantissa);
    if (shift > 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        q *= scale;
    } else if (shift < 0) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        q /= mpq_class(scale);
    }
    if (negative) q = -q;
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational::pow_int: 0 to a negative power");
        return Rational(0);
    }
    const unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    mpq_class r(num, den);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace wishart
