#include <doctest.h>

#include <cmath>

#include "wishart/errors.hpp"
#include "wishart/exp_poly.hpp"

using namespace wishart;

namespace {

const std::vector<VarId> v12{1, 2};

ExpPoly mono(std::vector<int> pw, Rational c = Rational(1)) {
    return ExpPoly::monomial(v12, std::move(pw), std::move(c));
}

}  // namespace

TEST_CASE("factories and zero") {
    CHECK(ExpPoly(v12).is_zero());
    CHECK(ExpPoly::constant(v12, Rational(0)).is_zero());
    CHECK_FALSE(ExpPoly::constant(v12, Rational(3)).is_zero());
    CHECK(ExpPoly::constant(v12, Rational(3)).term_count() == 1);
    CHECK(mono({2, 1}).term_count() == 1);
}

TEST_CASE("canonical form merges and cancels") {
    const ExpPoly p = mono({1, 0}) + mono({0, 2});
    CHECK((p - p).is_zero());
    CHECK(p + mono({1, 0}, Rational(-1)) == mono({0, 2}));
    CHECK((mono({1, 0}) + mono({1, 0})) == mono({1, 0}, Rational(2)));
    CHECK(-(-p) == p);
    CHECK(p.scaled(Rational(2)) == p + p);
    CHECK(p.scaled(Rational(0)).is_zero());
}

TEST_CASE("ring laws on concrete polynomials") {
    const ExpPoly a = mono({1, 0}) + mono({0, 1}, Rational(2, 3));
    const ExpPoly b = mono({2, 1}, Rational(-1)) + ExpPoly::constant(v12, Rational(5));
    const ExpPoly c = ExpPoly::exponential(v12, {Rational(1), Rational(0)}, Rational(1, 2)) +
                      mono({0, 3});
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("exponential factors multiply by adding rates") {
    const auto e1 = ExpPoly::exponential(v12, {Rational(1), Rational(0)});
    const auto e2 = ExpPoly::exponential(v12, {Rational(2), Rational(1, 2)});
    CHECK(e1 * e2 == ExpPoly::exponential(v12, {Rational(3), Rational(1, 2)}));
}

TEST_CASE("serialization round trip") {
    const ExpPoly p = mono({3, 0}, Rational(1, 3)) + mono({1, 2}, Rational(-2)) +
                      ExpPoly::exponential(v12, {Rational(5, 2), Rational(1)}, Rational(7)) *
                          mono({0, 1});
    CHECK(ExpPoly::parse(v12, p.to_string()) == p);
    CHECK(ExpPoly(v12).to_string() == "0");
    CHECK(ExpPoly::parse(v12, "0").is_zero());
}

TEST_CASE("printed form is deterministic") {
    // term order is fixed by (powers, rates), so mu_2 sorts before mu_1 here
    const ExpPoly p = mono({1, 0}) + mono({0, 1});
    CHECK(p.to_string() == "1 * mu_2\n1 * mu_1");
    CHECK(mono({3, 0}, Rational(1, 3)).to_string() == "1/3 * mu_1^3");
    const ExpPoly q =
        ExpPoly::exponential(v12, {Rational(2), Rational(1, 2)}, Rational(-1)) * mono({1, 0});
    CHECK(q.to_string() == "-1 * mu_1 * exp(-2*mu_1 - 1/2*mu_2)");
}

TEST_CASE("pure polynomial predicate") {
    CHECK(mono({4, 1}).is_pure_polynomial());
    CHECK(ExpPoly(v12).is_pure_polynomial());
    CHECK_FALSE((mono({1, 0}) * ExpPoly::exponential(v12, {Rational(1), Rational(0)}))
                    .is_pure_polynomial());
}

TEST_CASE("exact evaluation of pure polynomials") {
    const ExpPoly p = mono({2, 0}) + mono({0, 1}, Rational(2));  // mu1^2 + 2 mu2
    CHECK(p.evaluate({Rational(3), Rational(1, 2)}) == Rational(10));
    CHECK(p.evaluate({Rational(0), Rational(0)}) == Rational(0));
    CHECK_THROWS_AS((void)p.evaluate({Rational(1)}), std::invalid_argument);
    const ExpPoly e = p * ExpPoly::exponential(v12, {Rational(1), Rational(0)});
    CHECK_THROWS_AS((void)e.evaluate({Rational(1), Rational(1)}), RationalExpUnsupported);
}

TEST_CASE("float evaluation handles exponentials") {
    const ExpPoly e =
        ExpPoly::exponential(v12, {Rational(2), Rational(0)}, Rational(3)) * mono({1, 0});
    CHECK(e.evaluate_float({0.5, 9.0}) == doctest::Approx(3 * 0.5 * std::exp(-1.0)));
    CHECK(mono({2, 1}).evaluate_float({2.0, 3.0}) == doctest::Approx(12.0));
}

TEST_CASE("substitute_zero drops the variable") {
    const ExpPoly p = mono({1, 0}) + mono({1, 1}) + mono({0, 2});
    CHECK(p.substitute_zero(1) == ExpPoly::monomial({2}, {2}));
    CHECK(p.substitute_zero(2) == ExpPoly::monomial({1}, {1}));
    CHECK_THROWS_AS((void)p.substitute_zero(9), BadLimit);
}

TEST_CASE("smallest total degree") {
    CHECK(smallest_degree(mono({3, 0}) + mono({1, 1})) == 2);
    CHECK(smallest_degree(ExpPoly::constant(v12, Rational(4))) == 0);
    CHECK_THROWS_AS((void)smallest_degree(ExpPoly(v12)), ZeroPolynomial);
    const ExpPoly e = mono({1, 0}) * ExpPoly::exponential(v12, {Rational(1), Rational(0)});
    CHECK_THROWS_AS((void)smallest_degree(e), std::invalid_argument);
}
