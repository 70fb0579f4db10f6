#include <doctest.h>

#include "wishart/errors.hpp"
#include "wishart/joint_pdf.hpp"
#include "wishart/omega_poly.hpp"

using namespace wishart;

TEST_CASE("single variable: int_0^inf e^{-w t} = 1/w") {
    const auto res = ordered_exp_integral({0});
    REQUIRE(res.laurent.size() == 1);
    CHECK(res.laurent.at(-1) == Rational(1));
    CHECK(res.leading_exponent == 1);
    CHECK(res.leading_coeff == Rational(1));
    CHECK(res.evaluate(Rational(2)) == Rational(1, 2));
}

TEST_CASE("two plain exponentials over the ordered wedge give 1/(2 w^2)") {
    const auto res = ordered_exp_integral({0, 0});
    REQUIRE(res.laurent.size() == 1);
    CHECK(res.laurent.at(-2) == Rational(1, 2));
    CHECK(res.leading_exponent == 2);
}

TEST_CASE("theta_1 factor shifts the exponent: 3/(4 w^3)") {
    const auto res = ordered_exp_integral({1, 0});
    REQUIRE(res.laurent.size() == 1);
    CHECK(res.laurent.at(-3) == Rational(3, 4));
    CHECK(res.leading_exponent == 3);
    CHECK(res.leading_coeff == Rational(3, 4));
}

TEST_CASE("the single-term collapse holds for a lopsided monomial") {
    const auto res = ordered_exp_integral({4, 0, 3});
    REQUIRE(res.laurent.size() == 1);
    CHECK(res.leading_exponent == 3 + 7);
    CHECK(res.leading_coeff > Rational(0));
}

TEST_CASE("agrees with numeric-rate integration at pinned omega") {
    for (const std::vector<int>& beta :
         {std::vector<int>{2, 1}, std::vector<int>{0, 2, 1}, std::vector<int>{3}}) {
        const int k = static_cast<int>(beta.size());
        std::vector<VarId> vars(k);
        for (int i = 0; i < k; ++i) vars[i] = i + 1;
        const auto res = ordered_exp_integral(beta);
        for (int w : {1, 2, 5}) {
            const ExpPoly numeric =
                ExpPoly::monomial(vars, beta) *
                ExpPoly::exponential(vars, std::vector<Rational>(k, Rational(w)));
            CHECK(res.evaluate(Rational(w)) ==
                  integrate_ordered_simplex(numeric, Dimensions(k, k)));
        }
    }
}

TEST_CASE("omega ring arithmetic keeps canonical form") {
    const std::vector<VarId> v{1};
    OmegaPoly a(v);
    a.add_term(-1, {2}, {1}, Rational(3));
    OmegaPoly b(v);
    b.add_term(-1, {2}, {1}, Rational(-3));
    CHECK((a + b).is_zero());

    const OmegaPoly m = OmegaPoly::monomial(v, {1}, Rational(2));
    CHECK((m * m) == OmegaPoly::monomial(v, {2}, Rational(4)));
    CHECK(m != a);
}

TEST_CASE("integration against k*omega rates lands in the omega exponent") {
    // int_0^inf t e^{-2 w t} dt = 1/(4 w^2)
    const std::vector<VarId> v{1};
    OmegaPoly p(v);
    p.add_term(0, {1}, {2}, Rational(1));
    const OmegaPoly done = p.integrate(1, Limit::zero(), Limit::infinity());
    const auto laurent = done.laurent();
    REQUIRE(laurent.size() == 1);
    CHECK(laurent.at(-2) == Rational(1, 4));
}

TEST_CASE("laurent extraction requires all variables integrated") {
    const OmegaPoly live = OmegaPoly::monomial({1}, {1});
    CHECK_THROWS_AS((void)live.laurent(), std::invalid_argument);
}

TEST_CASE("zero omega-rate against infinity diverges") {
    const OmegaPoly flat = OmegaPoly::monomial({1}, {0});
    CHECK_THROWS_AS((void)flat.integrate(1, Limit::zero(), Limit::infinity()),
                    DivergentIntegral);
}

TEST_CASE("finite wedge integration stays polynomial in the outer variable") {
    // int_0^{t1} t2^2 e^{-w t2} dt2 evaluated then pushed through t1
    std::vector<VarId> v{1, 2};
    OmegaPoly p(v);
    p.add_term(0, {0, 2}, {0, 1}, Rational(1));
    const OmegaPoly inner = p.integrate(2, Limit::zero(), Limit::variable(1));
    // remaining variable must be t1 only
    CHECK(inner.vars() == std::vector<VarId>{1});
    CHECK_FALSE(inner.is_zero());
}

TEST_CASE("ordered integral validates the variable list") {
    OmegaPoly skewed(std::vector<VarId>{2});
    skewed.add_term(0, {0}, {1}, Rational(1));
    CHECK_THROWS_AS((void)ordered_omega_integral(skewed), std::invalid_argument);
}
