#include <doctest.h>

#include "wishart/joint_pdf.hpp"

using namespace wishart;

TEST_CASE("eigen_vars lists 1..min(N,M)") {
    CHECK(eigen_vars(Dimensions(3, 2)) == std::vector<VarId>{1, 2});
    CHECK(eigen_vars(Dimensions(2, 3)) == std::vector<VarId>{1, 2});
    CHECK(eigen_vars(Dimensions(1, 4)) == std::vector<VarId>{1});
    CHECK_THROWS_AS(Dimensions(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Dimensions(2, -1), std::invalid_argument);
}

TEST_CASE("squared difference expands and is symmetric") {
    const std::vector<VarId> v{1, 2};
    const ExpPoly expected = ExpPoly::monomial(v, {2, 0}) +
                             ExpPoly::monomial(v, {1, 1}, Rational(-2)) +
                             ExpPoly::monomial(v, {0, 2});
    CHECK(squared_difference(v, 1, 2) == expected);
    CHECK(squared_difference(v, 2, 1) == expected);
}

TEST_CASE("density polynomial for small configurations") {
    // single eigenvalue, square channel: no prefactor, no pairs
    CHECK(build_psi(Dimensions(1, 1)) == ExpPoly::constant({1}, Rational(1)));

    // X=2, Y=1: mu_1
    CHECK(build_psi(Dimensions(2, 1)) == ExpPoly::monomial({1}, {1}));

    // square 2x2: just the squared difference
    CHECK(build_psi(Dimensions(2, 2)) == squared_difference({1, 2}, 1, 2));

    // X=3, Y=2: mu1 mu2 (mu1 - mu2)^2, expanded by hand
    const std::vector<VarId> v{1, 2};
    const ExpPoly expected = ExpPoly::monomial(v, {3, 1}) +
                             ExpPoly::monomial(v, {2, 2}, Rational(-2)) +
                             ExpPoly::monomial(v, {1, 3});
    CHECK(build_psi(Dimensions(3, 2)) == expected);
    CHECK(build_psi(Dimensions(2, 3)) == expected);  // only X, Y matter
}

TEST_CASE("joint density carries e^{-sum mu}") {
    CHECK(build_joint_pdf(Dimensions(1, 1), true) ==
          ExpPoly::exponential({1}, {Rational(1)}));
    CHECK(build_joint_pdf(Dimensions(2, 2), false) ==
          build_psi(Dimensions(2, 2)) *
              ExpPoly::exponential({1, 2}, {Rational(1), Rational(1)}));
}

TEST_CASE("ordered-domain integral of the unnormalized density") {
    // hand values: the (X,1) cases are plain gamma integrals
    CHECK(normalization_constant(Dimensions(1, 1)) == Rational(1));
    CHECK(normalization_constant(Dimensions(2, 1)) == Rational(1));
    CHECK(normalization_constant(Dimensions(3, 1)) == Rational(2));
    CHECK(normalization_constant(Dimensions(4, 1)) == Rational(6));
    CHECK(normalization_constant(Dimensions(2, 2)) == Rational(1));
    CHECK(normalization_constant(Dimensions(3, 2)) == Rational(2));
    CHECK(normalization_constant(Dimensions(4, 2)) == Rational(12));
    CHECK(normalization_constant(Dimensions(3, 3)) == Rational(4));
    CHECK(normalization_constant(Dimensions(4, 3)) == Rational(24));
    CHECK(normalization_constant(Dimensions(4, 4)) == Rational(144));
}

TEST_CASE("normalized density integrates to exactly 1") {
    for (const auto& [n, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
        const Dimensions dims(n, m);
        CHECK(integrate_ordered_simplex(build_joint_pdf(dims, true), dims) == Rational(1));
    }
}

TEST_CASE("sum of eigenvalues is chi-square shaped") {
    // E[e^{-g sum mu}] = (1+g)^{-NM}; with rates 1+g the raw integral is
    // Z * (1+g)^{-NM}
    const Dimensions dims(2, 2);
    const Rational g(3);
    const ExpPoly integrand =
        build_psi(dims) *
        ExpPoly::exponential({1, 2}, {Rational(1) + g, Rational(1) + g});
    CHECK(integrate_ordered_simplex(integrand, dims) ==
          normalization_constant(dims) * Rational(1, 256));
}

TEST_CASE("simplex integration validates its variable list") {
    CHECK_THROWS_AS(
        (void)integrate_ordered_simplex(ExpPoly::constant({1}, Rational(1)), Dimensions(2, 2)),
        std::invalid_argument);
}
