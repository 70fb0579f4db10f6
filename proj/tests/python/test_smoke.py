#!/usr/bin/env python3
"""Smoke test of the python bindings (PYTHONPATH points at the built package)."""

from fractions import Fraction

import wishart_bound as wb


def test_exact_values():
    exact, approx = wb.exact_pep(1, 1, "1", "1")
    assert exact == "1/2" and approx == 0.5
    exact, _ = wb.exact_pep(2, 2, "1,1", "1")
    assert Fraction(exact) == Fraction(1, 16)
    assert wb.normalization_constant(3, 3) == "4"
    assert wb.db_to_gamma(10.0) == "10"


def test_bound_structure():
    b = wb.bound(2, 2, "1,0")
    assert b["smallest_degree"] == 3
    assert b["selected"] == [1]
    assert b["decay_exponent"] == 4
    assert b["ledger"]["d_r"] == 3
    assert "1/3 * mu_1^3" in b["r"]
    assert wb.diversity_exponent(3, 3, "0,1,0") == 4


def test_symbolic_strings():
    assert wb.psi(2, 1) == "1 * mu_1"
    assert wb.exact_marginal(2, 2, [2]) == "2 * exp(-2*mu_2)"


def test_laurent_integral():
    res = wb.ordered_exp_integral([1, 0])
    assert res["leading_exponent"] == 3
    assert res["laurent"] == {-3: "3/4"}
    assert res["leading_coeff"] == "3/4"


def test_sampler_determinism():
    a = wb.estimate_pep(2, 2, [1.0, 1.0], 1.0, 20000, 7)
    b = wb.estimate_pep(2, 2, [1.0, 1.0], 1.0, 20000, 7, threads=3)
    assert a == b
    mean, stderr = a
    assert abs(mean - 1.0 / 16.0) < 6 * stderr
    assert stderr > 0


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok   {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
