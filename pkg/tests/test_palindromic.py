import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chm8.errors import (
    DegenerateLeadingCoefficient,
    IncoherentInput,
    NotPalindromic,
    NotUnimodular,
    ZeroAtNegativeExponent,
)
from chm8.families.systems import polynomial
from chm8.palindromic import (
    LaurentPoly,
    classify_palindrome,
    conjugate_reciprocal,
    evaluate,
    half_reduce_check,
    solve_unimodular_linear,
    solve_unimodular_quadratic,
)

(x,) = LaurentPoly.variables(1)
a, b, c, d = LaurentPoly.variables(4)
P_B = 1 + a * b + a * c + b * c - d * (a + b + c + a * b * c)

coef = st.builds(complex, st.floats(-3, 3), st.floats(-3, 3))
exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
polys2 = st.dictionaries(exps, coef, max_size=6).map(lambda t: LaurentPoly(2, t))


def test_construction_prunes_and_validates():
    f = LaurentPoly(2, {(1, 0): 1e-15, (0, 1): 2})
    assert f.terms == {(0, 1): 2}
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


def test_evaluate_examples():
    assert abs(evaluate(x * x + 2 * x + 1, [1j])) == pytest.approx(2)
    f = LaurentPoly(2, {(1, 1): 1, (0, 0): 1})
    assert abs(evaluate(f, [1j, 1j])) < 1e-15
    assert abs(evaluate(P_B, [1j] * 4)) < 1e-15
    assert evaluate(LaurentPoly.constant(3, 3), [5, 6, 7]) == 3
    with pytest.raises(ZeroAtNegativeExponent):
        evaluate(LaurentPoly(1, {(-1,): 1}), [0])


def test_arithmetic_matches_pointwise():
    f = (x + 2) * (x - 1j) ** 2 - 3 * x ** -1
    z = cmath.exp(0.3j)
    assert abs(f(z) - ((z + 2) * (z - 1j) ** 2 - 3 / z)) < 1e-13


def test_conjugate_reciprocal_examples():
    assert conjugate_reciprocal(x + 1j) == LaurentPoly(1, {(-1,): 1, (0,): -1j})
    real = 2 * a * b - 3 * c + 1
    inv = LaurentPoly(4, {(-1, -1, 0, 0): 2, (0, 0, -1, 0): -3, (0, 0, 0, 0): 1})
    assert conjugate_reciprocal(real) == inv


@given(polys2)
def test_conjugate_reciprocal_involution(f):
    assert conjugate_reciprocal(conjugate_reciprocal(f)) == f


@given(polys2, st.floats(-math.pi, math.pi), st.floats(-math.pi, math.pi))
def test_conjugate_reciprocal_on_torus(f, s, t):
    pt = [cmath.exp(1j * s), cmath.exp(1j * t)]
    assert abs(conjugate_reciprocal(f)(*pt) - f(*pt).conjugate()) < 1e-9


def _mirror_by_hand(terms, alpha):
    return {tuple(al - e for al, e in zip(alpha, ex)): co.conjugate() for ex, co in terms.items()}


def test_classify_examples():
    assert classify_palindrome(x * x + 2 * x + 1).kind == "palindromic"
    assert classify_palindrome(x * x - 1).kind == "anti_palindromic"
    assert classify_palindrome(x * x + x).kind == "neither"
    # the mirror of this polynomial, expanded by hand, is its negative
    mirror = _mirror_by_hand(P_B.terms, (1, 1, 1, 1))
    assert all(abs(mirror[e] + P_B.terms[e]) < 1e-15 for e in P_B.terms)
    cls = classify_palindrome(P_B)
    assert cls.kind == "anti_palindromic" and cls.alpha == (1, 1, 1, 1)


def test_classify_rejects_laurent():
    with pytest.raises(ValueError):
        classify_palindrome(x ** -1 + 1)


def test_half_reduce_examples():
    assert half_reduce_check(P_B, [1j] * 4) < 1e-12
    pt = [cmath.exp(1j), cmath.exp(2j), cmath.exp(3j), cmath.exp(0.7j)]
    assert half_reduce_check(P_B, pt) < 1e-10
    assert half_reduce_check(x * x + 2 * x + 1, [cmath.exp(1j)]) < 1e-12
    with pytest.raises(NotPalindromic):
        half_reduce_check(x * x + x, [1j])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-math.pi, math.pi), min_size=6, max_size=6))
def test_scaled_value_is_real_or_imaginary(angles):
    # f(x) x^(-alpha/2) is real for palindromic f, imaginary for anti-palindromic
    for name, part in (("p_E", "imag"), ("p_B", "real")):
        f = polynomial(name, 1)
        pt = [cmath.exp(1j * t) for t in angles[: f.nvars]]
        alpha = classify_palindrome(f).alpha
        scale = cmath.exp(-0.5j * sum(al * t for al, t in zip(alpha, angles)))
        assert abs(getattr(f(*pt) * scale, part)) < 1e-12


def test_linear_examples():
    assert abs(solve_unimodular_linear(1 - 1j, 1 + 1j) - (-1j)) < 1e-15
    assert abs(solve_unimodular_linear(-1j, 1j) - 1) < 1e-15
    with pytest.raises(DegenerateLeadingCoefficient):
        solve_unimodular_linear(1e-14, 1)
    with pytest.raises(IncoherentInput):
        solve_unimodular_linear(1, 2)


def test_quadratic_examples():
    r1, r2 = solve_unimodular_quadratic(1, 2, 1)
    assert abs(r1 + 1) < 1e-12 and abs(r2 + 1) < 1e-12
    with pytest.raises(NotUnimodular):
        solve_unimodular_quadratic(1, 3, 1)
    roots = sorted(solve_unimodular_quadratic(1, math.sqrt(2), 1), key=lambda z: z.imag)
    assert abs(roots[0] - cmath.exp(-3j * math.pi / 4)) < 1e-12
    assert abs(roots[1] - cmath.exp(3j * math.pi / 4)) < 1e-12
    with pytest.raises(DegenerateLeadingCoefficient):
        solve_unimodular_quadratic(0, 1, 1)
    with pytest.raises(IncoherentInput):
        solve_unimodular_quadratic(1, 1, 2)


def random_quadratic(rng, ratio):
    """Coefficients of a palindromic quadratic evaluated on the torus."""
    p2 = cmath.rect(rng.uniform(0.1, 3), rng.uniform(-math.pi, math.pi))
    u = cmath.exp(1j * rng.uniform(-math.pi, math.pi))
    return p2, ratio * abs(p2) * cmath.sqrt(u) * rng.choice([-1, 1]), p2.conjugate() * u


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0, 4))
def test_quadratic_property(seed, ratio):
    p2, p1, p0 = random_quadratic(np.random.default_rng(seed), ratio)
    if ratio <= 2:
        for r in solve_unimodular_quadratic(p2, p1, p0):
            assert abs(p2 * r * r + p1 * r + p0) < 1e-9
            assert abs(abs(r) - 1) < 1e-10
    elif ratio > 2 + 1e-6:
        with pytest.raises(NotUnimodular):
            solve_unimodular_quadratic(p2, p1, p0)
        assert all(abs(abs(r) - 1) > 1e-9 for r in np.roots([p2, p1, p0]))
