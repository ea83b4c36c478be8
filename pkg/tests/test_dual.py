from fractions import Fraction

import pytest

from copoisson.algebra import DegreeBoundError, Monomial, Poly, monomials, splittings
from copoisson.dual import (
    SeriesElement,
    dual_bracket,
    dual_mul,
    pairing,
    verify_main5_roundtrip,
)
from copoisson.structures import (
    BracketTable,
    copoisson_from_series,
    itable_from_consts,
    linear_poisson,
    make_copoisson,
)

from conftest import nambu_bracket, random_poly, so3_consts


def mono(*exps):
    return Monomial(exps)


def test_pairing_orthogonality():
    one = SeriesElement.from_poly(Poly.constant(2, 1), 3)
    assert pairing(one, Poly.constant(2, 1)) == 1
    X1 = SeriesElement.variable(2, 0, 3)
    assert pairing(X1, Poly.from_monomial(mono(0, 1))) == 0
    X1sq = SeriesElement({mono(2, 0): Fraction(1)}, 3)
    assert pairing(X1sq, Poly.from_monomial(mono(2, 0))) == 2  # 2! weight


def test_gram_matrix_diagonal():
    from copoisson.algebra import factorial
    N = 3
    for a in monomials(2, N):
        for b in monomials(2, N):
            f = SeriesElement({b: Fraction(1)}, N)
            val = pairing(f, Poly.from_monomial(a))
            assert val == (factorial(a) if a == b else 0)


def test_dual_mul_is_convolution(rng):
    # <f*g, a> = sum <f, a1> <g, a2>
    N = 3
    for _ in range(5):
        f = SeriesElement.from_poly(random_poly(rng, 2, N), N)
        g = SeriesElement.from_poly(random_poly(rng, 2, N), N)
        prod = dual_mul(f, g)
        for a in monomials(2, N):
            conv = Fraction(0)
            for c, (a1, a2) in splittings(a, 2):
                conv += c * pairing(f, Poly.from_monomial(a1)) * pairing(
                    g, Poly.from_monomial(a2))
            assert pairing(prod, Poly.from_monomial(a)) == conv


def test_dual_mul_examples():
    N = 4
    X1 = SeriesElement.variable(2, 0, N)
    X2 = SeriesElement.variable(2, 1, N)
    assert dual_mul(X1, X1) == SeriesElement({mono(2, 0): Fraction(1)}, N)
    assert dual_mul(X1, X2) == SeriesElement({mono(1, 1): Fraction(1)}, N)
    one = SeriesElement.from_poly(Poly.constant(2, 1), N)
    assert dual_mul(one, X1) == X1


def test_truncation_mismatch_rejected():
    f = SeriesElement.variable(2, 0, 3)
    g = SeriesElement.variable(2, 1, 4)
    with pytest.raises(DegreeBoundError):
        dual_mul(f, g)


def test_dual_bracket_skew_and_recovery():
    N = 4
    B = BracketTable(d=3, f=dict(linear_poisson(so3_consts()).f),
                     truncation_degree=N)
    q = make_copoisson(copoisson_from_series(B))
    X = [SeriesElement.variable(3, i, N) for i in range(3)]
    for i in range(3):
        assert dual_bracket(q, X[i], X[i]).is_zero()
        for j in range(i + 1, 3):
            got = dual_bracket(q, X[i], X[j])
            assert got == SeriesElement.from_poly(B.entry(i, j), N)
            assert dual_bracket(q, X[j], X[i]) == -got


def test_dual_bracket_leibniz(rng):
    N = 3
    B = nambu_bracket(rng, truncation=N)
    q = make_copoisson(copoisson_from_series(B))
    for _ in range(5):
        f = SeriesElement.from_poly(random_poly(rng, 3, N), N)
        g = SeriesElement.from_poly(random_poly(rng, 3, N), N)
        h = SeriesElement.from_poly(random_poly(rng, 3, N), N)
        lhs = dual_bracket(q, dual_mul(f, g), h)
        rhs = dual_mul(f, dual_bracket(q, g, h)) + dual_mul(
            dual_bracket(q, f, h), g)
        assert lhs == rhs


def test_verify_main5_so3():
    N = 4
    B = BracketTable(d=3, f=dict(linear_poisson(so3_consts()).f),
                     truncation_degree=N)
    rep = verify_main5_roundtrip(B, N)
    assert rep.passed


def test_verify_main5_zero_bracket():
    B = BracketTable(d=2, f={}, truncation_degree=3)
    assert verify_main5_roundtrip(B, 3).passed


def test_verify_main5_jacobi_precondition():
    bad = BracketTable(d=3, f={
        (0, 1): Poly.from_monomial(mono(0, 0, 1)),
        (1, 2): Poly.from_monomial(mono(0, 0, 1)),
        (0, 2): Poly.from_monomial(mono(0, 1, 0), -1),
    }, truncation_degree=3)
    rep = verify_main5_roundtrip(bad, 3)
    assert not rep.passed
    assert "precondition" in rep.note
