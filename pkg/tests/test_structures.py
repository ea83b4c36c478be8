from fractions import Fraction

import pytest

from copoisson.algebra import Monomial, Poly, Tensor2, monomials
from copoisson.structures import (
    BracketTable,
    ITable,
    SkewMatrix,
    StructConsts,
    copoisson_from_series,
    is_rational,
    itable_from_consts,
    linear_poisson,
    make_copoisson,
    poisson_bracket,
    series_from_copoisson,
    tensor_copoisson,
    tensor_poisson,
)
from copoisson.checks import (
    check_cojacobi,
    check_coleibniz,
    check_counit_kill,
    check_skew,
    cojacobi_affordable_degree,
)

from conftest import random_bracket, random_itable, random_poly, so3_consts


def mono(*exps):
    return Monomial(exps)


def test_skew_matrix_validation():
    SkewMatrix.from_rows([[0, 1], [-1, 0]])
    with pytest.raises(ValueError):
        SkewMatrix.from_rows([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        SkewMatrix.from_rows([[0, 1], [1, 0]])
    m = SkewMatrix.from_upper(3, {(0, 2): Fraction(5)})
    assert m[0, 2] == 5 and m[2, 0] == -5 and m[1, 1] == 0
    with pytest.raises(ValueError):
        SkewMatrix.from_upper(3, {(2, 0): Fraction(1)})


def test_itable_to_tensor():
    I = ITable(d=2, domain_degree_bound=2, rows={
        mono(1, 0): SkewMatrix.from_upper(2, {(0, 1): Fraction(3)})})
    t = I(mono(1, 0))
    x, y = mono(1, 0), mono(0, 1)
    assert t == Tensor2.from_pair(x, y, 3) + Tensor2.from_pair(y, x, -3)
    assert I(mono(0, 1)).is_zero()


def test_poisson_bracket_so3():
    B = linear_poisson(so3_consts())
    x1 = Poly.from_monomial(mono(1, 0, 0))
    x2 = Poly.from_monomial(mono(0, 1, 0))
    x3 = Poly.from_monomial(mono(0, 0, 1))
    assert poisson_bracket(B, x1, x2) == x3
    assert poisson_bracket(B, x2, x3) == x1
    assert poisson_bracket(B, x3, x1) == x2
    f = x1 * x2 + x3
    assert poisson_bracket(B, f, f).is_zero()


def test_poisson_bracket_leibniz(rng):
    for _ in range(10):
        d = rng.choice([2, 3])
        B = random_bracket(rng, d, 2)
        f = random_poly(rng, d, 2)
        g = random_poly(rng, d, 2)
        h = random_poly(rng, d, 2)
        lhs = poisson_bracket(B, f * g, h)
        rhs = f * poisson_bracket(B, g, h) + poisson_bracket(B, f, h) * g
        assert lhs == rhs


def test_poisson_bracket_simple():
    # {x^2, y} = 2x with f_12 = 1 on k[x,y]
    B = BracketTable(d=2, f={(0, 1): Poly.constant(2, 1)})
    assert poisson_bracket(
        B, Poly.from_monomial(mono(2, 0)), Poly.from_monomial(mono(0, 1))
    ) == Poly.from_monomial(mono(1, 0), 2)


def test_series_mode_truncates():
    B = BracketTable(d=2, f={(0, 1): Poly.from_monomial(mono(2, 0))},
                     truncation_degree=2)
    v = poisson_bracket(B, Poly.from_monomial(mono(1, 0)),
                        Poly.from_monomial(mono(0, 1)))
    assert v == Poly.from_monomial(mono(2, 0))
    w = poisson_bracket(B, Poly.from_monomial(mono(2, 0)),
                        Poly.from_monomial(mono(0, 1)))
    assert w.is_zero()  # 2 x^3 is beyond the truncation


def test_linear_poisson_assembly():
    c = StructConsts(d=3, lam={(0, 1, 0): Fraction(1)})
    B = linear_poisson(c)
    assert B.entry(0, 1) == Poly.from_monomial(mono(1, 0, 0))
    assert B.entry(0, 2).is_zero() and B.entry(1, 2).is_zero()
    assert B.entry(1, 0) == -B.entry(0, 1)


def test_make_copoisson_always_skew_coleibniz(rng):
    # forward direction of the characterization, on random tables
    for _ in range(8):
        d = rng.choice([2, 3])
        M = 3
        I = random_itable(rng, d, M)
        q = make_copoisson(I)
        assert check_skew(q, M).passed
        assert check_coleibniz(q, M).passed
        assert check_counit_kill(q, M).passed


def test_two_variable_closed_form(rng):
    # d=2: q(a) = sum l_{a1} binom-weighted (x a2 (x) y a3 - y a2 (x) x a3)
    d = 2
    I = random_itable(rng, d, 4, density=0.8)
    q = make_copoisson(I)
    x, y = mono(1, 0), mono(0, 1)
    from copoisson.algebra import splittings
    for m in monomials(d, 4):
        expect = Tensor2()
        for c, (a1, rest) in splittings(m, 2):
            lam = I.matrix(a1)[0, 1]
            if not lam:
                continue
            for c2, (a2, a3) in splittings(rest, 2):
                w = c * c2 * lam
                expect = expect + Tensor2.from_pair(x * a2, y * a3, w)
                expect = expect + Tensor2.from_pair(y * a2, x * a3, -w)
        assert q(m) == expect


def test_main5_correspondence_roundtrip(rng):
    for _ in range(5):
        d = rng.choice([2, 3])
        N = 4
        B = random_bracket(rng, d, 3, truncation=N)
        I = copoisson_from_series(B)
        B2 = series_from_copoisson(I)
        assert B2.truncation_degree == N
        for i in range(d):
            for j in range(i + 1, d):
                assert B2.entry(i, j) == B.entry(i, j)
        # and the other order
        I2 = copoisson_from_series(B2)
        assert I2.rows == I.rows


def test_main5_factorial_scaling():
    B = BracketTable(d=2, f={(0, 1): Poly.from_monomial(mono(2, 0))},
                     truncation_degree=3)
    I = copoisson_from_series(B)
    assert I.matrix(mono(2, 0))[0, 1] == 2  # 2! * 1
    back = series_from_copoisson(I)
    assert back.entry(0, 1) == Poly.from_monomial(mono(2, 0))


def test_itable_from_consts_so3():
    I = itable_from_consts(so3_consts())
    assert I.domain_degree_bound == 1
    assert I.matrix(mono(0, 0, 1))[0, 1] == 1
    assert I.matrix(mono(1, 0, 0))[1, 2] == 1
    assert I.matrix(mono(0, 1, 0))[0, 2] == -1
    assert I.matrix(mono(0, 0, 0)).is_zero()


def test_is_rational():
    I0 = ITable(d=2, domain_degree_bound=3)
    assert is_rational(I0) == (True, 0)
    I1 = ITable(d=2, domain_degree_bound=3, rows={
        mono(1, 0): SkewMatrix.from_upper(2, {(0, 1): Fraction(1)})})
    assert is_rational(I1) == (True, 2)
    rows = {m: SkewMatrix.from_upper(2, {(0, 1): Fraction(1)})
            for m in monomials(2, 3)}
    Ifull = ITable(d=2, domain_degree_bound=3, rows=rows)
    assert is_rational(Ifull) == (False, None)


def test_tensor_poisson_blocks():
    BA = linear_poisson(so3_consts())
    BB = BracketTable(d=2, f={(0, 1): Poly.constant(2, 1)})
    T = tensor_poisson(BA, BB)
    assert T.d == 5
    assert T.entry(0, 1) == Poly.from_monomial(mono(0, 0, 1, 0, 0))
    assert T.entry(3, 4) == Poly.constant(5, 1)
    for i in range(3):
        for j in range(3, 5):
            assert T.entry(i, j).is_zero()


def test_tensor_copoisson_axioms(rng):
    qC = make_copoisson(random_itable(rng, 2, 3))
    qD = make_copoisson(random_itable(rng, 2, 3))
    q = tensor_copoisson(qC, qD)
    assert q.d == 4
    assert check_skew(q, 3).passed
    assert check_coleibniz(q, 3).passed
    assert check_counit_kill(q, 3).passed
    cj = cojacobi_affordable_degree(q)
    if cj >= 0:
        # both factors are d=2 cobrackets, so co-Jacobi holds on each;
        # the tensor construction preserves it
        assert check_cojacobi(q, cj).passed


def test_tensor_copoisson_one_variable_trivial():
    # with d=1 there is no skew generator 2-tensor, so both factors vanish
    qC = make_copoisson(ITable(d=1, domain_degree_bound=3))
    qD = make_copoisson(ITable(d=1, domain_degree_bound=3))
    q = tensor_copoisson(qC, qD)
    for m in monomials(2, 3):
        assert q(m).is_zero()
