from fractions import Fraction

import pytest

from copoisson.checks import check_dual_of_abcd
from copoisson.finite import (
    FinHopf,
    HopfAxiomError,
    LinearFamily,
    bracket_eval,
    brackets_from_vector,
    cocommutator_vec,
    cojacobi_residual,
    comult3_indexed,
    comult_indexed,
    group_algebra_z2,
    jacobi_residual,
    nullspace,
    quadratic_residual_family,
    qvals_from_vector,
    rref,
    solve_copoisson_family,
    solve_poisson_family,
    sweedler_h4,
)


def test_rref_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    red, pivots = rref(rows, 3)
    assert pivots == [0, 1]
    assert red == [[Fraction(1), Fraction(0), Fraction(1)],
                   [Fraction(0), Fraction(1), Fraction(1)]]
    ns = nullspace(rows, 3)
    assert ns == [(Fraction(-1), Fraction(-1), Fraction(1))]
    # every nullspace vector annihilates the rows
    for v in ns:
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, v)) == 0


def test_nullspace_deterministic_normalization():
    rows = [[1, 1, 0, 0]]
    ns = nullspace(rows, 4)
    assert len(ns) == 3
    # one leading free coordinate per basis vector, in column order
    assert ns[0][1] == 1 and ns[1][2] == 1 and ns[2][3] == 1


def test_sweedler_tables():
    H = sweedler_h4()
    ONE, G, X, GX = range(4)
    assert H.mul_vec(H.basis_vec(X), H.basis_vec(X)) == (0, 0, 0, 0)
    assert H.mul_vec(H.basis_vec(G), H.basis_vec(G)) == H.basis_vec(ONE)
    xg = H.mul_vec(H.basis_vec(X), H.basis_vec(G))
    assert xg == tuple(-v for v in H.basis_vec(GX))
    assert comult_indexed(H, X) == {(X, ONE): 1, (G, X): 1}
    assert H.antipode_vec(H.basis_vec(X)) == tuple(
        -v for v in H.basis_vec(GX))
    assert H.counit_vec(H.basis_vec(G)) == 1
    assert H.counit_vec(H.basis_vec(X)) == 0


def test_axiom_validation_rejects_bad_tables():
    H = sweedler_h4()
    mult = [[list(row) for row in plane] for plane in H.mult]
    mult[1][1][0] = Fraction(2)  # g*g = 2, breaks the unit/antipode axioms
    with pytest.raises(HopfAxiomError):
        FinHopf.create(dim=4, basis_names=H.basis_names, mult=mult,
                       unit=H.unit, comult=H.comult, counit=H.counit,
                       antipode=H.antipode)


def test_comult3_matches_iterated_comult():
    H = sweedler_h4()
    for i in range(H.dim):
        direct = comult3_indexed(H, i)
        # expand the rightmost factor instead; coassociativity says the
        # result is the same
        alt = {}
        for (a, b), w in comult_indexed(H, i).items():
            for (b1, b2), w2 in comult_indexed(H, b).items():
                for (b11, b12), w3 in comult_indexed(H, b1).items():
                    k = (a, b11, b12, b2)
                    alt[k] = alt.get(k, 0) + w * w2 * w3
        alt = {k: v for k, v in alt.items() if v}
        assert direct == alt


def test_cocommutator_nonzero_on_h4():
    H = sweedler_h4()
    assert cocommutator_vec(H, 0) == {}
    assert cocommutator_vec(H, 1) == {}
    assert cocommutator_vec(H, 2) != {}


def test_poisson_family_h4():
    H = sweedler_h4()
    fam = solve_poisson_family(H)
    assert fam.dimension == 2
    # both generators have {1,-} = 0 and satisfy Leibniz; spot-check a
    # random member against the Leibniz rule directly
    member = fam.member([Fraction(3), Fraction(-1, 2)])
    br = brackets_from_vector(H, member)
    e = H.basis_vec
    for a in range(4):
        for b in range(4):
            for c in range(4):
                ab = H.mul_vec(e(a), e(b))
                lhs = bracket_eval(H, br, ab, e(c))
                rhs_ = tuple(
                    x + y for x, y in zip(
                        H.mul_vec(e(a), bracket_eval(H, br, e(b), e(c))),
                        H.mul_vec(bracket_eval(H, br, e(a), e(c)), e(b))))
                assert lhs == rhs_
    assert solve_poisson_family(H, hopf_compat=True).dimension == 0


def test_poisson_family_shape_h4():
    # the family is spanned by {g,x} = x and {g,x} = gx (up to the induced
    # values on the other pairs)
    H = sweedler_h4()
    ONE, G, X, GX = range(4)
    fam = solve_poisson_family(H)
    for vec in fam.basis:
        br = brackets_from_vector(H, vec)
        assert br[(ONE, G)] == (0, 0, 0, 0)
        assert br[(ONE, X)] == (0, 0, 0, 0)
        assert br[(ONE, GX)] == (0, 0, 0, 0)
        gx_val = br[(G, X)]
        assert gx_val[ONE] == 0 and gx_val[G] == 0  # lands in span(x, gx)
    assert jacobi_residual(H, brackets_from_vector(H, fam.member([1, 1]))) \
        == tuple([Fraction(0)] * len(jacobi_residual(
            H, brackets_from_vector(H, fam.member([0, 0])))))


def test_copoisson_family_h4():
    H = sweedler_h4()
    ONE, G, X, GX = range(4)
    fam = solve_copoisson_family(H)
    assert fam.dimension == 2
    target = {(ONE, X): Fraction(1), (X, ONE): Fraction(-1),
              (X, G): Fraction(1), (G, X): Fraction(-1)}
    seen_x = False
    for vec in fam.basis:
        qv = qvals_from_vector(H, vec)
        assert qv[ONE] == {} and qv[G] == {}
        if qv[X]:
            # q(x) proportional to 1(x)x - x(x)1 + x(x)g - g(x)x
            assert set(qv[X]) == set(target)
            lam = qv[X][(ONE, X)]
            assert qv[X] == {k: lam * v for k, v in target.items()}
            seen_x = True
    assert seen_x
    assert solve_copoisson_family(H, hopf_compat=True).dimension == 0


def test_group_algebra_trivial_families():
    Z = group_algebra_z2()
    assert solve_poisson_family(Z, hopf_compat=True).dimension == 0
    assert solve_copoisson_family(Z).dimension == 0


def test_quadratic_residuals_h4():
    H = sweedler_h4()
    pf = solve_poisson_family(H)
    rj = quadratic_residual_family(pf, "jacobi", H)
    assert rj.is_zero()
    cf = solve_copoisson_family(H)
    rc = quadratic_residual_family(cf, "cojacobi", H)
    assert rc.is_zero()


def test_quadratic_probe_predicts_residual(rng):
    H = sweedler_h4()
    # corrupt the co-Poisson family so co-Jacobi genuinely fails, then the
    # extracted quadratic must predict the residual at random parameters
    fam = solve_copoisson_family(H)
    corrupted = LinearFamily(
        ambient_dim=fam.ambient_dim,
        basis=[fam.basis[0],
               tuple(v + w for v, w in zip(fam.basis[1], fam.basis[0]))])
    quad = quadratic_residual_family(corrupted, "cojacobi", H)
    for _ in range(20):
        params = [Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                  for _ in range(2)]
        direct = cojacobi_residual(
            H, qvals_from_vector(H, corrupted.member(params)))
        assert direct == quad.predict(params)


def test_quadratic_detects_violation():
    H = sweedler_h4()
    # a deliberately wrong family: q(g) = g(x)x - x(x)g is skew but breaks
    # the quadratic pipeline's zero-residual guarantee only if co-Jacobi
    # fails; instead corrupt with a vector mixing q(x) into q(g)
    n = H.dim
    vec = [Fraction(0)] * (n ** 3)

    def setq(i, j, k, v):
        vec[(i * n + j) * n + k] = Fraction(v)

    ONE, G, X, GX = range(4)
    setq(G, ONE, X, 1)
    setq(G, X, ONE, -1)
    setq(X, X, GX, 1)
    setq(X, GX, X, -1)
    fam = LinearFamily(ambient_dim=n ** 3, basis=[tuple(vec)])
    quad = quadratic_residual_family(fam, "cojacobi", H)
    assert not quad.is_zero()


def test_dual_of_abcd_on_family_members():
    H = sweedler_h4()
    fam = solve_copoisson_family(H)
    member = fam.member([Fraction(5), Fraction(7, 3)])
    assert check_dual_of_abcd(H, qvals_from_vector(H, member)).passed


def test_family_member_parameter_count():
    fam = LinearFamily(ambient_dim=2, basis=[(Fraction(1), Fraction(0))])
    with pytest.raises(ValueError):
        fam.member([1, 2])
