import random
from fractions import Fraction

import pytest

from helpers import cofactor_det, outer, rand_int_matrix, rand_rational_matrix, rand_vector
from joinspectra import Graph
from joinspectra.errors import DomainError, ShapeError
from joinspectra.matrices import (
    RationalMatrix,
    charpoly,
    charpoly_and_adjugate,
    determinant,
    dot,
    inverse,
    poly_det,
    ratfun_det,
)
from joinspectra.polynomials import Polynomial, RationalFunction

X = Polynomial.x()


def test_construction_and_shape_errors():
    m = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert m[0, 1] == 2
    assert m.trace() == 5
    with pytest.raises(ShapeError):
        RationalMatrix(2, 2, [1, 2, 3])
    with pytest.raises(ShapeError):
        RationalMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeError):
        charpoly(RationalMatrix(1, 2, [1, 2]))


def test_matrix_algebra():
    a = RationalMatrix.from_rows([[0, 1], [1, 0]])
    i = RationalMatrix.identity(2)
    assert a @ a == i
    assert (a + a) == a * 2
    assert a.transpose() == a
    assert a.mat_vec((Fraction(1), Fraction(2))) == (Fraction(2), Fraction(1))
    assert a.is_symmetric()
    assert not RationalMatrix.from_rows([[0, 1], [0, 0]]).is_symmetric()


def test_charpoly_trivial_cases():
    phi, adj = charpoly_and_adjugate(RationalMatrix(1, 1, [0]))
    assert phi == X
    assert adj == (RationalMatrix.identity(1),)
    phi0, adj0 = charpoly_and_adjugate(RationalMatrix(0, 0, []))
    assert phi0 == Polynomial.one()
    assert adj0 == ()


def test_charpoly_small_graphs():
    assert charpoly(Graph.path(3).adjacency()) == X**3 - 2 * X
    star = Graph(4, [(0, 2), (1, 2), (2, 3)])
    assert charpoly(star.adjacency()) == X**4 - 3 * X**2


def test_charpoly_rational_entries():
    m = RationalMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(2)]])
    phi = charpoly(m)
    # det(xI - M) evaluated at a few rational points vs cofactor expansion
    for r in (0, 1, Fraction(-3, 2)):
        shifted = [
            [Fraction(r) - m[0, 0], -m[0, 1]],
            [-m[1, 0], Fraction(r) - m[1, 1]],
        ]
        assert phi(Fraction(r)) == cofactor_det(shifted)


def _poly_entries(m: RationalMatrix) -> list[list[Polynomial]]:
    return [[Polynomial.constant(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def test_adjugate_identity_exact():
    rng = random.Random(2)
    for _ in range(25):
        n = rng.randint(1, 6)
        m = rand_int_matrix(rng, n) if rng.random() < 0.7 else rand_rational_matrix(rng, n)
        phi, adj = charpoly_and_adjugate(m)
        # (xI - M) @ B(x) == phi * I, coefficient for coefficient
        bx = [[Polynomial([adj[p][i, j] for p in range(n)]) for j in range(n)] for i in range(n)]
        prod = [[Polynomial() for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = X * bx[i][j]
                for l in range(n):
                    acc -= Polynomial.constant(m[i, l]) * bx[l][j]
                prod[i][j] = acc
        for i in range(n):
            for j in range(n):
                assert prod[i][j] == (phi if i == j else Polynomial())


def test_determinant_vs_cofactor():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = rand_rational_matrix(rng, n)
        assert determinant(m) == cofactor_det(m.to_lists())


def test_inverse():
    rng = random.Random(4)
    found = 0
    while found < 15:
        n = rng.randint(1, 5)
        m = rand_int_matrix(rng, n)
        if determinant(m) == 0:
            continue
        found += 1
        assert m @ inverse(m) == RationalMatrix.identity(n)
    with pytest.raises(DomainError):
        inverse(RationalMatrix(2, 2, [1, 1, 1, 1]))


def test_matrix_determinant_lemma():
    # det(A + u v^T) == (1 + v^T A^{-1} u) det(A), exactly
    rng = random.Random(9)
    checked = 0
    while checked < 25:
        n = rng.randint(1, 5)
        a = rand_int_matrix(rng, n)
        det_a = determinant(a)
        if det_a == 0:
            continue
        u, v = rand_vector(rng, n), rand_vector(rng, n)
        lhs = determinant(a + outer(u, v))
        rhs = (1 + dot(v, inverse(a).mat_vec(u))) * det_a
        assert lhs == rhs
        checked += 1


def test_poly_det_examples():
    one = RationalFunction.one()
    eye = [[one if i == j else RationalFunction.zero() for j in range(3)] for i in range(3)]
    assert ratfun_det(eye) == one
    m = [[X, Polynomial.constant(-1)], [Polynomial.constant(-1), X]]
    assert poly_det(m) == X**2 - 1
    assert poly_det([]) == Polynomial.one()


def test_poly_det_vs_cofactor():
    rng = random.Random(6)
    for _ in range(30):
        k = rng.randint(1, 4)
        rows = [
            [Polynomial([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]) for _ in range(k)]
            for _ in range(k)
        ]
        assert poly_det(rows) == cofactor_det(rows)


def test_poly_det_needs_pivot_search():
    # leading zero pivot forces a row swap (sign flip)
    rows = [
        [Polynomial(), X],
        [X, Polynomial()],
    ]
    assert poly_det(rows) == -(X**2)
    singular = [[X, X], [X, X]]
    assert poly_det(singular).is_zero


def test_ratfun_det_vs_cofactor():
    rng = random.Random(7)
    for _ in range(15):
        k = rng.randint(1, 3)
        rows = []
        for _ in range(k):
            row = []
            for _ in range(k):
                num = Polynomial([rng.randint(-3, 3) for _ in range(rng.randint(1, 2))])
                den = Polynomial([rng.randint(-2, 2) for _ in range(rng.randint(0, 1))] + [1])
                row.append(RationalFunction(num, den))
            rows.append(row)
        want = cofactor_det(rows)
        assert ratfun_det(rows) == want


def test_fixture_coupling_determinant_identity():
    # the 3x3 coupled matrix with diagonal 1/resolvent and off-diagonal -rho,
    # multiplied through by all block charpolys and resolvents, must expand to
    # the known 10-vertex join charpoly
    from joinspectra.fixtures import mixed_join_charpoly_factors, mixed_join_resolvents, product

    gammas = [RationalFunction(r.num, r.den) for r in mixed_join_resolvents()]
    phis = [X**3 - 2 * X, X**4 - 3 * X**2, X**3 - X]
    rho = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    rows = [
        [
            1 / gammas[i] if i == j else RationalFunction(Polynomial.constant(-rho[i][j]))
            for j in range(3)
        ]
        for i in range(3)
    ]
    det = ratfun_det(rows)
    total = det
    for phi, gamma in zip(phis, gammas):
        total = total * RationalFunction(phi) * gamma
    expected = product(mixed_join_charpoly_factors())
    assert total == RationalFunction(expected)
