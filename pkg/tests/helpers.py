"""Shared random generators and small independent oracles for the tests."""

import random
from fractions import Fraction

from joinspectra import Graph, RationalMatrix
from joinspectra.verification import random_fraction


def rand_int_matrix(rng: random.Random, n: int, lo: int = -4, hi: int = 4) -> RationalMatrix:
    return RationalMatrix(n, n, [rng.randint(lo, hi) for _ in range(n * n)])


def rand_rational_matrix(rng: random.Random, n: int) -> RationalMatrix:
    return RationalMatrix(n, n, [random_fraction(rng) for _ in range(n * n)])


def rand_symmetric_matrix(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> RationalMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = Fraction(rng.randint(lo, hi))
            rows[i][j] = x
            rows[j][i] = x
    return RationalMatrix.from_rows(rows)


def rand_vector(rng: random.Random, n: int, integer: bool = False):
    if integer:
        return tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
    return tuple(random_fraction(rng) for _ in range(n))


def outer(u, v) -> RationalMatrix:
    n, m = len(u), len(v)
    return RationalMatrix(n, m, [u[i] * v[j] for i in range(n) for j in range(m)])


def cofactor_det(rows):
    """Independent determinant oracle: Laplace expansion along the first row.

    Works over any commutative ring whose elements support + - *.
    """
    n = len(rows)
    assert n >= 1 and all(len(r) == n for r in rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def multisets_close(a, b, tol: float) -> bool:
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol * max(1.0, abs(x)) for x, y in zip(sorted(a), sorted(b)))


def regular_graph_menu(rng: random.Random) -> Graph:
    """A random regular graph drawn from a small exactly-known family."""
    kind = rng.randrange(4)
    if kind == 0:
        return Graph.cycle(rng.randint(3, 6))
    if kind == 1:
        return Graph.complete(rng.randint(1, 5))
    if kind == 2:
        return Graph.empty(rng.randint(1, 5))
    m = rng.randint(1, 3)
    return Graph.complete_bipartite(m, m)
