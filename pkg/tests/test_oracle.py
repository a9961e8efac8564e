import random
from fractions import Fraction

import pytest

from helpers import cofactor_det, multisets_close, rand_symmetric_matrix
from joinspectra import (
    CoupledBlocks,
    Graph,
    UniversalParams,
    assemble,
    assemble_universal,
    compare,
    h_join,
    join_graph,
    oracle_charpoly,
    oracle_spectrum,
    universal_matrix,
)
from joinspectra.errors import DomainError, PreconditionError
from joinspectra.fixtures import mixed_join_spec, subset_join_charpoly_factors, subset_join_spec, product
from joinspectra.matrices import RationalMatrix, charpoly
from joinspectra.polynomials import Polynomial
from joinspectra.spectra import adjacency_blocks, universal_blocks
from joinspectra.verification import random_coupled_blocks

X = Polynomial.x()


def test_assemble_edge():
    cb = CoupledBlocks(
        [
            (RationalMatrix(1, 1, [0]), (Fraction(1),), (Fraction(1),)),
            (RationalMatrix(1, 1, [0]), (Fraction(1),), (Fraction(1),)),
        ],
        ((0, 1), (1, 0)),
    )
    am = assemble(cb)
    assert am.matrix.to_lists() == [[0, 1], [1, 0]]
    assert am.block_offsets == (0, 1)
    assert am.provenance == "coupled-blocks"


def test_assemble_matches_join_graphs():
    spec = mixed_join_spec()
    am = assemble(adjacency_blocks(spec))
    assert am.matrix == h_join(spec).adjacency()
    sub = subset_join_spec()
    am2 = assemble(adjacency_blocks(sub))
    assert am2.matrix == join_graph(sub).adjacency()


def test_assemble_zero_vector_rows():
    cb = CoupledBlocks(
        [
            (RationalMatrix(2, 2, [0, 1, 1, 0]), (Fraction(0), Fraction(0)), (Fraction(0), Fraction(0))),
            (RationalMatrix(1, 1, [0]), (Fraction(1),), (Fraction(1),)),
        ],
        ((0, 1), (1, 0)),
    )
    am = assemble(cb)
    assert am.matrix.to_lists() == [[0, 1, 0], [1, 0, 0], [0, 0, 0]]


def test_assemble_universal_matches_whole_graph_matrix():
    rng = random.Random(61)
    from joinspectra.verification import random_join_spec, random_universal_params

    for _ in range(10):
        params = random_universal_params(rng)
        spec = random_join_spec(rng, max_k=3, max_n=3, universal=params)
        am = assemble_universal(spec)
        whole = universal_matrix(h_join(spec.with_universal(None)), params)
        assert am.matrix == whole
        assert am.provenance == "universal-join-blocks"


def test_oracle_charpoly_small():
    assert oracle_charpoly(RationalMatrix(2, 2, [0, 1, 1, 0])) == X**2 - 1
    sub = assemble(adjacency_blocks(subset_join_spec()))
    assert oracle_charpoly(sub) == product(subset_join_charpoly_factors())


def test_oracle_charpoly_block_diagonal_factorizes():
    rng = random.Random(62)
    for _ in range(10):
        cb = random_coupled_blocks(rng, max_k=3, max_n=3)
        zero_rho = tuple(tuple(Fraction(0) for _ in row) for row in cb.rho)
        cut = CoupledBlocks(cb.blocks, zero_rho)
        got = oracle_charpoly(assemble(cut))
        expected = Polynomial.one()
        for m, _, _ in cb.blocks:
            expected = expected * charpoly(m)
        assert got == expected


def test_oracle_charpoly_vs_cofactor():
    rng = random.Random(63)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = rand_symmetric_matrix(rng, n)
        rows = [
            [(X if i == j else Polynomial()) - Polynomial.constant(m[i, j]) for j in range(n)]
            for i in range(n)
        ]
        assert oracle_charpoly(m) == cofactor_det(rows)


def test_oracle_spectrum_examples():
    k4 = Graph.complete(4).adjacency()
    assert multisets_close(oracle_spectrum(k4), [3, -1, -1, -1], 1e-10)
    lap = universal_matrix(Graph.complete(2), UniversalParams.laplacian())
    assert multisets_close(oracle_spectrum(lap), [0, 2], 1e-10)
    with pytest.raises(PreconditionError):
        oracle_spectrum(RationalMatrix(2, 2, [0, 1, 0, 0]))
    assert oracle_spectrum(RationalMatrix(0, 0, [])) == []


def test_oracle_spectrum_matches_charpoly_roots():
    from joinspectra.roots import real_roots

    rng = random.Random(64)
    for _ in range(8):
        m = rand_symmetric_matrix(rng, rng.randint(1, 6))
        vals = oracle_spectrum(m)
        roots = real_roots(charpoly(m))
        assert multisets_close(vals, roots, 1e-8)


def test_compare_verdicts():
    assert compare(X**2 - 1, X**2 - 1).equal
    bad = compare(X**2 - 1, X**2 + 1)
    assert not bad.equal
    assert bad.first_mismatch == 0
    assert "x^0" in bad.detail
    shifted = compare(X**3, X**3 + 2 * X)
    assert shifted.first_mismatch == 1


def test_oracle_cap(monkeypatch):
    from joinspectra.oracle import ORACLE_CAP_ENV

    monkeypatch.setenv(ORACLE_CAP_ENV, "3")
    with pytest.raises(DomainError):
        oracle_charpoly(RationalMatrix.identity(4))
    assert oracle_charpoly(RationalMatrix.identity(3)) == (X - 1) ** 3
    monkeypatch.setenv(ORACLE_CAP_ENV, "not-a-number")
    with pytest.raises(DomainError):
        oracle_charpoly(RationalMatrix.identity(2))


def test_universal_assembly_equals_block_route():
    spec = mixed_join_spec().with_universal(UniversalParams(2, Fraction(1, 2), -1, 3))
    am = assemble_universal(spec)
    via_blocks = assemble(universal_blocks(spec))
    assert am.matrix == via_blocks.matrix
