"""Brute-force ground truth for every formula route.

The glued matrix is assembled literally from its block description, its
characteristic polynomial computed densely and exactly, and numeric spectra
come from a residual-checked symmetric eigensolver.  Comparisons against the
formula routes are coefficient-for-coefficient.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DomainError, PreconditionError
from .joins import JoinSpec, effective_rho, join_weights, universal_matrix
from .matrices import RationalMatrix, charpoly
from .polynomials import Polynomial
from .spectra import CoupledBlocks

ORACLE_CAP_ENV = "SPECTRA_ORACLE_CAP"
DEFAULT_ORACLE_CAP = 128


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class AssembledMatrix:
    """A dense glued matrix plus where its blocks start and which equation built it."""

    matrix: RationalMatrix
    block_offsets: tuple[int, ...]
    provenance: str


def assemble(cb: CoupledBlocks) -> AssembledMatrix:
    """Dense block matrix: M_i diagonal blocks, rho_ij * u_i v_j^T off-diagonal."""
    sizes = [m.rows for m, _, _ in cb.blocks]
    offs = []
    acc = 0
    for s in sizes:
        offs.append(acc)
        acc += s
    n = acc
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, (m, _, _) in enumerate(cb.blocks):
        for r in range(m.rows):
            row = out[offs[i] + r]
            for c in range(m.cols):
                row[offs[i] + c] = m[r, c]
    for i, (_, u_i, _) in enumerate(cb.blocks):
        for j, (_, _, v_j) in enumerate(cb.blocks):
            if i == j or cb.rho[i][j] == 0:
                continue
            rho = cb.rho[i][j]
            for r, ur in enumerate(u_i):
                if ur == 0:
                    continue
                row = out[offs[i] + r]
                for c, vc in enumerate(v_j):
                    if vc != 0:
                        row[offs[j] + c] = rho * ur * vc
    flat = [x for row in out for x in row]
    return AssembledMatrix(RationalMatrix(n, n, flat), tuple(offs), "coupled-blocks")


def assemble_universal(spec: JoinSpec) -> AssembledMatrix:
    """Dense universal matrix of a plain join, written block by block:
    U_i + delta*w_i*I on the diagonal, (rho_ij*alpha + gamma) * all-ones off it."""
    if spec.universal is None:
        raise PreconditionError("universal assembly needs universal parameters")
    if spec.subsets is not None:
        raise PreconditionError("universal assembly applies to plain joins")
    params = spec.universal
    w = join_weights(spec)
    rho = effective_rho(spec)
    sizes = [g.n for g in spec.components]
    offs = list(spec.block_offsets())
    n = spec.total_vertices
    out = [[Fraction(0)] * n for _ in range(n)]
    for i, g in enumerate(spec.components):
        u = universal_matrix(g, params)
        shift = params.delta * w[i]
        for r in range(g.n):
            for c in range(g.n):
                out[offs[i] + r][offs[i] + c] = u[r, c] + (shift if r == c else 0)
    k = spec.k
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            coupling = rho[i][j] * params.alpha + params.gamma
            if coupling == 0:
                continue
            for r in range(sizes[i]):
                for c in range(sizes[j]):
                    out[offs[i] + r][offs[j] + c] = coupling
    flat = [x for row in out for x in row]
    return AssembledMatrix(RationalMatrix(n, n, flat), tuple(offs), "universal-join-blocks")


def _matrix_of(am) -> RationalMatrix:
    return am.matrix if isinstance(am, AssembledMatrix) else am


def oracle_charpoly(am: AssembledMatrix | RationalMatrix) -> Polynomial:
    """Exact dense characteristic polynomial (guarded by the dimension cap)."""
    m = _matrix_of(am)
    cap = oracle_cap()
    if m.rows > cap:
        raise DomainError(f"oracle dimension {m.rows} exceeds cap {cap} (set {ORACLE_CAP_ENV} to raise it)")
    return charpoly(m)


def oracle_spectrum(am: AssembledMatrix | RationalMatrix, tol: float = 1e-8) -> list[float]:
    """Numeric eigenvalues of a symmetric matrix, residual-checked."""
    m = _matrix_of(am)
    if not m.is_symmetric():
        raise PreconditionError("numeric oracle spectrum needs a symmetric matrix")
    if m.rows == 0:
        return []
    a = np.array(m.to_floats(), dtype=float)
    w, vecs = np.linalg.eigh(a)
    scale = max(1.0, float(np.max(np.abs(w))))
    resid = a @ vecs - vecs * w
    worst = float(np.max(np.linalg.norm(resid, axis=0)))
    if worst > tol * scale:
        raise ArithmeticError(f"eigenpair residual {worst} exceeds {tol * scale}")
    return sorted(float(x) for x in w)


@dataclass(frozen=True)
class CompareResult:
    """Outcome of an exact polynomial comparison."""

    equal: bool
    first_mismatch: Optional[int]
    detail: str

    def __bool__(self) -> bool:
        return self.equal


def compare(formula: Polynomial, oracle: Polynomial) -> CompareResult:
    """Coefficient-for-coefficient verdict; reports the first differing power."""
    if formula == oracle:
        return CompareResult(True, None, "exact match")
    top = max(len(formula.coeffs), len(oracle.coeffs))
    for j in range(top):
        if formula[j] != oracle[j]:
            return CompareResult(
                False,
                j,
                f"coefficient of x^{j} differs: formula {formula[j]}, oracle {oracle[j]}",
            )
    return CompareResult(False, None, "polynomials differ")  # pragma: no cover
