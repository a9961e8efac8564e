"""Resolvent forms v^T (xI - M)^{-1} u as exact rational functions.

For a symmetric matrix with u = v the reduced denominator is the product of
(x - mu) over exactly the eigenvalues mu whose eigenspace is not orthogonal
to u -- the "main" eigenvalues seen from u -- each appearing once.  Poles of
the form therefore detect those eigenvalues without ever leaving the
rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError, PreconditionError, ShapeError
from .matrices import RationalMatrix, as_vector, dot
from .polynomials import (
    Polynomial,
    RationalFunction,
    as_fraction,
    is_square_free,
)
from .roots import real_roots


@dataclass(frozen=True)
class ResolventForm:
    """A reduced resolvent quotient plus provenance needed for pole claims."""

    func: RationalFunction
    dim: Optional[int]
    hermitian: bool

    @property
    def num(self) -> Polynomial:
        """Numerator of the reduced form."""
        return self.func.num

    @property
    def den(self) -> Polynomial:
        """Denominator of the reduced form (monic)."""
        return self.func.den

    def __call__(self, x):
        return self.func(x)


def resolvent_form(m: RationalMatrix, u: Sequence, v: Sequence | None = None) -> ResolventForm:
    """Exact v^T (xI - M)^{-1} u, reduced.

    Computed as (v^T adj(xI - M) u) / det(xI - M) from one
    characteristic-polynomial pass; v defaults to u.
    """
    from .matrices import charpoly_and_adjugate

    if not m.is_square:
        raise ShapeError("resolvent of a non-square matrix")
    uu = as_vector(u)
    vv = uu if v is None else as_vector(v)
    if len(uu) != m.rows or len(vv) != m.rows:
        raise ShapeError(f"vector length must be {m.rows}")
    phi, adj = charpoly_and_adjugate(m)
    num = Polynomial(dot(vv, b.mat_vec(uu)) for b in adj)
    return ResolventForm(
        func=RationalFunction(num, phi),
        dim=m.rows,
        hermitian=(vv == uu and m.is_symmetric()),
    )


def eigenvector_resolvent(mu, norm_sq, dim: Optional[int] = None) -> ResolventForm:
    """Shortcut when u is an eigenvector for eigenvalue mu: |u|^2 / (x - mu)."""
    mu = as_fraction(mu)
    norm_sq = as_fraction(norm_sq)
    if norm_sq <= 0:
        raise DomainError(f"squared norm must be positive, got {norm_sq}")
    return ResolventForm(
        func=RationalFunction(Polynomial.constant(norm_sq), Polynomial((-mu, 1))),
        dim=dim,
        hermitian=True,
    )


def main_poles(form: ResolventForm, tol: float = 1e-8) -> list[float]:
    """Numeric poles: the eigenvalues whose eigenspaces see u.

    Only meaningful for the symmetric u = v case, where every pole is simple;
    asymmetric forms are rejected.
    """
    if not form.hermitian:
        raise PreconditionError("poles classify eigenvalues only for symmetric matrices with u = v")
    g = form.den
    if g.degree <= 0:
        return []
    if not is_square_free(g):
        raise ArithmeticError("denominator unexpectedly has a repeated root")
    return real_roots(g, tol)


def shifted(form: ResolventForm, c) -> ResolventForm:
    """Substitute x -> x - c; equals the resolvent of M + c*I with the same vectors."""
    return ResolventForm(func=form.func.shift(c), dim=form.dim, hermitian=form.hermitian)
