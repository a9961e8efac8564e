"""Characteristic polynomials and spectra of coupled block systems.

The core object is a family of square blocks M_i carrying vectors (u_i, v_i),
glued by scalars rho_ij into the block matrix with M_i on the diagonal and
rho_ij * u_i v_j^T off it.  Writing each reduced resolvent as f_i / g_i, the
characteristic polynomial of the glued matrix factors exactly as

    prod_i (phi_i / g_i) * Phi,

where Phi is the determinant of the k x k polynomial matrix with g_i on the
diagonal and -rho_ij * f_i off it.  Everything here works with that cleared
form, so zero vectors (f_i = 0, g_i = 1) and asymmetric couplings cost
nothing special.  Graph joins, universal-matrix variants, lexicographic
products and coronas are all thin wrappers that pick the right blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Optional, Sequence

from .errors import PreconditionError, ShapeError, SpecError
from .graphs import Graph
from .joins import (
    JoinSpec,
    RhoMatrix,
    UniversalParams,
    corona_as_hjoin,
    effective_rho,
    host_rho,
    join_weights,
    universal_matrix,
)
from .matrices import RationalMatrix, Vector, as_vector, charpoly, poly_det
from .polynomials import Polynomial, as_fraction, poly_gcd, square_free_decomposition
from .resolvent import resolvent_form
from .roots import real_roots

if TYPE_CHECKING:  # pragma: no cover
    from .oracle import CompareResult


@dataclass(frozen=True)
class CoupledBlocks:
    """Blocks (M_i, u_i, v_i) plus the k x k coupling scalars (zero diagonal)."""

    blocks: tuple[tuple[RationalMatrix, Vector, Vector], ...]
    rho: RhoMatrix

    def __init__(self, blocks, rho):
        canon = []
        for m, u, v in blocks:
            if not m.is_square:
                raise ShapeError("every block must be square")
            u, v = as_vector(u), as_vector(v)
            if len(u) != m.rows or len(v) != m.rows:
                raise ShapeError(f"block vectors must have length {m.rows}")
            canon.append((m, u, v))
        k = len(canon)
        rho = tuple(tuple(as_fraction(x) for x in row) for row in rho)
        if len(rho) != k or any(len(r) != k for r in rho):
            raise ShapeError(f"coupling matrix must be {k}x{k}")
        if any(rho[i][i] != 0 for i in range(k)):
            raise ShapeError("coupling matrix must have zero diagonal")
        object.__setattr__(self, "blocks", tuple(canon))
        object.__setattr__(self, "rho", rho)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def total_dim(self) -> int:
        return sum(m.rows for m, _, _ in self.blocks)

    def is_hermitian(self) -> bool:
        """Symmetric blocks, u_i = v_i, symmetric coupling: real spectrum."""
        if any(u != v or not m.is_symmetric() for m, u, v in self.blocks):
            return False
        k = self.k
        return all(self.rho[i][j] == self.rho[j][i] for i in range(k) for j in range(i + 1, k))


@dataclass(frozen=True)
class _BlockData:
    phi: Polynomial  # char poly of the block
    f: Polynomial  # reduced resolvent numerator
    g: Polynomial  # reduced resolvent denominator (monic)
    cofactor: Polynomial  # phi / g, exact


def _block_data(m: RationalMatrix, u: Vector, v: Vector) -> _BlockData:
    form = resolvent_form(m, u, v)
    phi = charpoly(m)
    return _BlockData(phi=phi, f=form.num, g=form.den, cofactor=phi.exact_div(form.den))


def coupling_poly(fs: Sequence[Polynomial], gs: Sequence[Polynomial], rho: RhoMatrix) -> Polynomial:
    """Phi: determinant of the cleared coupling matrix (g_i diagonal, -rho_ij f_i off)."""
    k = len(fs)
    rows = [
        [gs[i] if i == j else (-rho[i][j]) * fs[i] for j in range(k)]
        for i in range(k)
    ]
    return poly_det(rows)


def coupled_charpoly(cb: CoupledBlocks) -> Polynomial:
    """Exact characteristic polynomial of the glued block matrix."""
    data = [_block_data(m, u, v) for m, u, v in cb.blocks]
    phi = coupling_poly([d.f for d in data], [d.g for d in data], cb.rho)
    out = phi
    for d in data:
        out = out * d.cofactor
    if out.degree != cb.total_dim or not out.is_monic:
        raise ArithmeticError("glued characteristic polynomial failed its degree check")
    return out


def _classify_block(phi: Polynomial, g: Polynomial, idx: int, tol: float):
    """Split one block's eigenvalues by whether the block's resolvent sees them.

    Exact: square-free factors of phi are split by gcd against g, so no
    numeric matching between eigenvalues and poles ever happens.
    """
    inherited: list[tuple[float, int, int]] = []
    reduced: list[tuple[float, int, int]] = []
    for factor, mult in square_free_decomposition(phi):
        seen = poly_gcd(factor, g)
        unseen = factor.exact_div(seen)
        if seen.degree > 0 and mult > 1:
            reduced.extend((r, mult - 1, idx) for r in real_roots(seen, tol))
        if unseen.degree > 0:
            inherited.extend((r, mult, idx) for r in real_roots(unseen, tol))
    return inherited, reduced


@dataclass(frozen=True)
class SpectrumReport:
    """Classified exact/numeric spectrum of a glued system.

    inherited: block eigenvalues invisible to that block's vector, full
    multiplicity.  reduced: visible ones, multiplicity dropped by one.
    coupling_roots: the roots of Phi, which contribute the rest.
    Entries are (value, multiplicity, block index).
    """

    charpoly: Polynomial
    inherited: tuple[tuple[float, int, int], ...]
    reduced: tuple[tuple[float, int, int], ...]
    coupling: Polynomial
    coupling_roots: tuple[float, ...]
    oracle_verdict: Optional["CompareResult"] = None

    def eigenvalues(self) -> list[float]:
        """Full numeric spectrum as a sorted multiset."""
        out = [v for v, mult, _ in self.inherited for _ in range(mult)]
        out += [v for v, mult, _ in self.reduced for _ in range(mult)]
        out += list(self.coupling_roots)
        return sorted(out)


def _build_report(charpoly_total, inherited, reduced, coupling, tol, total_dim, verdict=None) -> SpectrumReport:
    croots = real_roots(coupling, tol) if coupling.degree > 0 else []
    counted = sum(m for _, m, _ in inherited) + sum(m for _, m, _ in reduced) + len(croots)
    if counted != total_dim:
        raise ArithmeticError(f"eigenvalue accounting mismatch: {counted} of {total_dim}")
    return SpectrumReport(
        charpoly=charpoly_total,
        inherited=tuple(inherited),
        reduced=tuple(reduced),
        coupling=coupling,
        coupling_roots=tuple(croots),
        oracle_verdict=verdict,
    )


def coupled_spectrum(cb: CoupledBlocks, tol: float = 1e-8, verify: bool = False) -> SpectrumReport:
    """Classified spectrum of the glued matrix (symmetric case only)."""
    if not cb.is_hermitian():
        raise PreconditionError("spectrum classification needs symmetric blocks, u = v and symmetric coupling")
    data = [_block_data(m, u, v) for m, u, v in cb.blocks]
    inherited: list[tuple[float, int, int]] = []
    reduced: list[tuple[float, int, int]] = []
    for idx, d in enumerate(data):
        inh, red = _classify_block(d.phi, d.g, idx, tol)
        inherited += inh
        reduced += red
    phi = coupling_poly([d.f for d in data], [d.g for d in data], cb.rho)
    total = phi
    for d in data:
        total = total * d.cofactor
    verdict = None
    if verify:
        from . import oracle as _oracle

        verdict = _oracle.compare(total, _oracle.oracle_charpoly(_oracle.assemble(cb)))
    return _build_report(total, inherited, reduced, phi, tol, cb.total_dim, verdict)


# -- block builders for graph joins -----------------------------------------


def adjacency_blocks(spec: JoinSpec) -> CoupledBlocks:
    """Adjacency blocks; vectors are all-ones, or the subset indicators if given."""
    blocks = []
    for i, g in enumerate(spec.components):
        vec = spec.subsets[i].indicator() if spec.subsets is not None else tuple(Fraction(1) for _ in range(g.n))
        blocks.append((g.adjacency(), vec, vec))
    return CoupledBlocks(blocks, effective_rho(spec))


def universal_blocks(spec: JoinSpec) -> CoupledBlocks:
    """Blocks U_i + delta*w_i*I with all-ones vectors, coupled by rho*alpha + gamma."""
    if spec.universal is None:
        raise PreconditionError("universal route needs universal parameters")
    if spec.subsets is not None:
        raise PreconditionError("universal route applies to plain joins (no subsets)")
    params = spec.universal
    w = join_weights(spec)
    rho = effective_rho(spec)
    blocks = []
    for i, g in enumerate(spec.components):
        m = universal_matrix(g, params)
        if params.delta != 0 and w[i]:
            m = m + RationalMatrix.identity(g.n) * (params.delta * w[i])
        blocks.append((m, tuple(Fraction(1) for _ in range(g.n)), tuple(Fraction(1) for _ in range(g.n))))
    k = spec.k
    rho_hat = tuple(
        tuple(rho[i][j] * params.alpha + params.gamma if i != j else Fraction(0) for j in range(k))
        for i in range(k)
    )
    return CoupledBlocks(blocks, rho_hat)


# -- graph-level formula routes ------------------------------------------------


def hjoin_universal_charpoly(spec: JoinSpec) -> Polynomial:
    """Characteristic polynomial of the universal matrix of a plain join."""
    return coupled_charpoly(universal_blocks(spec))


def hjoin_universal_spectrum(spec: JoinSpec, tol: float = 1e-8, verify: bool = False) -> SpectrumReport:
    """Classified universal spectrum of a plain join (general route)."""
    return coupled_spectrum(universal_blocks(spec), tol, verify)


def hgen_join_charpoly(spec: JoinSpec) -> Polynomial:
    """Characteristic polynomial of a subset-constrained join (adjacency only)."""
    if spec.subsets is None:
        raise PreconditionError("subset-join route needs per-component subsets")
    if spec.universal is not None:
        raise PreconditionError("subset-join route is stated for the adjacency matrix only")
    return coupled_charpoly(adjacency_blocks(spec))


def hgen_join_spectrum(spec: JoinSpec, tol: float = 1e-8, verify: bool = False) -> SpectrumReport:
    """Classified spectrum of a subset-constrained join."""
    if spec.subsets is None:
        raise PreconditionError("subset-join route needs per-component subsets")
    if spec.universal is not None:
        raise PreconditionError("subset-join route is stated for the adjacency matrix only")
    return coupled_spectrum(adjacency_blocks(spec), tol, verify)


def generalized_charpoly(spec: JoinSpec, t) -> Polynomial:
    """Characteristic polynomial of A - t*D of a plain join, at exact rational t."""
    if spec.universal is not None:
        raise PreconditionError("degree-shift route fixes its own matrix parameters")
    params = UniversalParams(1, 0, 0, -as_fraction(t))
    return hjoin_universal_charpoly(spec.with_universal(params))


def join_charpoly(spec: JoinSpec) -> tuple[str, Polynomial]:
    """Dispatch on the spec's optional keys; returns (route name, polynomial)."""
    if spec.subsets is not None:
        return "subset-join", hgen_join_charpoly(spec)
    if spec.universal is not None:
        return "universal-join", hjoin_universal_charpoly(spec)
    return "adjacency-join", hjoin_universal_charpoly(spec.with_universal(UniversalParams.adjacency()))


def join_spectrum(spec: JoinSpec, tol: float = 1e-8, verify: bool = False) -> tuple[str, SpectrumReport]:
    if spec.subsets is not None:
        return "subset-join", hgen_join_spectrum(spec, tol, verify)
    if spec.universal is not None:
        return "universal-join", hjoin_universal_spectrum(spec, tol, verify)
    return "adjacency-join", hjoin_universal_spectrum(spec.with_universal(UniversalParams.adjacency()), tol, verify)


# -- single-eigenvalue shortcut routes ----------------------------------------


def _ones_eigenvalue_spectrum(spec: JoinSpec, ps: list[Fraction], tol: float) -> SpectrumReport:
    """Spectrum when every shifted block provably has the all-ones eigenvector.

    Independent of resolvent reduction: each block loses one copy of its
    all-ones eigenvalue p_i, and the k new eigenvalues come from the small
    matrix with p_i on the diagonal and n_j * rho_hat_ij off it (similar to
    the symmetrized form with sqrt(n_i n_j) entries).
    """
    params = spec.universal
    w = join_weights(spec)
    rho = effective_rho(spec)
    ns = [g.n for g in spec.components]
    if any(n == 0 for n in ns):
        raise PreconditionError("every component needs at least one vertex")
    k = spec.k
    inherited: list[tuple[float, int, int]] = []
    reduced: list[tuple[float, int, int]] = []
    cof_product = Polynomial.one()
    for i, g in enumerate(spec.components):
        m = universal_matrix(g, params)
        if params.delta != 0 and w[i]:
            m = m + RationalMatrix.identity(g.n) * (params.delta * w[i])
        phi_p = charpoly(m)
        if phi_p(ps[i]) != 0:
            raise ArithmeticError(f"expected all-ones eigenvalue {ps[i]} missing from block {i}")
        pole = Polynomial((-ps[i], 1))
        inh, red = _classify_block(phi_p, pole, i, tol)
        inherited += inh
        reduced += red
        cof_product = cof_product * phi_p.exact_div(pole)
    rho_hat = [[rho[i][j] * params.alpha + params.gamma if i != j else Fraction(0) for j in range(k)] for i in range(k)]
    small = RationalMatrix(k, k, [ps[i] if i == j else ns[j] * rho_hat[i][j] for i in range(k) for j in range(k)])
    phi_small = charpoly(small)
    return _build_report(cof_product * phi_small, inherited, reduced, phi_small, tol, spec.total_vertices)


def hjoin_universal_spectrum_regular(
    spec: JoinSpec, degrees: Optional[Sequence[int]] = None, tol: float = 1e-8
) -> SpectrumReport:
    """Spectrum via the all-regular shortcut: p_i = alpha*r_i + beta + gamma*n_i + delta*(r_i + w_i)."""
    if spec.universal is None:
        raise PreconditionError("universal route needs universal parameters")
    if spec.subsets is not None:
        raise PreconditionError("universal route applies to plain joins (no subsets)")
    actual = [g.regular_degree() for g in spec.components]
    if any(r is None for r in actual):
        raise PreconditionError("regular shortcut needs every component regular")
    if degrees is not None:
        if list(degrees) != actual:
            raise PreconditionError(f"stated degrees {list(degrees)} do not match actual {actual}")
    a, b, c, d = spec.universal.as_tuple()
    w = join_weights(spec)
    ns = [g.n for g in spec.components]
    ps = [a * r + b + c * n + d * (r + wi) for r, n, wi in zip(actual, ns, w)]
    return _ones_eigenvalue_spectrum(spec, ps, tol)


def hjoin_universal_spectrum_alpha_delta_zero(spec: JoinSpec, tol: float = 1e-8) -> SpectrumReport:
    """Spectrum via the alpha + delta = 0 shortcut: p_i = beta + gamma*n_i + delta*w_i."""
    if spec.universal is None:
        raise PreconditionError("universal route needs universal parameters")
    if spec.subsets is not None:
        raise PreconditionError("universal route applies to plain joins (no subsets)")
    a, b, c, d = spec.universal.as_tuple()
    if a + d != 0:
        raise PreconditionError(f"shortcut needs alpha + delta = 0, got {a} + {d}")
    w = join_weights(spec)
    ps = [b + c * g.n + d * wi for g, wi in zip(spec.components, w)]
    return _ones_eigenvalue_spectrum(spec, ps, tol)


# -- lexicographic products ---------------------------------------------------


def lex_universal_charpoly(host: Graph, inner: Graph, params: UniversalParams) -> Polynomial:
    """Universal charpoly of the lexicographic product (delta = 0), exactly.

    With phi and f/g the inner universal charpoly and reduced all-ones
    resolvent, the result is (phi/g)^k * sum_j c_j f^(k-j) g^j, the c_j being
    the charpoly coefficients of the coupling matrix alpha*A(host) +
    gamma*(J - I).  That product form replaces the eigenvalue-by-eigenvalue
    product over the host spectrum, so no numerics enter.
    """
    if params.delta != 0:
        raise PreconditionError(f"lexicographic route requires delta = 0, got {params.delta}")
    k = host.n
    u_inner = universal_matrix(inner, params)
    ones = tuple(Fraction(1) for _ in range(inner.n))
    form = resolvent_form(u_inner, ones)
    f, g = form.num, form.den
    cof = charpoly(u_inner).exact_div(g)
    coupling = RationalMatrix(
        k,
        k,
        [
            params.alpha * (1 if host.has_edge(i, j) else 0) + params.gamma if i != j else Fraction(0)
            for i in range(k)
            for j in range(k)
        ],
    )
    cs = charpoly(coupling).coeffs  # ascending, monic
    acc = Polynomial()
    for j in range(k + 1):
        acc = acc + cs[j] * (f ** (k - j)) * (g**j)
    out = (cof**k) * acc
    if out.degree != k * inner.n or not out.is_monic:
        raise ArithmeticError("lexicographic charpoly failed its degree check")
    return out


# -- coronas -------------------------------------------------------------------


def corona_charpoly(host: Graph, family: Sequence[Graph]) -> Polynomial:
    """Characteristic polynomial of the corona of host with one graph per vertex.

    Clears the k x k determinant with entries x - resolvent_i (diagonal) and
    -rho_ij (off) by each row's g_i, keeping everything polynomial.
    """
    family = tuple(family)
    if len(family) != host.n:
        raise SpecError(f"corona host has {host.n} vertices but {len(family)} companion graphs given")
    k = host.n
    rho = host_rho(host)
    data = []
    for g in family:
        ones = tuple(Fraction(1) for _ in range(g.n))
        form = resolvent_form(g.adjacency(), ones)
        phi = charpoly(g.adjacency())
        data.append((form.num, form.den, phi.exact_div(form.den)))
    x = Polynomial.x()
    rows = [
        [x * data[i][1] - data[i][0] if i == j else (-rho[i][j]) * data[i][1] for j in range(k)]
        for i in range(k)
    ]
    out = poly_det(rows)
    for _, _, cof in data:
        out = out * cof
    expected = k + sum(g.n for g in family)
    if out.degree != expected or not out.is_monic:
        raise ArithmeticError("corona charpoly failed its degree check")
    return out


def corona_charpoly_via_join(host: Graph, family: Sequence[Graph]) -> Polynomial:
    """Cross-route: the corona rebuilt as a join of single-vertex blocks plus the family."""
    spec, _ = corona_as_hjoin(host, family)
    return coupled_charpoly(adjacency_blocks(spec))
