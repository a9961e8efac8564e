"""Golden regression fixtures.

The centerpiece is a 10-vertex mixed join: a 3-path host whose vertices carry
a 3-path, a 4-vertex star (hub at index 2), and an edge plus an isolated
vertex.  Its characteristic polynomial and per-block resolvents are known in
closed form, as are those of its subset-constrained variant, so both serve as
exact end-to-end regressions for every route in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, VertexSubset
from .joins import JoinSpec, UniversalParams, generalized_corona, h_join, join_graph, universal_matrix
from .matrices import charpoly
from .oracle import compare, oracle_charpoly, oracle_spectrum
from .polynomials import Polynomial, RationalFunction
from .resolvent import resolvent_form
from .spectra import (
    corona_charpoly,
    corona_charpoly_via_join,
    generalized_charpoly,
    hgen_join_charpoly,
    hgen_join_spectrum,
    hjoin_universal_charpoly,
    hjoin_universal_spectrum,
    hjoin_universal_spectrum_alpha_delta_zero,
    hjoin_universal_spectrum_regular,
    lex_universal_charpoly,
)


def mixed_join_spec() -> JoinSpec:
    """3-path host over {3-path, star with hub at index 2, edge + isolated vertex}."""
    host = Graph.path(3)
    components = (
        Graph.path(3),
        Graph(4, [(0, 2), (1, 2), (2, 3)]),
        Graph(3, [(0, 1)]),
    )
    return JoinSpec(host, components)


def subset_join_spec() -> JoinSpec:
    base = mixed_join_spec()
    subsets = (
        VertexSubset(3, (0, 1)),
        VertexSubset(4, (0, 1, 3)),
        VertexSubset(3, (1, 2)),
    )
    return JoinSpec(base.host, base.components, subsets=subsets)


def mixed_join_charpoly_factors() -> list[Polynomial]:
    return [
        Polynomial((0, 0, 0, 1)),  # x^3
        Polynomial((-6, -1, 4, 1)),
        Polynomial((2, -8, -5, 1)),
        Polynomial((1, 1)),
    ]


def subset_join_charpoly_factors() -> list[Polynomial]:
    return [
        Polynomial((0, 0, 0, 0, 1)),  # x^4
        Polynomial((-15, 6, 35, -6, -18, 0, 1)),
    ]


def mixed_join_resolvents() -> list[RationalFunction]:
    return [
        RationalFunction(Polynomial((4, 3)), Polynomial((-2, 0, 1))),
        RationalFunction(Polynomial((6, 4)), Polynomial((-3, 0, 1))),
        RationalFunction(Polynomial((-1, 3)), Polynomial((0, -1, 1))),
    ]


def subset_join_resolvents() -> list[RationalFunction]:
    return [
        RationalFunction(Polynomial((-1, 2, 2)), Polynomial((0, -2, 0, 1))),
        RationalFunction(Polynomial((0, 3)), Polynomial((-3, 0, 1))),
        RationalFunction(Polynomial((-1, 0, 2)), Polynomial((0, -1, 0, 1))),
    ]


def product(polys) -> Polynomial:
    out = Polynomial.one()
    for p in polys:
        out = out * p
    return out


def multisets_close(a, b, tol: float) -> bool:
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol * max(1.0, abs(x)) for x, y in zip(sorted(a), sorted(b)))


@dataclass(frozen=True)
class FixtureResult:
    name: str
    route: str
    passed: bool
    detail: str


def _result(name: str, route: str, cond: bool, detail: str = "") -> FixtureResult:
    return FixtureResult(name, route, cond, detail if detail else ("ok" if cond else "mismatch"))


def run_fixture_checks(tol: float = 1e-8, with_oracle: bool = True) -> list[FixtureResult]:
    """Run every golden check; oracle comparisons can be switched off."""
    out: list[FixtureResult] = []
    adjacency = UniversalParams.adjacency()
    mixed = mixed_join_spec().with_universal(adjacency)
    subset = subset_join_spec()
    expected_mixed = product(mixed_join_charpoly_factors())
    expected_subset = product(subset_join_charpoly_factors())

    def run(name, route, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # report, never abort the table
            out.append(FixtureResult(name, route, False, f"error: {exc}"))
            return
        out.append(_result(name, route, ok, detail))

    def check_poly(formula: Polynomial, expected: Polynomial, spec: JoinSpec | None):
        if formula != expected:
            return False, compare(formula, expected).detail
        if with_oracle and spec is not None:
            params = spec.universal if spec.universal is not None else adjacency
            truth = oracle_charpoly(universal_matrix(join_graph(spec), params))
            verdict = compare(formula, truth)
            return verdict.equal, verdict.detail
        return True, "matches the closed form"

    run(
        "mixed-join charpoly",
        "universal-join",
        lambda: check_poly(hjoin_universal_charpoly(mixed), expected_mixed, mixed_join_spec()),
    )

    def mixed_resolvents():
        for g, want in zip(mixed.components, mixed_join_resolvents()):
            got = resolvent_form(g.adjacency(), [1] * g.n).func
            if got != want:
                return False, f"resolvent {got} != {want}"
        return True, "all three reduced forms match"

    run("mixed-join resolvents", "resolvent", mixed_resolvents)

    run(
        "subset-join charpoly",
        "subset-join",
        lambda: check_poly(hgen_join_charpoly(subset), expected_subset, subset),
    )

    def subset_resolvents():
        for g, s, want in zip(subset.components, subset.subsets, subset_join_resolvents()):
            got = resolvent_form(g.adjacency(), s.indicator()).func
            if got != want:
                return False, f"resolvent {got} != {want}"
        return True, "all three reduced forms match"

    run("subset-join resolvents", "resolvent", subset_resolvents)

    def mixed_spectrum():
        report = hjoin_universal_spectrum(mixed, tol)
        values = report.eigenvalues()
        if len(values) != 10:
            return False, f"{len(values)} eigenvalues reported"
        if with_oracle:
            truth = oracle_spectrum(universal_matrix(h_join(mixed_join_spec()), adjacency), tol)
            return multisets_close(values, truth, 1e-6), "numeric union vs dense eigensolver"
        return True, "accounting complete"

    run("mixed-join spectrum", "universal-join", mixed_spectrum)

    def subset_spectrum():
        report = hgen_join_spectrum(subset, tol)
        zeros = sum(1 for v in report.eigenvalues() if abs(v) <= 1e-7)
        if zeros != 4:
            return False, f"expected root 0 with multiplicity 4, saw {zeros}"
        if with_oracle:
            truth = oracle_spectrum(join_graph(subset).adjacency(), tol)
            return multisets_close(report.eigenvalues(), truth, 1e-6), "numeric union vs dense eigensolver"
        return True, "zero multiplicity correct"

    run("subset-join spectrum", "subset-join", subset_spectrum)

    def laplacian_shortcut():
        spec = mixed_join_spec().with_universal(UniversalParams.laplacian())
        report = hjoin_universal_spectrum_alpha_delta_zero(spec, tol)
        general = hjoin_universal_spectrum(spec, tol)
        ok = multisets_close(report.eigenvalues(), general.eigenvalues(), 1e-6)
        return ok, "shortcut vs general route multisets"

    run("laplacian shortcut", "balanced-shortcut", laplacian_shortcut)

    def regular_shortcut():
        spec = JoinSpec(Graph.complete(2), (Graph.complete(2), Graph.complete(2)), universal=adjacency)
        report = hjoin_universal_spectrum_regular(spec, tol=tol)
        want = [-1.0, -1.0, -1.0, 3.0]
        return multisets_close(report.eigenvalues(), want, 1e-8), "complete-graph join spectrum"

    run("regular shortcut", "regular-shortcut", regular_shortcut)

    def corona_routes():
        host = Graph(1)
        direct = corona_charpoly(host, (Graph(1),))
        if direct != Polynomial((-1, 0, 1)):
            return False, f"single-vertex corona gave {direct}"
        host2 = Graph.path(2)
        fam = (Graph(1), Graph(1))
        d2 = corona_charpoly(host2, fam)
        if d2 != charpoly(Graph.path(4).adjacency()):
            return False, "2-path corona is not the 4-path"
        if d2 != corona_charpoly_via_join(host2, fam):
            return False, "corona routes disagree"
        if with_oracle and d2 != oracle_charpoly(generalized_corona(host2, fam).adjacency()):
            return False, "corona vs dense oracle"
        return True, "both constructions agree"

    run("corona routes", "corona", corona_routes)

    def lex_routes():
        if lex_universal_charpoly(Graph.complete(2), Graph(1), adjacency) != Polynomial((-1, 0, 1)):
            return False, "2-clique of a point is not the single edge"
        host, inner = Graph.path(3), Graph.complete(2)
        via_lex = lex_universal_charpoly(host, inner, adjacency)
        via_join = hjoin_universal_charpoly(JoinSpec(host, (inner,) * 3, universal=adjacency))
        if via_lex != via_join:
            return False, "lexicographic vs join route"
        if with_oracle and via_lex != oracle_charpoly(join_graph(JoinSpec(host, (inner,) * 3)).adjacency()):
            return False, "lexicographic vs dense oracle"
        return True, "product form matches the join route"

    run("lexicographic routes", "lexicographic", lex_routes)

    def degree_shift():
        base = mixed_join_spec()
        at_zero = generalized_charpoly(base, 0)
        if at_zero != expected_mixed:
            return False, "t = 0 does not reduce to the adjacency charpoly"
        if with_oracle:
            t = Fraction(1, 2)
            g = h_join(base)
            m = g.adjacency() - g.degree_matrix() * t
            verdict = compare(generalized_charpoly(base, t), oracle_charpoly(m))
            return verdict.equal, verdict.detail
        return True, "t = 0 reduction holds"

    run("degree-shift charpoly", "degree-shift", degree_shift)

    return out
