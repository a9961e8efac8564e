"""Exact spectra of graph join operations, verified against a dense oracle.

Characteristic polynomials of joins (plain, subset-constrained,
lexicographic, corona) and of their universal matrices
alpha*A + beta*I + gamma*J + delta*D are computed exactly over the rationals
through block resolvent forms, and every route can be checked
coefficient-for-coefficient against a brute-force dense construction.
"""

from ._backend import BACKEND as KERNEL_BACKEND
from .errors import DomainError, PreconditionError, ShapeError, SpecError
from .graphs import Graph, VertexSubset, load_graph
from .joins import (
    JoinSpec,
    SpecialEigenvalueSplit,
    UniversalParams,
    classify_special_eigenvalues,
    corona_as_hjoin,
    generalized_corona,
    h_generalized_join,
    h_join,
    is_k_tau_regular,
    join_graph,
    join_weights,
    lexicographic,
    load_join_spec,
    universal_matrix,
)
from .matrices import (
    RationalMatrix,
    charpoly,
    charpoly_and_adjugate,
    determinant,
    inverse,
    poly_det,
    ratfun_det,
)
from .oracle import AssembledMatrix, CompareResult, assemble, assemble_universal, compare, oracle_charpoly, oracle_spectrum
from .polynomials import Polynomial, RationalFunction, poly_gcd, ratfun_reduce, square_free_decomposition
from .resolvent import ResolventForm, eigenvector_resolvent, main_poles, resolvent_form, shifted
from .roots import numeric_roots, real_roots
from .spectra import (
    CoupledBlocks,
    SpectrumReport,
    corona_charpoly,
    corona_charpoly_via_join,
    coupled_charpoly,
    coupled_spectrum,
    coupling_poly,
    generalized_charpoly,
    hgen_join_charpoly,
    hgen_join_spectrum,
    hjoin_universal_charpoly,
    hjoin_universal_spectrum,
    hjoin_universal_spectrum_alpha_delta_zero,
    hjoin_universal_spectrum_regular,
    join_charpoly,
    join_spectrum,
    lex_universal_charpoly,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "DomainError",
    "PreconditionError",
    "ShapeError",
    "SpecError",
    "Graph",
    "VertexSubset",
    "load_graph",
    "JoinSpec",
    "SpecialEigenvalueSplit",
    "UniversalParams",
    "classify_special_eigenvalues",
    "corona_as_hjoin",
    "generalized_corona",
    "h_generalized_join",
    "h_join",
    "is_k_tau_regular",
    "join_graph",
    "join_weights",
    "lexicographic",
    "load_join_spec",
    "universal_matrix",
    "RationalMatrix",
    "charpoly",
    "charpoly_and_adjugate",
    "determinant",
    "inverse",
    "poly_det",
    "ratfun_det",
    "AssembledMatrix",
    "CompareResult",
    "assemble",
    "assemble_universal",
    "compare",
    "oracle_charpoly",
    "oracle_spectrum",
    "Polynomial",
    "RationalFunction",
    "poly_gcd",
    "ratfun_reduce",
    "square_free_decomposition",
    "ResolventForm",
    "eigenvector_resolvent",
    "main_poles",
    "resolvent_form",
    "shifted",
    "numeric_roots",
    "real_roots",
    "CoupledBlocks",
    "SpectrumReport",
    "corona_charpoly",
    "corona_charpoly_via_join",
    "coupled_charpoly",
    "coupled_spectrum",
    "coupling_poly",
    "generalized_charpoly",
    "hgen_join_charpoly",
    "hgen_join_spectrum",
    "hjoin_universal_charpoly",
    "hjoin_universal_spectrum",
    "hjoin_universal_spectrum_alpha_delta_zero",
    "hjoin_universal_spectrum_regular",
    "join_charpoly",
    "join_spectrum",
    "lex_universal_charpoly",
    "__version__",
]
