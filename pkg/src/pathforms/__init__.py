"""Exact symbolic engine for generalized differential forms and their
first-order path-space images.

Built from four layers: exact rational polynomials, polynomial-coefficient
differential forms on charts, a negative-degree exterior algebra with a
constant differential, and their graded tensor product.  Path-space forms
are expression trees evaluated against polynomial plots; the transfer map
sends a degree-p generalized form to endpoint pullbacks plus a signed
first-order t-integral.
"""

from .forms import Chart, OrdinaryForm, PolyMap, dx
from .generalized import GeneralizedForm, pair_decode, pair_encode
from .koszul import KoszulElement, KoszulParams
from .pathspace import (
    Chen,
    Diff,
    EvPull,
    PathFormExpr,
    Plot,
    Scale,
    Sum,
    Wedge,
    chen_integral,
    decompose,
    ev_pullback,
    eval_pathform,
    map_I,
    wedge_prime,
    wedge_prime_explicit,
    zero_expr,
)
from .polyring import MismatchError, Poly, Rational
from .verify import GenConfig, SuiteReport, gen_random, run_all, run_suite

__all__ = [
    "Chart",
    "Chen",
    "Diff",
    "EvPull",
    "GenConfig",
    "GeneralizedForm",
    "KoszulElement",
    "KoszulParams",
    "MismatchError",
    "OrdinaryForm",
    "PathFormExpr",
    "Plot",
    "Poly",
    "PolyMap",
    "Rational",
    "Scale",
    "SuiteReport",
    "Sum",
    "Wedge",
    "chen_integral",
    "decompose",
    "dx",
    "ev_pullback",
    "eval_pathform",
    "gen_random",
    "map_I",
    "pair_decode",
    "pair_encode",
    "run_all",
    "run_suite",
    "wedge_prime",
    "wedge_prime_explicit",
    "zero_expr",
]

__version__ = "0.1.0"
