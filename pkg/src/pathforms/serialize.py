"""JSON interchange for every value the package computes with.

One document shape per type, rationals as "num/den" strings so nothing
is ever rounded in transit, and all indices 0-based:

    Poly        [{"coeff": "num/den", "exps": [e0, e1, ...]}, ...]
    Form        {"chart": [names], "components": [{"indices": [...], "poly": ...}]}
    Koszul      {"n": n, "k": ["num/den", ...], "terms": [{"zetas": [...], "coeff": ...}]}
    Generalized {"chart": [...], "koszul": {"n": ..., "k": [...]},
                 "components": [{"zetas": [...], "form": <Form>}]}
    Plot        {"m": m, "target_dim": N, "components": [<Poly over (t, u1..um)>]}
    Expression  {"node": "EvPull"|"Chen"|"Wedge"|"Diff"|"Sum"|"Scale", ...}

Plot documents carry dimensions only; parsing one invents the names
t, u1..um and x1..xN unless a target chart is supplied.  dumps() is the
single canonical renderer (sorted keys, two-space indent, trailing
newline) so equal values always serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .forms import Chart, OrdinaryForm
from .generalized import GeneralizedForm
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
)
from .polyring import MismatchError, Poly


class ParseError(ValueError):
    """A document does not match its declared shape."""


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e


# -- rationals ----------------------------------------------------------------


def frac_to_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def frac_from_str(text: Any) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational {text!r}: {e}") from e


def _expect_list(doc: Any, what: str) -> list:
    if not isinstance(doc, list):
        raise ParseError(f"expected a list for {what}, got {type(doc).__name__}")
    return doc


def _expect_object(doc: Any, what: str) -> dict:
    if not isinstance(doc, dict):
        raise ParseError(f"expected an object for {what}, got {type(doc).__name__}")
    return doc


def _expect_indices(doc: Any, what: str) -> tuple[int, ...]:
    items = _expect_list(doc, what)
    for i in items:
        if not isinstance(i, int) or isinstance(i, bool):
            raise ParseError(f"expected integer indices for {what}, got {i!r}")
    return tuple(items)


# -- polynomials --------------------------------------------------------------


def poly_to_doc(poly: Poly) -> list:
    return [
        {"coeff": frac_to_str(coeff), "exps": list(exps)}
        for exps, coeff in poly.terms.items()
    ]


def poly_from_doc(doc: Any, variables: tuple[str, ...]) -> Poly:
    terms: dict[tuple[int, ...], Fraction] = {}
    for item in _expect_list(doc, "a polynomial"):
        obj = _expect_object(item, "a polynomial term")
        exps = _expect_indices(obj.get("exps"), "term exponents")
        coeff = frac_from_str(obj.get("coeff"))
        if exps in terms:
            raise ParseError(f"duplicate exponent vector {list(exps)}")
        terms[exps] = coeff
    try:
        return Poly(variables, terms)
    except MismatchError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e


# -- charts and forms ---------------------------------------------------------


def chart_to_doc(chart: Chart) -> list:
    return list(chart.coordinates)


def chart_from_doc(doc: Any) -> Chart:
    names = _expect_list(doc, "a chart")
    for name in names:
        if not isinstance(name, str):
            raise ParseError(f"expected coordinate names, got {name!r}")
    try:
        return Chart(tuple(names))
    except ValueError as e:
        raise ParseError(str(e)) from e


def form_to_doc(form: OrdinaryForm) -> dict:
    return {
        "chart": chart_to_doc(form.chart),
        "components": [
            {"indices": list(indices), "poly": poly_to_doc(poly)}
            for indices, poly in form.components.items()
        ],
    }


def form_from_doc(doc: Any) -> OrdinaryForm:
    obj = _expect_object(doc, "a form")
    chart = chart_from_doc(obj.get("chart"))
    components: dict[tuple[int, ...], Poly] = {}
    for item in _expect_list(obj.get("components"), "form components"):
        comp = _expect_object(item, "a form component")
        indices = _expect_indices(comp.get("indices"), "component indices")
        if indices in components:
            raise ParseError(f"duplicate index tuple {list(indices)}")
        components[indices] = poly_from_doc(comp.get("poly"), chart.coordinates)
    try:
        return OrdinaryForm(chart, components)
    except MismatchError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e


# -- the Koszul algebra -------------------------------------------------------


def koszul_params_to_doc(params: KoszulParams) -> dict:
    return {"n": params.n, "k": [frac_to_str(c) for c in params.constants]}


def koszul_params_from_doc(doc: Any) -> KoszulParams:
    obj = _expect_object(doc, "Koszul parameters")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"expected a generator count, got {n!r}")
    constants = [frac_from_str(c) for c in _expect_list(obj.get("k"), "constants")]
    if len(constants) != n:
        raise ParseError(f"expected {n} constants, got {len(constants)}")
    return KoszulParams(tuple(constants))


def koszul_to_doc(element: KoszulElement) -> dict:
    doc = koszul_params_to_doc(element.params)
    doc["terms"] = [
        {"zetas": list(indices), "coeff": frac_to_str(coeff)}
        for indices, coeff in element.terms.items()
    ]
    return doc


def koszul_from_doc(doc: Any) -> KoszulElement:
    obj = _expect_object(doc, "a Koszul element")
    params = koszul_params_from_doc(obj)
    terms: dict[tuple[int, ...], Fraction] = {}
    for item in _expect_list(obj.get("terms"), "Koszul terms"):
        term = _expect_object(item, "a Koszul term")
        indices = _expect_indices(term.get("zetas"), "generator indices")
        if indices in terms:
            raise ParseError(f"duplicate generator tuple {list(indices)}")
        terms[indices] = frac_from_str(term.get("coeff"))
    try:
        return KoszulElement(params, terms)
    except MismatchError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e


# -- generalized forms --------------------------------------------------------


def gen_to_doc(value: GeneralizedForm) -> dict:
    return {
        "chart": chart_to_doc(value.chart),
        "koszul": koszul_params_to_doc(value.params),
        "components": [
            {"zetas": list(indices), "form": form_to_doc(form)}
            for indices, form in value.components.items()
        ],
    }


def gen_from_doc(doc: Any) -> GeneralizedForm:
    obj = _expect_object(doc, "a generalized form")
    chart = chart_from_doc(obj.get("chart"))
    params = koszul_params_from_doc(obj.get("koszul"))
    components: dict[tuple[int, ...], OrdinaryForm] = {}
    for item in _expect_list(obj.get("components"), "components"):
        comp = _expect_object(item, "a component")
        indices = _expect_indices(comp.get("zetas"), "generator indices")
        if indices in components:
            raise ParseError(f"duplicate generator tuple {list(indices)}")
        components[indices] = form_from_doc(comp.get("form"))
    try:
        return GeneralizedForm(chart, params, components)
    except MismatchError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e


# -- plots ---------------------------------------------------------------------


def default_target_chart(dim: int) -> Chart:
    return Chart(tuple(f"x{i + 1}" for i in range(dim)))


def default_domain_chart(m: int) -> Chart:
    return Chart(tuple(f"u{i + 1}" for i in range(m)))


def plot_to_doc(plot: Plot) -> dict:
    return {
        "m": plot.domain.dim,
        "target_dim": plot.target.dim,
        "components": [poly_to_doc(p) for p in plot.components],
    }


def plot_from_doc(doc: Any, target: Chart | None = None) -> Plot:
    """Parse a plot, inventing coordinate names (t, u1..um, x1..xN)
    unless a target chart of the declared dimension is supplied."""
    obj = _expect_object(doc, "a plot")
    m = obj.get("m")
    target_dim = obj.get("target_dim")
    for label, value in (("m", m), ("target_dim", target_dim)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ParseError(f"expected a dimension for {label!r}, got {value!r}")
    if target is None:
        target = default_target_chart(target_dim)
    elif target.dim != target_dim:
        raise MismatchError(
            f"plot targets dimension {target_dim}, chart has {target.dim}"
        )
    domain = default_domain_chart(m)
    cylinder = ("t",) + domain.coordinates
    components = tuple(
        poly_from_doc(item, cylinder)
        for item in _expect_list(obj.get("components"), "plot components")
    )
    try:
        return Plot(target, domain, components)
    except MismatchError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e


# -- path-form expressions ------------------------------------------------------


def expr_to_doc(expr: PathFormExpr) -> dict:
    if isinstance(expr, EvPull):
        return {
            "node": "EvPull",
            "endpoint": expr.endpoint,
            "form": form_to_doc(expr.form),
        }
    if isinstance(expr, Chen):
        return {"node": "Chen", "form": form_to_doc(expr.form)}
    if isinstance(expr, Wedge):
        return {
            "node": "Wedge",
            "left": expr_to_doc(expr.left),
            "right": expr_to_doc(expr.right),
        }
    if isinstance(expr, Diff):
        return {"node": "Diff", "child": expr_to_doc(expr.child)}
    if isinstance(expr, Sum):
        return {"node": "Sum", "children": [expr_to_doc(c) for c in expr.children]}
    if isinstance(expr, Scale):
        return {
            "node": "Scale",
            "coeff": frac_to_str(expr.coeff),
            "child": expr_to_doc(expr.child),
        }
    raise TypeError(f"not a path-form expression: {expr!r}")


def expr_from_doc(doc: Any) -> PathFormExpr:
    obj = _expect_object(doc, "an expression")
    node = obj.get("node")
    if node == "EvPull":
        endpoint = obj.get("endpoint")
        if endpoint not in (0, 1) or isinstance(endpoint, bool):
            raise ParseError(f"expected endpoint 0 or 1, got {endpoint!r}")
        return EvPull(endpoint, form_from_doc(obj.get("form")))
    if node == "Chen":
        return Chen(form_from_doc(obj.get("form")))
    if node == "Wedge":
        return Wedge(expr_from_doc(obj.get("left")), expr_from_doc(obj.get("right")))
    if node == "Diff":
        return Diff(expr_from_doc(obj.get("child")))
    if node == "Sum":
        children = _expect_list(obj.get("children"), "sum children")
        return Sum(tuple(expr_from_doc(c) for c in children))
    if node == "Scale":
        return Scale(frac_from_str(obj.get("coeff")), expr_from_doc(obj.get("child")))
    raise ParseError(f"unknown expression node {node!r}")
