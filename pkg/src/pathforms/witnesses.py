"""Fixed instances with hand-checked evaluations.

Injectivity of the path-space transfer in degrees >= 1 is a universally
quantified statement with no finite test; what can be shipped is a list
of concrete nonzero elements together with a plot on which each one's
image evaluates to a known nonzero form.  The kernel description gets
the dual treatment: a deliberately perturbed near-kernel element whose
image is nonzero on a shipped plot, so a broken implementation cannot
pass the kernel suite by mapping everything to zero.

Every `expected` value below was computed by hand before being frozen
here; the tests compare against these exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import Chart, OrdinaryForm, dx
from .generalized import GeneralizedForm, pair_encode
from .pathspace import Plot
from .polyring import Poly


@dataclass(frozen=True)
class Witness:
    """A generalized form, a plot, and the exact evaluation of its image."""

    label: str
    alpha: GeneralizedForm
    plot: Plot
    expected: OrdinaryForm


def _line_plot() -> Plot:
    # x1 = t * u1
    target = Chart(("x1",))
    domain = Chart(("u1",))
    cyl = ("t", "u1")
    tu = Poly.var(cyl, "t") * Poly.var(cyl, "u1")
    return Plot(target, domain, (tu,))


def injectivity_witnesses() -> tuple[Witness, ...]:
    w1_target = Chart(("x1",))
    w1_domain = Chart(("u1",))
    w1 = Witness(
        "degree 1, endpoint part",
        pair_encode(dx(w1_target, 0), OrdinaryForm.zero(w1_target), 1),
        _line_plot(),
        dx(w1_domain, 0),
    )

    # x1 = t, x2 = t * u1: the t-integral of dx1 ^ dx2 is (1/2) du1
    w2_target = Chart(("x1", "x2"))
    w2_domain = Chart(("u1",))
    cyl = ("t", "u1")
    t = Poly.var(cyl, "t")
    u1 = Poly.var(cyl, "u1")
    w2 = Witness(
        "degree 1, integral part",
        pair_encode(OrdinaryForm.zero(w2_target), dx(w2_target, 0, 1), 1),
        Plot(w2_target, w2_domain, (t, t * u1)),
        OrdinaryForm.basis(w2_domain, (0,), Fraction(1, 2)),
    )

    # x1 = t * u1, x2 = t * u2: endpoint pullback of dx1 ^ dx2 is du1 ^ du2
    w3_target = Chart(("x1", "x2"))
    w3_domain = Chart(("u1", "u2"))
    cyl3 = ("t", "u1", "u2")
    t3 = Poly.var(cyl3, "t")
    w3 = Witness(
        "degree 2, endpoint part",
        pair_encode(dx(w3_target, 0, 1), OrdinaryForm.zero(w3_target), 1),
        Plot(w3_target, w3_domain, (t3 * Poly.var(cyl3, "u1"), t3 * Poly.var(cyl3, "u2"))),
        dx(w3_domain, 0).wedge(dx(w3_domain, 1)),
    )
    return (w1, w2, w3)


def kernel_negative_control() -> Witness:
    """f + 2 k^{-1} (df) z, twice the kernel coefficient: its image
    evaluates to minus the endpoint difference of f, here -u1."""
    target = Chart(("x1",))
    domain = Chart(("u1",))
    f = OrdinaryForm.from_poly(target, target.var(0))
    alpha = pair_encode(f, dx(target, 0).scale(2), 1)
    return Witness(
        "perturbed kernel element",
        alpha,
        _line_plot(),
        OrdinaryForm.from_poly(domain, -domain.var(0)),
    )
