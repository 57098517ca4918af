"""Polynomial-coefficient differential forms on a coordinate chart.

A form is a mapping from strictly increasing tuples of 0-based
coordinate indices to nonzero Poly coefficients over the chart's
coordinates; the empty tuple indexes the function (degree 0) part.
The basis form dx_I is the wedge of coordinate differentials in
increasing index order, and every sign in the algebra is the parity of
the permutation sorting a concatenation of index tuples.

Forms may mix degrees: a general element is a formal sum of homogeneous
pieces, and degree-specific operations act componentwise.  Degrees
outside [0, dim] cannot be represented, matching the vanishing of those
graded slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .polyring import MismatchError, Poly, RationalLike
from .signs import merge_indices, sort_with_sign


@dataclass(frozen=True)
class Chart:
    """An ordered tuple of distinct coordinate names (dimension may be 0)."""

    coordinates: tuple[str, ...]

    def __post_init__(self):
        coords = tuple(self.coordinates)
        object.__setattr__(self, "coordinates", coords)
        if len(set(coords)) != len(coords):
            raise ValueError(f"coordinate names must be distinct: {coords!r}")

    @property
    def dim(self) -> int:
        return len(self.coordinates)

    def const(self, value: RationalLike) -> Poly:
        return Poly.const(self.coordinates, value)

    def var(self, index: int) -> Poly:
        return Poly.var(self.coordinates, self.coordinates[index])


class OrdinaryForm:
    """A differential form with Poly coefficients on a fixed chart."""

    __slots__ = ("chart", "components")

    def __init__(
        self,
        chart: Chart,
        components: Mapping[tuple[int, ...], Poly] | None = None,
    ):
        clean: dict[tuple[int, ...], Poly] = {}
        for indices, poly in (components or {}).items():
            idx = tuple(int(i) for i in indices)
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index tuple {idx!r} is not strictly increasing")
            if idx and (idx[0] < 0 or idx[-1] >= chart.dim):
                raise ValueError(f"index tuple {idx!r} out of range for {chart!r}")
            if poly.variables != chart.coordinates:
                raise MismatchError(
                    f"coefficient over {poly.variables!r} does not live on {chart!r}"
                )
            if poly.is_zero:
                continue
            clean[idx] = poly
        self.chart = chart
        self.components = dict(sorted(clean.items(), key=lambda kv: (len(kv[0]), kv[0])))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart) -> OrdinaryForm:
        return cls(chart)

    @classmethod
    def from_poly(cls, chart: Chart, poly: Poly) -> OrdinaryForm:
        """The 0-form with the given coefficient function."""
        return cls(chart, {(): poly})

    @classmethod
    def basis(
        cls,
        chart: Chart,
        indices: tuple[int, ...],
        coeff: Union[Poly, RationalLike] = 1,
    ) -> OrdinaryForm:
        """coeff * dx_I for a strictly increasing index tuple I."""
        poly = coeff if isinstance(coeff, Poly) else chart.const(coeff)
        return cls(chart, {tuple(indices): poly})

    # -- predicates and degree bookkeeping -----------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrdinaryForm):
            return NotImplemented
        return self.chart == other.chart and self.components == other.components

    def degrees(self) -> set[int]:
        """The set of degrees with a nonzero component."""
        return {len(indices) for indices in self.components}

    def degree(self) -> Optional[int]:
        """Degree of a homogeneous form; None for zero, error when mixed."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"form mixes degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        """Zero counts as homogeneous of every degree."""
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def homogeneous_parts(self) -> dict[int, OrdinaryForm]:
        parts: dict[int, dict[tuple[int, ...], Poly]] = {}
        for indices, poly in self.components.items():
            parts.setdefault(len(indices), {})[indices] = poly
        return {p: OrdinaryForm(self.chart, comp) for p, comp in parts.items()}

    def part(self, degree: int) -> OrdinaryForm:
        """The homogeneous piece of the given degree (zero when absent)."""
        comp = {i: f for i, f in self.components.items() if len(i) == degree}
        return OrdinaryForm(self.chart, comp)

    # -- linear structure ----------------------------------------------------

    def _require_same_chart(self, other: OrdinaryForm) -> None:
        if self.chart != other.chart:
            raise MismatchError(f"charts differ: {self.chart!r} vs {other.chart!r}")

    def __add__(self, other: OrdinaryForm) -> OrdinaryForm:
        self._require_same_chart(other)
        out = dict(self.components)
        for indices, poly in other.components.items():
            prev = out.get(indices)
            out[indices] = poly if prev is None else prev + poly
        return OrdinaryForm(self.chart, out)

    def __neg__(self) -> OrdinaryForm:
        return OrdinaryForm(self.chart, {i: -p for i, p in self.components.items()})

    def __sub__(self, other: OrdinaryForm) -> OrdinaryForm:
        return self + (-other)

    def scale(self, value: Union[Poly, RationalLike]) -> OrdinaryForm:
        factor = value if isinstance(value, Poly) else self.chart.const(value)
        return OrdinaryForm(
            self.chart, {i: p * factor for i, p in self.components.items()}
        )

    # -- graded algebra ------------------------------------------------------

    def wedge(self, other: OrdinaryForm) -> OrdinaryForm:
        """Exterior product; signs from the merge parity of index tuples."""
        self._require_same_chart(other)
        acc: dict[tuple[int, ...], Poly] = {}
        for left, f in self.components.items():
            for right, g in other.components.items():
                merged = merge_indices(left, right)
                if merged is None:
                    continue
                sign, key = merged
                term = f * g
                if sign < 0:
                    term = -term
                prev = acc.get(key)
                acc[key] = term if prev is None else prev + term
        return OrdinaryForm(self.chart, acc)

    def d(self) -> OrdinaryForm:
        """Exterior differential: f dx_I  ->  sum_j (d_j f) dx_j ^ dx_I."""
        acc: dict[tuple[int, ...], Poly] = {}
        for indices, poly in self.components.items():
            for j, name in enumerate(self.chart.coordinates):
                df = poly.pderiv(name)
                if df.is_zero:
                    continue
                merged = merge_indices((j,), indices)
                if merged is None:
                    continue
                sign, key = merged
                term = df if sign > 0 else -df
                prev = acc.get(key)
                acc[key] = term if prev is None else prev + term
        return OrdinaryForm(self.chart, acc)

    def __repr__(self) -> str:
        if not self.components:
            return "OrdinaryForm(0)"
        parts = [
            f"({poly})*dx{list(indices)}" if indices else f"({poly})"
            for indices, poly in self.components.items()
        ]
        return "OrdinaryForm(" + " + ".join(parts) + ")"


def dx(chart: Chart, *indices: int) -> OrdinaryForm:
    """The wedge of coordinate differentials dx_{i1} ^ ... ^ dx_{ip}.

    Indices may come in any order (parity signs applied); a repeated index
    gives the zero form.
    """
    sorted_ = sort_with_sign(tuple(indices))
    if sorted_ is None:
        return OrdinaryForm.zero(chart)
    sign, key = sorted_
    return OrdinaryForm.basis(chart, key, sign)


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map between charts: one source-coordinate Poly per
    target coordinate."""

    source: Chart
    target: Chart
    components: tuple[Poly, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.target.dim:
            raise MismatchError(
                f"expected {self.target.dim} components, got {len(comps)}"
            )
        for poly in comps:
            if poly.variables != self.source.coordinates:
                raise MismatchError(
                    f"component over {poly.variables!r} does not live on "
                    f"{self.source!r}"
                )

    @classmethod
    def identity(cls, chart: Chart) -> PolyMap:
        return cls(chart, chart, tuple(chart.var(i) for i in range(chart.dim)))

    def compose_poly(self, poly: Poly) -> Poly:
        """Pull a target-chart function back along the map (composition)."""
        if poly.variables != self.target.coordinates:
            raise MismatchError(
                f"polynomial over {poly.variables!r} does not live on {self.target!r}"
            )
        subst = dict(zip(self.target.coordinates, self.components))
        return poly.compose(subst, variables=self.source.coordinates)

    def differentials(self) -> tuple[OrdinaryForm, ...]:
        """The 1-forms d(m_i) on the source chart, one per target coordinate."""
        out = []
        for poly in self.components:
            out.append(OrdinaryForm.from_poly(self.source, poly).d())
        return tuple(out)

    def pullback(self, form: OrdinaryForm) -> OrdinaryForm:
        """f dx_I  ->  (f o m) dm_{i1} ^ ... ^ dm_{ip} on the source chart."""
        if form.chart != self.target:
            raise MismatchError(
                f"form on {form.chart!r} cannot pull back along a map into "
                f"{self.target!r}"
            )
        dms = self.differentials()
        out = OrdinaryForm.zero(self.source)
        for indices, poly in form.components.items():
            term = OrdinaryForm.from_poly(self.source, self.compose_poly(poly))
            for i in indices:
                term = term.wedge(dms[i])
            out = out + term
        return out
