"""Exact sparse multivariate polynomial arithmetic over the rationals.

A Poly couples an ordered tuple of variable names with a mapping from
exponent vectors (one non-negative integer per variable) to nonzero
Fraction coefficients::

    5/2 * x**2 * y   over ("x", "y")   ->   {(2, 1): Fraction(5, 2)}

The zero polynomial has an empty term mapping.  Constructors strip zero
coefficients and sort exponent keys, so two polynomials over the same
variable list are equal exactly when their term mappings are equal, and
equality is plain structural comparison.  All arithmetic is exact;
nothing here ever rounds.

Variable lists are explicit and ordered.  Mixing polynomials over
different variable lists raises MismatchError, never an implicit union:
silent unification is how pullback bugs hide.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

#: Scalars are exact rationals throughout the package.
Rational = Fraction

RationalLike = Union[Fraction, int]


class MismatchError(ValueError):
    """Operands disagree about variable lists, charts, or structure constants."""


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are rejected."""
    if isinstance(value, float):
        raise TypeError("floats are not allowed in exact arithmetic; use Fraction")
    return Fraction(value)


class Poly:
    """A multivariate polynomial in canonical form.

    `variables` is the ordered tuple of variable names; `terms` maps each
    exponent tuple (aligned with `variables`) to its nonzero Fraction
    coefficient.
    """

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Iterable[str],
        terms: Mapping[tuple[int, ...], RationalLike] | None = None,
    ):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names!r}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            c = as_fraction(coeff)
            if c == 0:
                continue
            e = tuple(int(x) for x in exps)
            if len(e) != len(names):
                raise ValueError(
                    f"exponent tuple {e!r} does not match variables {names!r}"
                )
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e!r}")
            clean[e] = c
        self.variables = names
        self.terms = dict(sorted(clean.items()))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> Poly:
        return cls(variables)

    @classmethod
    def const(cls, variables: Iterable[str], value: RationalLike) -> Poly:
        names = tuple(variables)
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def var(cls, variables: Iterable[str], name: str) -> Poly:
        names = tuple(variables)
        if name not in names:
            raise MismatchError(f"unknown variable {name!r} in {names!r}")
        exps = tuple(1 if v == name else 0 for v in names)
        return cls(names, {exps: 1})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    # -- ring operations ---------------------------------------------------

    def _require_same_variables(self, other: Poly) -> None:
        if self.variables != other.variables:
            raise MismatchError(
                f"variable lists differ: {self.variables!r} vs {other.variables!r}"
            )

    def _coerce(self, other: Union[Poly, RationalLike]) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(self.variables, other)

    def __add__(self, other: Union[Poly, RationalLike]) -> Poly:
        other = self._coerce(other)
        self._require_same_variables(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Poly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union[Poly, RationalLike]) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: RationalLike) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other: Union[Poly, RationalLike]) -> Poly:
        other = self._coerce(other)
        self._require_same_variables(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return Poly(self.variables, out)

    __rmul__ = __mul__

    # -- calculus ----------------------------------------------------------

    def _var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise MismatchError(
                f"unknown variable {name!r} in {self.variables!r}"
            ) from None

    def pderiv(self, name: str) -> Poly:
        """Exact partial derivative with respect to one variable."""
        i = self._var_index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            n = exps[i]
            if n == 0:
                continue
            e = list(exps)
            e[i] = n - 1
            out[tuple(e)] = coeff * n
        return Poly(self.variables, out)

    def defint01(self, name: str) -> Poly:
        """Definite integral over name in [0, 1]: t^n * m  ->  m / (n + 1).

        The result no longer depends on `name` but keeps the same variable
        list (the exponent is zero everywhere).
        """
        i = self._var_index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            n = e[i]
            e[i] = 0
            key = tuple(e)
            out[key] = out.get(key, Fraction(0)) + coeff / (n + 1)
        return Poly(self.variables, out)

    def compose(
        self,
        subst: Mapping[str, Poly],
        variables: Iterable[str] | None = None,
    ) -> Poly:
        """Substitute a polynomial for every variable (exact composition).

        All substituted polynomials must share one variable list, which
        becomes the result's variable list.  For polynomials over an empty
        variable list pass `variables` explicitly to name the target.
        """
        missing = [v for v in self.variables if v not in subst]
        if missing:
            raise MismatchError(f"missing substitution for {missing!r}")
        images = [subst[v] for v in self.variables]
        if variables is not None:
            target = tuple(variables)
        elif images:
            target = images[0].variables
        else:
            raise MismatchError(
                "composition away from an empty variable list needs variables="
            )
        for image in images:
            if image.variables != target:
                raise MismatchError(
                    f"substituted polynomials mix variable lists: "
                    f"{image.variables!r} vs {target!r}"
                )
        out = Poly.zero(target)
        for exps, coeff in self.terms.items():
            term = Poly.const(target, coeff)
            for image, n in zip(images, exps):
                for _ in range(n):
                    term = term * image
            out = out + term
        return out

    def set_var(self, name: str, value: RationalLike) -> Poly:
        """Substitute a rational constant for one variable, keeping the list."""
        i = self._var_index(name)
        c = as_fraction(value)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            n = e[i]
            e[i] = 0
            key = tuple(e)
            out[key] = out.get(key, Fraction(0)) + coeff * c**n
        return Poly(self.variables, out)

    def drop_var(self, name: str) -> Poly:
        """Remove a variable the polynomial does not actually use."""
        i = self._var_index(name)
        if any(exps[i] for exps in self.terms):
            raise MismatchError(f"polynomial still depends on {name!r}")
        names = self.variables[:i] + self.variables[i + 1 :]
        return Poly(names, {e[:i] + e[i + 1 :]: c for e, c in self.terms.items()})

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.terms.items():
            factors = [
                v if n == 1 else f"{v}^{n}"
                for v, n in zip(self.variables, exps)
                if n
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([str(coeff)] + factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({self.variables!r}, {self.terms!r})"
