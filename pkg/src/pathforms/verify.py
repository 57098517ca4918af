"""Seeded random generators and named property suites.

Every identity the package is built on is checked here on random
instances with exact equality; there are no tolerances.  Instances are
generated per (seed, suite, trial index), so a report is reproducible
bit-for-bit from its config (elapsed time aside) regardless of
execution order, and every failure carries its inputs serialized in the
JSON interchange format for replay.

Suites accept an optional `mutation` that deliberately breaks the
checked identity in a known way.  Mutations exist so the failure
machinery itself is testable: a suite that cannot flag a planted bug
proves nothing when it passes.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .forms import Chart, OrdinaryForm
from .generalized import GeneralizedForm, pair_encode
from .koszul import KoszulElement, KoszulParams
from .pathspace import (
    Plot,
    chen_integral,
    ev_pullback,
    eval_pathform,
    map_I,
    wedge_prime,
    wedge_prime_explicit,
)
from .polyring import Poly
from .serialize import form_to_doc, gen_to_doc, koszul_to_doc, plot_to_doc
from .witnesses import injectivity_witnesses


@dataclass(frozen=True)
class GenConfig:
    """Bounds and seed for random instance generation."""

    seed: int
    chart_dim: int = 3
    plot_dim: int = 2
    poly_deg: int = 3
    koszul_n: int = 3
    coeff_bound: int = 4
    trials: int = 100

    def __post_init__(self):
        for name in ("chart_dim", "plot_dim", "poly_deg", "koszul_n", "coeff_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")


@dataclass
class SuiteReport:
    """Outcome of one suite run; empty failures means the suite passed."""

    suite: str
    trials: int
    failures: list[dict]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_doc(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "failures": self.failures,
            "elapsed": self.elapsed,
            "passed": self.passed,
        }


def _rng(cfg: GenConfig, label: str, index: int) -> random.Random:
    # string seeding is stable across processes (no hash randomization)
    return random.Random(f"{cfg.seed}:{label}:{index}")


# -- random instances ----------------------------------------------------------


def rand_fraction(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value != 0 or not nonzero:
            return value


def _rand_exponents(rng: random.Random, nvars: int, max_deg: int) -> tuple[int, ...]:
    exps = [0] * nvars
    if nvars:
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def rand_poly(
    rng: random.Random,
    variables: tuple[str, ...],
    max_deg: int,
    bound: int,
    max_terms: int = 3,
) -> Poly:
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[_rand_exponents(rng, len(variables), max_deg)] = rand_fraction(rng, bound)
    return Poly(variables, terms)


def _chart(dim: int) -> Chart:
    return Chart(tuple(f"x{i + 1}" for i in range(dim)))


def rand_form(
    rng: random.Random, chart: Chart, cfg: GenConfig, degree: Optional[int] = None
) -> OrdinaryForm:
    """A random homogeneous form; zero when the degree falls outside
    [0, dim], since those graded slots hold nothing else."""
    if degree is None:
        degree = rng.randint(0, chart.dim)
    if degree < 0 or degree > chart.dim:
        return OrdinaryForm.zero(chart)
    components: dict[tuple[int, ...], Poly] = {}
    for _ in range(rng.randint(1, 2)):
        indices = tuple(sorted(rng.sample(range(chart.dim), degree)))
        components[indices] = rand_poly(
            rng, chart.coordinates, cfg.poly_deg, cfg.coeff_bound
        )
    return OrdinaryForm(chart, components)


def rand_form_mixed(rng: random.Random, chart: Chart, cfg: GenConfig) -> OrdinaryForm:
    out = OrdinaryForm.zero(chart)
    for _ in range(rng.randint(1, 2)):
        out = out + rand_form(rng, chart, cfg)
    return out


def rand_koszul_params(
    rng: random.Random, cfg: GenConfig, n: Optional[int] = None, nonzero: bool = False
) -> KoszulParams:
    if n is None:
        n = rng.randint(1, cfg.koszul_n)
    return KoszulParams(
        tuple(rand_fraction(rng, cfg.coeff_bound, nonzero=nonzero) for _ in range(n))
    )


def rand_koszul(
    rng: random.Random,
    params: KoszulParams,
    cfg: GenConfig,
    degree: Optional[int] = None,
) -> KoszulElement:
    """A random homogeneous element of degree -s; zero outside [-n, 0]."""
    if degree is None:
        degree = -rng.randint(0, params.n)
    size = -degree
    if size < 0 or size > params.n:
        return KoszulElement.zero(params)
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, 2)):
        indices = tuple(sorted(rng.sample(range(params.n), size)))
        terms[indices] = rand_fraction(rng, cfg.coeff_bound)
    return KoszulElement(params, terms)


def rand_koszul_mixed(
    rng: random.Random, params: KoszulParams, cfg: GenConfig
) -> KoszulElement:
    out = KoszulElement.zero(params)
    for _ in range(rng.randint(1, 2)):
        out = out + rand_koszul(rng, params, cfg)
    return out


def rand_genform(
    rng: random.Random,
    chart: Chart,
    params: KoszulParams,
    cfg: GenConfig,
    degree: Optional[int] = None,
) -> GeneralizedForm:
    """A random homogeneous generalized form of the given total degree."""
    if degree is None:
        degree = rng.randint(-params.n, chart.dim)
    components: dict[tuple[int, ...], OrdinaryForm] = {}
    for size in range(params.n + 1):
        ordinary = degree + size
        if ordinary < 0 or ordinary > chart.dim:
            continue
        for indices in itertools.combinations(range(params.n), size):
            if rng.random() < 0.4:
                continue
            components[indices] = rand_form(rng, chart, cfg, degree=ordinary)
    return GeneralizedForm(chart, params, components)


def rand_genform_mixed(
    rng: random.Random, chart: Chart, params: KoszulParams, cfg: GenConfig
) -> GeneralizedForm:
    out = GeneralizedForm.zero(chart, params)
    for _ in range(rng.randint(1, 2)):
        out = out + rand_genform(rng, chart, params, cfg)
    return out


def rand_plot(rng: random.Random, target: Chart, cfg: GenConfig) -> Plot:
    m = rng.randint(1, cfg.plot_dim)
    domain = Chart(tuple(f"u{i + 1}" for i in range(m)))
    cylinder = ("t",) + domain.coordinates
    components = tuple(
        rand_poly(rng, cylinder, cfg.poly_deg, cfg.coeff_bound)
        for _ in range(target.dim)
    )
    return Plot(target, domain, components)


def gen_random(kind: str, cfg: GenConfig, index: int = 0, degree: Optional[int] = None):
    """One random value of the named kind, deterministic in (seed, index)."""
    rng = _rng(cfg, f"gen:{kind}", index)
    chart = _chart(cfg.chart_dim)
    if kind == "poly":
        return rand_poly(rng, chart.coordinates, cfg.poly_deg, cfg.coeff_bound)
    if kind == "form":
        return rand_form(rng, chart, cfg, degree=degree)
    if kind == "genform":
        params = rand_koszul_params(rng, cfg, n=cfg.koszul_n)
        return rand_genform(rng, chart, params, cfg, degree=degree)
    if kind == "plot":
        return rand_plot(rng, chart, cfg)
    raise ValueError(f"unknown kind {kind!r}")


# -- suite plumbing -----------------------------------------------------------


class _Trial:
    """Collects failed checks of one trial with their serialized inputs."""

    def __init__(self, index: int, mutation: Optional[str]):
        self.index = index
        self.mutation = mutation
        self.failures: list[dict] = []

    def check_zero(self, name: str, delta, one, inputs: dict) -> None:
        """Assert delta == 0; `one` is the unit used by the perturb mutation."""
        if self.mutation == "perturb":
            delta = delta + one
        if not delta.is_zero:
            self.failures.append({"trial": self.index, "check": name, "inputs": inputs})

    def check_equal_nonzero(self, name: str, got, expected, one, inputs: dict) -> None:
        if self.mutation == "perturb":
            got = got + one
        if got != expected or got.is_zero:
            self.failures.append({"trial": self.index, "check": name, "inputs": inputs})


def _form_one(chart: Chart) -> OrdinaryForm:
    return OrdinaryForm.from_poly(chart, chart.const(1))


def _require_mutation(mutation: Optional[str], allowed: tuple[str, ...]) -> None:
    if mutation is not None and mutation not in allowed:
        raise ValueError(f"unknown mutation {mutation!r}; expected one of {allowed}")


# -- suites --------------------------------------------------------------------


def _suite_d_squared(cfg: GenConfig, mutation: Optional[str]) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb",))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "d_squared", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))
        form = rand_form_mixed(rng, chart, cfg)
        trial.check_zero(
            "form_d_squared",
            form.d().d(),
            _form_one(chart),
            {"form": form_to_doc(form)},
        )
        params = rand_koszul_params(rng, cfg)
        element = rand_koszul_mixed(rng, params, cfg)
        trial.check_zero(
            "koszul_d_squared",
            element.d().d(),
            KoszulElement.scalar(params, 1),
            {"koszul": koszul_to_doc(element)},
        )
        gen = rand_genform_mixed(rng, chart, params, cfg)
        trial.check_zero(
            "gen_d_squared",
            gen.d().d(),
            GeneralizedForm.one(chart, params),
            {"generalized": gen_to_doc(gen)},
        )
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_leibniz(cfg: GenConfig, mutation: Optional[str]) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb",))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "leibniz", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))

        p = rng.randint(0, chart.dim)
        q = rng.randint(0, chart.dim)
        a = rand_form(rng, chart, cfg, degree=p)
        b = rand_form(rng, chart, cfg, degree=q)
        rhs = a.d().wedge(b)
        term = a.wedge(b.d())
        rhs = rhs + (term if p % 2 == 0 else -term)
        trial.check_zero(
            "form_leibniz",
            a.wedge(b).d() - rhs,
            _form_one(chart),
            {"left": form_to_doc(a), "right": form_to_doc(b)},
        )

        params = rand_koszul_params(rng, cfg)
        s = rng.randint(0, params.n)
        r = rng.randint(0, params.n)
        u = rand_koszul(rng, params, cfg, degree=-s)
        v = rand_koszul(rng, params, cfg, degree=-r)
        krhs = u.d().mul(v)
        kterm = u.mul(v.d())
        krhs = krhs + (kterm if s % 2 == 0 else -kterm)
        trial.check_zero(
            "koszul_leibniz",
            u.mul(v).d() - krhs,
            KoszulElement.scalar(params, 1),
            {"left": koszul_to_doc(u), "right": koszul_to_doc(v)},
        )

        gp = rng.randint(-params.n, chart.dim)
        gq = rng.randint(-params.n, chart.dim)
        ga = rand_genform(rng, chart, params, cfg, degree=gp)
        gb = rand_genform(rng, chart, params, cfg, degree=gq)
        grhs = ga.d().wedge(gb)
        gterm = ga.wedge(gb.d())
        grhs = grhs + (gterm if gp % 2 == 0 else -gterm)
        trial.check_zero(
            "gen_leibniz",
            ga.wedge(gb).d() - grhs,
            GeneralizedForm.one(chart, params),
            {"left": gen_to_doc(ga), "right": gen_to_doc(gb)},
        )
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_supercomm(cfg: GenConfig, mutation: Optional[str]) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb",))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "supercomm", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))
        params = rand_koszul_params(rng, cfg)

        # supercommutativity in all three algebras
        p = rng.randint(0, chart.dim)
        q = rng.randint(0, chart.dim)
        a = rand_form(rng, chart, cfg, degree=p)
        b = rand_form(rng, chart, cfg, degree=q)
        flipped = b.wedge(a)
        trial.check_zero(
            "form_supercomm",
            a.wedge(b) - (flipped if (p * q) % 2 == 0 else -flipped),
            _form_one(chart),
            {"left": form_to_doc(a), "right": form_to_doc(b)},
        )
        s = rng.randint(0, params.n)
        r = rng.randint(0, params.n)
        u = rand_koszul(rng, params, cfg, degree=-s)
        v = rand_koszul(rng, params, cfg, degree=-r)
        kflip = v.mul(u)
        trial.check_zero(
            "koszul_supercomm",
            u.mul(v) - (kflip if (s * r) % 2 == 0 else -kflip),
            KoszulElement.scalar(params, 1),
            {"left": koszul_to_doc(u), "right": koszul_to_doc(v)},
        )
        gp = rng.randint(-params.n, chart.dim)
        gq = rng.randint(-params.n, chart.dim)
        ga = rand_genform(rng, chart, params, cfg, degree=gp)
        gb = rand_genform(rng, chart, params, cfg, degree=gq)
        gflip = gb.wedge(ga)
        trial.check_zero(
            "gen_supercomm",
            ga.wedge(gb) - (gflip if (gp * gq) % 2 == 0 else -gflip),
            GeneralizedForm.one(chart, params),
            {"left": gen_to_doc(ga), "right": gen_to_doc(gb)},
        )

        # associativity (inhomogeneous triples)
        fa, fb, fc = (rand_form_mixed(rng, chart, cfg) for _ in range(3))
        trial.check_zero(
            "form_assoc",
            fa.wedge(fb).wedge(fc) - fa.wedge(fb.wedge(fc)),
            _form_one(chart),
            {"a": form_to_doc(fa), "b": form_to_doc(fb), "c": form_to_doc(fc)},
        )
        ka, kb, kc = (rand_koszul_mixed(rng, params, cfg) for _ in range(3))
        trial.check_zero(
            "koszul_assoc",
            ka.mul(kb).mul(kc) - ka.mul(kb.mul(kc)),
            KoszulElement.scalar(params, 1),
            {"a": koszul_to_doc(ka), "b": koszul_to_doc(kb), "c": koszul_to_doc(kc)},
        )
        za, zb, zc = (rand_genform_mixed(rng, chart, params, cfg) for _ in range(3))
        trial.check_zero(
            "gen_assoc",
            za.wedge(zb).wedge(zc) - za.wedge(zb.wedge(zc)),
            GeneralizedForm.one(chart, params),
            {"a": gen_to_doc(za), "b": gen_to_doc(zb), "c": gen_to_doc(zc)},
        )

        # tensor sign rule: (a x u)(b x v) = (-1)^{|u| deg b} (a ^ b) x (uv)
        ts = rng.randint(0, params.n)
        tu = rand_koszul(rng, params, cfg, degree=-ts)
        tv = rand_koszul(rng, params, cfg, degree=-rng.randint(0, params.n))
        ta = rand_form(rng, chart, cfg, degree=rng.randint(0, chart.dim))
        tq = rng.randint(0, chart.dim)
        tb = rand_form(rng, chart, cfg, degree=tq)

        def tensor(form: OrdinaryForm, kz: KoszulElement) -> GeneralizedForm:
            return GeneralizedForm.from_form(form, params).wedge(
                GeneralizedForm.from_koszul(chart, kz)
            )

        expected = tensor(ta.wedge(tb), tu.mul(tv))
        if (ts * tq) % 2:
            expected = -expected
        trial.check_zero(
            "tensor_sign_rule",
            tensor(ta, tu).wedge(tensor(tb, tv)) - expected,
            GeneralizedForm.one(chart, params),
            {
                "a": form_to_doc(ta),
                "u": koszul_to_doc(tu),
                "b": form_to_doc(tb),
                "v": koszul_to_doc(tv),
            },
        )
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_pair_equivalence(
    cfg: GenConfig, mutation: Optional[str]
) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb", "wedge_sign", "drop_k"))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "pair_equivalence", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))
        k = rand_fraction(rng, cfg.coeff_bound, nonzero=True)
        params = KoszulParams((k,))
        one = GeneralizedForm.one(chart, params)

        p = rng.randint(-1, chart.dim)
        q = rng.randint(-1, chart.dim)
        a_p = rand_form(rng, chart, cfg, degree=p)
        a_next = rand_form(rng, chart, cfg, degree=p + 1)
        b_q = rand_form(rng, chart, cfg, degree=q)
        b_next = rand_form(rng, chart, cfg, degree=q + 1)
        enc_a = pair_encode(a_p, a_next, k)
        enc_b = pair_encode(b_q, b_next, k)
        inputs = {"left": gen_to_doc(enc_a), "right": gen_to_doc(enc_b)}

        # product: (a_p b_q, a_p b_{q+1} + (-1)^q a_{p+1} b_q)
        sign_q = 1 if q % 2 == 0 else -1
        if mutation == "wedge_sign":
            sign_q = -sign_q
        cross = a_next.wedge(b_q)
        second = a_p.wedge(b_next) + (cross if sign_q > 0 else -cross)
        formula = pair_encode(a_p.wedge(b_q), second, k)
        trial.check_zero("pair_wedge", enc_a.wedge(enc_b) - formula, one, inputs)

        # differential: (d a_p + (-1)^{p+1} k a_{p+1}, d a_next)
        sign_p = 1 if (p + 1) % 2 == 0 else -1
        kterm = a_next.scale(sign_p * k)
        if mutation == "drop_k":
            kterm = OrdinaryForm.zero(chart)
        dformula = pair_encode(a_p.d() + kterm, a_next.d(), k)
        trial.check_zero(
            "pair_d", enc_a.d() - dformula, one, {"left": gen_to_doc(enc_a)}
        )
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_chain_homotopy(
    cfg: GenConfig, mutation: Optional[str]
) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb",))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "chain_homotopy", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))
        form = rand_form(rng, chart, cfg)
        plot = rand_plot(rng, chart, cfg)
        lhs = chen_integral(form.d(), plot) + chen_integral(form, plot).d()
        rhs = ev_pullback(1, form, plot) - ev_pullback(0, form, plot)
        trial.check_zero(
            "chain_homotopy",
            lhs - rhs,
            _form_one(plot.domain),
            {"form": form_to_doc(form), "plot": plot_to_doc(plot)},
        )
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_dI_commute(
    cfg: GenConfig, mutation: Optional[str]
) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb",))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "dI_commute", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))
        params = rand_koszul_params(rng, cfg, n=1, nonzero=True)
        alpha = rand_genform_mixed(rng, chart, params, cfg)
        plot = rand_plot(rng, chart, cfg)
        lhs = eval_pathform(map_I(alpha.d()), plot)
        rhs = eval_pathform(map_I(alpha), plot).d()
        trial.check_zero(
            "dI_commute",
            lhs - rhs,
            _form_one(plot.domain),
            {"generalized": gen_to_doc(alpha), "plot": plot_to_doc(plot)},
        )
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_kernel(cfg: GenConfig, mutation: Optional[str]) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb", "perturb_element"))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "kernel", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))
        k = rand_fraction(rng, cfg.coeff_bound, nonzero=True)
        f = OrdinaryForm.from_poly(
            chart, rand_poly(rng, chart.coordinates, cfg.poly_deg, cfg.coeff_bound)
        )
        g = OrdinaryForm.from_poly(
            chart, rand_poly(rng, chart.coordinates, cfg.poly_deg, cfg.coeff_bound)
        )
        zero = OrdinaryForm.zero(chart)
        element = pair_encode(zero, g, k) + pair_encode(zero, f, k).d()
        if mutation == "perturb_element":
            element = pair_encode(f, f.d().scale(2 / k), k)
        plot = rand_plot(rng, chart, cfg)
        trial.check_zero(
            "kernel",
            eval_pathform(map_I(element), plot),
            _form_one(plot.domain),
            {"element": gen_to_doc(element), "plot": plot_to_doc(plot)},
        )
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_wedge_prime(
    cfg: GenConfig, mutation: Optional[str]
) -> tuple[int, list[dict]]:
    _require_mutation(mutation, ("perturb",))
    failures: list[dict] = []
    for i in range(cfg.trials):
        rng = _rng(cfg, "wedge_prime", i)
        trial = _Trial(i, mutation)
        chart = _chart(rng.randint(1, cfg.chart_dim))
        params = rand_koszul_params(rng, cfg, n=1, nonzero=True)
        p = rng.randint(1, chart.dim)
        q = rng.randint(1, chart.dim)
        a = rand_genform(rng, chart, params, cfg, degree=p)
        b = rand_genform(rng, chart, params, cfg, degree=q)
        plot = rand_plot(rng, chart, cfg)
        one = _form_one(plot.domain)
        inputs = {
            "left": gen_to_doc(a),
            "right": gen_to_doc(b),
            "plot": plot_to_doc(plot),
        }

        product = eval_pathform(wedge_prime(a, b), plot)
        explicit = eval_pathform(wedge_prime_explicit(a, b), plot)
        trial.check_zero("wedge_prime_explicit", product - explicit, one, inputs)

        flipped = eval_pathform(wedge_prime(b, a), plot)
        trial.check_zero(
            "wedge_prime_supercomm",
            product - (flipped if (p * q) % 2 == 0 else -flipped),
            one,
            inputs,
        )

        left = eval_pathform(wedge_prime(a.d(), b), plot)
        right = eval_pathform(wedge_prime(a, b.d()), plot)
        rhs = left + (right if p % 2 == 0 else -right)
        trial.check_zero("wedge_prime_leibniz", product.d() - rhs, one, inputs)
        failures.extend(trial.failures)
    return cfg.trials, failures


def _suite_injectivity_witness(
    cfg: GenConfig, mutation: Optional[str]
) -> tuple[int, list[dict]]:
    # fixed witnesses: the trial count is the witness count, not cfg.trials
    _require_mutation(mutation, ("perturb",))
    failures: list[dict] = []
    witnesses = injectivity_witnesses()
    for i, witness in enumerate(witnesses):
        trial = _Trial(i, mutation)
        value = eval_pathform(map_I(witness.alpha), witness.plot)
        trial.check_equal_nonzero(
            "injectivity_witness",
            value,
            witness.expected,
            _form_one(witness.plot.domain),
            {
                "witness": witness.label,
                "alpha": gen_to_doc(witness.alpha),
                "plot": plot_to_doc(witness.plot),
                "expected": form_to_doc(witness.expected),
            },
        )
        failures.extend(trial.failures)
    return len(witnesses), failures


_SUITES: dict[str, Callable[[GenConfig, Optional[str]], tuple[int, list[dict]]]] = {
    "d_squared": _suite_d_squared,
    "leibniz": _suite_leibniz,
    "supercomm": _suite_supercomm,
    "pair_equivalence": _suite_pair_equivalence,
    "chain_homotopy": _suite_chain_homotopy,
    "dI_commute": _suite_dI_commute,
    "kernel": _suite_kernel,
    "wedge_prime": _suite_wedge_prime,
    "injectivity_witness": _suite_injectivity_witness,
}

ALL_SUITES = tuple(_SUITES)


def run_suite(name: str, cfg: GenConfig, mutation: Optional[str] = None) -> SuiteReport:
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {ALL_SUITES}")
    start = time.perf_counter()
    trials, failures = _SUITES[name](cfg, mutation)
    elapsed = round(time.perf_counter() - start, 6)
    return SuiteReport(name, trials, failures, elapsed)


def run_all(cfg: GenConfig) -> list[SuiteReport]:
    return [run_suite(name, cfg) for name in ALL_SUITES]
