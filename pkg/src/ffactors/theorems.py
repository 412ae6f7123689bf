"""Hypothesis checkers for the sufficient conditions, plus the empirical
validation campaign driver.

Each checker evaluates every hypothesis of its condition with exact
arithmetic and returns a HypothesisReport; a sufficient condition predicts
an f-factor only when all hypotheses hold, and says nothing otherwise.
With ``confirm=True`` a met prediction is checked against the constructive
solver, and any disagreement is flagged as a refutation (which the test
suite treats as fatal).

Theorem identifiers:

  ``main``              stability bound + odd-toughness >= 1/a
  ``kappa_corollary``   stability bound strengthened by min(. , a*kappa)
  ``min_degree``        minimum-degree condition delta >= b|X|/(a+b)
  ``regular_connectivity``  r-factor via connectivity and stability
  ``ab_factor``         [a,b]-factor via stability and minimum degree
  ``claw_free``         K_{1,n}-free condition
  ``stability_conjecture``  the stability bound alone (refuted by g0)
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import DegreeSpec, Graph, is_connected, is_star_free, min_degree
from .invariants import is_t_odd_tough, stability_number, vertex_connectivity
from .constructions import stability_bound
from .solver import (
    FactorSubgraph,
    brute_force_ab_factor,
    find_f_factor,
    verify_f_factor,
)

THEOREM_IDS = (
    "main",
    "kappa_corollary",
    "min_degree",
    "regular_connectivity",
    "ab_factor",
    "claw_free",
    "stability_conjecture",
)


@dataclass
class Hypothesis:
    name: str
    observed: str
    satisfied: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "observed": self.observed,
                "satisfied": self.satisfied}


@dataclass
class HypothesisReport:
    theorem: str
    conclusion: str
    hypotheses: list[Hypothesis] = field(default_factory=list)
    confirmation: str | None = None  # "confirmed" | "refuted" | None
    factor: FactorSubgraph | None = None

    @property
    def hypotheses_met(self) -> bool:
        return all(h.satisfied for h in self.hypotheses)

    @property
    def prediction(self) -> str:
        return self.conclusion if self.hypotheses_met else "no prediction"

    def add(self, name: str, observed: str, satisfied: bool) -> None:
        self.hypotheses.append(Hypothesis(name, observed, bool(satisfied)))

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "hypotheses_met": self.hypotheses_met,
            "prediction": self.prediction,
            "confirmation": self.confirmation,
            "factor": None if self.factor is None else [list(e) for e in self.factor.edges],
        }


def main_bound(a: int, b: int, delta: int) -> Fraction:
    """Exact rational 4a(delta - b)/(b+1)^2."""
    return stability_bound(a, b, delta)


def _check_f_range(report: HypothesisReport, f: DegreeSpec, a: int, b: int) -> None:
    ok = all(a <= fv <= b for fv in f.values)
    report.add("f_range", f"a={a} <= f <= b={b}", ok)


def _check_parity(report: HypothesisReport, f: DegreeSpec) -> None:
    total = f.total()
    report.add("f_total_even", f"f(X) = {total}", total % 2 == 0)


def _confirm(report: HypothesisReport, g: Graph, f: DegreeSpec) -> None:
    factor = find_f_factor(g, f)
    if factor is not None and verify_f_factor(g, f, factor):
        report.confirmation = "confirmed"
        report.factor = factor
    else:
        report.confirmation = "refuted"


def check_main_theorem(
    g: Graph, f: DegreeSpec, a: int, b: int,
    confirm: bool = False, toughness_max_n: int = 20,
) -> HypothesisReport:
    """Connected, delta >= b >= 2, a <= f <= b with a >= 1, f(X) even,
    alpha <= 4a(delta-b)/(b+1)^2, odd-toughness >= 1/a."""
    report = HypothesisReport("main", "f-factor exists")
    connected = is_connected(g) and g.n > 0
    report.add("connected", f"n={g.n}", connected)
    report.add("b_at_least_2", f"b={b}", b >= 2)
    report.add("a_at_least_1", f"a={a}", a >= 1)
    delta = min_degree(g)
    report.add("min_degree", f"delta={delta} >= b={b}", delta >= b)
    _check_f_range(report, f, a, b)
    _check_parity(report, f)
    if connected and b >= 2 and a >= 1 and delta >= b:
        alpha, _ = stability_number(g)
        bound = main_bound(a, b, delta)
        report.add("stability", f"alpha={alpha} <= {bound}", alpha <= bound)
        tough = is_t_odd_tough(g, f, Fraction(1, a), max_n=toughness_max_n)
        report.add("odd_toughness", f"odd-toughness >= 1/{a}", tough)
    else:
        report.add("stability", "not evaluated (prior hypothesis failed)", False)
        report.add("odd_toughness", "not evaluated (prior hypothesis failed)", False)
    if confirm and report.hypotheses_met:
        _confirm(report, g, f)
    return report


def check_corollary_kappa(
    g: Graph, f: DegreeSpec, a: int, b: int, confirm: bool = False
) -> HypothesisReport:
    """Variant with alpha <= min(4a(delta-b)/(b+1)^2, a*kappa)."""
    report = HypothesisReport("kappa_corollary", "f-factor exists")
    connected = is_connected(g) and g.n > 0
    report.add("connected", f"n={g.n}", connected)
    report.add("b_at_least_2", f"b={b}", b >= 2)
    report.add("a_at_least_1", f"a={a}", a >= 1)
    delta = min_degree(g)
    report.add("min_degree", f"delta={delta} >= b={b}", delta >= b)
    _check_f_range(report, f, a, b)
    _check_parity(report, f)
    if connected and b >= 2 and a >= 1 and delta >= b:
        alpha, _ = stability_number(g)
        kappa = vertex_connectivity(g)
        bound = min(main_bound(a, b, delta), Fraction(a * kappa))
        report.add(
            "stability",
            f"alpha={alpha} <= min(bound, a*kappa)={bound}",
            alpha <= bound,
        )
    else:
        report.add("stability", "not evaluated (prior hypothesis failed)", False)
    if confirm and report.hypotheses_met:
        _confirm(report, g, f)
    return report


def check_theorem_min_degree(
    g: Graph, f: DegreeSpec, a: int, b: int, confirm: bool = False
) -> HypothesisReport:
    """delta >= b|X|/(a+b) and |X| > (a+b)(a+b-3)/a, with a <= f <= b and
    f(X) even."""
    if not 1 <= a <= b:
        raise ValueError("need 1 <= a <= b")
    report = HypothesisReport("min_degree", "f-factor exists")
    n = g.n
    delta = min_degree(g)
    report.add(
        "min_degree",
        f"delta={delta} >= b|X|/(a+b)={Fraction(b * n, a + b)}",
        delta >= Fraction(b * n, a + b),
    )
    order_bound = Fraction((a + b) * (a + b - 3), a)
    report.add("order", f"|X|={n} > {order_bound}", n > order_bound)
    _check_f_range(report, f, a, b)
    _check_parity(report, f)
    if confirm and report.hypotheses_met:
        _confirm(report, g, f)
    return report


def check_theorem_regular_connectivity(
    g: Graph, r: int, confirm: bool = False
) -> HypothesisReport:
    """r odd: |X| even, kappa >= (r+1)^2/2, alpha <= 4r*kappa/(r+1)^2
    gives an r-factor."""
    if r < 1 or r % 2 == 0:
        raise ValueError("need odd r >= 1")
    report = HypothesisReport("regular_connectivity", f"{r}-factor exists")
    report.add("even_order", f"|X|={g.n}", g.n % 2 == 0)
    kappa = vertex_connectivity(g)
    kappa_bound = Fraction((r + 1) ** 2, 2)
    report.add("connectivity", f"kappa={kappa} >= {kappa_bound}", kappa >= kappa_bound)
    alpha, _ = stability_number(g)
    alpha_bound = Fraction(4 * r * kappa, (r + 1) ** 2)
    report.add("stability", f"alpha={alpha} <= {alpha_bound}", alpha <= alpha_bound)
    if confirm and report.hypotheses_met:
        _confirm(report, g, DegreeSpec((r,) * g.n))
    return report


def check_theorem_ab_factor(
    g: Graph, a: int, b: int, confirm: bool = False, oracle_max_m: int = 24
) -> HypothesisReport:
    """Stability vs minimum degree condition for an [a,b]-factor; the bound
    depends on the parity of a.  Confirmation is by the brute-force oracle
    and only at tiny scale."""
    if b <= a:
        raise ValueError("need b >= a + 1")
    report = HypothesisReport("ab_factor", f"[{a},{b}]-factor exists")
    delta = min_degree(g)
    if a % 2 == 1:
        bound = Fraction(4 * b * (delta - a + 1), (a + 1) ** 2)
        which = "odd-a bound"
    else:
        bound = Fraction(4 * b * (delta - a + 1), a * (a + 2))
        which = "even-a bound"
    alpha, _ = stability_number(g)
    report.add("stability", f"alpha={alpha} <= {bound} ({which})", alpha <= bound)
    if confirm and report.hypotheses_met and g.m <= oracle_max_m:
        factor = brute_force_ab_factor(g, a, b, max_m=oracle_max_m)
        report.confirmation = "confirmed" if factor is not None else "refuted"
        report.factor = factor
    return report


def check_theorem_claw_free(
    g: Graph, f: DegreeSpec, a: int, b: int, star_order: int,
    confirm: bool = False,
) -> HypothesisReport:
    """K_{1,n}-free condition with n = star_order: connected, star-free,
    delta >= b+n-1, alpha <= 4a(delta-b-n+1)/((n-1)(b+1)^2)."""
    n = star_order
    if not 1 <= n - 1 <= a <= b:
        raise ValueError("need 1 <= n-1 <= a <= b")
    report = HypothesisReport("claw_free", "f-factor exists")
    report.add("connected", f"n={g.n}", is_connected(g) and g.n > 0)
    report.add("star_free", f"no induced K_(1,{n})", is_star_free(g, n))
    _check_f_range(report, f, a, b)
    _check_parity(report, f)
    delta = min_degree(g)
    report.add("min_degree", f"delta={delta} >= b+n-1={b + n - 1}", delta >= b + n - 1)
    bound = Fraction(4 * a * (delta - b - n + 1), (n - 1) * (b + 1) ** 2)
    alpha, _ = stability_number(g)
    report.add("stability", f"alpha={alpha} <= {bound}", alpha <= bound)
    if confirm and report.hypotheses_met:
        _confirm(report, g, f)
    return report


def check_stability_conjecture(
    g: Graph, f: DegreeSpec, a: int, b: int, confirm: bool = False
) -> HypothesisReport:
    """The stability bound alone, without any toughness hypothesis.

    Not a theorem: the g0 family meets all of these hypotheses while having
    no f-factor, so "refuted" is an expected confirmation value here.
    """
    report = HypothesisReport("stability_conjecture", "f-factor exists")
    report.add("connected", f"n={g.n}", is_connected(g) and g.n > 0)
    report.add("b_at_least_2", f"b={b}", b >= 2)
    report.add("a_at_least_1", f"a={a}", a >= 1)
    delta = min_degree(g)
    report.add("min_degree", f"delta={delta} >= b={b}", delta >= b)
    _check_f_range(report, f, a, b)
    _check_parity(report, f)
    if report.hypotheses_met:
        alpha, _ = stability_number(g)
        bound = main_bound(a, b, delta)
        report.add("stability", f"alpha={alpha} <= {bound}", alpha <= bound)
    else:
        report.add("stability", "not evaluated (prior hypothesis failed)", False)
    if confirm and report.hypotheses_met:
        _confirm(report, g, f)
    return report


# Empirical validation campaign


@dataclass
class TrialRecord:
    index: int
    seed: int
    instance: str
    hypotheses_met: bool
    confirmation: str | None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "seed": self.seed,
            "instance": self.instance,
            "hypotheses_met": self.hypotheses_met,
            "confirmation": self.confirmation,
        }


@dataclass
class CampaignReport:
    theorem: str
    trials: int
    seed: int
    parameters: dict
    hypotheses_met: int = 0
    confirmed: int = 0
    discrepancies: list[TrialRecord] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "seed": self.seed,
            "parameters": {k: str(v) for k, v in sorted(self.parameters.items())},
            "hypotheses_met": self.hypotheses_met,
            "confirmed": self.confirmed,
            "discrepancy_count": len(self.discrepancies),
            "discrepancies": [d.to_dict() for d in self.discrepancies],
        }


def _trial_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def empirical_validate(
    theorem: str,
    trials: int,
    seed: int,
    n_range: tuple[int, int] = (8, 12),
    edge_probs: tuple[float, ...] = (0.6, 0.75, 0.9),
    ab_choices: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (2, 2), (2, 3)),
    r_choices: tuple[int, ...] = (1, 3),
    star_order: int = 3,
) -> CampaignReport:
    """Sample random connected instances, run the named checker, and confirm
    every met prediction against the solver.

    Trial generation derives a per-trial seed from (seed, index), so results
    are identical regardless of execution order.  A discrepancy is a trial
    whose hypotheses all hold but whose predicted factor does not exist;
    each one is recorded with a reproducible instance serialization.
    """
    from .instances import random_connected_graph, random_degree_spec, serialize_instance

    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    report = CampaignReport(
        theorem, trials, seed,
        {"n_range": n_range, "edge_probs": edge_probs, "ab_choices": ab_choices,
         "r_choices": r_choices, "star_order": star_order},
    )
    for index in range(trials):
        tseed = _trial_seed(seed, index)
        rng = random.Random(tseed)
        n = rng.randint(*n_range)
        prob = rng.choice(edge_probs)
        g = random_connected_graph(n, prob, rng.randrange(2**31))
        a, b = rng.choice(ab_choices)
        if theorem == "regular_connectivity":
            r = rng.choice(r_choices)
            try:
                check = check_theorem_regular_connectivity(g, r, confirm=True)
            except ValueError:
                continue
            f = DegreeSpec((r,) * g.n)
        elif theorem == "ab_factor":
            if b <= a:
                b = a + 1
            check = check_theorem_ab_factor(g, a, b, confirm=True)
            f = None
        else:
            try:
                f = random_degree_spec(g, a, b, rng.randrange(2**31))
            except ValueError:
                continue  # unrepairable parity (a == b with odd total)
            if theorem == "main":
                check = check_main_theorem(g, f, a, b, confirm=True)
            elif theorem == "kappa_corollary":
                check = check_corollary_kappa(g, f, a, b, confirm=True)
            elif theorem == "min_degree":
                check = check_theorem_min_degree(g, f, a, b, confirm=True)
            elif theorem == "claw_free":
                try:
                    check = check_theorem_claw_free(g, f, a, b, star_order, confirm=True)
                except ValueError:
                    continue
            else:
                check = check_stability_conjecture(g, f, a, b, confirm=True)
        if check.hypotheses_met:
            report.hypotheses_met += 1
            if check.confirmation == "confirmed":
                report.confirmed += 1
            elif check.confirmation == "refuted":
                spec = f if f is not None else DegreeSpec((a,) * g.n)
                report.discrepancies.append(TrialRecord(
                    index, tseed, serialize_instance(g, spec),
                    True, "refuted",
                ))
    return report


def g0_sweep(
    a: int, b: int, k_values, delta_values, p_values
) -> CampaignReport:
    """Run the stability-conjecture checker over a grid of g0 parameters.

    Every admissible instance with even f(X), p > a*k, and the stability
    hypothesis met is expected to be a refutation; the returned report
    counts them as discrepancies of the conjecture, each with a certificate.
    """
    from .constructions import build_g0
    from .instances import serialize_instance

    report = CampaignReport("stability_conjecture", 0, 0,
                            {"family": "g0", "a": a, "b": b})
    index = 0
    for k in k_values:
        for delta in delta_values:
            for p in p_values:
                try:
                    built = build_g0(a, b, k, delta, p)
                except ValueError:
                    continue
                if not built.f_total_even:
                    continue
                report.trials += 1
                check = check_stability_conjecture(
                    built.graph, built.spec, a, b, confirm=True
                )
                if check.hypotheses_met:
                    report.hypotheses_met += 1
                    if check.confirmation == "confirmed":
                        report.confirmed += 1
                    else:
                        report.discrepancies.append(TrialRecord(
                            index, 0,
                            serialize_instance(built.graph, built.spec),
                            True, "refuted",
                        ))
                index += 1
    return report
