"""Parameterized generators for the two explicit instance families.

Family g0: a clique cutset S of k vertices attached to p complete components
of order delta+1 (the first one completely, the others by a single edge),
with targets a on S and b elsewhere.  When every component has odd f-sum,
the pair (S, empty) has deficiency a*k - p, so p > a*k certifies that no
f-factor exists even when the stability bound alpha <= 4a(delta-b)/(b+1)^2
holds.

Family g1: the join of a complete graph A = K_{delta-r+1} with alpha
disjoint copies of K_r, targets a on A and b on the copies.  An f-factor
forces alpha <= a(delta-r+1) / (r(b+1-r)), so instances above that
threshold have the violating pair (A, B).

Both generators recompute every expected quantity instead of assuming the
asymptotic regime, and they report the parity of f(X) explicitly: a "no
factor" verdict distinguishes parity from deficiency as its reason.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import (
    DegreeSpec,
    Graph,
    build_graph,
    complete_graph,
    disjoint_union,
    join,
)
from .tutte import DeficiencyReport, SubsetPair, deficiency


@dataclass
class ConstructionReport:
    """A generated instance plus its analytically expected properties.

    ``expected_existence`` is False when nonexistence is forced (by parity or
    by the witness pair), None when the construction makes no prediction.
    """

    family: str
    graph: Graph
    spec: DegreeSpec
    params: dict[str, int]
    expected_alpha: int
    expected_min_degree: int
    f_total: int
    f_total_even: bool
    expected_existence: bool | None
    nonexistence_reason: str | None
    witness_pair: SubsetPair | None
    witness_deficiency: DeficiencyReport | None
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": dict(sorted(self.params.items())),
            "expected_alpha": self.expected_alpha,
            "expected_min_degree": self.expected_min_degree,
            "f_total": self.f_total,
            "f_total_even": self.f_total_even,
            "expected_existence": self.expected_existence,
            "nonexistence_reason": self.nonexistence_reason,
            "witness_pair": None if self.witness_pair is None else {
                "s": list(self.witness_pair.s),
                "t": list(self.witness_pair.t),
            },
            "witness_deficiency": (
                None if self.witness_deficiency is None
                else self.witness_deficiency.to_dict()
            ),
            "extras": {k: str(v) for k, v in sorted(self.extras.items())},
        }


def stability_bound(a: int, b: int, delta: int) -> Fraction:
    """The exact rational threshold 4a(delta - b) / (b+1)^2."""
    if b < 2:
        raise ValueError("need b >= 2")
    if delta < b:
        raise ValueError("need delta >= b")
    if a < 0:
        raise ValueError("need a >= 0")
    return Fraction(4 * a * (delta - b), (b + 1) ** 2)


def build_g0(a: int, b: int, k: int, delta: int, p: int) -> ConstructionReport:
    """Clique-cutset family: K_k cutset, p components K_{delta+1}.

    Preconditions: 1 <= k < b, p >= 2, b odd (so each component's f-sum
    b(delta+1) is odd once delta is even), delta even with delta >= b, and
    a <= b.  Vertex numbering: S first, then C_1..C_p in order; for i >= 2
    exactly one edge joins vertex 0 to the lowest-index vertex of C_i.
    """
    if b % 2 == 0:
        raise ValueError("b must be odd")
    if delta % 2 == 1:
        raise ValueError("delta must be even")
    if delta < b:
        raise ValueError("need delta >= b")
    if not 1 <= k < b:
        raise ValueError("need 1 <= k < b")
    if p < 2:
        raise ValueError("need p >= 2")
    if not 0 <= a <= b:
        raise ValueError("need 0 <= a <= b")
    comp_size = delta + 1
    n = k + p * comp_size
    edges = []
    # S together with C_1 is a complete block
    block = list(range(k + comp_size))
    edges += [(u, v) for i, u in enumerate(block) for v in block[i + 1:]]
    for i in range(1, p):
        start = k + i * comp_size
        comp = list(range(start, start + comp_size))
        edges += [(u, v) for j, u in enumerate(comp) for v in comp[j + 1:]]
        edges.append((0, start))
    g = build_graph(n, edges)
    f = DegreeSpec((a,) * k + (b,) * (n - k))
    f_total = f.total()
    even = f_total % 2 == 0

    pair = SubsetPair(tuple(range(k)), ())
    witness = deficiency(g, pair, f)
    bound = stability_bound(a, b, delta)
    stability_ok = p <= bound

    if not even:
        existence, reason = False, "parity"
    elif p > a * k:
        existence, reason = False, "deficiency"
    else:
        existence, reason = None, None
    return ConstructionReport(
        family="g0",
        graph=g,
        spec=f,
        params={"a": a, "b": b, "k": k, "delta": delta, "p": p},
        expected_alpha=p,
        expected_min_degree=delta,
        f_total=f_total,
        f_total_even=even,
        expected_existence=existence,
        nonexistence_reason=reason,
        witness_pair=pair if reason == "deficiency" else None,
        witness_deficiency=witness if reason == "deficiency" else None,
        extras={
            "stability_bound": bound,
            "stability_hypothesis_met": stability_ok,
            "cutset_ratio": Fraction(k, p),
        },
    )


def g0_paper_preset(a: int, b: int, k: int = 1) -> dict[str, int]:
    """Parameters in the large-minimum-degree regime delta >= (b+1)^3 + b.

    p is the largest value not exceeding the stability bound that keeps
    f(X) even and p > a*k; raises if no such p exists.
    """
    delta = (b + 1) ** 3 + b
    if delta % 2 == 1:
        delta += 1
    bound = stability_bound(a, b, delta)
    p = int(bound)
    comp_size = delta + 1

    def f_even(p_: int) -> bool:
        return (a * k + b * p_ * comp_size) % 2 == 0

    while p > a * k and not f_even(p):
        p -= 1
    if p <= a * k:
        raise ValueError("no admissible p in the preset regime for these a, b, k")
    return {"a": a, "b": b, "k": k, "delta": delta, "p": p}


def g0_desk_instance() -> ConstructionReport:
    """Smallest-style refutation instance meeting the stability hypothesis:
    (a=2, b=3, k=1, delta=12, p=4), n = 53, f(X) = 158."""
    return build_g0(a=2, b=3, k=1, delta=12, p=4)


def build_g1(a: int, b: int, r: int, delta: int, alpha: int) -> ConstructionReport:
    """Join family: A = K_{delta-r+1} joined to alpha disjoint copies of K_r.

    Preconditions (relaxed): delta >= r >= 1, alpha >= 1, b > r, a >= 0.
    The strict parameter chain alpha > delta > b > r is reported as a flag,
    not enforced: useful small instances sit outside it.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    if delta < r:
        raise ValueError("need delta >= r")
    if alpha < 1:
        raise ValueError("need alpha >= 1")
    if b <= r:
        raise ValueError("need b > r")
    if a < 0:
        raise ValueError("need a >= 0")
    a_size = delta - r + 1
    part_a = complete_graph(a_size)
    part_b = disjoint_union([complete_graph(r) for _ in range(alpha)])
    g = join(part_a, part_b)
    f = DegreeSpec((a,) * a_size + (b,) * (alpha * r))
    f_total = f.total()
    even = f_total % 2 == 0
    threshold = Fraction(a * a_size, r * (b + 1 - r))

    pair = SubsetPair(tuple(range(a_size)), tuple(range(a_size, g.n)))
    witness = deficiency(g, pair, f)
    if not even:
        existence, reason = False, "parity"
    elif alpha > threshold:
        existence, reason = False, "deficiency"
    else:
        existence, reason = None, None
    return ConstructionReport(
        family="g1",
        graph=g,
        spec=f,
        params={"a": a, "b": b, "r": r, "delta": delta, "alpha": alpha},
        expected_alpha=alpha,
        expected_min_degree=delta,
        f_total=f_total,
        f_total_even=even,
        expected_existence=existence,
        nonexistence_reason=reason,
        witness_pair=pair if reason == "deficiency" else None,
        witness_deficiency=witness if reason == "deficiency" else None,
        extras={
            "threshold": threshold,
            "strict_chain": alpha > delta > b > r,
        },
    )


def necessity_margin(a: int, b: int, delta: int) -> tuple[Fraction, Fraction]:
    """(stability bound, slack) for the r = (b+1)/2 specialization of the
    join family, documenting how close the bound is to best possible."""
    if b % 2 == 0:
        raise ValueError("b must be odd")
    if b < 3:
        raise ValueError("need b >= 3")
    if delta < b:
        raise ValueError("need delta >= b")
    return stability_bound(a, b, delta), Fraction(2 * a, b + 1)
