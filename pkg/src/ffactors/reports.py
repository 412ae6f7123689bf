"""Machine-readable run reports and certificate rechecking.

A report is a JSON document with a stable field order: command, parameters,
seed, instance digest, the embedded normalized instance, verdicts, a list
of certificates, and timing.  Every embedded certificate can be re-verified
from the report alone, without rerunning any search; comparisons between
reports ignore the timing block.
"""

from __future__ import annotations

import json
import time

from .graph import DegreeSpec, Graph
from .instances import instance_digest, parse_instance, serialize_instance
from .solver import FactorSubgraph, verify_f_factor
from .tutte import SubsetPair, deficiency


def factor_certificate(factor: FactorSubgraph) -> dict:
    return {"type": "factor", "edges": [list(e) for e in factor.edges]}


def violating_pair_certificate(report) -> dict:
    out = {"type": "violating_pair"}
    out.update(report.to_dict())
    return out


def build_report(
    command: str,
    parameters: dict,
    seed: int | None,
    instance: tuple[Graph, DegreeSpec] | None,
    verdicts: dict,
    certificates: list[dict],
    started: float | None = None,
) -> dict:
    doc = {
        "command": command,
        "parameters": {k: parameters[k] for k in sorted(parameters)},
        "seed": seed,
    }
    if instance is not None:
        g, f = instance
        doc["instance_digest"] = instance_digest(g, f)
        doc["instance"] = serialize_instance(g, f)
    else:
        doc["instance_digest"] = None
        doc["instance"] = None
    doc["verdicts"] = verdicts
    doc["certificates"] = certificates
    doc["timing"] = {
        "seconds": None if started is None else round(time.monotonic() - started, 6)
    }
    return doc


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def strip_timing(doc: dict) -> dict:
    out = dict(doc)
    out.pop("timing", None)
    return out


def recheck_report(doc: dict) -> list[str]:
    """Re-verify every certificate embedded in a report.

    Returns a list of failure descriptions; empty means everything checks.
    """
    failures: list[str] = []
    instance_text = doc.get("instance")
    g = f = None
    if instance_text:
        g, f = parse_instance(instance_text)
        if doc.get("instance_digest") != instance_digest(g, f):
            failures.append("instance digest does not match embedded instance")
    for i, cert in enumerate(doc.get("certificates", [])):
        kind = cert.get("type")
        if g is None:
            failures.append(f"certificate {i}: no embedded instance to check against")
            continue
        if kind == "factor":
            factor = FactorSubgraph(tuple(tuple(e) for e in cert["edges"]))
            if not verify_f_factor(g, f, factor):
                failures.append(f"certificate {i}: edge set is not an f-factor")
        elif kind == "violating_pair":
            pair = SubsetPair.of(g, cert["s"], cert["t"])
            rep = deficiency(g, pair, f)
            for key in ("f_s", "f_t", "degree_term", "h", "delta"):
                if rep.to_dict()[key] != cert[key]:
                    failures.append(
                        f"certificate {i}: recomputed {key}="
                        f"{rep.to_dict()[key]} != recorded {cert[key]}"
                    )
            if rep.delta >= 0:
                failures.append(
                    f"certificate {i}: recorded pair has nonnegative deficiency"
                )
        else:
            failures.append(f"certificate {i}: unknown type {kind!r}")
    return failures
