"""Machine-readable report envelopes for the command-line tool.

Every emitted number is exact: integers stay integers and non-integral
rationals become ``"num/den"`` strings, so payloads round-trip through
JSON losslessly.  The envelope is ``{"version", "schema", "input",
"format", "payload"}``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Callable, Optional

from . import __version__
from .cstar import (
    BBDecomposition,
    BandwidthReport,
    DominanceFuzzResult,
    HasseGraph,
    LevelDecomposition,
    SourceSink,
    poly_eval,
)
from .grassmannian import FixedPointPolytope, GeneralizedGrassmannian

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "encode_rational",
    "parse_rational",
    "envelope",
    "to_json",
    "bandwidth_payload",
    "levels_payload",
    "bb_payload",
    "poincare_payload",
    "hasse_payload",
    "polytope_payload",
    "fuzz_payload",
    "polytope_csv",
    "hasse_dot",
    "hasse_text",
]


def encode_rational(x):
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(x) -> Fraction:
    if isinstance(x, str):
        num, den = x.split("/")
        return Fraction(int(num), int(den))
    return Fraction(x)


def envelope(fmt: str, X: GeneralizedGrassmannian, payload: dict,
             direction=None) -> dict:
    inp = {"type": str(X.dtype), "node": X.node}
    if direction is not None:
        inp["direction"] = direction
    return {
        "version": __version__,
        "schema": SCHEMA_VERSION,
        "format": fmt,
        "input": inp,
        "payload": payload,
    }


def to_json(obj) -> str:
    return json.dumps(obj, indent=2)


def bandwidth_payload(report: BandwidthReport, only_node=None) -> dict:
    rows = [
        {"node": b.node, "value": encode_rational(b.value), "scaled": b.scaled}
        for b in report.per_node
        if only_node is None or b.node == only_node
    ]
    payload = {"k_index": report.per_node[0].k, "per_node": rows}
    if only_node is None:
        payload["minimal"] = encode_rational(report.minimal_value)
        payload["minimizers"] = list(report.minimizers)
    return payload


def _component_dict(c) -> dict:
    return {
        "level": c.level,
        "size": c.size,
        "dimension": c.dimension,
        "nu_plus": c.nu_plus,
        "nu_minus": c.nu_minus,
        "poincare": list(c.poincare),
        "representative": list(c.members[0]),
    }


def levels_payload(ld: LevelDecomposition, ss: SourceSink, equalized: bool,
                   weight_of: Optional[Callable] = None) -> dict:
    """Serialize a level decomposition.

    ``weight_of`` maps a canonical fixed-point position to its fiber
    weight; when given (and the decomposition kept per-point detail)
    each level also lists its points, otherwise only summaries.
    """
    levels = []
    for lv in ld.levels:
        entry = {
            "value": lv.value,
            "value_normalized": encode_rational(Fraction(lv.value, ld.k)),
            "count": lv.count,
            "profile_counts": [
                {"nu_plus": p, "nu_zero": z, "nu_minus": m, "count": c}
                for (p, z, m), c in lv.profile_counts
            ],
            "components": [_component_dict(c) for c in lv.components],
        }
        if weight_of is not None and lv.members:
            entry["points"] = [
                {"weight": [int(x) for x in weight_of(p)], "profile": list(prof)}
                for p, prof in zip(lv.members, lv.profiles)
            ]
        levels.append(entry)
    return {
        "direction": ld.direction,
        "k_index": ld.k,
        "dimension": ld.dimension,
        "fixed_points": sum(lv.count for lv in ld.levels),
        "equalized": equalized,
        "source_level": ss.source_level,
        "sink_level": ss.sink_level,
        "isolated_source": ss.isolated_source,
        "levels": levels,
    }


def bb_payload(bb: BBDecomposition) -> dict:
    comps = []
    for c in bb.components:
        d = _component_dict(c)
        d["shift_plus"] = 2 * c.nu_plus
        d["shift_minus"] = 2 * c.nu_minus
        comps.append(d)
    return {
        "direction": bb.direction,
        "total_poincare": list(bb.total),
        "euler": sum(bb.total),
        "components": comps,
    }


def poincare_payload(poly, eval_at=None) -> dict:
    payload = {
        "coefficients": list(poly),
        "degree": len(poly) - 1,
        "value_at_1": sum(poly),
    }
    if eval_at is not None:
        payload["eval"] = {"at": eval_at, "value": poly_eval(poly, eval_at)}
    return payload


def hasse_payload(hg: HasseGraph) -> dict:
    return {
        "nodes": [
            {"id": i, "rank": r, "weight": list(w)}
            for i, (r, w) in enumerate(zip(hg.ranks, hg.weights))
        ],
        "edges": [list(e) for e in hg.edges],
        "rank_polynomial": list(hg.rank_polynomial),
    }


def polytope_payload(poly: FixedPointPolytope, k: int) -> dict:
    return {
        "k_index": k,
        "vertex_count": len(poly),
        "vertices": [list(v) for v in poly.vertices],
    }


def fuzz_payload(res: DominanceFuzzResult) -> dict:
    return {
        "trials": res.trials,
        "seed": res.seed,
        "bound": res.bound,
        "tightest": {
            "coweight": list(res.tightest_coweight),
            "value": res.tightest_value,
        },
        "violations": [
            {"coweight": list(cw), "value": v} for cw, v in res.violations
        ],
        "passed": res.passed,
    }


# -- non-JSON renderings ------------------------------------------------


def polytope_csv(poly: FixedPointPolytope, rank: int) -> str:
    """CSV with header ``coeff_1..coeff_n``, one vertex per row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"coeff_{a}" for a in range(1, rank + 1)])
    for v in poly.vertices:
        writer.writerow(list(v))
    return buf.getvalue()


def hasse_dot(hg: HasseGraph) -> str:
    """Graphviz digraph, one same-rank block per grade."""
    lines = ["digraph hasse {", "  rankdir = BT;", "  node [shape = circle];"]
    by_rank = {}
    for i, r in enumerate(hg.ranks):
        by_rank.setdefault(r, []).append(i)
    for r in sorted(by_rank):
        lines.append("  {")
        lines.append("    rank = same;")
        for i in by_rank[r]:
            label = ",".join(str(x) for x in hg.weights[i])
            lines.append(f'    n{i} [label="{label}", grade={r}];')
        lines.append("  }")
    for a, b in hg.edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_text(hg: HasseGraph) -> str:
    """Plain graded-graph text: node lines ``id rank weight``, then ``src dst``."""
    lines = []
    for i, (r, w) in enumerate(zip(hg.ranks, hg.weights)):
        lines.append(f"{i} {r} {','.join(str(x) for x in w)}")
    for a, b in hg.edges:
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"
