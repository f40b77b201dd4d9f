"""Shared computation reports used by both the CLI and the HTTP service.

The JSON report schema is::

    {"n": int, "components": int, "x": "<poly>", "writhe": int|null,
     "jones": "<poly>"|null, "circuits": [{"word","activity","weight"}]|null,
     "method": "..."}

Graph inputs have null writhe/jones.  The ``bracket`` method applies to
Gauss inputs only; ``expansion`` and ``skein`` need a checkerboard-
colorable input.
"""

from __future__ import annotations

import random

from . import activity, laurent, links
from .euler import CircuitError, enumerate_euler_circuits
from .graphs import (
    NotCheckerboardColorable,
    TwoDigraph,
    analyze_connectivity,
    parse_graph,
    permute_labels,
    reverse_orientation,
)

GRAPH_METHODS = ("expansion", "skein", "all")
GAUSS_METHODS = ("expansion", "skein", "bracket", "all")


class BudgetExceeded(ValueError):
    """Input larger than the configured expansion budget."""


class VerifyMismatch(Exception):
    """Cross-method or invariance check failed; carries the report."""

    def __init__(self, report: dict):
        super().__init__("verification mismatch")
        self.report = report


def _check_budget(n: int, max_n: int | None) -> None:
    if max_n is not None and n > max_n:
        raise BudgetExceeded(f"input has n={n} > --max-n {max_n}; refusing 2^n expansion")


def _diagram_components(d: links.VirtualLinkDiagram) -> int:
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    crossing_free = 0
    for comp in d.components:
        ids = [p.crossing for p in comp]
        if not ids:
            crossing_free += 1
            continue
        for a, b in zip(ids, ids[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    linked = len({find(p.crossing) for comp in d.components for p in comp})
    return linked + crossing_free


def _circuit_rows(g: TwoDigraph) -> list[dict]:
    components, _ = analyze_connectivity(g)
    if len(components) > 1:
        raise CircuitError(
            f"circuit listing needs a connected input, got {len(components)} components"
        )
    rows = []
    for circuit in enumerate_euler_circuits(g):
        word = activity.activity_word(g, circuit)
        rows.append(
            {
                "word": circuit.word(),
                "activity": " ".join(word),
                "weight": str(activity.circuit_weight(word)),
            }
        )
    return rows


def compute_report(
    source: str,
    fmt: str,
    method: str = "expansion",
    include_circuits: bool = False,
    max_n: int | None = None,
    weights=None,
) -> dict:
    """Parse the input, run the requested method(s), and build the report."""
    if fmt == "graph":
        if method not in GRAPH_METHODS:
            raise ValueError(f"method {method!r} requires gauss format")
        g = parse_graph(source)
        _check_budget(g.n, max_n)
        components, _ = analyze_connectivity(g)
        values = {}
        if method in ("expansion", "all"):
            values["expansion"] = activity.x_polynomial(g, weights=weights)
        if method in ("skein", "all"):
            values["skein"] = activity.x_via_skein(g)
        x = _agree(values)
        report = {
            "n": g.n,
            "components": len(components),
            "x": str(x),
            "writhe": None,
            "jones": None,
            "circuits": _circuit_rows(g) if include_circuits else None,
            "method": method,
        }
        return report

    if fmt == "gauss":
        if method not in GAUSS_METHODS:
            raise ValueError(f"unknown method {method!r}")
        d = links.parse_gauss(source)
        _check_budget(d.n, max_n)
        w = links.writhe(d)
        values = {}
        shadow = links.shadow_graph(d)
        if method in ("expansion", "skein", "all") or include_circuits:
            if not shadow.colorable:
                raise NotCheckerboardColorable(
                    "no source-target structure: diagram is not checkerboard-colorable"
                )
        if method in ("expansion", "all"):
            values["expansion"] = activity.x_polynomial(shadow.graph, weights=weights)
        if method in ("skein", "all"):
            values["skein"] = activity.x_via_skein(shadow.graph)
        if method in ("bracket", "all"):
            values["bracket"] = links.bracket_oracle(d)
        x = _agree(values)
        jones = laurent.neg_q_pow(-3 * w) * x
        report = {
            "n": d.n,
            "components": _diagram_components(d),
            "x": str(x),
            "writhe": w,
            "jones": str(jones),
            "circuits": _circuit_rows(shadow.graph) if include_circuits else None,
            "method": method,
        }
        return report

    raise ValueError(f"unknown format {fmt!r}")


def _agree(values: dict[str, laurent.LaurentPoly]) -> laurent.LaurentPoly:
    distinct = {str(v) for v in values.values()}
    if len(distinct) > 1:
        raise VerifyMismatch(
            {"ok": False, "stage": "methods", "values": {k: str(v) for k, v in values.items()}}
        )
    return next(iter(values.values()))


def verify_report(
    source: str,
    fmt: str,
    seed: int = 0,
    relabelings: int = 5,
    max_n: int | None = None,
    weights=None,
) -> dict:
    """Run every applicable method plus the invariance battery.

    Returns {"ok": true, ...} or raises VerifyMismatch carrying the
    mismatch details (stage, values, and the witness that broke).
    """
    if fmt == "graph":
        g = parse_graph(source)
        d = None
    elif fmt == "gauss":
        d = links.parse_gauss(source)
        shadow = links.shadow_graph(d)
        if not shadow.colorable:
            raise NotCheckerboardColorable(
                "no source-target structure: diagram is not checkerboard-colorable"
            )
        g = shadow.graph
    else:
        raise ValueError(f"unknown format {fmt!r}")
    _check_budget(g.n, max_n)

    values = {
        "expansion": activity.x_polynomial(g, weights=weights),
        "skein": activity.x_via_skein(g),
    }
    if d is not None:
        values["bracket"] = links.bracket_oracle(d)
    x = _agree(values)

    rng = random.Random(seed)
    ids = g.vertex_ids()
    for k in range(relabelings):
        images = ids[:]
        rng.shuffle(images)
        perm = dict(zip(ids, images))
        relabeled = activity.x_polynomial(permute_labels(g, perm), weights=weights)
        if relabeled != x:
            raise VerifyMismatch(
                {
                    "ok": False,
                    "stage": f"relabeling {k}",
                    "perm": perm,
                    "values": {"original": str(x), "relabeled": str(relabeled)},
                }
            )
    flipped = activity.x_polynomial(reverse_orientation(g), weights=weights)
    if flipped != x:
        raise VerifyMismatch(
            {
                "ok": False,
                "stage": "coloring flip",
                "values": {"original": str(x), "flipped": str(flipped)},
            }
        )
    return {
        "ok": True,
        "n": g.n,
        "x": str(x),
        "methods": {k: str(v) for k, v in values.items()},
        "relabelings": relabelings,
        "seed": seed,
    }


def count_report(source: str, fmt: str, max_n: int | None = None) -> dict:
    """Circuit counts by enumeration and by determinant (and one-loop states)."""
    from .euler import count_circuits_best

    if fmt == "graph":
        g = parse_graph(source)
        d = None
    elif fmt == "gauss":
        d = links.parse_gauss(source)
        shadow = links.shadow_graph(d)
        if not shadow.colorable:
            raise NotCheckerboardColorable(
                "no source-target structure: diagram is not checkerboard-colorable"
            )
        g = shadow.graph
    else:
        raise ValueError(f"unknown format {fmt!r}")
    _check_budget(g.n, max_n)
    components, _ = analyze_connectivity(g)
    if len(components) > 1:
        raise CircuitError(
            f"circuit counting needs a connected input, got {len(components)} components"
        )
    report = {
        "n": g.n,
        "components": len(components),
        "circuits": len(enumerate_euler_circuits(g)),
        "best": count_circuits_best(g),
    }
    if d is not None:
        report["one_loop_states"] = links.one_loop_state_count(d)
    return report
