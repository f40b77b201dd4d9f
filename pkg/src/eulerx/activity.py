"""Circuit states, marker labels, activity words, and the expansion
polynomial of a vertex-signed checkerboard-colorable 2-digraph.

Merging every vertex of a circuit leaves a single closed curve with one
labeled marker per deleted vertex.  The label is determined by the vertex
sign and by which side of the checkerboard coloring the marker lands on,
which for a stored orientation reduces to the circuit's transition choice
at the vertex:

    sign +, choice 0 -> A      sign +, choice 1 -> a
    sign -, choice 0 -> B      sign -, choice 1 -> b

Markers A and B are internal, a and b external.  A vertex is live in a
circuit when every vertex interlacing it has a larger index, dead
otherwise (so an empty interlacement set is live).  Letter and weight:

    label A:  live L  -> -q^-3     dead D  -> q
    label a:  live l  -> -q^3      dead d  -> q^-1
    label B:  live L~ -> -q^3      dead D~ -> q^-1
    label b:  live l~ -> -q^-3     dead d~ -> q

The polynomial is the sum of the per-circuit weight products over all
Euler circuits, one factor -q^2 - q^-2 per extra connected component.
The same value is computable by a two-term recursion on any vertex, which
the test suite checks against the expansion and against the bracket of
link diagrams.
"""

from __future__ import annotations

from . import laurent
from .euler import EulerCircuit, enumerate_euler_circuits, interlace_sets
from .graphs import (
    NotCheckerboardColorable,
    TwoDigraph,
    analyze_connectivity,
    merge_at_vertex,
    validate_source_target,
)

MARKER_LABELS = {
    (+1, 0): "A",
    (+1, 1): "a",
    (-1, 0): "B",
    (-1, 1): "b",
}

ACTIVITY_LETTERS = {
    ("A", True): "L",
    ("A", False): "D",
    ("a", True): "l",
    ("a", False): "d",
    ("B", True): "L~",
    ("B", False): "D~",
    ("b", True): "l~",
    ("b", False): "d~",
}

LETTER_WEIGHTS = {
    "L": laurent.monomial(-3, -1),
    "D": laurent.monomial(1),
    "l": laurent.monomial(3, -1),
    "d": laurent.monomial(-1),
    "L~": laurent.monomial(3, -1),
    "D~": laurent.monomial(-1),
    "l~": laurent.monomial(-3, -1),
    "d~": laurent.monomial(1),
}


def _require_colorable(g: TwoDigraph) -> None:
    if not validate_source_target(g):
        bad = next(
            v.id
            for v in g.vertices.values()
            if any(
                g.dart_direction(v.rotation[k]) == g.dart_direction(v.rotation[(k + 1) % 4])
                for k in range(4)
            )
        )
        raise NotCheckerboardColorable(
            f"no source-target structure: directions do not alternate at vertex {bad}"
        )


def marker_labels(g: TwoDigraph, circuit: EulerCircuit) -> dict[int, str]:
    """Marker label per vertex for the given circuit.

    Labels depend only on the vertex sign and the circuit's transition
    choice there, so they are independent of the merge order and of the
    circuit's start point.
    """
    if circuit.graph is not g and circuit.graph != g:
        raise ValueError("circuit does not belong to this graph")
    choices = circuit.transitions
    return {v: MARKER_LABELS[(g.vertices[v].sign, choices[v])] for v in g.vertices}


def liveness(circuit: EulerCircuit) -> dict[int, bool]:
    """Vertex i is live iff no interlacing vertex has a smaller index."""
    return {
        v: all(j > v for j in nbrs) for v, nbrs in interlace_sets(circuit).items()
    }


def activity_word(g: TwoDigraph, circuit: EulerCircuit) -> tuple[str, ...]:
    """Activity letters in vertex-index order."""
    labels = marker_labels(g, circuit)
    live = liveness(circuit)
    return tuple(ACTIVITY_LETTERS[(labels[v], live[v])] for v in sorted(g.vertices))


def circuit_weight(word, weights=None) -> laurent.LaurentPoly:
    """Product of the per-letter weight monomials; empty word gives 1."""
    table = LETTER_WEIGHTS if weights is None else weights
    result = laurent.one()
    for letter in word:
        result = result * table[letter]
    return result


def x_polynomial(g: TwoDigraph, weights=None) -> laurent.LaurentPoly:
    """Sum of circuit weights, per connected component, with one factor
    -q^2 - q^-2 per extra component.  Vertex-free circles contribute 1."""
    _require_colorable(g)
    components, _ = analyze_connectivity(g)
    if not components:
        return laurent.one()
    result = laurent.delta() ** (len(components) - 1)
    for comp in components:
        result = result * _component_expansion(comp, weights)
    return result


def _component_expansion(g: TwoDigraph, weights=None) -> laurent.LaurentPoly:
    total = laurent.zero()
    for circuit in enumerate_euler_circuits(g):
        total = total + circuit_weight(activity_word(g, circuit), weights)
    return total


def x_via_skein(g: TwoDigraph) -> laurent.LaurentPoly:
    """The same polynomial by recursive vertex elimination.

    At the highest-labeled vertex v the two merges give
    q * X(merge 0) + q^-1 * X(merge 1) when v is positive and
    q^-1 * X(merge 0) + q * X(merge 1) when negative; the base case of m
    vertex-free circles is (-q^2 - q^-2)^(m-1).
    """
    _require_colorable(g)
    return _skein(g)


def _skein(g: TwoDigraph) -> laurent.LaurentPoly:
    components, _ = analyze_connectivity(g)
    if not components:
        return laurent.one()
    result = laurent.delta() ** (len(components) - 1)
    for comp in components:
        if comp.n == 0:
            continue
        v = comp.n
        sign = comp.vertices[v].sign
        branch0 = _skein(merge_at_vertex(comp, v, 0))
        branch1 = _skein(merge_at_vertex(comp, v, 1))
        value = laurent.monomial(sign) * branch0 + laurent.monomial(-sign) * branch1
        result = result * value
    return result


def merged_marker_label(g: TwoDigraph, circuit: EulerCircuit, vertex: int, order=None) -> str:
    """Marker label recovered through iterated merging, as a cross-check.

    Merges every other vertex with the circuit's own transition choice (in
    the given deletion order, default ascending), leaving a one-vertex
    graph whose single Euler circuit realizes the surviving transition.
    Matches marker_labels for every deletion order.
    """
    choices = circuit.transitions
    current = g
    label_now = {v: v for v in g.vertices}
    todo = order if order is not None else sorted(v for v in g.vertices if v != vertex)
    for v in todo:
        p = label_now[v]
        current = merge_at_vertex(current, p, choices[v])
        label_now = {w: (q if q < p else q - 1) for w, q in label_now.items() if w != v}
    (reduced_circuit,) = enumerate_euler_circuits(current)
    survivor = label_now[vertex]
    choice = reduced_circuit.transitions[survivor]
    return MARKER_LABELS[(current.vertices[survivor].sign, choice)]
