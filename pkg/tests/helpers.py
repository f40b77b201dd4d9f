"""Shared test machinery: random graph generation, the diagram writer
that inverts the shadow construction, and a map-genus detector used to
tag fixtures that genuinely need virtual crossings."""

from __future__ import annotations

import random
from pathlib import Path

from eulerx.graphs import Edge, SignedVertex, TwoDigraph, make_graph
from eulerx.links import VirtualLinkDiagram, _crossing_ends

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


def random_circuit_graph(rng: random.Random, n: int, signs=None):
    """A uniform-ish random connected colorable 2-digraph with n vertices.

    Builds a random double-occurrence word first, so the word is an Euler
    circuit of the result by construction.  Returns (graph, circuit edge
    tuple).
    """
    if n == 0:
        return TwoDigraph([], [], circles=1), ()
    word = [v for v in range(1, n + 1) for _ in range(2)]
    rng.shuffle(word)
    m = 2 * n
    edges = [Edge(f"e{k + 1}", word[k], word[(k + 1) % m]) for k in range(m)]
    visit_positions: dict[int, list[int]] = {}
    for k in range(m):
        visit_positions.setdefault(word[k], []).append(k)
    vertices = []
    for v in range(1, n + 1):
        k1, k2 = visit_positions[v]
        in1 = (f"e{(k1 - 1) % m + 1}", "h")
        out1 = (f"e{k1 + 1}", "t")
        in2 = (f"e{(k2 - 1) % m + 1}", "h")
        out2 = (f"e{k2 + 1}", "t")
        rotation = (in1, out1, in2, out2) if rng.random() < 0.5 else (in1, out2, in2, out1)
        sign = signs[v - 1] if signs else rng.choice((1, -1))
        vertices.append(SignedVertex(v, sign, rotation))
    return make_graph(vertices, edges), tuple(f"e{k + 1}" for k in range(m))


def random_graph(rng: random.Random, n: int):
    return random_circuit_graph(rng, n)[0]


def random_instance(rng: random.Random, n: int):
    """(graph, circuit) with the circuit built directly from the generating
    word, avoiding a full enumeration per instance."""
    from eulerx.euler import EulerCircuit

    g, edges = random_circuit_graph(rng, n)
    return g, EulerCircuit(g, edges)


def random_disconnected_graph(rng: random.Random, parts: list[int], circles: int = 0):
    """Disjoint union of random connected graphs plus free circles."""
    vertices: list[SignedVertex] = []
    edges: list[Edge] = []
    v_off = 0
    for i, n in enumerate(parts):
        g, _ = random_circuit_graph(rng, n)
        rename = {eid: f"p{i}{eid}" for eid in g.edges}
        for v in g.vertices.values():
            rotation = tuple((rename[eid], end) for eid, end in v.rotation)
            vertices.append(SignedVertex(v.id + v_off, v.sign, rotation))
        for eid in g.edge_order:
            e = g.edges[eid]
            edges.append(Edge(rename[eid], e.tail + v_off, e.head + v_off))
        v_off += n
    return make_graph(vertices, edges, circles=circles)


def diagram_code_from_graph(g: TwoDigraph) -> str:
    """A signed Gauss code for a virtual diagram whose shadow is g.

    The curve runs straight through each vertex (opposite darts in the
    rotation); over/under and the crossing sign are chosen so that the
    bracket's A-smoothing matches each vertex sign, which makes the
    diagram's bracket equal the graph's expansion polynomial.
    """
    def step(eid, direction):
        dart = (eid, "h") if direction > 0 else (eid, "t")
        v = g.dart_vertex(dart)
        rotation = g.vertices[v].rotation
        out = rotation[(rotation.index(dart) + 2) % 4]
        next_dir = +1 if out[1] == "t" else -1
        return v, dart, out, (out[0], next_dir)

    unvisited = {(eid, s) for eid in g.edge_order for s in (+1, -1)}
    curve_components = []
    for eid in g.edge_order:
        if (eid, +1) not in unvisited:
            continue
        passages = []
        state = (eid, +1)
        while state in unvisited:
            unvisited.discard(state)
            unvisited.discard((state[0], -state[1]))
            v, enter, exit_dart, state_next = step(*state)
            passages.append((v, enter, exit_dart))
            state = state_next
        curve_components.append(passages)

    by_vertex: dict[int, list[tuple[int, int]]] = {}
    info: dict[tuple[int, int], tuple] = {}
    for ci, comp in enumerate(curve_components):
        for pi, (v, enter, exit_dart) in enumerate(comp):
            by_vertex.setdefault(v, []).append((ci, pi))
            info[(ci, pi)] = (v, enter, exit_dart)

    crossing_data = {}
    for v, passages in by_vertex.items():
        (pa, pb) = passages
        _, enter_a, exit_a = info[pa]
        _, enter_b, exit_b = info[pb]
        rotation = g.vertices[v].rotation
        # transition realized by the direction-respecting smoothing
        head, tail = (enter_a, exit_b) if enter_a[1] == "h" else (exit_b, enter_a)
        p_oriented = 0 if rotation[(rotation.index(head) + 1) % 4] == tail else 1
        want_p_of_a = 0 if g.vertices[v].sign > 0 else 1
        sign = +1 if p_oriented == want_p_of_a else -1
        ccw_after_exit_a = rotation[(rotation.index(exit_a) + 1) % 4]
        sign_if_a_over = +1 if ccw_after_exit_a == exit_b else -1
        over = pa if sign_if_a_over == sign else pb
        crossing_data[v] = (over, sign)

    parts = []
    for ci, comp in enumerate(curve_components):
        tokens = []
        for pi, (v, _, _) in enumerate(comp):
            over, sign = crossing_data[v]
            ou = "O" if (ci, pi) == over else "U"
            tokens.append(f"{ou}{v}{'+' if sign > 0 else '-'}")
        parts.append("".join(tokens))
    return ";".join(parts)


def map_genus(d: VirtualLinkDiagram) -> int:
    """Total genus of the diagram's 4-valent map; 0 means drawable in the
    plane without virtual crossings."""
    if d.n == 0:
        return 0
    ends = _crossing_ends(d)
    position: dict[tuple, tuple[int, int]] = {}
    rotation_at = {}
    for ident, e in ends.items():
        r = e.rotation()
        rotation_at[ident] = r
        for k, dart in enumerate(r):
            position[dart] = (ident, k)

    def twin(dart):
        arc, end = dart
        return (arc, "h" if end == "t" else "t")

    def face_next(dart):
        v, k = position[twin(dart)]
        return rotation_at[v][(k - 1) % 4]

    faces = 0
    seen = set()
    for dart in position:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            cur = face_next(cur)

    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for comp in d.components:
        ids = [p.crossing for p in comp]
        for a, b in zip(ids, ids[1:] + ids[:1]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    component_count = len({find(p.crossing) for comp in d.components for p in comp})
    vertex_count = d.n
    edge_count = len(position) // 2
    return (2 * component_count - (vertex_count - edge_count + faces)) // 2
