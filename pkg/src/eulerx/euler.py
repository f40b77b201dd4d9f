"""Euler circuits of 2-digraphs via transition systems, and chord-diagram
combinatorics: interlacement, label swap, transposition, pivot.

A transition system picks, at every vertex, one of the two pairings of
incoming to outgoing edges (the same indexing as merge choices: 0 pairs
each incoming dart with the outgoing dart immediately counterclockwise in
the rotation).  Following the pairings decomposes the edge set into closed
walks; the transition systems whose walk is a single closed circuit are
exactly the Euler circuits.

Circuits are canonicalized by rotating the edge sequence so the earliest
edge (in the graph's edge order) comes first.  Interlacement and all
derived data are rotation-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .graphs import TwoDigraph, analyze_connectivity, permute_labels, transition_pairing


class CircuitError(ValueError):
    """Invalid circuit operation (disconnected input, bad pair, ...)."""


@dataclass(frozen=True)
class EulerCircuit:
    """An Euler circuit: each directed edge exactly once, as one closed walk."""

    graph: TwoDigraph
    edges: tuple[str, ...]

    @property
    def visits(self) -> tuple[int, ...]:
        """Vertex visit sequence; entry k is the vertex the k-th edge leaves."""
        return tuple(self.graph.edges[e].tail for e in self.edges)

    @property
    def transitions(self) -> dict[int, int]:
        """Per-vertex transition choice in {0, 1} realized by this circuit."""
        g = self.graph
        choices: dict[int, int] = {}
        m = len(self.edges)
        for k, eid in enumerate(self.edges):
            v = g.edges[eid].tail
            if v in choices:
                continue
            in_dart = (self.edges[(k - 1) % m], "h")
            rotation = g.vertices[v].rotation
            pos = rotation.index(in_dart)
            ccw_next = rotation[(pos + 1) % 4]
            choices[v] = 0 if ccw_next == (eid, "t") else 1
        return choices

    def word(self) -> str:
        """Alternating vertex/edge rendering, e.g. ``v1 e1 v2 e2 ... v1``."""
        if not self.edges:
            return ""
        parts = []
        for eid in self.edges:
            parts.append(f"v{self.graph.edges[eid].tail}")
            parts.append(eid)
        parts.append(f"v{self.graph.edges[self.edges[0]].tail}")
        return " ".join(parts)


@dataclass(frozen=True)
class ChordDiagram:
    """Cyclic word of 2n vertex labels; each label occurs exactly twice."""

    word: tuple[int, ...]
    positions: dict[int, tuple[int, int]] = field(compare=False, default_factory=dict)


@dataclass(frozen=True)
class InterlaceGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def adjacent(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, u: int) -> set[int]:
        return {next(iter(e - {u})) for e in self.edges if u in e}

    def swap_labels(self, u: int, v: int) -> "InterlaceGraph":
        relabel = {u: v, v: u}
        edges = frozenset(
            frozenset(relabel.get(x, x) for x in e) for e in self.edges
        )
        return InterlaceGraph(self.vertices, edges)


def _canonical_rotation(g: TwoDigraph, edges: tuple[str, ...]) -> tuple[str, ...]:
    rank = {eid: i for i, eid in enumerate(g.edge_order)}
    start = min(range(len(edges)), key=lambda k: rank[edges[k]])
    return edges[start:] + edges[:start]


def enumerate_euler_circuits(g: TwoDigraph) -> list[EulerCircuit]:
    """All Euler circuits, in lexicographic order of transition choices.

    The input must be connected; a vertex-free circle has exactly one
    (empty) circuit.
    """
    components, _ = analyze_connectivity(g)
    if len(components) > 1:
        raise CircuitError(f"graph is disconnected ({len(components)} components)")
    if g.n == 0:
        return [EulerCircuit(g, ())]

    vertex_ids = g.vertex_ids()
    # Per vertex and choice, the induced edge -> edge successor pairs.
    pair_table: dict[int, list[list[tuple[str, str]]]] = {}
    for v in vertex_ids:
        pair_table[v] = [
            [(i[0], o[0]) for i, o in transition_pairing(g, v, c)] for c in (0, 1)
        ]

    total = len(g.edges)
    start = g.edge_order[0]
    circuits = []
    for choices in product((0, 1), repeat=len(vertex_ids)):
        succ: dict[str, str] = {}
        for v, c in zip(vertex_ids, choices):
            for ie, oe in pair_table[v][c]:
                succ[ie] = oe
        count = 1
        e = succ[start]
        while e != start:
            e = succ[e]
            count += 1
        if count == total:
            seq = [start]
            e = succ[start]
            while e != start:
                seq.append(e)
                e = succ[e]
            circuits.append(EulerCircuit(g, _canonical_rotation(g, tuple(seq))))
    return circuits


def _integer_det(matrix: list[list[int]]) -> int:
    """Bareiss fraction-free determinant over the integers."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def count_circuits_best(g: TwoDigraph) -> int:
    """Euler circuit count as an arborescence determinant.

    For a connected graph with 2 in / 2 out at every vertex the circuit
    count equals the number of arborescences into any fixed root, i.e. the
    determinant of the reduced out-degree Laplacian (self-loops cancel).
    """
    components, _ = analyze_connectivity(g)
    if len(components) > 1:
        raise CircuitError(f"graph is disconnected ({len(components)} components)")
    if g.n == 0:
        return 1
    ids = g.vertex_ids()
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    lap = [[0] * n for _ in range(n)]
    for v in ids:
        lap[index[v]][index[v]] = 2
    for e in g.edges.values():
        lap[index[e.tail]][index[e.head]] -= 1
    reduced = [row[1:] for row in lap[1:]]
    return _integer_det(reduced)


def chord_diagram(circuit: EulerCircuit) -> ChordDiagram:
    """The 2n-point chord diagram read from the circuit's canonical start."""
    word = circuit.visits
    positions: dict[int, tuple[int, int]] = {}
    for k, v in enumerate(word):
        if v in positions:
            positions[v] = (positions[v][0], k)
        else:
            positions[v] = (k, k)
    return ChordDiagram(word=word, positions=positions)


def interlace_sets(circuit: EulerCircuit) -> dict[int, set[int]]:
    """For each vertex, the set of vertices whose chords cross its chord."""
    diagram = chord_diagram(circuit)
    pos = diagram.positions
    result: dict[int, set[int]] = {v: set() for v in pos}
    items = sorted(pos.items())
    for a, (a1, a2) in items:
        for b, (b1, b2) in items:
            if b <= a:
                continue
            inside = (a1 < b1 < a2) + (a1 < b2 < a2)
            if inside == 1:
                result[a].add(b)
                result[b].add(a)
    return result


def interlace_graph(circuit: EulerCircuit) -> InterlaceGraph:
    sets = interlace_sets(circuit)
    edges = frozenset(
        frozenset((u, v)) for u, nbrs in sets.items() for v in nbrs if u < v
    )
    return InterlaceGraph(tuple(sorted(sets)), edges)


def swap_circuit_labels(circuit: EulerCircuit, u: int, v: int) -> EulerCircuit:
    """Same edge walk on the graph with labels of u and v exchanged."""
    if u == v:
        raise CircuitError("label swap needs two distinct vertices")
    perm = {w: w for w in circuit.graph.vertices}
    perm[u], perm[v] = v, u
    return EulerCircuit(permute_labels(circuit.graph, perm), circuit.edges)


def transpose_circuit(circuit: EulerCircuit, u: int, v: int) -> EulerCircuit:
    """Exchange the two u-to-v edge subsequences of an interlaced pair."""
    if u == v:
        raise CircuitError("transposition needs two distinct vertices")
    visits = circuit.visits
    m = len(visits)
    pu = [k for k, w in enumerate(visits) if w == u]
    pv = [k for k, w in enumerate(visits) if w == v]
    if len(pu) != 2 or len(pv) != 2:
        raise CircuitError(f"vertices {u} and {v} must both lie on the circuit")
    shift = pu[0]
    rotated = circuit.edges[shift:] + circuit.edges[:shift]
    b, d = sorted((p - shift) % m for p in pv)
    c = (pu[1] - shift) % m
    if not (0 < b < c < d):
        raise CircuitError(f"vertices {u} and {v} do not interlace in the circuit")
    s1, t1, s2, t2 = rotated[:b], rotated[b:c], rotated[c:d], rotated[d:]
    new_edges = s2 + t1 + s1 + t2
    return EulerCircuit(circuit.graph, _canonical_rotation(circuit.graph, new_edges))


def pivot_graph(h: InterlaceGraph, u: int, v: int) -> InterlaceGraph:
    """Toggle adjacencies between the distinct neighbor classes of u and v.

    Vertices other than u, v fall into classes: adjacent to u alone, to v
    alone, to both, or to neither.  Every pair spanning two distinct
    classes among the first three is toggled; edges at u or v are kept.
    """
    if u == v:
        raise CircuitError("pivot needs two distinct vertices")
    nu = h.neighbors(u) - {v}
    nv = h.neighbors(v) - {u}
    classes: dict[int, int] = {}
    for w in h.vertices:
        if w in (u, v):
            continue
        in_u, in_v = w in nu, w in nv
        if in_u and in_v:
            classes[w] = 3
        elif in_u:
            classes[w] = 1
        elif in_v:
            classes[w] = 2
    edges = set(h.edges)
    members = sorted(classes)
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            if classes[x] != classes[y]:
                pair = frozenset((x, y))
                if pair in edges:
                    edges.remove(pair)
                else:
                    edges.add(pair)
    return InterlaceGraph(h.vertices, frozenset(edges))


def interlace_partition(circuit: EulerCircuit, i: int, j: int):
    """Partition of the other vertices by adjacency to the pair (i, j).

    Returns (A, B, C, D): interlacing neither, i alone, j alone, or both.
    """
    if i == j:
        raise CircuitError("partition needs two distinct vertices")
    sets = interlace_sets(circuit)
    everything = set(sets)
    ci, cj = sets[i], sets[j]
    co_i = everything - ci
    co_j = everything - cj
    a = (co_i & co_j) - {i, j}
    b = (ci - {j}) & co_j
    c = (cj - {i}) & co_i
    d = ci & cj
    return a, b, c, d
