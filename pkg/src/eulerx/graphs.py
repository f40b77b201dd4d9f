"""Half-edge model of vertex-signed checkerboard-colorable 2-digraphs.

A 2-digraph is a directed 4-valent graph with 2 incoming and 2 outgoing
edges at every vertex.  Each vertex stores a rotation: the counterclockwise
cyclic order of its four darts (edge ends).  The graph is checkerboard-
colorable exactly when the edge directions alternate in, out, in, out
around every vertex; the orientation then encodes one of the two
checkerboard colorings, and re-expressing the same signed object in the
opposite coloring reverses every edge and flips every vertex sign.

Vertex labels are 1..n with no gaps.  Graphs are treated as immutable:
every operation returns a new value, so concurrent reads are safe.

JSON document format::

    { "vertices": [ { "id": 1, "sign": 1,
                      "rotation": [ {"edge": "e1", "end": "head"}, ... 4 entries ... ] }, ... ],
      "edges":    [ { "id": "e1", "from": 2, "to": 1 }, ... ],
      "circles":  0 }

``rotation`` lists dart references counterclockwise.  ``circles`` counts
vertex-free closed components.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

Dart = tuple[str, str]  # (edge id, "t" for tail end | "h" for head end)


class GraphFormatError(ValueError):
    """Malformed graph document or structurally invalid graph."""


class NotCheckerboardColorable(ValueError):
    """The graph or diagram admits no source-target orientation."""


@dataclass(frozen=True)
class Edge:
    id: str
    tail: int
    head: int


@dataclass(frozen=True)
class SignedVertex:
    id: int
    sign: int  # +1 or -1
    rotation: tuple[Dart, Dart, Dart, Dart]


class TwoDigraph:
    """Immutable 2-digraph value: signed vertices, directed edges, circles."""

    __slots__ = ("vertices", "edges", "edge_order", "circles")

    def __init__(self, vertices, edges, circles: int = 0):
        vs = sorted(vertices, key=lambda v: v.id)
        self.vertices: dict[int, SignedVertex] = {v.id: v for v in vs}
        self.edges: dict[str, Edge] = {}
        order: list[str] = []
        for e in edges:
            if e.id in self.edges:
                raise GraphFormatError(f"duplicate edge id {e.id!r}")
            self.edges[e.id] = e
            order.append(e.id)
        self.edge_order: tuple[str, ...] = tuple(order)
        self.circles = circles

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_ids(self) -> list[int]:
        return list(self.vertices)

    def dart_direction(self, dart: Dart) -> str:
        """"in" if the dart is an edge head, "out" if an edge tail."""
        return "in" if dart[1] == "h" else "out"

    def dart_vertex(self, dart: Dart) -> int:
        edge = self.edges[dart[0]]
        return edge.head if dart[1] == "h" else edge.tail

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoDigraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.edge_order == other.edge_order
            and self.circles == other.circles
        )

    def __hash__(self) -> int:
        return hash((tuple(self.vertices.items()), tuple(self.edge_order), self.circles))

    def __repr__(self) -> str:
        return f"TwoDigraph(n={self.n}, edges={len(self.edges)}, circles={self.circles})"


def _check_structure(g: TwoDigraph) -> None:
    ids = g.vertex_ids()
    if ids != list(range(1, len(ids) + 1)):
        raise GraphFormatError(f"vertex labels must be 1..n with no gaps, got {ids}")
    if g.circles < 0:
        raise GraphFormatError("circles must be >= 0")
    for e in g.edges.values():
        for endpoint in (e.tail, e.head):
            if endpoint not in g.vertices:
                raise GraphFormatError(f"edge {e.id!r} references missing vertex {endpoint}")
    seen: dict[Dart, int] = {}
    for v in g.vertices.values():
        if v.sign not in (+1, -1):
            raise GraphFormatError(f"vertex {v.id} has sign {v.sign!r}, expected +1 or -1")
        if len(v.rotation) != 4:
            raise GraphFormatError(f"vertex {v.id} must have exactly 4 darts")
        ins = outs = 0
        for dart in v.rotation:
            eid, end = dart
            if eid not in g.edges or end not in ("t", "h"):
                raise GraphFormatError(f"vertex {v.id} references unknown dart {dart!r}")
            edge = g.edges[eid]
            at = edge.head if end == "h" else edge.tail
            if at != v.id:
                raise GraphFormatError(
                    f"dart {dart!r} in rotation of vertex {v.id} belongs to vertex {at}"
                )
            if dart in seen:
                raise GraphFormatError(f"dart {dart!r} used twice (vertices {seen[dart]} and {v.id})")
            seen[dart] = v.id
            if end == "h":
                ins += 1
            else:
                outs += 1
        if ins != 2 or outs != 2:
            raise GraphFormatError(
                f"vertex {v.id} must have 2 incoming and 2 outgoing darts, got {ins} in / {outs} out"
            )
    for e in g.edges.values():
        for dart in ((e.id, "t"), (e.id, "h")):
            if dart not in seen:
                raise GraphFormatError(f"dart {dart!r} of edge {e.id!r} appears in no rotation")


def validate_source_target(g: TwoDigraph) -> bool:
    """True iff edge directions alternate in, out, in, out around every vertex."""
    for v in g.vertices.values():
        dirs = [g.dart_direction(d) for d in v.rotation]
        if any(dirs[k] == dirs[(k + 1) % 4] for k in range(4)):
            return False
    return True


def make_graph(vertices, edges, circles: int = 0, require_source_target: bool = True) -> TwoDigraph:
    """Build and validate a TwoDigraph from components."""
    g = TwoDigraph(vertices, edges, circles)
    _check_structure(g)
    if require_source_target and not validate_source_target(g):
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
    return g


def parse_graph(document: str, require_source_target: bool = True) -> TwoDigraph:
    """Parse the JSON graph document and validate all invariants."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    try:
        raw_edges = data.get("edges", [])
        raw_vertices = data.get("vertices", [])
        circles = data.get("circles", 0)
        edges = [Edge(id=str(e["id"]), tail=int(e["from"]), head=int(e["to"])) for e in raw_edges]
        vertices = []
        for v in raw_vertices:
            rotation = tuple(
                (str(r["edge"]), {"head": "h", "tail": "t"}[r["end"]]) for r in v["rotation"]
            )
            if len(rotation) != 4:
                raise GraphFormatError(f"vertex {v.get('id')} must have exactly 4 rotation entries")
            vertices.append(SignedVertex(id=int(v["id"]), sign=int(v["sign"]), rotation=rotation))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"malformed graph document: {exc}") from exc
    return make_graph(vertices, edges, circles=int(circles), require_source_target=require_source_target)


def to_document(g: TwoDigraph) -> str:
    """Serialize back to the JSON document format."""
    data = {
        "vertices": [
            {
                "id": v.id,
                "sign": v.sign,
                "rotation": [
                    {"edge": eid, "end": "head" if end == "h" else "tail"} for eid, end in v.rotation
                ],
            }
            for v in g.vertices.values()
        ],
        "edges": [{"id": e.id, "from": e.tail, "to": e.head} for e in (g.edges[i] for i in g.edge_order)],
        "circles": g.circles,
    }
    return json.dumps(data, indent=1)


def reverse_orientation(g: TwoDigraph) -> TwoDigraph:
    """Re-express the graph in the opposite checkerboard coloring.

    Every edge direction is flipped and every vertex sign is flipped;
    rotations are kept.  Sign data is relative to the chosen coloring, so
    the flip is part of the recoloring and the expansion polynomial of the
    result is identical to that of the input.
    """
    edges = [Edge(e.id, tail=e.head, head=e.tail) for e in (g.edges[i] for i in g.edge_order)]
    swap = {"t": "h", "h": "t"}
    vertices = [
        SignedVertex(v.id, -v.sign, tuple((eid, swap[end]) for eid, end in v.rotation))
        for v in g.vertices.values()
    ]
    return TwoDigraph(vertices, edges, g.circles)


def flip_all_signs(g: TwoDigraph) -> TwoDigraph:
    """Negate every vertex sign."""
    vertices = [SignedVertex(v.id, -v.sign, v.rotation) for v in g.vertices.values()]
    return TwoDigraph(vertices, (g.edges[i] for i in g.edge_order), g.circles)


def permute_labels(g: TwoDigraph, perm: dict[int, int]) -> TwoDigraph:
    """Relabel vertex i as perm[i]; structure otherwise identical."""
    ids = g.vertex_ids()
    if sorted(perm) != ids or sorted(perm.values()) != ids:
        raise GraphFormatError(f"perm must be a bijection on 1..{g.n}")
    vertices = [SignedVertex(perm[v.id], v.sign, v.rotation) for v in g.vertices.values()]
    edges = [
        Edge(e.id, tail=perm[e.tail], head=perm[e.head]) for e in (g.edges[i] for i in g.edge_order)
    ]
    return TwoDigraph(vertices, edges, g.circles)


def _reindex(vertices, edges, circles) -> TwoDigraph:
    """Relabel the given vertices 1..k preserving relative order."""
    old_ids = sorted(v.id for v in vertices)
    remap = {old: new for new, old in enumerate(old_ids, start=1)}
    new_vertices = [SignedVertex(remap[v.id], v.sign, v.rotation) for v in vertices]
    new_edges = [Edge(e.id, remap[e.tail], remap[e.head]) for e in edges]
    return TwoDigraph(new_vertices, new_edges, circles)


def analyze_connectivity(g: TwoDigraph):
    """Split into connected components and find cut vertices.

    Returns (components, cut_vertices).  Components are standalone
    TwoDigraph values with vertices reindexed 1..k preserving order; each
    vertex-free circle is its own component.  Cut vertices are reported
    with their labels in the input graph.
    """
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for e in g.edges.values():
        union(e.tail, e.head)

    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)

    components: list[TwoDigraph] = []
    cut_vertices: set[int] = set()
    for root in sorted(groups, key=lambda r: min(groups[r])):
        members = set(groups[root])
        comp_vertices = [g.vertices[v] for v in sorted(members)]
        comp_edges = [g.edges[i] for i in g.edge_order if g.edges[i].tail in members]
        components.append(_reindex(comp_vertices, comp_edges, circles=0))
        for v in members:
            # v cuts its component when the punctured 1-complex splits:
            # group the edges by sharing an endpoint other than v.  A loop
            # at v is then its own piece, so a curl vertex counts as cut.
            sub_parent = {e.id: e.id for e in comp_edges}

            def sfind(x):
                while sub_parent[x] != x:
                    sub_parent[x] = sub_parent[sub_parent[x]]
                    x = sub_parent[x]
                return x

            anchor: dict[int, str] = {}
            for e in comp_edges:
                for endpoint in (e.tail, e.head):
                    if endpoint == v:
                        continue
                    if endpoint in anchor:
                        ra, rb = sfind(anchor[endpoint]), sfind(e.id)
                        if ra != rb:
                            sub_parent[ra] = rb
                    else:
                        anchor[endpoint] = e.id
            if len({sfind(e.id) for e in comp_edges}) > 1:
                cut_vertices.add(v)
    for _ in range(g.circles):
        components.append(TwoDigraph([], [], circles=1))
    return components, cut_vertices


def transition_pairing(g: TwoDigraph, vertex: int, choice: int) -> list[tuple[Dart, Dart]]:
    """The in-dart to out-dart pairing selected by the transition choice.

    Choice 0 pairs each incoming dart with the outgoing dart immediately
    counterclockwise of it in the rotation; choice 1 pairs clockwise.
    Returned in deterministic order (by rotation position of the in-dart).
    """
    if choice not in (0, 1):
        raise ValueError(f"choice must be 0 or 1, got {choice!r}")
    v = g.vertices[vertex]
    pairs = []
    for k, dart in enumerate(v.rotation):
        if g.dart_direction(dart) == "in":
            partner = v.rotation[(k + 1) % 4] if choice == 0 else v.rotation[(k - 1) % 4]
            pairs.append((dart, partner))
    if len(pairs) != 2 or any(g.dart_direction(o) != "out" for _, o in pairs):
        raise NotCheckerboardColorable(
            f"no source-target structure: directions do not alternate at vertex {vertex}"
        )
    return pairs


def merge_at_vertex(g: TwoDigraph, vertex: int, choice: int) -> TwoDigraph:
    """Delete the vertex, concatenating its edges along the chosen pairing.

    Each incoming edge is spliced with one outgoing edge into a single new
    edge running from the incoming edge's tail to the outgoing edge's
    head.  A splice that closes an edge chain on itself is recorded as a
    vertex-free circle.  Remaining vertices are reindexed 1..n-1
    preserving relative order.
    """
    if vertex not in g.vertices:
        raise GraphFormatError(f"vertex {vertex} not in graph")
    pairs = transition_pairing(g, vertex, choice)

    # Arc registry: arc id -> (tail dart, head dart), darts named in the
    # input graph.  Splices follow dart identity, so loops at the vertex
    # resolve unambiguously.
    arcs: dict[str, tuple[Dart, Dart]] = {
        eid: ((eid, "t"), (eid, "h")) for eid in g.edge_order
    }
    arc_order = list(g.edge_order)
    by_head = {head: aid for aid, (_, head) in arcs.items()}
    by_tail = {tail: aid for aid, (tail, _) in arcs.items()}
    new_circles = 0

    for in_dart, out_dart in pairs:
        a = by_head[in_dart]
        b = by_tail[out_dart]
        tail_a, _ = arcs[a]
        _, head_b = arcs[b]
        if a == b:
            new_circles += 1
            del arcs[a]
            del by_head[in_dart]
            del by_tail[out_dart]
            arc_order.remove(a)
        else:
            arcs[a] = (tail_a, head_b)
            by_head[head_b] = a
            del by_head[in_dart]
            del arcs[b]
            del by_tail[out_dart]
            arc_order.remove(b)

    # Final arc ids: an arc keeps the id of its tail edge; its end darts
    # are renamed accordingly and rotations rewritten.
    rename: dict[Dart, Dart] = {}
    new_edges = []
    for aid in arc_order:
        tail_dart, head_dart = arcs[aid]
        fid = tail_dart[0]
        rename[tail_dart] = (fid, "t")
        rename[head_dart] = (fid, "h")
        new_edges.append(
            Edge(fid, tail=g.dart_vertex(tail_dart), head=g.dart_vertex(head_dart))
        )

    survivors = sorted((v for v in g.vertices.values() if v.id != vertex), key=lambda v: v.id)
    remap = {v.id: i for i, v in enumerate(survivors, start=1)}
    final_vertices = [
        SignedVertex(remap[v.id], v.sign, tuple(rename.get(d, d) for d in v.rotation))
        for v in survivors
    ]
    final_edges = [Edge(e.id, remap[e.tail], remap[e.head]) for e in new_edges]
    return TwoDigraph(final_vertices, final_edges, circles=g.circles + new_circles)
