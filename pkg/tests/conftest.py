import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import fixture_text  # noqa: E402

from eulerx.graphs import Edge, SignedVertex, make_graph  # noqa: E402

# Diagrams that must appear in the colorable corpus; the virtual_* entries
# have positive map genus, so any planar drawing needs virtual crossings.
CORPUS = [
    "unknot.gauss",
    "kink_pos.gauss",
    "kink_neg.gauss",
    "kinks_pp.gauss",
    "kinks_pm.gauss",
    "kinks_ppp.gauss",
    "kinks_pmm.gauss",
    "unlink_r2.gauss",
    "hopf_pos.gauss",
    "hopf_neg.gauss",
    "trefoil_right.gauss",
    "trefoil_left.gauss",
    "figure_eight.gauss",
    "granny.gauss",
    "square.gauss",
    "solomon.gauss",
    "trefoil_kink.gauss",
    "hopf_kink.gauss",
    "twist5.gauss",
    "torus7.gauss",
    "virtual_a.gauss",
    "virtual_b.gauss",
    "virtual_c.gauss",
    "virtual_d.gauss",
]


@pytest.fixture
def fig_graph():
    """The four-vertex example graph with its written-out Euler circuit
    v1 e1 v2 e2 v4 e3 v1 e4 v2 e5 v3 e6 v4 e7 v3 e8 v1."""
    return make_graph(
        [
            SignedVertex(1, 1, (("e3", "h"), ("e1", "t"), ("e8", "h"), ("e4", "t"))),
            SignedVertex(2, 1, (("e1", "h"), ("e2", "t"), ("e4", "h"), ("e5", "t"))),
            SignedVertex(3, 1, (("e5", "h"), ("e6", "t"), ("e7", "h"), ("e8", "t"))),
            SignedVertex(4, 1, (("e2", "h"), ("e3", "t"), ("e6", "h"), ("e7", "t"))),
        ],
        [
            Edge("e1", 1, 2),
            Edge("e2", 2, 4),
            Edge("e3", 4, 1),
            Edge("e4", 1, 2),
            Edge("e5", 2, 3),
            Edge("e6", 3, 4),
            Edge("e7", 4, 3),
            Edge("e8", 3, 1),
        ],
    )


@pytest.fixture
def curl_internal():
    return make_graph(
        [SignedVertex(1, 1, (("ea", "h"), ("eb", "t"), ("eb", "h"), ("ea", "t")))],
        [Edge("ea", 1, 1), Edge("eb", 1, 1)],
    )


@pytest.fixture
def curl_external():
    return make_graph(
        [SignedVertex(1, 1, (("ea", "h"), ("ea", "t"), ("eb", "h"), ("eb", "t")))],
        [Edge("ea", 1, 1), Edge("eb", 1, 1)],
    )


@pytest.fixture
def corpus_codes():
    return {name: fixture_text(name) for name in CORPUS}
