"""Euler-circuit expansion polynomial for vertex-signed checkerboard-
colorable 2-digraphs, with a Kauffman bracket oracle and the
Jones-Kauffman polynomial of virtual links."""

from .laurent import LaurentPoly
from .graphs import (
    Edge,
    GraphFormatError,
    NotCheckerboardColorable,
    SignedVertex,
    TwoDigraph,
    analyze_connectivity,
    flip_all_signs,
    make_graph,
    merge_at_vertex,
    parse_graph,
    permute_labels,
    reverse_orientation,
    to_document,
    validate_source_target,
)
from .euler import (
    ChordDiagram,
    CircuitError,
    EulerCircuit,
    InterlaceGraph,
    chord_diagram,
    count_circuits_best,
    enumerate_euler_circuits,
    interlace_graph,
    interlace_partition,
    interlace_sets,
    pivot_graph,
    swap_circuit_labels,
    transpose_circuit,
)
from .activity import (
    activity_word,
    circuit_weight,
    marker_labels,
    liveness,
    x_polynomial,
    x_via_skein,
)
from .links import (
    GaussFormatError,
    ShadowResult,
    VirtualLinkDiagram,
    bracket_oracle,
    jones_kauffman,
    mirror_diagram,
    one_loop_state_count,
    parse_gauss,
    shadow_graph,
    writhe,
)

__version__ = "0.1.0"
