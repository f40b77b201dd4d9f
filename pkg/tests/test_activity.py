import random

import pytest

from helpers import random_circuit_graph, random_disconnected_graph

from eulerx import laurent
from eulerx.activity import (
    ACTIVITY_LETTERS,
    LETTER_WEIGHTS,
    activity_word,
    circuit_weight,
    marker_labels,
    liveness,
    merged_marker_label,
    x_polynomial,
    x_via_skein,
)
from eulerx.euler import enumerate_euler_circuits, interlace_sets, transpose_circuit
from eulerx.graphs import (
    NotCheckerboardColorable,
    TwoDigraph,
    analyze_connectivity,
    flip_all_signs,
    merge_at_vertex,
    parse_graph,
    permute_labels,
    reverse_orientation,
)
from helpers import fixture_text


def single_circuit(g):
    (c,) = enumerate_euler_circuits(g)
    return c


class TestWeights:
    def test_letter_weight_table(self):
        expected = {
            "L": "-q^-3",
            "D": "q",
            "l": "-q^3",
            "d": "q^-1",
            "L~": "-q^3",
            "D~": "q^-1",
            "l~": "-q^-3",
            "d~": "q",
        }
        assert {k: str(v) for k, v in LETTER_WEIGHTS.items()} == expected

    def test_barred_weights_are_mirrors(self):
        for plain in ("L", "D", "l", "d"):
            assert LETTER_WEIGHTS[plain + "~"] == LETTER_WEIGHTS[plain].mirror()

    def test_circuit_weight_products(self):
        assert circuit_weight(["L"]) == laurent.monomial(-3, -1)
        assert circuit_weight(["D", "d"]) == laurent.one()
        assert circuit_weight([]) == laurent.one()


class TestGammaState:
    def test_curl_labels(self, curl_internal, curl_external):
        ci = single_circuit(curl_internal)
        assert marker_labels(curl_internal, ci) == {1: "A"}
        ce = single_circuit(curl_external)
        assert marker_labels(curl_external, ce) == {1: "a"}

    def test_labels_track_sign(self, curl_internal):
        flipped = flip_all_signs(curl_internal)
        c = single_circuit(flipped)
        assert marker_labels(flipped, c) == {1: "B"}

    def test_transposition_action_on_labels(self):
        # away from the pair labels are kept; at the pair A<->a and B<->b
        rng = random.Random(30)
        swap = {"A": "a", "a": "A", "B": "b", "b": "B"}
        checked = 0
        while checked < 200:
            g, _ = random_circuit_graph(rng, rng.randint(2, 6))
            circuits = enumerate_euler_circuits(g)
            circuit = rng.choice(circuits)
            sets = interlace_sets(circuit)
            pairs = [(u, v) for u in sets for v in sets[u] if u < v]
            if not pairs:
                continue
            u, v = rng.choice(pairs)
            before = marker_labels(g, circuit)
            after = marker_labels(g, transpose_circuit(circuit, u, v))
            for w in g.vertices:
                if w in (u, v):
                    assert after[w] == swap[before[w]]
                else:
                    assert after[w] == before[w]
            checked += 1

    def test_recoloring_action_on_labels(self):
        # rewriting in the opposite coloring acts as A<->b, a<->B
        rng = random.Random(31)
        swap = {"A": "b", "b": "A", "a": "B", "B": "a"}
        for _ in range(50):
            g, _ = random_circuit_graph(rng, rng.randint(1, 6))
            r = reverse_orientation(g)
            for circuit in enumerate_euler_circuits(g):
                mirror_circuit = next(
                    c
                    for c in enumerate_euler_circuits(r)
                    if sorted(c.edges) == sorted(circuit.edges)
                    and c.transitions == {w: 1 - t for w, t in circuit.transitions.items()}
                )
                before = marker_labels(g, circuit)
                after = marker_labels(r, mirror_circuit)
                assert after == {w: swap[label] for w, label in before.items()}

    def test_start_independence(self, fig_graph):
        # labels come from the transition system, which has no start point;
        # recompute transitions from every rotation of the edge list
        from eulerx.euler import EulerCircuit

        for circuit in enumerate_euler_circuits(fig_graph):
            reference = circuit.transitions
            for k in range(len(circuit.edges)):
                rotated = EulerCircuit(fig_graph, circuit.edges[k:] + circuit.edges[:k])
                assert rotated.transitions == reference

    def test_merge_order_independence(self):
        rng = random.Random(32)
        for _ in range(10):
            g, _ = random_circuit_graph(rng, rng.randint(2, 5))
            circuit = rng.choice(enumerate_euler_circuits(g))
            labels = marker_labels(g, circuit)
            for v in g.vertex_ids():
                others = [w for w in g.vertex_ids() if w != v]
                rng.shuffle(others)
                assert merged_marker_label(g, circuit, v, order=others) == labels[v]

    def test_wrong_graph_rejected(self, fig_graph, curl_internal):
        circuit = single_circuit(curl_internal)
        with pytest.raises(ValueError):
            marker_labels(fig_graph, circuit)


class TestActivityWord:
    def test_curl_is_live(self, curl_internal, curl_external):
        assert activity_word(curl_internal, single_circuit(curl_internal)) == ("L",)
        assert activity_word(curl_external, single_circuit(curl_external)) == ("l",)

    def test_fig_circuit_liveness(self, fig_graph):
        target = tuple(f"e{i}" for i in range(1, 9))
        circuit = next(c for c in enumerate_euler_circuits(fig_graph) if c.edges == target)
        live = liveness(circuit)
        assert live[1] is True  # interlaced only by larger labels
        assert live[4] is False  # interlaced by 1, 2, 3
        word = activity_word(fig_graph, circuit)
        assert word[0] in ("L", "l", "L~", "l~")
        assert word[3] in ("D", "d", "D~", "d~")

    def test_letters_follow_label_and_liveness(self):
        rng = random.Random(33)
        for _ in range(30):
            g, _ = random_circuit_graph(rng, rng.randint(1, 6))
            for circuit in enumerate_euler_circuits(g):
                labels = marker_labels(g, circuit)
                live = liveness(circuit)
                word = activity_word(g, circuit)
                for i, v in enumerate(sorted(g.vertices)):
                    assert word[i] == ACTIVITY_LETTERS[(labels[v], live[v])]


class TestXPolynomial:
    def test_single_circle(self):
        assert x_polynomial(TwoDigraph([], [], circles=1)) == laurent.one()

    def test_two_circles(self):
        assert x_polynomial(TwoDigraph([], [], circles=2)) == laurent.delta()

    def test_curls(self, curl_internal, curl_external):
        assert str(x_polynomial(curl_internal)) == "-q^-3"
        assert str(x_polynomial(curl_external)) == "-q^3"

    def test_non_colorable_rejected(self):
        g = parse_graph(fixture_text("bad_rotation.json"), require_source_target=False)
        with pytest.raises(NotCheckerboardColorable):
            x_polynomial(g)
        with pytest.raises(NotCheckerboardColorable):
            x_via_skein(g)

    def test_disconnected_formula(self):
        rng = random.Random(34)
        for _ in range(10):
            parts = [rng.randint(1, 4) for _ in range(rng.randint(2, 3))]
            circles = rng.randint(0, 2)
            g = random_disconnected_graph(rng, parts, circles=circles)
            comps, _ = analyze_connectivity(g)
            product = laurent.delta() ** (len(comps) - 1)
            for comp in comps:
                product = product * x_polynomial(comp)
            assert x_polynomial(g) == product


class TestSkein:
    def test_base_cases(self):
        assert x_via_skein(TwoDigraph([], [], circles=1)) == laurent.one()
        assert x_via_skein(TwoDigraph([], [], circles=3)) == laurent.delta() ** 2

    def test_curl_one_step(self, curl_internal):
        # q * X(circle) + q^-1 * X(two circles) = -q^-3
        value = laurent.monomial(1) * laurent.one() + laurent.monomial(-1) * laurent.delta()
        assert value == x_via_skein(curl_internal) == laurent.monomial(-3, -1)

    def test_matches_expansion(self):
        rng = random.Random(35)
        for _ in range(40):
            g, _ = random_circuit_graph(rng, rng.randint(0, 6))
            assert x_via_skein(g) == x_polynomial(g)

    def test_skein_identity_at_every_vertex(self):
        rng = random.Random(36)
        for _ in range(40):
            g, _ = random_circuit_graph(rng, rng.randint(1, 6))
            x = x_polynomial(g)
            for v in g.vertex_ids():
                sign = g.vertices[v].sign
                lhs = laurent.monomial(sign) * x_polynomial(merge_at_vertex(g, v, 0))
                rhs = laurent.monomial(-sign) * x_polynomial(merge_at_vertex(g, v, 1))
                assert lhs + rhs == x

    def test_cut_vertex_identity(self):
        rng = random.Random(37)
        seen = 0
        while seen < 25:
            g, _ = random_circuit_graph(rng, rng.randint(1, 6))
            _, cuts = analyze_connectivity(g)
            for v in cuts:
                merged = [merge_at_vertex(g, v, c) for c in (0, 1)]
                split = [m for m in merged if len(analyze_connectivity(m)[0]) > 1]
                joined = [m for m in merged if len(analyze_connectivity(m)[0]) == 1]
                assert len(split) == 1 and len(joined) == 1
                assert x_polynomial(split[0]) == laurent.delta() * x_polynomial(joined[0])
                seen += 1


class TestInvariance:
    def test_relabeling(self):
        rng = random.Random(38)
        for _ in range(30):
            n = rng.randint(1, 6)
            g, _ = random_circuit_graph(rng, n)
            x = x_polynomial(g)
            for _ in range(5):
                images = list(range(1, n + 1))
                rng.shuffle(images)
                assert x_polynomial(permute_labels(g, dict(zip(range(1, n + 1), images)))) == x

    def test_recoloring(self):
        rng = random.Random(39)
        for _ in range(30):
            g, _ = random_circuit_graph(rng, rng.randint(0, 6))
            assert x_polynomial(reverse_orientation(g)) == x_polynomial(g)

    def test_sign_flip_mirrors(self):
        rng = random.Random(40)
        for _ in range(30):
            g, _ = random_circuit_graph(rng, rng.randint(0, 6))
            assert x_polynomial(flip_all_signs(g)) == x_polynomial(g).mirror()
