import math

import numpy as np
import pytest

from gpgraphs import (
    bfs_distances,
    build_field,
    build_graph,
    classify_structure,
    components,
    period,
    symmetrize,
)


def test_build_examples():
    g = build_graph(build_field(5, 2), 8)
    assert g.directed and g.n == 3 and g.k == 8
    g = build_graph(build_field(7, 1), 1)
    assert not g.directed and g.n == 6  # complete graph
    g = build_graph(build_field(7, 2), 16)
    assert g.directed and g.n == 3


def test_k_is_reduced():
    field = build_field(5, 2)
    assert build_graph(field, 28).k == 4
    assert build_graph(field, 25).k == 1
    with pytest.raises(ValueError):
        build_graph(field, 0)


def test_degrees_are_n_everywhere():
    from gpgraphs.numbertheory import divisors, prime_power

    for q in range(2, 344):
        pm = prime_power(q)
        if pm is None:
            continue
        field = build_field(*pm)
        vertices = np.arange(q, dtype=np.int64)
        for k in divisors(q - 1):
            graph = build_graph(field, k)
            heads = field.add_outer(vertices, np.asarray(graph.connection, dtype=np.int64))
            assert heads.shape == (q, graph.n)  # out-degree n by construction
            in_degrees = np.bincount(heads.ravel(), minlength=q)
            assert (in_degrees == graph.n).all()


def test_has_arc_matches_connection():
    field = build_field(5, 2)
    graph = build_graph(field, 8)
    for v in range(field.q):
        assert graph.has_arc(0, v) == (v in graph.connection_set)
    # translation invariance
    assert graph.has_arc(7, field.index_add(7, graph.connection[1]))


def test_distance_profile_is_vertex_independent():
    field = build_field(5, 2)
    for k in (2, 4, 8):
        graph = build_graph(field, k)
        base = np.bincount(bfs_distances(field, graph.connection, root=0))
        for root in (1, 7, 24):
            profile = np.bincount(bfs_distances(field, graph.connection, root=root))
            assert (profile == base).all()


def test_components_examples():
    dec = components(build_graph(build_field(5, 2), 6))
    assert (dec.count, dec.component_k, dec.component_q) == (5, 1, 5)  # five K_5
    dec = components(build_graph(build_field(7, 1), 1))
    assert dec.count == 1
    dec = components(build_graph(build_field(2, 8), 51))
    assert (dec.count, dec.component_k, dec.component_q) == (16, 3, 16)


def test_components_bfs_count_small_sweep():
    from gpgraphs.numbertheory import divisors, multiplicative_order, prime_power

    for q in (9, 16, 25, 27, 49, 81):
        p, m = prime_power(q)
        field = build_field(p, m)
        for k in divisors(q - 1):
            graph = build_graph(field, k)
            dec = components(graph)  # assert inside compares formula with explicit BFS
            assert dec.a == multiplicative_order(p, graph.n) if graph.n > 1 else dec.a == 1
            assert dec.count * dec.component_q == q


def test_symmetrize():
    field = build_field(5, 2)
    g8 = build_graph(field, 8)
    half = symmetrize(g8)
    assert half.k == 4 and not half.directed
    assert symmetrize(half) is half  # idempotent
    g2 = build_graph(build_field(13, 1), 2)
    assert symmetrize(g2) is g2  # 13 = 1 mod 4, already undirected
    # symmetrizing the full directed cycle graph gives the half-power graph
    for q in (5, 7, 27):
        from gpgraphs.numbertheory import prime_power

        field = build_field(*prime_power(q))
        assert symmetrize(build_graph(field, q - 1)).k == (q - 1) // 2


def test_symmetric_connection_equals_half_power_residues():
    field = build_field(3, 5)
    for k in (2, 22, 242):
        graph = build_graph(field, k)
        assert graph.directed
        assert set(graph.symmetric_connection()) == set(field.power_residue_indices(k // 2))


def test_period_of_directed_paley_7():
    field = build_field(7, 1)
    graph = build_graph(field, 2)
    # explicit directed cycles of lengths 3, 4, 6 and 7 (squares mod 7 are 1, 2, 4)
    cycles = [(0, 4, 6), (0, 4, 5, 6), (0, 2, 3, 4, 5, 6), (0, 1, 2, 3, 4, 5, 6)]
    for cycle in cycles:
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            assert graph.has_arc(u, v)
    assert math.gcd(*[len(c) for c in cycles]) == 1
    assert period(graph) == 1


def test_period_examples():
    assert period(build_graph(build_field(5, 1), 4)) == 5   # directed 5-cycle
    assert period(build_graph(build_field(2, 8), 255)) == 2  # disjoint K_2, arc pairs
    assert period(build_graph(build_field(5, 2), 24)) == 5   # five directed 5-cycles
    assert period(build_graph(build_field(5, 2), 8)) == 1
    assert period(build_graph(build_field(2, 2), 1)) == 1    # K_4 has triangles
    assert period(build_graph(build_field(2, 1), 1)) == 2    # single K_2


def test_period_matches_closed_walk_oracle():
    # independent oracle: gcd of all closed-walk lengths, read off adjacency
    # powers (every closed walk decomposes into directed cycles and back)
    from gpgraphs.numbertheory import divisors, prime_power

    for q in (3, 5, 7, 9, 11, 13, 25, 27):
        field = build_field(*prime_power(q))
        vertices = np.arange(q, dtype=np.int64)
        for k in divisors(q - 1):
            graph = build_graph(field, k)
            conn = np.asarray(graph.symmetric_connection() if not graph.directed
                              else graph.connection, dtype=np.int64)
            adj = np.zeros((q, q), dtype=np.int64)
            adj[vertices[:, None], field.add_outer(vertices, conn)] = 1
            power = np.eye(q, dtype=np.int64)
            lengths = []
            for length in range(1, 2 * q + 1):
                power = np.clip(power @ adj, 0, 1)  # boolean reachability product
                if np.trace(power) > 0:
                    lengths.append(length)
            assert math.gcd(*lengths) == period(graph), (q, k)


def test_classification():
    cases = [
        (5, 2, 1, "K(25)"),
        (5, 2, 2, "P(25)"),
        (5, 2, 3, "H(2,5)=L(5,5)"),
        (5, 2, 6, "5xK(5)"),
        (5, 2, 12, "5xP(5)"),
        (5, 2, 24, "5xdC(5)"),
        (7, 2, 16, "7xdP(7)"),
        (7, 2, 24, "7xC(7)"),
        (3, 4, 4, "semiprimitive"),
        (3, 4, 5, "H(2,9)=L(9,9)"),
        (3, 4, 10, "9xK(9)"),
        (2, 8, 3, "semiprimitive"),
        (2, 8, 51, "16xGP(3,16)"),
        (2, 8, 255, "128xK(2)"),
        (5, 2, 8, "generic"),
        (2, 8, 15, "generic"),
    ]
    for p, m, k, expected in cases:
        graph = build_graph(build_field(p, m), k)
        assert classify_structure(graph).render() == expected, (p, m, k)


def test_classification_full_sweep_is_consistent():
    from gpgraphs import component_structure
    from gpgraphs.numbertheory import divisors, prime_power

    kinds = {"complete-union", "paley-union", "cycle-union", "k2-union",
             "hamming", "semiprimitive", "generic"}
    for q in range(2, 344):
        pm = prime_power(q)
        if pm is None:
            continue
        field = build_field(*pm)
        for k in divisors(q - 1):
            graph = build_graph(field, k)
            label = classify_structure(graph)
            assert label.kind in kinds
            assert label.render()
            if label.kind in ("complete-union", "paley-union", "generic"):
                assert label.copies == component_structure(graph).count
            if label.kind in ("hamming", "semiprimitive"):
                assert component_structure(graph).count == 1


def test_hamming_label_requires_connectivity():
    # GP(10, 81) satisfies the Hamming parameter shape for b = 4 but splits into
    # nine K_9 blocks, so it must label as a complete-graph union instead.
    graph = build_graph(build_field(3, 4), 10)
    label = classify_structure(graph)
    assert label.kind == "complete-union"
    assert (label.copies, label.part) == (9, 9)
