"""Graph layer: constructors, H-joins, theta construction, exports."""

import json

import pytest
from hypothesis import given, strategies as st

from primecoprime.groups import cyclic, dicyclic, dihedral, s_indices
from primecoprime.pcgraph import (
    CapacityError,
    HJoinCheck,
    HJoinPart,
    HJoinSpec,
    PartKind,
    SimpleGraph,
    build_theta,
    complete,
    component_count,
    cycle_graph,
    delete_vertices,
    empty_graph,
    from_edges,
    graph_to_dot,
    graph_to_json,
    h_join,
    induced_subgraph,
    is_complete,
    join,
    validate_partition,
    verify_hjoin_structure,
)
from conftest import naive_theta

K = PartKind.COMPLETE
E = PartKind.EMPTY


def test_from_edges_validation():
    g = from_edges(3, [(0, 1), (1, 2), (0, 1)])  # duplicates collapse
    assert g.edge_count() == 2
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])


def test_complete_and_empty():
    assert complete(5).edge_count() == 10
    assert is_complete(complete(5))
    assert empty_graph(4).edge_count() == 0
    assert not is_complete(cycle_graph(4))
    assert is_complete(complete(0)) and is_complete(complete(1))


def test_join_structure():
    g = join(complete(2), empty_graph(2))
    assert g.vertex_count == 4
    assert g.edge_count() == 1 + 4
    assert g.has_edge(0, 1) and not g.has_edge(2, 3)
    assert all(g.has_edge(u, v) for u in (0, 1) for v in (2, 3))


@given(st.integers(0, 6), st.integers(0, 6))
def test_join_edge_count(na, nb):
    a, b = cycle_graph(na) if na >= 3 else empty_graph(na), complete(nb)
    g = join(a, b)
    assert g.edge_count() == a.edge_count() + b.edge_count() + na * nb
    assert sum(g.degree(v) for v in range(g.vertex_count)) == 2 * g.edge_count()


def test_h_join_matches_plain_join():
    spec = HJoinSpec(from_edges(2, [(0, 1)]),
                     (HJoinPart(K, 2), HJoinPart(E, 2)))
    assert h_join(spec) == join(complete(2), empty_graph(2))


def test_h_join_edge_count_formula():
    pattern = from_edges(3, [(0, 1), (1, 2)])
    parts = (HJoinPart(K, 3), HJoinPart(E, 4), HJoinPart(K, 2))
    g = h_join(HJoinSpec(pattern, parts))
    internal = 3 + 0 + 1
    cross = 3 * 4 + 4 * 2
    assert g.edge_count() == internal + cross
    # no edges between the non-adjacent outer parts
    assert not any(g.has_edge(u, v) for u in range(3) for v in (7, 8))


@pytest.mark.parametrize(
    "group",
    [cyclic(n) for n in range(1, 25)]
    + [dihedral(n) for n in range(3, 13)]
    + [dicyclic(n) for n in range(2, 11)],
    ids=str,
)
def test_build_theta_matches_naive(group):
    assert build_theta(group) == naive_theta(group)


def test_build_theta_labels_and_cap():
    g = build_theta(cyclic(4))
    assert g.labels == ("g0", "g1", "g2", "g3")
    assert build_theta(cyclic(1)) == complete(1)
    with pytest.raises(CapacityError):
        build_theta(cyclic(100), vertex_cap=99)


def test_theta_z4_as_h_join():
    g = build_theta(cyclic(4))
    spec = HJoinSpec(from_edges(2, [(0, 1)]),
                     (HJoinPart(K, 2), HJoinPart(E, 2)))
    # orders (1, 2) sit at g0 and g2; orders 4 at g1 and g3
    assert verify_hjoin_structure(g, [(0, 2), (1, 3)], spec).ok


def test_verify_hjoin_witnesses():
    g = build_theta(cyclic(4))
    pair = from_edges(2, [(0, 1)])
    no_edge = from_edges(2, [])
    spec_k = HJoinSpec(pair, (HJoinPart(K, 2), HJoinPart(E, 2)))
    # wrong split: part {g0, g1} is complete but {g2, g3} is not independent
    res = verify_hjoin_structure(g, [(0, 1), (2, 3)], spec_k)
    assert not res.ok and res.clause == "part-empty" and res.vertex_pair == (2, 3)
    # claiming no cross edges must fail immediately
    res = verify_hjoin_structure(
        g, [(0, 2), (1, 3)], HJoinSpec(no_edge, (HJoinPart(K, 2), HJoinPart(E, 2)))
    )
    assert not res.ok and res.clause == "cross-extra"
    # claiming completeness of an independent part
    res = verify_hjoin_structure(
        g, [(1, 3), (0, 2)],
        HJoinSpec(pair, (HJoinPart(K, 2), HJoinPart(K, 2))),
    )
    assert not res.ok and res.clause == "part-complete" and res.parts == (0,)
    with pytest.raises(ValueError):
        verify_hjoin_structure(g, [(0, 1, 2), (3,)], spec_k)  # sizes off


def test_validate_partition():
    assert validate_partition([(2, 0), (1,)], 3) == ((0, 2), (1,))
    with pytest.raises(ValueError):
        validate_partition([(0,), (0, 1)], 2)  # overlap
    with pytest.raises(ValueError):
        validate_partition([(0,)], 2)  # does not cover
    with pytest.raises(ValueError):
        validate_partition([(0,), ()], 1)  # empty part


def test_induced_subgraph_composite_orders_z12():
    # orders 4 and 6 have gcd 2, so the composite-order elements of Z_12 are
    # not an independent set: they induce a 4-cycle (orders 4 vs 6) plus the
    # four isolated order-12 elements
    g = build_theta(cyclic(12))
    composite = [3, 9, 2, 10, 1, 5, 7, 11]  # orders 4, 4, 6, 6, 12, 12, 12, 12
    sub = induced_subgraph(g, composite)
    assert sub.vertex_count == 8
    assert sub.edge_count() == 4
    assert component_count(sub) == 5
    assert sub.labels == ("g1", "g2", "g3", "g5", "g7", "g9", "g10", "g11")
    with pytest.raises(ValueError):
        induced_subgraph(g, [])
    with pytest.raises(ValueError):
        induced_subgraph(g, [99])


def test_delete_vertices_z9():
    g = build_theta(cyclic(9))
    rest = delete_vertices(g, s_indices(cyclic(9)))
    assert rest.vertex_count == 6
    assert rest.edge_count() == 0
    assert component_count(rest) == 6


def test_component_count():
    assert component_count(empty_graph(5)) == 5
    assert component_count(complete(4)) == 1
    assert component_count(empty_graph(0)) == 0
    two = from_edges(5, [(0, 1), (2, 3)])
    assert component_count(two) == 3


def test_theta_degrees_of_dominating_elements():
    for group in (cyclic(20), dihedral(9), dicyclic(6)):
        g = build_theta(group)
        for v in s_indices(group):
            assert g.degree(v) == group.order - 1


def test_dihedral_join_identity():
    for n in (3, 4, 12, 30):
        left = build_theta(dihedral(n))
        right = join(build_theta(cyclic(n)), complete(n))
        assert left == right


def test_dicyclic_join_identity_odd():
    for n in (3, 5, 9, 15):
        left = build_theta(dicyclic(n))
        right = join(build_theta(cyclic(2 * n)), empty_graph(2 * n))
        assert left == right
    assert build_theta(dicyclic(4)) != join(
        build_theta(cyclic(8)), empty_graph(8)
    )


def test_dot_export_golden():
    assert graph_to_dot(build_theta(cyclic(4))) == (
        "graph theta {\n"
        '  "g0";\n'
        '  "g1";\n'
        '  "g2";\n'
        '  "g3";\n'
        '  "g0" -- "g1";\n'
        '  "g0" -- "g2";\n'
        '  "g0" -- "g3";\n'
        '  "g1" -- "g2";\n'
        '  "g2" -- "g3";\n'
        "}\n"
    )


def test_json_export():
    text = graph_to_json(build_theta(dicyclic(2)), "dicyclic", 2)
    payload = json.loads(text)
    assert list(payload) == ["family", "parameter", "vertex_labels", "edges"]
    assert payload["parameter"] == 2
    assert payload["vertex_labels"][4] == "a0b"
    edges = [tuple(e) for e in payload["edges"]]
    assert edges == sorted(edges)
    assert all(u < v for u, v in edges)
    # byte determinism
    assert text == graph_to_json(build_theta(dicyclic(2)), "dicyclic", 2)


def test_graph_equality_ignores_labels():
    assert build_theta(cyclic(3)) == complete(3)
    assert SimpleGraph(((1,), (0,))) != SimpleGraph(((), ()))


def test_hjoin_check_is_truthy():
    assert HJoinCheck(True)
    assert not HJoinCheck(False, "part-empty", (0,), (1, 2))
