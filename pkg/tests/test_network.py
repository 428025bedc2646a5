import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entiretrain import (
    ChainNotOnRoute,
    DanglingLinkEndpoint,
    DuplicateNodeId,
    Link,
    Node,
    NodeKind,
    NonPositiveLength,
    ServiceChain,
    UnknownNode,
    Unreachable,
    ValidationError,
    YardParams,
    build_network,
    reclassification_set,
    shortest_path,
)

from oracles import enumerate_paths, make_network, random_connected_graph


def station(i):
    return Node(i, NodeKind.LOADING_STATION)


def test_minimal_network():
    net = build_network([station("A"), station("B")], [Link("A", "B", 500.0)])
    assert len(net.nodes) == 2
    assert len(net.links) == 1
    assert net.neighbors("A") == (("B", 500.0),)
    assert net.neighbors("B") == (("A", 500.0),)


def test_duplicate_node_id():
    yp = YardParams(1, 1, 1)
    y = Node("Y1", NodeKind.CLASSIFICATION_YARD, yp)
    with pytest.raises(DuplicateNodeId):
        build_network([y, y], [])


def test_dangling_link_endpoint():
    with pytest.raises(DanglingLinkEndpoint):
        build_network([station("A")], [Link("A", "Y9", 10.0)])


@pytest.mark.parametrize("length", [0.0, -5.0])
def test_non_positive_length(length):
    with pytest.raises(NonPositiveLength):
        Link("A", "B", length)


def test_yard_params_required_iff_yard():
    with pytest.raises(ValidationError):
        Node("Y", NodeKind.CLASSIFICATION_YARD)
    with pytest.raises(ValidationError):
        Node("S", NodeKind.LOADING_STATION, YardParams(1, 1, 1))
    with pytest.raises(ValidationError):
        YardParams(-1, 1, 1)


def test_triangle_shortest_path():
    ids = ["A", "D", "O"]
    links = [("O", "A", 3.0), ("A", "D", 4.0), ("O", "D", 10.0)]
    # oracle: enumerate both simple paths
    assert min(enumerate_paths(ids, links, "O", "D")) == (7.0, ("O", "A", "D"))
    route = shortest_path(make_network(ids, links), "O", "D")
    assert route.nodes == ("O", "A", "D")
    assert route.distance_km == 7.0


def test_identity_route():
    net = make_network(["O", "D"], [("O", "D", 1.0)])
    route = shortest_path(net, "O", "O")
    assert route.nodes == ("O",)
    assert route.distance_km == 0
    assert route.q == 0


def test_unreachable_and_unknown():
    net = make_network(["A", "B", "C", "D"], [("A", "B", 1.0), ("C", "D", 1.0)])
    with pytest.raises(Unreachable):
        shortest_path(net, "A", "D")
    with pytest.raises(UnknownNode):
        shortest_path(net, "A", "Z")


def test_tie_break_is_lexicographic():
    # two 2-km paths S-A-T and S-B-T; A sorts first
    net = make_network(["S", "B", "A", "T"], [("S", "B", 1.0), ("B", "T", 1.0), ("S", "A", 1.0), ("A", "T", 1.0)])
    assert shortest_path(net, "S", "T").nodes == ("S", "A", "T")


def test_shortest_path_marks_all_intermediate_yards(line_network):
    route = shortest_path(line_network, "O", "U")
    assert route.nodes == ("O", "Y1", "Y2", "Y3", "U")
    assert route.distance_km == 700.0
    assert route.reclass_yards == ("Y1", "Y2", "Y3")


def test_reclassification_default(line_network):
    route = shortest_path(line_network, "O", "U")
    out = reclassification_set(line_network, route)
    assert out.reclass_yards == ("Y1", "Y2", "Y3")
    assert out.q == 3


def test_reclassification_with_direct_service(line_network):
    route = shortest_path(line_network, "O", "U")
    chain = ServiceChain((("O", "Y1"), ("Y1", "Y3"), ("Y3", "U")))
    out = reclassification_set(line_network, route, chain)
    assert out.reclass_yards == ("Y1", "Y3")
    assert out.q == 2
    assert out.distance_km == route.distance_km


@pytest.mark.parametrize(
    "legs",
    [
        (("O", "Y9"), ("Y9", "U")),        # off route
        (("O", "Y2"), ("Y1", "U")),        # not contiguous
        (("O", "Y2"), ("Y2", "Y1"), ("Y1", "U")),  # backwards
        (("Y1", "U"),),                    # does not start at origin
        (),
    ],
)
def test_chain_not_on_route(line_network, legs):
    route = shortest_path(line_network, "O", "U")
    with pytest.raises(ChainNotOnRoute):
        reclassification_set(line_network, route, ServiceChain(legs))


def test_local_train_junction_at_station_is_not_reclassification():
    yp = YardParams(1, 1, 1)
    nodes = [station("O"), station("S"), Node("Y", NodeKind.CLASSIFICATION_YARD, yp), station("U")]
    net = build_network(nodes, [Link("O", "S", 1), Link("S", "Y", 1), Link("Y", "U", 1)])
    route = shortest_path(net, "O", "U")
    out = reclassification_set(net, route, ServiceChain((("O", "S"), ("S", "Y"), ("Y", "U"))))
    assert out.reclass_yards == ("Y",)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), integer_lengths=st.booleans())
def test_shortest_path_matches_enumeration(seed, integer_lengths):
    rng = random.Random(seed)
    ids, links = random_connected_graph(rng, integer_lengths=integer_lengths)
    net = make_network(ids, links)
    o, d = rng.choice(ids), rng.choice(ids)
    best = min(enumerate_paths(ids, links, o, d))
    route = shortest_path(net, o, d)
    assert route.distance_km == best[0]
    assert route.nodes == best[1]


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), data=st.data())
def test_chain_never_increases_q(seed, data):
    rng = random.Random(seed)
    ids, links = random_connected_graph(rng)
    yards = {i for i in ids if rng.random() < 0.6}
    net = make_network(ids, links, yards)
    o, d = rng.sample(ids, 2)
    route = shortest_path(net, o, d)
    default = reclassification_set(net, route)
    assert default.q == sum(1 for n in route.nodes[1:-1] if n in yards)
    # random chain: cut the route at a random subset of interior positions
    interior = list(range(1, len(route.nodes) - 1))
    cuts = sorted(data.draw(st.sets(st.sampled_from(interior))) if interior else [])
    stops = [route.nodes[0], *(route.nodes[i] for i in cuts), route.nodes[-1]]
    chain = ServiceChain(tuple(zip(stops, stops[1:])))
    refined = reclassification_set(net, route, chain)
    assert refined.q <= default.q
    assert set(refined.reclass_yards) <= set(default.reclass_yards)
    assert refined.distance_km == route.distance_km
    assert refined.nodes == route.nodes
