import pytest

from entiretrain import (
    Link,
    Node,
    NodeKind,
    Route,
    YardParams,
    build_network,
    golden_scenario_path,
    load_scenario,
)


@pytest.fixture
def golden():
    return load_scenario(golden_scenario_path())


@pytest.fixture
def line_network():
    """O - Y1 - Y2 - Y3 - U, every yard 4 h delay."""
    yp = YardParams(1.5, 2.5, 40.0)
    nodes = [
        Node("O", NodeKind.LOADING_STATION),
        Node("Y1", NodeKind.CLASSIFICATION_YARD, yp),
        Node("Y2", NodeKind.CLASSIFICATION_YARD, yp),
        Node("Y3", NodeKind.CLASSIFICATION_YARD, yp),
        Node("U", NodeKind.UNLOADING_STATION),
    ]
    links = [
        Link("O", "Y1", 100.0),
        Link("Y1", "Y2", 200.0),
        Link("Y2", "Y3", 300.0),
        Link("Y3", "U", 100.0),
    ]
    return build_network(nodes, links)


@pytest.fixture
def two_yard_route():
    return Route(("O", "Y1", "Y2", "U"), 500.0, ("Y1", "Y2"))
