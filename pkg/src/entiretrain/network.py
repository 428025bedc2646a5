"""Rail network model, shortest-path routing and reclassification yards.

Links are undirected. A route's ``reclass_yards`` are the classification
yards at which a transfer shipment is broken up and re-sorted; their count is
the reclassification count ``q`` used by the cost model.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    ChainNotOnRoute,
    DanglingLinkEndpoint,
    DuplicateNodeId,
    NonPositiveLength,
    UnknownNode,
    Unreachable,
    ValidationError,
)

__all__ = [
    "NodeKind",
    "YardParams",
    "Node",
    "Link",
    "Route",
    "ServiceChain",
    "Network",
    "build_network",
    "shortest_path",
    "reclassification_set",
]


class NodeKind(str, enum.Enum):
    LOADING_STATION = "loading_station"
    UNLOADING_STATION = "unloading_station"
    CLASSIFICATION_YARD = "classification_yard"


@dataclass(frozen=True)
class YardParams:
    """Per-yard handling parameters.

    Attributes:
        t_broken_up: Hours to break up an inbound train.
        t_classified: Hours to classify (sort) the cars.
        c_classified: Handling cost per car (money units / car).
    """

    t_broken_up: float
    t_classified: float
    c_classified: float

    def __post_init__(self):
        for name in ("t_broken_up", "t_classified", "c_classified"):
            if not getattr(self, name) >= 0:
                raise ValidationError(f"yard parameter {name} must be >= 0")

    @property
    def t_delay(self) -> float:
        """Intermediate delay per car at this yard (broken up + classified)."""
        return self.t_broken_up + self.t_classified


@dataclass(frozen=True)
class Node:
    id: str
    kind: NodeKind
    yard_params: YardParams | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", NodeKind(self.kind))
        is_yard = self.kind is NodeKind.CLASSIFICATION_YARD
        if is_yard and self.yard_params is None:
            raise ValidationError(f"classification yard {self.id} needs yard_params")
        if not is_yard and self.yard_params is not None:
            raise ValidationError(f"node {self.id} is not a yard but has yard_params")

    @property
    def is_yard(self) -> bool:
        return self.kind is NodeKind.CLASSIFICATION_YARD


@dataclass(frozen=True)
class Link:
    a: str
    b: str
    length_km: float

    def __post_init__(self):
        if not self.length_km > 0:
            raise NonPositiveLength(
                f"link {self.a}-{self.b}: length must be > 0, got {self.length_km}"
            )
        if self.a == self.b:
            raise ValidationError(f"link {self.a}-{self.b}: endpoints must differ")


@dataclass(frozen=True)
class Route:
    """A path through the network.

    Attributes:
        nodes: Node ids from origin to destination.
        distance_km: Sum of the traversed link lengths.
        reclass_yards: Intermediate yards where the shipment is reclassified.
    """

    nodes: tuple[str, ...]
    distance_km: float
    reclass_yards: tuple[str, ...] = ()

    @property
    def origin(self) -> str:
        return self.nodes[0]

    @property
    def destination(self) -> str:
        return self.nodes[-1]

    @property
    def q(self) -> int:
        return len(self.reclass_yards)


@dataclass(frozen=True)
class ServiceChain:
    """Ordered train-service legs a transfer shipment rides, as (from, to) pairs."""

    legs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple((str(a), str(b)) for a, b in self.legs))


@dataclass(frozen=True)
class Network:
    """Immutable rail network. Build with :func:`build_network`."""

    nodes: tuple[Node, ...]
    links: tuple[Link, ...]
    _index: Mapping[str, Node] = field(init=False, repr=False, compare=False)
    _adj: Mapping[str, tuple[tuple[str, float], ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        index: dict[str, Node] = {}
        for node in self.nodes:
            if node.id in index:
                raise DuplicateNodeId(f"duplicate node id {node.id}")
            index[node.id] = node
        adj: dict[str, list[tuple[str, float]]] = {nid: [] for nid in index}
        for link in self.links:
            for end in (link.a, link.b):
                if end not in index:
                    raise DanglingLinkEndpoint(
                        f"link {link.a}-{link.b} references unknown node {end}"
                    )
            adj[link.a].append((link.b, link.length_km))
            adj[link.b].append((link.a, link.length_km))
        object.__setattr__(self, "_index", MappingProxyType(index))
        object.__setattr__(
            self,
            "_adj",
            MappingProxyType({k: tuple(sorted(v)) for k, v in adj.items()}),
        )

    def __contains__(self, node_id) -> bool:
        return node_id in self._index

    def node(self, node_id: str) -> Node:
        try:
            return self._index[node_id]
        except KeyError:
            raise UnknownNode(f"unknown node {node_id}") from None

    def neighbors(self, node_id: str) -> tuple[tuple[str, float], ...]:
        self.node(node_id)
        return self._adj[node_id]

    def yard_params(self) -> Mapping[str, YardParams]:
        return {n.id: n.yard_params for n in self.nodes if n.is_yard}


def build_network(nodes: Iterable[Node], links: Iterable[Link]) -> Network:
    """Validate nodes and links and return an immutable :class:`Network`.

    Raises:
        DuplicateNodeId: Two nodes share an id.
        DanglingLinkEndpoint: A link names a node that does not exist.
        NonPositiveLength: A link length is not strictly positive.
    """
    return Network(tuple(nodes), tuple(links))


def shortest_path(net: Network, origin: str, dest: str) -> Route:
    """Minimum-length route from ``origin`` to ``dest``.

    Among equally short paths the lexicographically smallest node-id
    sequence wins, so results are reproducible. The returned route marks every
    intermediate classification yard for reclassification; refine it with
    :func:`reclassification_set` when a service chain is known.
    """
    net.node(origin)
    net.node(dest)
    # Lengths are strictly positive, so two equal-length paths to the same node
    # cannot be prefixes of each other and extending both keeps their order.
    best: dict[str, tuple[float, tuple[str, ...]]] = {origin: (0.0, (origin,))}
    heap = [(0.0, (origin,))]
    settled: set[str] = set()
    while heap:
        dist, path = heapq.heappop(heap)
        u = path[-1]
        if u in settled:
            continue
        settled.add(u)
        if u == dest:
            return Route(path, dist, _intermediate_yards(net, path))
        for v, w in net.neighbors(u):
            if v in settled:
                continue
            cand = (dist + w, path + (v,))
            if v not in best or cand < best[v]:
                best[v] = cand
                heapq.heappush(heap, cand)
    raise Unreachable(f"no path from {origin} to {dest}")


def _intermediate_yards(net: Network, path: Sequence[str]) -> tuple[str, ...]:
    return tuple(nid for nid in path[1:-1] if net.node(nid).is_yard)


def reclassification_set(
    net: Network, route: Route, chain: ServiceChain | None = None
) -> Route:
    """Return ``route`` with its reclassification yards recomputed.

    Without a chain every intermediate classification yard handles the
    shipment. With a chain, only yards where two consecutive legs meet do;
    yards passed through inside a leg are bypassed.

    Raises:
        ChainNotOnRoute: The legs are not contiguous, do not span the route
            from origin to destination, or visit nodes out of route order.
    """
    if chain is None:
        return replace(route, reclass_yards=_intermediate_yards(net, route.nodes))

    legs = chain.legs
    if not legs:
        raise ChainNotOnRoute("service chain has no legs")
    position = {nid: i for i, nid in enumerate(route.nodes)}
    if legs[0][0] != route.origin or legs[-1][1] != route.destination:
        raise ChainNotOnRoute(
            f"chain must run {route.origin} -> {route.destination}, "
            f"got {legs[0][0]} -> {legs[-1][1]}"
        )
    for k, (a, b) in enumerate(legs):
        if a not in position or b not in position:
            off = a if a not in position else b
            raise ChainNotOnRoute(f"leg {a}->{b}: node {off} is not on the route")
        if position[a] >= position[b]:
            raise ChainNotOnRoute(f"leg {a}->{b} runs against the route direction")
        if k and legs[k - 1][1] != a:
            raise ChainNotOnRoute(f"leg {a}->{b} does not start where the previous ended")
    junctions = (b for _, b in legs[:-1])
    return replace(route, reclass_yards=tuple(j for j in junctions if net.node(j).is_yard))
