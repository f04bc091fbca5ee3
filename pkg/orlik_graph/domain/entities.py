"""Domain entities for the Orlik Graph bounded context."""
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from cyclo_algebra.domain.arithmetic import lcm_all

Edge = Tuple[int, int, int]


class OrlikGraph:
    """Directed graph on a finite set M of positive integers.

    An edge m1 -> m2 carries a prime label p when m1/m2 is a power of p and
    no third element of M lies between them in the divisibility order. The
    graph is immutable after construction.

    Attributes:
        vertices (FrozenSet[int]): The set M.
    """

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge]):
        self.vertices = frozenset(vertices)
        self._graph = nx.DiGraph()
        self._graph.add_nodes_from(sorted(self.vertices, reverse=True))
        for m1, m2, p in edges:
            self._graph.add_edge(m1, m2, prime=p)

    @property
    def graph(self) -> nx.DiGraph:
        """A read-only networkx view of the graph."""
        return self._graph.copy(as_view=True)

    @property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset((m1, m2, p) for m1, m2, p in self._graph.edges(data="prime"))

    def p_edges(self, p: int) -> List[Tuple[int, int]]:
        return [(m1, m2) for m1, m2, q in self._graph.edges(data="prime") if q == p]

    def without_edges(self, removed: Iterable[Tuple[int, int]]) -> nx.Graph:
        """Undirected copy of the graph with the given edges deleted."""
        undirected = nx.Graph()
        undirected.add_nodes_from(self._graph)
        skip = set(removed)
        undirected.add_edges_from(e for e in self._graph.edges if e not in skip)
        return undirected

    @property
    def lcm(self) -> int:
        return lcm_all(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"OrlikGraph({sorted(self.vertices, reverse=True)}, {len(self._graph.edges)} edges)"


class GraphReport:
    """All verdicts computed for one Orlik graph.

    Attributes:
        vertices (Tuple[int, ...]): M in descending order.
        connected (bool): Weak connectivity of the graph.
        s2 (bool): Property (S_2).
        tp (Dict[int, bool]): Property (T_p) for every prime p >= 3 dividing lcm(M).
        condition_i (bool): Condition (I).
        condition_ii (bool): Condition (II).
        strong (bool): The rooted strong condition.
    """

    def __init__(
        self,
        vertices: Iterable[int],
        connected: bool,
        s2: bool,
        tp: Dict[int, bool],
        condition_i: bool,
        condition_ii: bool,
        strong: bool
    ):
        self.vertices = tuple(sorted(vertices, reverse=True))
        self.connected = connected
        self.s2 = s2
        self.tp = dict(sorted(tp.items()))
        self.condition_i = condition_i
        self.condition_ii = condition_ii
        self.strong = strong

    def to_dict(self) -> Dict:
        return {
            'M': list(self.vertices),
            'connected': self.connected,
            'S2': self.s2,
            'Tp': {str(p): ok for p, ok in self.tp.items()},
            'condition_I': self.condition_i,
            'condition_II': self.condition_ii,
            'strong': self.strong,
        }
