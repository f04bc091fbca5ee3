"""Domain services for the Orlik Graph context."""
import logging
from math import gcd
from typing import FrozenSet, Iterable, List, Sequence, Set

import networkx as nx

from cyclo_algebra.domain.arithmetic import is_prime, prime_factors, prime_power_base, valuation
from cyclo_algebra.domain.entities import Divisor
from orlik_graph.domain.entities import GraphReport, OrlikGraph
from shared.domain.errors import CrossCheckError, InvalidOrderError

LOGGER = logging.getLogger(__name__)


def _require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be a prime number, got {p!r}")
    return p


def _two_edge_paths(g: OrlikGraph) -> List[List[int]]:
    """Maximal directed paths made of 2-edges, including isolated vertices.

    A vertex has at most one outgoing and one incoming 2-edge, so the 2-edges
    form disjoint directed paths.
    """
    successor = dict(g.p_edges(2))
    has_predecessor = set(successor.values())
    paths = []
    for start in sorted(g.vertices, reverse=True):
        if start in has_predecessor:
            continue
        path = [start]
        while path[-1] in successor:
            path.append(successor[path[-1]])
        paths.append(path)
    return paths


class OrlikGraphService:
    """Domain service for Orlik graphs and the conditions on them."""

    @staticmethod
    def build_graph(M: Iterable[int]) -> OrlikGraph:
        """Build the prime-labelled graph on M.

        Args:
            M: Finite nonempty collection of positive integers.

        Returns:
            OrlikGraph: Edges m1 -> m2 labelled p for m1/m2 = p^k with no m3
            in M - {m1, m2} such that m2 | m3 | m1.

        The label is always the prime of m1/m2. Hand-drawn diagrams of these
        graphs agree on the arrows but sometimes put the label of one
        crossing arrow on the other, e.g. 30 -> 6 drawn with 2; here it is 5.

        Raises:
            ValueError: If M is empty.
            InvalidOrderError: If some element is not a positive integer.
        """
        vertices = sorted(set(M), reverse=True)
        if not vertices:
            raise ValueError("M must be nonempty")
        for m in vertices:
            if isinstance(m, bool) or int(m) != m or m < 1:
                raise InvalidOrderError("element of M", m)

        edges = []
        for i, m1 in enumerate(vertices):
            for m2 in vertices[i + 1:]:
                if m1 % m2:
                    continue
                p = prime_power_base(m1 // m2)
                if p is None:
                    continue
                if any(m3 != m1 and m3 != m2 and m1 % m3 == 0 and m3 % m2 == 0 for m3 in vertices):
                    continue
                edges.append((m1, m2, p))

        graph = OrlikGraph(vertices, edges)
        sources = [m1 for m1, _ in graph.p_edges(2)]
        if len(sources) != len(set(sources)):
            raise CrossCheckError(f"at most one 2-edge per source in {vertices}", len(set(sources)), len(sources))
        return graph

    @staticmethod
    def p_planes(g: OrlikGraph, p: int) -> List[FrozenSet[int]]:
        """Components (undirected) after deleting every p-edge, largest element first.

        Raises:
            ValueError: If p is not prime.
        """
        _require_prime(p)
        components = nx.connected_components(g.without_edges(g.p_edges(p)))
        return sorted((frozenset(c) for c in components), key=lambda c: -max(c))

    @staticmethod
    def highest_p_planes(g: OrlikGraph, p: int) -> List[FrozenSet[int]]:
        """p-planes at none of whose vertices a p-edge ends."""
        targets = {m2 for _, m2 in g.p_edges(p)}
        return [plane for plane in OrlikGraphService.p_planes(g, p) if not plane & targets]

    @staticmethod
    def condition_Tp(g: OrlikGraph, p: int) -> bool:
        """(T_p): exactly one highest p-plane."""
        return len(OrlikGraphService.highest_p_planes(g, p)) == 1

    @staticmethod
    def condition_S2(g: OrlikGraph) -> bool:
        """(S_2): deleting the highest 2-edges leaves one or two components."""
        two_edges = g.p_edges(2)
        targets = {m2 for _, m2 in two_edges}
        highest = [(m1, m2) for m1, m2 in two_edges if m1 not in targets]
        return nx.number_connected_components(g.without_edges(highest)) <= 2

    @staticmethod
    def odd_primes(g: OrlikGraph) -> List[int]:
        """Primes p >= 3 dividing lcm(M); (T_p) holds trivially for the others."""
        return [p for p in prime_factors(g.lcm) if p >= 3]

    @staticmethod
    def tp_verdicts(g: OrlikGraph) -> dict:
        return {p: OrlikGraphService.condition_Tp(g, p) for p in OrlikGraphService.odd_primes(g)}

    @staticmethod
    def is_connected(g: OrlikGraph) -> bool:
        return nx.is_weakly_connected(g.graph)

    @staticmethod
    def condition_I(g: OrlikGraph) -> bool:
        """Connected, (S_2), and (T_p) for every prime p >= 3."""
        return (
            OrlikGraphService.is_connected(g)
            and OrlikGraphService.condition_S2(g)
            and all(OrlikGraphService.tp_verdicts(g).values())
        )

    @staticmethod
    def condition_II(g: OrlikGraph) -> bool:
        """Two components M_1, M_2 which are 2-planes satisfying (T_p) for p >= 3, with
        gcd(lcm(M_1), lcm(M_2)) in {1, 2} and l(M_1, 2) > l(M_2, 2) in {0, 1} for
        one of the two orderings.
        """
        components = [frozenset(c) for c in nx.weakly_connected_components(g.graph)]
        if len(components) != 2:
            return False
        planes = set(OrlikGraphService.p_planes(g, 2))
        if any(c not in planes for c in components):
            return False

        subgraphs = [OrlikGraphService.build_graph(c) for c in components]
        if not all(all(OrlikGraphService.tp_verdicts(sub).values()) for sub in subgraphs):
            return False

        lcm1, lcm2 = subgraphs[0].lcm, subgraphs[1].lcm
        if gcd(lcm1, lcm2) not in (1, 2):
            return False
        l1, l2 = valuation(lcm1, 2), valuation(lcm2, 2)
        return (l1 > l2 and l2 in (0, 1)) or (l2 > l1 and l1 in (0, 1))

    @staticmethod
    def strong_condition(g: OrlikGraph) -> bool:
        """max(M) is a root reaching every vertex, and one chain of 2-edges meets every 2-plane."""
        root = max(g.vertices)
        if nx.descendants(g.graph, root) | {root} != set(g.vertices):
            return False
        planes = OrlikGraphService.p_planes(g, 2)
        for path in _two_edge_paths(g):
            visited = set(path)
            if all(plane & visited for plane in planes):
                return True
        return False

    @staticmethod
    def report(g: OrlikGraph) -> GraphReport:
        tp = OrlikGraphService.tp_verdicts(g)
        connected = OrlikGraphService.is_connected(g)
        s2 = OrlikGraphService.condition_S2(g)
        strong = OrlikGraphService.strong_condition(g)
        condition_i = connected and s2 and all(tp.values())
        if strong and not condition_i:
            raise CrossCheckError(f"strong condition implies (I) for {sorted(g.vertices)}", True, condition_i)
        return GraphReport(
            g.vertices, connected, s2, tp, condition_i, OrlikGraphService.condition_II(g), strong
        )

    @staticmethod
    def alternating_lambda_set(k: Sequence[int]) -> Set[int]:
        """Psi-support of Lambda_{k_1} - Lambda_{k_2} + Lambda_{k_3} - ...

        A nonempty result always satisfies the strong condition; this is
        asserted on every call.

        Raises:
            ValueError: If some k_j does not divide k_{j-1}.
            CrossCheckError: If a nonempty support fails the strong condition.
        """
        if not k:
            return set()
        for prev, cur in zip(k, k[1:]):
            if cur < 1 or prev % cur:
                raise ValueError(f"k_j must divide k_(j-1), got {cur} after {prev}")

        divisor = Divisor.zero()
        for j, value in enumerate(k):
            divisor = divisor + (-1) ** j * Divisor.lam(value)
        M = set(divisor.support)
        if M and not OrlikGraphService.strong_condition(OrlikGraphService.build_graph(M)):
            raise CrossCheckError(f"strong condition of the alternating set for {tuple(k)}", True, False)
        return M

    @staticmethod
    def edge_list(g: OrlikGraph) -> List[str]:
        """Edges as "m1 m2 p" lines in the networkx edge-list format."""
        return list(nx.generate_edgelist(g.graph, data=["prime"]))
