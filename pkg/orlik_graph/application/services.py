"""Application services for the Orlik Graph context."""
import logging
from typing import Any, Dict, List

from orlik_graph.domain.entities import GraphReport
from orlik_graph.domain.services import OrlikGraphService
from shared.domain.errors import WeightSystemFormatError

LOGGER = logging.getLogger(__name__)


def parse_int_list(text: str) -> List[int]:
    """Parse comma-separated positive integers such as "30,20,6,4"."""
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) == 0:
            raise WeightSystemFormatError(token, "expected a positive integer")
        values.append(int(token))
    return values


class GraphApplicationService:
    """
    Application service reporting the Orlik-graph conditions of a vertex set.
    """

    def __init__(self):
        self.graph_service = OrlikGraphService()

    def report(self, text: str, alternating: bool = False, edges: bool = False) -> Dict[str, Any]:
        """
        Build the graph of a vertex set and evaluate every condition.

        Args:
            text (str): Comma-separated integers
            alternating (bool): Read the integers as k_1, k_2, ... and use the
                support of Lambda_{k_1} - Lambda_{k_2} + ... as the vertex set
            edges (bool): Include the edge list

        Returns:
            Dict: The verdict record, plus ``edges`` when requested

        Raises:
            ValueError: If the text is malformed or the set is empty

        An alternating sum that cancels, such as "6,6", has empty support and
        is reported as the empty set, for which every condition holds.
        """
        values = parse_int_list(text)
        if alternating:
            values = sorted(self.graph_service.alternating_lambda_set(values), reverse=True)
            LOGGER.info("Alternating set of %s: %s", text, values)
            if not values:
                result = GraphReport((), True, True, {}, True, True, True).to_dict()
                if edges:
                    result['edges'] = []
                return result
        g = self.graph_service.build_graph(values)
        result = self.graph_service.report(g).to_dict()
        if edges:
            result['edges'] = self.graph_service.edge_list(g)
        return result
