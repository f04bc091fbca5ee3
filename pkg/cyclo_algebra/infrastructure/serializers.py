"""Text and structured forms of divisors used by the command line and scan records."""
from fractions import Fraction
from typing import Any, Dict, Mapping

from cyclo_algebra.domain.entities import Divisor


def _format_terms(coeffs: Mapping[int, Fraction], symbol: str) -> str:
    if not coeffs:
        return "0"
    text = ""
    for m, c in sorted(coeffs.items()):
        term = f"{abs(c)}*{symbol}({m})"
        if not text:
            text = term if c > 0 else f"-{term}"
        else:
            text += f" + {term}" if c > 0 else f" - {term}"
    return text


class DivisorSerializer:
    """Converts divisors to and from their external representations.

    The text form lists ``c*Psi(m)`` terms with m ascending; the structured
    form is ``{"psi": {"m": [num, den], ...}}`` with string keys so it can be
    written as JSON without losing exactness.
    """

    @staticmethod
    def to_text(divisor: Divisor) -> str:
        return _format_terms(divisor.psi_coeffs, "Psi")

    @staticmethod
    def to_lambda_text(divisor: Divisor) -> str:
        return _format_terms(divisor.chi, "Lambda")

    @staticmethod
    def to_structured(divisor: Divisor) -> Dict[str, Any]:
        return {
            'psi': {str(m): [c.numerator, c.denominator] for m, c in divisor.items()}
        }

    @staticmethod
    def from_structured(data: Mapping[str, Any]) -> Divisor:
        """Rebuild a divisor from ``to_structured`` output.

        Raises:
            ValueError: If the payload has no ``psi`` map or a malformed entry.
        """
        if 'psi' not in data:
            raise ValueError("Structured divisor must contain a 'psi' map")
        coeffs = {}
        for key, pair in data['psi'].items():
            if len(pair) != 2:
                raise ValueError(f"Malformed multiplicity for order {key}: {pair!r}")
            coeffs[int(key)] = Fraction(int(pair[0]), int(pair[1]))
        return Divisor(coeffs)
