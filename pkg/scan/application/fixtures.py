"""
Golden examples

Worked examples with known exact answers. The ``fixtures`` command runs them
all and reports any difference; the test suite parametrizes over the same
list.
"""
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Callable, Dict, List

from cyclo_algebra.domain.entities import Divisor
from cyclo_algebra.domain.services import DivisorService
from families.domain.services import FamilyService
from monodromy.domain.services import MonodromyService
from orlik_graph.domain.services import OrlikGraphService
from scan.domain.entities import ScanConfig
from scan.domain.services import EnumerationService
from weight_systems.domain.entities import WeightSystem
from weight_systems.domain.services import WeightSystemService

L = Divisor.lam
P = Divisor.psi


class GoldenFixture:
    """One example: a name, a zero-argument computation and its expected value."""

    def __init__(self, name: str, compute: Callable[[], Any], expected: Any):
        self.name = name
        self.compute = compute
        self.expected = expected

    def run(self) -> Dict[str, Any]:
        try:
            actual = self.compute()
        except Exception as e:  # reported as a diff
            actual = f"{type(e).__name__}: {e}"
        return {'name': self.name, 'ok': actual == self.expected, 'expected': self.expected, 'actual': actual}

    def __repr__(self) -> str:
        return f"GoldenFixture({self.name!r})"


def _ws(text: str) -> WeightSystem:
    return WeightSystemService.parse(text)


def _lefschetz(text: str, ks) -> tuple:
    ws = _ws(text)
    return tuple(WeightSystemService.lefschetz_ws(ws, k) for k in ks)


def _chi(text: str, ks) -> tuple:
    chi = WeightSystemService.divisor_D(_ws(text)).chi
    return tuple(chi.get(k, 0) for k in ks)


def _psi(divisor: Divisor) -> Dict[int, int]:
    return {m: int(c) for m, c in divisor.items()}


def _verdict(M) -> str:
    g = OrlikGraphService.build_graph(M)
    if OrlikGraphService.condition_I(g):
        return "I"
    if OrlikGraphService.condition_II(g):
        return "II"
    return "neither"


def _sets(divisor: Divisor) -> List[frozenset]:
    return list(MonodromyService.elementary_split(divisor).sets)


def _edges(M) -> frozenset:
    return OrlikGraphService.build_graph(M).edges


def _arrows(M) -> frozenset:
    """Edges without their labels, as read off a drawn diagram."""
    return frozenset((m1, m2) for m1, m2, _ in _edges(M))


def _ivlev_failures():
    report = WeightSystemService.check_conditions(_ws("1,24,33,58:265"))
    return report.c1_bar, report.c1, [J for J, _ in report.witness_failures]


def _saito_counts():
    members = list(FamilyService.saito_members(500))
    return len(members), sum(1 for k, _, _ in members if k == 1), sum(1 for k, _, _ in members if k == 2)


def _saito_verdicts():
    verdicts = set()
    for k, q1, q2 in FamilyService.saito_members(500):
        report = MonodromyService.saito_check(FamilyService.saito_family(k, q1, q2))
        verdicts.add((report.eq53, report.eq54_applicable, report.eq54))
    return verdicts


def _saito_closed_forms():
    mismatches = []
    for k, q1, q2 in FamilyService.saito_members(500):
        g, m = gcd(q1, q2), lcm(q1, q2)
        expected = (
            2 ** k * g * L(2 ** k * m) + L(2 ** (k + 1) * q1) + L(2 ** (k + 1) * q2)
            - L(2 ** k * q1) - L(2 ** k * q2) + L(1)
        )
        if WeightSystemService.divisor_D(FamilyService.saito_family(k, q1, q2)) != expected:
            mismatches.append((k, q1, q2))
    return mismatches


def _family_scan_count():
    tasks = EnumerationService.tasks(ScanConfig(mode='family', family='saito', mu_max=500))
    return len(tasks)


TENSOR_I_F1 = P(12) + 2 * P(6) + 2 * P(4) + P(2)
TENSOR_I_F2 = P(5) + P(1)
TENSOR_II_F1 = 2 * P(7) + P(3) + P(1)
TENSOR_II_F2 = 2 * P(5) + P(3) + P(1)

FERMAT_6_10_15 = "1/6,1/10,1/15"
TYPE_II_15_5_3 = "2/15,1/5,1/3"

GOLDEN_FIXTURES: List[GoldenFixture] = [
    # weight system (1,24,33,58;265)
    GoldenFixture("ivlev conditions", _ivlev_failures, (True, False, [(2, 3)])),
    GoldenFixture("ivlev milnor number", lambda: WeightSystemService.milnor_number(_ws("1,24,33,58:265")), 66516),
    GoldenFixture("ivlev lefschetz", lambda: _lefschetz("1,24,33,58:265", (265, 1)), (66516, 1)),
    GoldenFixture("ivlev chi", lambda: _chi("1,24,33,58:265", (265, 1)), (251, 1)),
    GoldenFixture("ivlev divisor", lambda: WeightSystemService.divisor_D(_ws("1,24,33,58:265")), 251 * L(265) + L(1)),
    GoldenFixture("ivlev rho nonnegative", lambda: WeightSystemService.rho_poly(_ws("1,24,33,58:265")).is_nonnegative(), True),

    # n = 3 and n = 4 examples with their L, chi and Psi data
    GoldenFixture("(1/4,1/6,5/12) lefschetz", lambda: _lefschetz("1/4,1/6,5/12", (12, 4, 6, 1)), (21, 3, 5, -1)),
    GoldenFixture("(1/4,1/6,5/12) chi", lambda: _chi("1/4,1/6,5/12", (12, 4, 6, 1)), (1, 1, 1, -1)),
    GoldenFixture(
        "(1/4,1/6,5/12) divisor",
        lambda: WeightSystemService.divisor_D(_ws("1/4,1/6,5/12")),
        L(12) + L(4) + L(6) - L(1),
    ),
    GoldenFixture(
        "(1/4,1/6,5/12) psi form",
        lambda: _psi(WeightSystemService.divisor_D(_ws("1/4,1/6,5/12"))),
        _psi(L(12) + (P(6) + P(4) + P(3) + P(2) + P(1)) + P(2)),
    ),
    GoldenFixture(
        "(1/5,2/5,1/6,5/12) lefschetz",
        lambda: _lefschetz("1/5,2/5,1/6,5/12", (60, 30, 12, 5, 6, 1)),
        (42, -30, 7, 6, -5, 1),
    ),
    GoldenFixture(
        "(1/5,2/5,1/6,5/12) chi",
        lambda: _chi("1/5,2/5,1/6,5/12", (60, 30, 12, 5, 6, 1)),
        (1, -1, 1, 1, -1, 1),
    ),
    GoldenFixture(
        "(1/5,2/5,1/6,5/12) psi form",
        lambda: _psi(WeightSystemService.divisor_D(_ws("1/5,2/5,1/6,5/12"))),
        _psi(P(60) + P(20) + P(12) + P(5) + P(4) + P(1) + P(12) + P(4) + P(1)),
    ),
    GoldenFixture(
        "D_2q divisors q=2..10",
        lambda: [WeightSystemService.divisor_D(FamilyService.d_even(q)) for q in range(2, 11)],
        [L(2 * q - 1) + L(1) for q in range(2, 11)],
    ),
    GoldenFixture(
        "D_2q lefschetz q=2..10",
        lambda: [_lefschetz(str(FamilyService.d_even(q)), (2 * q - 1, 1)) for q in range(2, 11)],
        [(2 * q, 1) for q in range(2, 11)],
    ),
    GoldenFixture(
        "D_2q+1 divisors q=2..10",
        lambda: [WeightSystemService.divisor_D(FamilyService.d_odd(q)) for q in range(2, 11)],
        [L(4 * q) - L(2 * q) + L(1) for q in range(2, 11)],
    ),
    GoldenFixture(
        "D_2q+1 lefschetz q=2..10",
        lambda: [_lefschetz(str(FamilyService.d_odd(q)), (4 * q, 2 * q, 1)) for q in range(2, 11)],
        [(2 * q + 1, -(2 * q - 1), 1) for q in range(2, 11)],
    ),

    # tensor products and their elementary sets
    GoldenFixture(
        "tensor Phi12 Phi6^2 Phi4^2 Phi2 x Phi5 Phi1",
        lambda: DivisorService.tensor(TENSOR_I_F1, TENSOR_I_F2),
        P(60) + 2 * P(30) + 2 * P(20) + P(12) + P(10) + 2 * P(6) + 2 * P(4) + P(2),
    ),
    GoldenFixture(
        "tensor Phi12 Phi6^2 Phi4^2 Phi2 x Phi5 Phi1 sets",
        lambda: _sets(DivisorService.tensor(TENSOR_I_F1, TENSOR_I_F2)),
        [frozenset({60, 30, 20, 12, 10, 6, 4, 2}), frozenset({30, 20, 6, 4})],
    ),
    GoldenFixture(
        "tensor Phi12 Phi6^2 Phi4^2 Phi2 x Phi5 Phi1 verdicts",
        lambda: [_verdict(M) for M in (
            {12, 6, 4, 2}, {6, 4}, {5, 1}, {60, 30, 20, 12, 10, 6, 4, 2}, {30, 20, 6, 4}
        )],
        ["I", "II", "I", "I", "neither"],
    ),
    GoldenFixture(
        "tensor Phi7^2 Phi3 Phi1 x Phi5^2 Phi3 Phi1",
        lambda: DivisorService.tensor(TENSOR_II_F1, TENSOR_II_F2),
        4 * P(35) + 2 * P(21) + 2 * P(15) + 2 * P(7) + 2 * P(5) + 3 * P(3) + 3 * P(1),
    ),
    GoldenFixture(
        "tensor Phi7^2 Phi3 Phi1 x Phi5^2 Phi3 Phi1 sets",
        lambda: _sets(DivisorService.tensor(TENSOR_II_F1, TENSOR_II_F2)),
        [
            frozenset({35, 21, 15, 7, 5, 3, 1}),
            frozenset({35, 21, 15, 7, 5, 3, 1}),
            frozenset({35, 3, 1}),
            frozenset({35}),
        ],
    ),
    GoldenFixture(
        "tensor Phi7^2 Phi3 Phi1 x Phi5^2 Phi3 Phi1 verdicts",
        lambda: [_verdict(M) for M in (
            {7, 3, 1}, {7}, {5, 3, 1}, {5}, {35, 21, 15, 7, 5, 3, 1}, {35, 3, 1}, {35}
        )],
        ["I", "I", "I", "I", "I", "neither", "I"],
    ),
    GoldenFixture("graph {30,20,6,4} edges", lambda: _edges({30, 20, 6, 4}), frozenset({(30, 6, 5), (20, 4, 5)})),
    # labels follow m1/m2 = p^k; the drawn diagrams swap the labels on crossing arrows
    GoldenFixture(
        "graph {60,30,20,12,10,6,4,2} edges",
        lambda: _edges({60, 30, 20, 12, 10, 6, 4, 2}),
        frozenset({
            (60, 30, 2), (60, 20, 3), (60, 12, 5), (30, 10, 3), (30, 6, 5), (20, 10, 2),
            (20, 4, 5), (12, 6, 2), (12, 4, 3), (10, 2, 5), (6, 2, 3), (4, 2, 2),
        }),
    ),
    GoldenFixture(
        "graph {60,30,20,12,10,6,4,2} arrows",
        lambda: _arrows({60, 30, 20, 12, 10, 6, 4, 2}),
        frozenset({
            (60, 30), (60, 20), (60, 12), (30, 10), (30, 6), (20, 10),
            (20, 4), (12, 6), (12, 4), (10, 2), (6, 2), (4, 2),
        }),
    ),
    GoldenFixture(
        "graph {35,21,15,7,5,3,1} edges",
        lambda: _edges({35, 21, 15, 7, 5, 3, 1}),
        frozenset({
            (35, 7, 5), (35, 5, 7), (21, 7, 3), (21, 3, 7), (15, 5, 3), (15, 3, 5),
            (7, 1, 7), (3, 1, 3), (5, 1, 5),
        }),
    ),
    GoldenFixture("graph {35,3,1} edges", lambda: _edges({35, 3, 1}), frozenset({(3, 1, 3)})),

    # Fermat (1/6,1/10,1/15)
    GoldenFixture(
        "fermat 6,10,15 divisor",
        lambda: WeightSystemService.divisor_D(_ws(FERMAT_6_10_15)),
        20 * L(30) + L(6) + L(10) + L(15) - L(1),
    ),
    GoldenFixture("fermat 6,10,15 set count", lambda: len(_sets(WeightSystemService.divisor_D(_ws(FERMAT_6_10_15)))), 22),
    GoldenFixture(
        "fermat 6,10,15 last two sets",
        lambda: _sets(WeightSystemService.divisor_D(_ws(FERMAT_6_10_15)))[20:],
        [frozenset({6, 10, 15, 2, 3, 5, 1}), frozenset({2, 3, 5, 1})],
    ),
    GoldenFixture(
        "graph {6,10,15,2,3,5,1} edges",
        lambda: _edges({6, 10, 15, 2, 3, 5, 1}),
        frozenset({
            (6, 2, 3), (6, 3, 2), (10, 2, 5), (10, 5, 2), (15, 3, 5), (15, 5, 3),
            (2, 1, 2), (3, 1, 3), (5, 1, 5),
        }),
    ),
    GoldenFixture("graph {2,3,5,1} edges", lambda: _edges({2, 3, 5, 1}), frozenset({(2, 1, 2), (3, 1, 3), (5, 1, 5)})),
    GoldenFixture(
        "fermat 6,10,15 conjecture verdicts",
        lambda: [
            (v.condition_i, v.strong)
            for v in MonodromyService.conjecture14_check(_ws(FERMAT_6_10_15)).decomposition.verdicts[20:]
        ],
        [(True, False), (True, False)],
    ),

    # (2/15,1/5,1/3)
    GoldenFixture(
        "(2/15,1/5,1/3) divisor",
        lambda: _psi(WeightSystemService.divisor_D(_ws(TYPE_II_15_5_3))),
        {1: 4, 3: 4, 5: 4, 15: 3},
    ),
    GoldenFixture(
        "(2/15,1/5,1/3) sets",
        lambda: _sets(WeightSystemService.divisor_D(_ws(TYPE_II_15_5_3))),
        [frozenset({15, 5, 3, 1})] * 3 + [frozenset({5, 3, 1})],
    ),
    GoldenFixture("graph {5,3,1} edges", lambda: _edges({5, 3, 1}), frozenset({(3, 1, 3), (5, 1, 5)})),
    GoldenFixture(
        "(2/15,1/5,1/3) last set verdict",
        lambda: (lambda v: (v.condition_i, v.strong))(
            MonodromyService.conjecture14_check(_ws(TYPE_II_15_5_3)).decomposition.verdicts[-1]
        ),
        (True, False),
    ),

    # D_7 x D_11
    GoldenFixture(
        "D_7 x D_11 weights",
        lambda: FamilyService.saito_family(1, 3, 5).weights,
        (Fraction(1, 6), Fraction(5, 12), Fraction(1, 10), Fraction(9, 20)),
    ),
    GoldenFixture(
        "D_7 x D_11 divisor",
        lambda: WeightSystemService.divisor_D(FamilyService.saito_family(1, 3, 5)),
        2 * L(30) + L(12) + L(20) - L(6) - L(10) + L(1),
    ),
    GoldenFixture(
        "D_7 x D_11 sets",
        lambda: _sets(WeightSystemService.divisor_D(FamilyService.saito_family(1, 3, 5))),
        [
            frozenset({30, 20, 15, 12, 10, 6, 5, 4, 3, 2, 1}),
            frozenset({30, 15, 10, 6, 5, 4, 3, 2, 1}),
            frozenset({1}),
        ],
    ),
    GoldenFixture(
        "graph D_7 x D_11 first set edges",
        lambda: _edges({30, 20, 15, 12, 10, 6, 5, 4, 3, 2, 1}),
        frozenset({
            (20, 10, 2), (20, 4, 5), (12, 6, 2), (12, 4, 3), (4, 2, 2),
            (30, 15, 2), (30, 10, 3), (30, 6, 5), (10, 5, 2), (10, 2, 5), (6, 3, 2), (6, 2, 3),
            (2, 1, 2), (15, 5, 3), (15, 3, 5), (5, 1, 5), (3, 1, 3),
        }),
    ),
    GoldenFixture(
        "graph D_7 x D_11 second set edges",
        lambda: _edges({30, 15, 10, 6, 5, 4, 3, 2, 1}),
        frozenset({
            (4, 2, 2),
            (30, 15, 2), (30, 10, 3), (30, 6, 5), (10, 5, 2), (10, 2, 5), (6, 3, 2), (6, 2, 3),
            (2, 1, 2), (15, 5, 3), (15, 3, 5), (5, 1, 5), (3, 1, 3),
        }),
    ),
    GoldenFixture(
        "graph D_7 x D_11 second set arrows",
        lambda: _arrows({30, 15, 10, 6, 5, 4, 3, 2, 1}),
        frozenset({
            (4, 2), (30, 15), (30, 10), (30, 6), (10, 5), (10, 2), (6, 3), (6, 2),
            (2, 1), (15, 5), (15, 3), (5, 1), (3, 1),
        }),
    ),
    GoldenFixture(
        "D_7 x D_11 set verdicts",
        lambda: [
            (v.condition_i, v.strong)
            for v in MonodromyService.conjecture14_check(FamilyService.saito_family(1, 3, 5)).decomposition.verdicts
        ],
        [(True, False), (True, False), (True, True)],
    ),

    # Saito family up to mu = 500
    GoldenFixture("saito members mu<=500", _saito_counts, (25, 23, 2)),
    GoldenFixture("saito family scan size", _family_scan_count, 25),
    GoldenFixture("saito verdicts", _saito_verdicts, {(True, True, False)}),
    GoldenFixture("saito closed-form divisors", _saito_closed_forms, []),
]


class FixtureApplicationService:
    """Runs the golden examples."""

    def __init__(self, fixtures: List[GoldenFixture] = None):
        self.fixtures = GOLDEN_FIXTURES if fixtures is None else fixtures

    def run_fixtures(self) -> List[Dict[str, Any]]:
        return [fixture.run() for fixture in self.fixtures]
