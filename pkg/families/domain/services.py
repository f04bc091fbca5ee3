"""Domain services for the Families context."""
import logging
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Iterator, Sequence, Tuple

from cyclo_algebra.domain.entities import Divisor
from cyclo_algebra.domain.services import DivisorService
from families.domain.entities import ChainData, ChainSpec, CycleSpec
from shared.domain.errors import CrossCheckError, DegenerateFamilyError, WeightSystemFormatError
from weight_systems.domain.entities import WeightSystem
from weight_systems.domain.services import WeightSystemService

LOGGER = logging.getLogger(__name__)

# family name -> number of integer parameters (None: any positive count)
FAMILY_KINDS = {'cycle': None, 'chain': None, 'fermat': None, 'ts': 3}


class FamilyService:
    """Domain service for closed-form families of weight systems.

    Each generator verifies its closed form against the general divisor
    product for weight systems and raises ``CrossCheckError`` on mismatch.
    """

    @staticmethod
    def parse_spec(text: str) -> Tuple[str, Tuple[int, ...]]:
        """Split "cycle:2,3", "chain:2,2", "fermat:3,4" or "ts:1,3,5" into kind and parameters.

        Raises:
            WeightSystemFormatError: On an unknown kind, a non-integer token or
                a wrong parameter count.
        """
        kind, sep, rest = text.partition(":")
        kind = kind.strip().lower()
        if not sep or kind not in FAMILY_KINDS:
            raise WeightSystemFormatError(kind or text, "expected one of " + ", ".join(f"'{k}:...'" for k in FAMILY_KINDS))
        params = []
        for token in rest.split(","):
            token = token.strip()
            if not token.isdigit():
                raise WeightSystemFormatError(token, "expected a nonnegative integer")
            params.append(int(token))
        expected = FAMILY_KINDS[kind]
        if expected is not None and len(params) != expected:
            raise WeightSystemFormatError(rest.strip(), f"{kind} takes exactly {expected} parameters")
        return kind, tuple(params)

    @staticmethod
    def rho_seq(x: Sequence[int]) -> int:
        """x_1...x_k - x_2...x_k + ... + (-1)^k; 1 for the empty sequence."""
        result = 1
        tail = 1
        for value in reversed(x):
            tail *= value
            result = tail - result
        return result

    @staticmethod
    def _validate_cycle(a: Sequence[int]) -> None:
        n = len(a)
        if n == 0 or any(x < 1 for x in a):
            raise DegenerateFamilyError(f"degenerate cycle: exponents must be positive, got {tuple(a)}")
        if prod(a) - (-1) ** n <= 0:
            raise DegenerateFamilyError(f"degenerate cycle: prod(a) - (-1)^n <= 0 for {tuple(a)}")
        if n % 2 == 0:
            # 1-based even positions are 0-based odd positions
            if all(x == 1 for x in a[1::2]) or all(x == 1 for x in a[0::2]):
                raise DegenerateFamilyError(f"degenerate cycle: alternate exponents all 1 in {tuple(a)}")

    @staticmethod
    def cycle_weights(spec: CycleSpec) -> WeightSystem:
        """Weights solving a_j w_j + w_{j-1} = 1 cyclically.

        Returns:
            WeightSystem: (v; d) with d = prod(a) - (-1)^n, not necessarily reduced.

        Raises:
            DegenerateFamilyError: If the exponents violate the cycle hypotheses.
            CrossCheckError: If the closed form does not solve the linear system.
        """
        a, n = spec.a, spec.n
        FamilyService._validate_cycle(a)
        d = prod(a) - (-1) ** n
        v = [FamilyService.rho_seq([a[(j - 1 - i) % n] for i in range(n - 1)]) for j in range(n)]
        for j in range(n):
            if a[j] * v[j] + v[j - 1] != d:
                raise CrossCheckError(f"cycle relation at j={j + 1} for {a}", d, a[j] * v[j] + v[j - 1])
        if any(not 0 < x < d for x in v):
            raise DegenerateFamilyError(f"degenerate cycle: weights {v} out of range for d={d}")
        return WeightSystem(v, d)

    @staticmethod
    def cycle_divisor(spec: CycleSpec) -> Divisor:
        """gamma * Lambda_{d/gamma} + (-1)^n * Lambda_1 with gamma = gcd(v_1, d)."""
        ws = FamilyService.cycle_weights(spec)
        gamma = gcd(ws.v[0], ws.d)
        if any(gcd(x, ws.d) != gamma for x in ws.v):
            raise CrossCheckError(f"gamma independent of j for {spec.a}", gamma, [gcd(x, ws.d) for x in ws.v])

        divisor = gamma * Divisor.lam(ws.d // gamma) + (-1) ** spec.n * Divisor.lam(1)
        expected = WeightSystemService.divisor_D(ws)
        if divisor != expected:
            raise CrossCheckError(f"cycle divisor for {spec.a}", expected, divisor)
        if divisor.degree != prod(spec.a):
            raise CrossCheckError(f"cycle Milnor number for {spec.a}", prod(spec.a), divisor.degree)
        return divisor

    @staticmethod
    def chain_data(spec: ChainSpec) -> ChainData:
        """Weights, denominators and divisor of a chain.

        Raises:
            DegenerateFamilyError: If the exponents are not positive or the seed
                is not a reduced fraction strictly between 0 and 1.
            CrossCheckError: If a closed form disagrees with direct computation.
        """
        a, n = spec.a, spec.n
        if n == 0 or any(x < 1 for x in a):
            raise DegenerateFamilyError(f"invalid chain: exponents must be positive, got {a}")
        if spec.is_chain_form:
            s0, t0 = 1, a[0] + 1
        else:
            s0, t0 = spec.seed
            if not (1 <= s0 < t0) or gcd(s0, t0) != 1:
                raise DegenerateFamilyError(f"invalid chain seed {spec.seed}: need gcd 1 and 0 < s_0 < t_0")

        s, t, beta, alpha = [s0], [t0], [], []
        for j in range(n):
            diff = t[-1] - s[-1]
            beta_j = gcd(diff, a[j])
            alpha.append(a[j] // beta_j)
            beta.append(beta_j)
            s.append(diff // beta_j)
            t.append(alpha[-1] * t[-1])

        weights = [Fraction(s[j], t[j]) for j in range(1, n + 1)]
        for j in range(1, n + 1):
            if gcd(s[j], t[j]) != 1 or weights[j - 1] != (1 - Fraction(s[j - 1], t[j - 1])) / a[j - 1]:
                raise CrossCheckError(f"chain weight w_{j} for {a}", (1 - Fraction(s[j - 1], t[j - 1])) / a[j - 1], weights[j - 1])
            beta_prod = prod(beta[:j])
            closed_s = Fraction(FamilyService.rho_seq(a[j - 2::-1] if j > 1 else ()) * t0 + (-1) ** j * s0, beta_prod)
            if closed_s != s[j]:
                raise CrossCheckError(f"closed form of s_{j} for {a}", closed_s, s[j])

        # partial divisor: (-1)^n Lambda_1 + sum (-1)^(n-j) beta_j...beta_1 / (t_0 - s_0) Lambda_{t_j}
        divisor = (-1) ** n * Divisor.lam(1)
        for j in range(1, n + 1):
            divisor = divisor + Fraction((-1) ** (n - j) * prod(beta[:j]), t0 - s0) * Divisor.lam(t[j])

        partial = prod((1 / w - 1 for w in weights), start=Fraction(1))
        w0 = Fraction(s0, t0)
        closed_partial = (FamilyService.rho_seq(a[::-1]) + (-1) ** (n - 1) * w0) / (1 - w0)
        if partial != closed_partial or divisor.degree != partial:
            raise CrossCheckError(f"partial Milnor number for {a}", closed_partial, partial)

        expected = WeightSystemService.divisor_D(WeightSystem.from_weights(weights))
        if divisor != expected:
            raise CrossCheckError(f"chain divisor for {a}", expected, divisor)

        b, mu_seq = [], []
        if spec.is_chain_form:
            b = [1] + [(a[0] + 1) * prod(a[1:k]) for k in range(1, n + 1)]
            mu_seq = [1] + [FamilyService.rho_seq(list(a[k - 1:0:-1]) + [a[0] + 1]) for k in range(1, n + 1)]
            for k in range(1, n + 1):
                if mu_seq[k] != b[k] - mu_seq[k - 1]:
                    raise CrossCheckError(f"mu_{k} = b_{k} - mu_{k - 1} for {a}", b[k] - mu_seq[k - 1], mu_seq[k])
                if mu_seq[k] != prod((1 / w - 1 for w in weights[:k]), start=Fraction(1)):
                    raise CrossCheckError(f"partial Milnor number mu_{k} for {a}", mu_seq[k], weights[:k])
                if t[k] * prod(beta[1:k]) != b[k]:
                    raise CrossCheckError(f"t_{k} from b_{k} for {a}", b[k], t[k])

        return ChainData(weights, s, t, beta, alpha, b, mu_seq, divisor)

    @staticmethod
    def orlik_randell_check(spec: ChainSpec) -> bool:
        """Compare D_w with the mu-th power image of sum (-1)^(n-j) Lambda_{b_j}.

        Raises:
            DegenerateFamilyError: If the spec is seeded (not a closed chain).
            CrossCheckError: If the alternating Lambda-sum is not 0/1-valued or
                b_j / gcd(b_j, mu) differs from t_j.
        """
        if not spec.is_chain_form:
            raise DegenerateFamilyError("orlik_randell_check needs a chain without seed")
        data = FamilyService.chain_data(spec)
        n = spec.n
        mu = data.mu_seq[-1]

        alternating = Divisor.zero()
        for j, b_j in enumerate(data.b):
            alternating = alternating + (-1) ** (n - j) * Divisor.lam(b_j)
        if any(c != 1 for _, c in alternating.items()):
            raise CrossCheckError(f"0/1 multiplicities of the alternating sum for {spec.a}", "0/1", dict(alternating.items()))
        for j in range(1, n + 1):
            if data.b[j] // gcd(data.b[j], mu) != data.t[j]:
                raise CrossCheckError(f"b_{j}/gcd(b_{j}, mu) for {spec.a}", data.t[j], data.b[j] // gcd(data.b[j], mu))

        return DivisorService.power_map(alternating, mu) == data.divisor

    @staticmethod
    def thom_sebastiani(ws1: WeightSystem, ws2: WeightSystem) -> WeightSystem:
        """Join in disjoint variables over the common degree lcm(d_1, d_2).

        Raises:
            CrossCheckError: If D of the join is not the product of the factors' D.
        """
        d = lcm(ws1.d, ws2.d)
        joined = WeightSystem(
            [x * (d // ws1.d) for x in ws1.v] + [x * (d // ws2.d) for x in ws2.v], d
        )
        expected = WeightSystemService.divisor_D(ws1) * WeightSystemService.divisor_D(ws2)
        actual = WeightSystemService.divisor_D(joined)
        if actual != expected:
            raise CrossCheckError(f"Thom-Sebastiani divisor of {ws1} and {ws2}", expected, actual)
        return joined

    @staticmethod
    def a_series(k: int) -> WeightSystem:
        """A_k: x^(k+1)."""
        if k < 1:
            raise DegenerateFamilyError(f"A_k needs k >= 1, got {k}")
        return WeightSystem([1], k + 1)

    @staticmethod
    def d_even(q: int) -> WeightSystem:
        """D_2q curve, weights (1/(2q-1), (q-1)/(2q-1))."""
        if q < 2:
            raise DegenerateFamilyError(f"D_2q needs q >= 2, got {q}")
        return WeightSystem([1, q - 1], 2 * q - 1)

    @staticmethod
    def d_odd(q: int) -> WeightSystem:
        """D_(2q+1) curve, weights (1/(2q), (2q-1)/(4q))."""
        if q < 2:
            raise DegenerateFamilyError(f"D_(2q+1) needs q >= 2, got {q}")
        return WeightSystem([2, 2 * q - 1], 4 * q)

    @staticmethod
    def fermat(ts: Sequence[int]) -> WeightSystem:
        """x_1^t_1 + ... + x_n^t_n."""
        if not ts or any(t < 2 for t in ts):
            raise DegenerateFamilyError(f"Fermat exponents must be >= 2, got {tuple(ts)}")
        return WeightSystem.from_weights(Fraction(1, t) for t in ts)

    @staticmethod
    def type_iii(t1: int, a2: int, a3: int) -> WeightSystem:
        """Weights (1/t_1, (1 - w_1)/a_2, (1 - w_1)/a_3)."""
        if t1 < 2 or a2 < 1 or a3 < 1:
            raise DegenerateFamilyError(f"invalid type III parameters {(t1, a2, a3)}")
        w1 = Fraction(1, t1)
        return WeightSystem.from_weights([w1, (1 - w1) / a2, (1 - w1) / a3])

    @staticmethod
    def type_iv(t1: int, a2: int, a3: int) -> WeightSystem:
        """One-variable Fermat joined with the two-variable cycle (a_2, a_3)."""
        if a2 < 2 or a3 < 2:
            raise DegenerateFamilyError(f"invalid type IV parameters {(t1, a2, a3)}")
        cycle = FamilyService.cycle_weights(CycleSpec((a2, a3)))
        return FamilyService.thom_sebastiani(FamilyService.a_series(t1 - 1), cycle).reduced()

    @staticmethod
    def type_vi(a1: int, a2: int, a3: int) -> WeightSystem:
        """Two-variable cycle (a_1, a_2) whose first vertex roots a chain step of exponent a_3."""
        if a1 < 2 or a2 < 2 or a3 < 1:
            raise DegenerateFamilyError(f"invalid type VI parameters {(a1, a2, a3)}")
        w1, w2 = FamilyService.cycle_weights(CycleSpec((a1, a2))).weights
        return WeightSystem.from_weights([w1, w2, (1 - w1) / a3])

    @staticmethod
    def saito_family(k: int, q1: int, q2: int) -> WeightSystem:
        """Join of D_(2^k q_1 + 1) and D_(2^k q_2 + 1).

        Raises:
            DegenerateFamilyError: If k < 1, some q_i is even or not positive,
                or lcm(q_1, q_2) equals max(q_1, q_2).
        """
        if k < 1 or q1 < 1 or q2 < 1 or q1 % 2 == 0 or q2 % 2 == 0:
            raise DegenerateFamilyError(f"Saito family needs k >= 1 and odd q_1, q_2, got {(k, q1, q2)}")
        if lcm(q1, q2) <= max(q1, q2):
            raise DegenerateFamilyError(f"Saito family needs lcm(q_1, q_2) > max(q_1, q_2), got {(q1, q2)}")
        half = 2 ** (k - 1)
        joined = FamilyService.thom_sebastiani(FamilyService.d_odd(half * q1), FamilyService.d_odd(half * q2))
        expected_dw = 2 ** (k + 1) * lcm(q1, q2)
        if joined.d_w != expected_dw:
            raise CrossCheckError(f"d_w of Saito member {(k, q1, q2)}", expected_dw, joined.d_w)
        return joined

    @staticmethod
    def saito_members(mu_max: int) -> Iterator[Tuple[int, int, int]]:
        """All (k, q_1, q_2) with q_1 < q_2 and (2^k q_1 + 1)(2^k q_2 + 1) <= mu_max."""
        def milnor(k, q1, q2):
            return (2 ** k * q1 + 1) * (2 ** k * q2 + 1)

        k = 1
        while milnor(k, 3, 5) <= mu_max:
            q1 = 3
            while milnor(k, q1, q1 + 2) <= mu_max:
                q2 = q1 + 2
                while milnor(k, q1, q2) <= mu_max:
                    if q2 % q1:
                        yield k, q1, q2
                    q2 += 2
                q1 += 2
            k += 1
