"""Tests for cycle, chain, Thom-Sebastiani and Saito families."""
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclo_algebra.domain.entities import Divisor
from families.application.services import FamilyApplicationService
from families.domain.entities import ChainSpec, CycleSpec
from families.domain.services import FamilyService
from shared.domain.errors import DegenerateFamilyError, WeightSystemFormatError
from weight_systems.domain.entities import WeightSystem
from weight_systems.domain.services import WeightSystemService

L = Divisor.lam


class TestRho:

    @pytest.mark.parametrize("x, expected", [((), 1), ((3,), 2), ((2, 2), 3), ((2, 3), 4), ((2, 2, 2), 5)])
    def test_rho_seq(self, x, expected):
        assert FamilyService.rho_seq(x) == expected


class TestCycle:

    def test_cycle_2_3(self):
        ws = FamilyService.cycle_weights(CycleSpec((2, 3)))
        assert ws.weights == (Fraction(2, 5), Fraction(1, 5))
        assert FamilyService.cycle_divisor(CycleSpec((2, 3))) == L(5) + L(1)

    def test_cycle_2_2_2(self):
        ws = FamilyService.cycle_weights(CycleSpec((2, 2, 2)))
        assert (ws.v, ws.d) == ((3, 3, 3), 9)
        assert FamilyService.cycle_divisor(CycleSpec((2, 2, 2))) == 3 * L(3) - L(1)

    @pytest.mark.parametrize("a", [(1, 1), (0, 2), (1, 3, 1, 4), ()])
    def test_degenerate_cycles(self, a):
        with pytest.raises(DegenerateFamilyError, match="degenerate cycle"):
            FamilyService.cycle_weights(CycleSpec(a))

    @given(st.lists(st.integers(min_value=2, max_value=6), min_size=1, max_size=4))
    def test_cycle_milnor_number_is_product(self, a):
        divisor = FamilyService.cycle_divisor(CycleSpec(a))
        assert divisor.degree == prod(a)


class TestChain:

    def test_chain_2_2(self):
        data = FamilyService.chain_data(ChainSpec((2, 2)))
        assert data.weights == (Fraction(1, 3), Fraction(1, 3))
        assert data.divisor == L(3) + L(1)
        assert data.b == (1, 3, 6)
        assert data.mu_seq == (1, 2, 4)
        assert data.milnor == 4

    def test_seeded_chain(self):
        spec = ChainSpec((3,), seed=(1, 2))
        data = FamilyService.chain_data(spec)
        assert data.weights == (Fraction(1, 6),)
        assert data.divisor == L(6) - L(1)
        assert data.b == ()
        with pytest.raises(DegenerateFamilyError):
            FamilyService.orlik_randell_check(spec)

    @pytest.mark.parametrize("seed", [(2, 4), (3, 2), (0, 5)])
    def test_invalid_seed(self, seed):
        with pytest.raises(DegenerateFamilyError):
            FamilyService.chain_data(ChainSpec((2,), seed=seed))

    def test_orlik_randell_small_chains(self):
        assert FamilyService.orlik_randell_check(ChainSpec((2, 2)))
        assert FamilyService.orlik_randell_check(ChainSpec((3,)))

    @given(st.lists(st.integers(min_value=2, max_value=6), min_size=1, max_size=4))
    def test_orlik_randell_holds_for_chains(self, a):
        assert FamilyService.orlik_randell_check(ChainSpec(a))

    @given(
        st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4),
        st.integers(min_value=2, max_value=12).flatmap(
            lambda t0: st.tuples(st.integers(min_value=1, max_value=t0 - 1), st.just(t0))
        ),
    )
    def test_generalized_chain_cross_checks(self, a, seed):
        if Fraction(*seed).denominator != seed[1]:
            with pytest.raises(DegenerateFamilyError):
                FamilyService.chain_data(ChainSpec(a, seed=seed))
            return
        data = FamilyService.chain_data(ChainSpec(a, seed=seed))
        assert data.divisor == WeightSystemService.divisor_D(WeightSystem.from_weights(data.weights))


class TestGenerators:

    def test_thom_sebastiani_of_two_a1(self):
        joined = FamilyService.thom_sebastiani(FamilyService.a_series(1), FamilyService.a_series(1))
        assert (joined.v, joined.d) == ((1, 1), 2)
        assert WeightSystemService.divisor_D(joined) == L(1)

    def test_fermat(self):
        ws = FamilyService.fermat((2, 3))
        assert (ws.v, ws.d) == ((3, 2), 6)
        assert WeightSystemService.divisor_D(ws) == L(6) - L(2) - L(3) + L(1)

    @pytest.mark.parametrize("q", [2, 3, 7])
    def test_d_series(self, q):
        assert WeightSystemService.divisor_D(FamilyService.d_even(q)) == L(2 * q - 1) + L(1)
        assert WeightSystemService.divisor_D(FamilyService.d_odd(q)) == L(4 * q) - L(2 * q) + L(1)

    @pytest.mark.parametrize("factory, arg", [
        (FamilyService.a_series, 0),
        (FamilyService.d_even, 1),
        (FamilyService.d_odd, 1),
        (FamilyService.fermat, (1, 3)),
    ])
    def test_generators_reject_bad_parameters(self, factory, arg):
        with pytest.raises(DegenerateFamilyError):
            factory(arg)

    def test_three_variable_types(self):
        assert FamilyService.type_iii(3, 2, 2).weights == (Fraction(1, 3),) * 3
        iv = FamilyService.type_iv(2, 2, 3)
        assert iv.weights == (Fraction(1, 2), Fraction(2, 5), Fraction(1, 5))
        assert WeightSystemService.milnor_number(iv) == 6
        vi = FamilyService.type_vi(2, 3, 2)
        assert vi.weights == (Fraction(2, 5), Fraction(1, 5), Fraction(3, 10))
        assert WeightSystemService.milnor_number(vi) == 14

    @given(
        st.lists(st.integers(min_value=1, max_value=11), min_size=1, max_size=2),
        st.integers(min_value=2, max_value=12),
        st.lists(st.integers(min_value=1, max_value=11), min_size=1, max_size=2),
        st.integers(min_value=2, max_value=12),
    )
    def test_thom_sebastiani_multiplies_divisors(self, v1, d1, v2, d2):
        ws1 = WeightSystem([x % (d1 - 1) + 1 for x in v1], d1)
        ws2 = WeightSystem([x % (d2 - 1) + 1 for x in v2], d2)
        joined = FamilyService.thom_sebastiani(ws1, ws2)
        assert WeightSystemService.milnor_number(joined) == (
            WeightSystemService.milnor_number(ws1) * WeightSystemService.milnor_number(ws2)
        )


class TestSaito:

    def test_d7_d11(self):
        ws = FamilyService.saito_family(1, 3, 5)
        assert ws.d_w == 60
        assert WeightSystemService.milnor_number(ws) == 77

    @pytest.mark.parametrize("params", [(0, 3, 5), (1, 2, 5), (1, 3, 9), (1, 5, 5)])
    def test_invalid_members(self, params):
        with pytest.raises(DegenerateFamilyError):
            FamilyService.saito_family(*params)

    def test_members_up_to_500(self):
        members = list(FamilyService.saito_members(500))
        assert len(members) == 25
        assert sum(1 for k, _, _ in members if k == 2) == 2
        for k, q1, q2 in members:
            assert q1 < q2 and q1 % 2 == 1 and q2 % 2 == 1
            milnor = (2 ** k * q1 + 1) * (2 ** k * q2 + 1)
            assert milnor <= 500
            assert WeightSystemService.milnor_number(FamilyService.saito_family(k, q1, q2)) == milnor


class TestParseSpec:

    @pytest.mark.parametrize("text, expected", [
        ("cycle:2,3", ('cycle', (2, 3))),
        ("chain: 2, 2", ('chain', (2, 2))),
        ("TS:1,3,5", ('ts', (1, 3, 5))),
        ("fermat:6,10,15", ('fermat', (6, 10, 15))),
    ])
    def test_valid_specs(self, text, expected):
        assert FamilyService.parse_spec(text) == expected

    @pytest.mark.parametrize("text, token", [
        ("foo:1", "foo"),
        ("cycle", "cycle"),
        ("cycle:2,x", "x"),
        ("cycle:", ""),
        ("ts:1,3", "1,3"),
    ])
    def test_invalid_specs(self, text, token):
        with pytest.raises(WeightSystemFormatError) as info:
            FamilyService.parse_spec(text)
        assert info.value.token == token


class TestFamilyApplicationService:

    def test_generate_cycle(self):
        report = FamilyApplicationService().generate("cycle:2,3")
        assert report['weights'] == ["2/5", "1/5"]
        assert report['D_lambda'] == "1*Lambda(1) + 1*Lambda(5)"
        assert report['mu'] == 6

    def test_generate_chain(self):
        report = FamilyApplicationService().generate("chain:2,2")
        assert report['b'] == [1, 3, 6]
        assert report['mu_seq'] == [1, 2, 4]
        assert report['orlik_randell'] is True

    def test_generate_seeded_chain(self):
        report = FamilyApplicationService().generate("chain:3", seed="1/2")
        assert report['weights'] == ["1/6"]
        assert 'b' not in report

    def test_generate_saito_member(self):
        report = FamilyApplicationService().generate("ts:1,3,5")
        assert report['mu'] == 77
        assert report['saito']['eq53'] == 'pass'

    @pytest.mark.parametrize("spec, seed", [("cycle:2,3", "1/2"), ("chain:3", "x")])
    def test_bad_seed(self, spec, seed):
        with pytest.raises(WeightSystemFormatError):
            FamilyApplicationService().generate(spec, seed)
