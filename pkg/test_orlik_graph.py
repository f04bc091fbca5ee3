"""Tests for Orlik graphs and conditions (I), (II) and the strong condition."""
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cyclo_algebra.domain.arithmetic import divisors_of, is_prime, prime_power_base
from orlik_graph.application.services import GraphApplicationService, parse_int_list
from orlik_graph.domain.services import OrlikGraphService
from shared.domain.errors import InvalidOrderError, WeightSystemFormatError

vertex_sets = st.sets(st.integers(min_value=1, max_value=120), min_size=1, max_size=8)


@st.composite
def divisibility_chains(draw):
    k = [draw(st.integers(min_value=1, max_value=720))]
    for _ in range(draw(st.integers(min_value=0, max_value=5))):
        k.append(draw(st.sampled_from(divisors_of(k[-1]))))
    return k


def build(M):
    return OrlikGraphService.build_graph(M)


class TestBuildGraph:

    def test_edges_of_small_sets(self):
        assert build({30, 20, 6, 4}).edges == frozenset({(30, 6, 5), (20, 4, 5)})
        assert build({5, 3, 1}).edges == frozenset({(3, 1, 3), (5, 1, 5)})
        assert len(build({60, 30, 20, 12, 10, 6, 4, 2}).edges) == 12

    def test_intermediate_vertex_blocks_edge(self):
        g = build({8, 4, 2})
        assert g.edges == frozenset({(8, 4, 2), (4, 2, 2)})

    def test_invalid_sets(self):
        with pytest.raises(ValueError):
            build(set())
        with pytest.raises(InvalidOrderError):
            build({0, 3})

    def test_p_planes_need_a_prime(self):
        with pytest.raises(ValueError):
            OrlikGraphService.p_planes(build({4, 2}), 4)

    @given(vertex_sets)
    def test_edges_are_prime_power_steps(self, M):
        g = build(M)
        for m1, m2, p in g.edges:
            assert m1 > m2
            assert m1 % m2 == 0
            assert prime_power_base(m1 // m2) == p and is_prime(p)
            assert (m2, m1) not in {(a, b) for a, b, _ in g.edges}


class TestConditions:

    @pytest.mark.parametrize("M, condition_i, condition_ii", [
        ({30, 20, 6, 4}, False, False),
        ({60, 30, 20, 12, 10, 6, 4, 2}, True, False),
        ({12, 6, 4, 2}, True, False),
        ({6, 4}, False, True),
        ({5, 1}, True, False),
        ({35, 21, 15, 7, 5, 3, 1}, True, False),
    ])
    def test_worked_sets(self, M, condition_i, condition_ii):
        g = build(M)
        assert OrlikGraphService.condition_I(g) is condition_i
        assert OrlikGraphService.condition_II(g) is condition_ii

    def test_set_satisfying_i_but_not_strong(self):
        g = build({30, 15, 10, 6, 5, 4, 3, 2, 1})
        assert OrlikGraphService.condition_I(g)
        assert not OrlikGraphService.strong_condition(g)

    def test_disconnected_set_fails_condition_i(self):
        g = build({35, 3, 1})
        assert not OrlikGraphService.is_connected(g)
        assert not OrlikGraphService.condition_I(g)

    def test_single_vertex(self):
        report = OrlikGraphService.report(build({7}))
        assert report.condition_i and report.strong
        assert report.tp == {7: True}

    @given(vertex_sets)
    def test_strong_implies_condition_i(self, M):
        report = OrlikGraphService.report(build(M))
        assert report.condition_i or not report.strong

    @given(vertex_sets, st.sampled_from([3, 5, 7, 11, 13]))
    def test_tp_is_vacuous_for_primes_outside_lcm(self, M, p):
        g = build(M)
        assume(g.lcm % p)
        assume(OrlikGraphService.is_connected(g))
        assert OrlikGraphService.condition_Tp(g, p)


class TestAlternatingSets:

    @pytest.mark.parametrize("k, expected", [
        ((4, 2), {4}),
        ((12, 12), set()),
        ((12, 6, 2), {12, 4, 2, 1}),
        ((), set()),
    ])
    def test_examples(self, k, expected):
        assert OrlikGraphService.alternating_lambda_set(k) == expected

    def test_divisibility_required(self):
        with pytest.raises(ValueError):
            OrlikGraphService.alternating_lambda_set((12, 5))

    @given(divisibility_chains())
    def test_nonempty_sets_satisfy_strong_condition(self, k):
        M = OrlikGraphService.alternating_lambda_set(k)
        if M:
            assert OrlikGraphService.strong_condition(build(M))


class TestGraphApplicationService:

    def test_report_record(self):
        report = GraphApplicationService().report("30,20,6,4", edges=True)
        assert report['M'] == [30, 20, 6, 4]
        assert report['condition_I'] is False
        assert report['condition_II'] is False
        assert report['Tp'] == {'3': False, '5': False}
        assert set(report['edges']) == {"30 6 5", "20 4 5"}

    def test_alternating_input(self):
        report = GraphApplicationService().report("12,6,2", alternating=True)
        assert report['M'] == [12, 4, 2, 1]
        assert report['strong'] is True

    @pytest.mark.parametrize("text", ["6,6", "12,12,4,4"])
    def test_cancelling_alternating_sum_gives_the_empty_set(self, text):
        report = GraphApplicationService().report(text, alternating=True, edges=True)
        assert report == {
            'M': [],
            'connected': True,
            'S2': True,
            'Tp': {},
            'condition_I': True,
            'condition_II': True,
            'strong': True,
            'edges': [],
        }

    def test_plain_empty_set_is_still_rejected(self):
        with pytest.raises(ValueError):
            GraphApplicationService().graph_service.build_graph([])

    @pytest.mark.parametrize("text, token", [("30,x", "x"), ("0,3", "0"), ("", "")])
    def test_bad_lists(self, text, token):
        with pytest.raises(WeightSystemFormatError) as info:
            parse_int_list(text)
        assert info.value.token == token
