"""Fast heuristics for total spend, and the bounds they are sold under."""

from __future__ import annotations

import pytest

from flexq import (
    SmfqInstance,
    approx_promote,
    approx_restrict,
    approx_via_minmax,
    bench_instance,
    gen_example1,
    gen_example2,
    gen_fig1,
    gen_fig2,
    is_a_perfect,
    is_envy_free,
    lower_bound_sum,
    min_cost_choice,
    min_cost_program,
    oracle_minsum,
    total_cost,
)


def test_cheapest_program_breaks_cost_ties_by_preference():
    inst = SmfqInstance(
        agents=["a1"], programs=["p1", "p2"],
        agent_pref={"a1": ["p2", "p1"]},
        program_pref={"p1": ["a1"], "p2": ["a1"]},
        cost={"p1": 3, "p2": 3})
    assert min_cost_program(inst, "a1") == "p2"


def test_choice_summary_on_the_canonical_market():
    _, h = gen_fig1()
    choice = min_cost_choice(h)
    assert choice.p_star == {"a1": "p1", "a2": "p1", "a3": "p1",
                             "a4": "p1", "a5": "p2"}
    assert choice.ell_p == 5  # p2 ranks five agents
    assert choice.ell_a == 2
    assert lower_bound_sum(h) == 1 + 1 + 1 + 1 + 2


def test_promotion_wins_where_restriction_crowds_the_pricey_program():
    inst = gen_example1(5, 100)
    assert approx_promote(inst).objective == 104   # n-1 + alpha
    assert approx_restrict(inst).objective == 500  # n * alpha
    assert oracle_minsum(inst).objective == 104


def test_restriction_wins_where_promotion_cascades():
    inst = gen_example2(5, 100)
    assert approx_promote(inst).objective == 402   # 2 + (n-1) * alpha
    assert approx_restrict(inst).objective == 108  # 2(n-1) + alpha
    assert oracle_minsum(inst).objective == 108


@pytest.mark.parametrize("n", [4, 6, 9])
def test_tight_family_pins_both_heuristics_at_n(n):
    inst = gen_fig2(n)
    assert lower_bound_sum(inst) == 1
    assert approx_promote(inst).objective == n
    assert approx_restrict(inst).objective == n


def test_via_minmax_on_the_canonical_market():
    _, h = gen_fig1()
    report = approx_via_minmax(h)
    assert report.objective == 7  # happens to be optimal here
    assert report.objective_kind == "total_cost"
    assert not report.certified_optimal


def test_reports_are_marked_uncertified():
    inst = gen_example1(5, 100)
    for solver in (approx_promote, approx_restrict, approx_via_minmax):
        report = solver(inst)
        assert not report.certified_optimal
        assert report.objective == total_cost(inst, report.matching)


def test_examples_scale_with_their_parameters():
    for n, alpha in [(3, 3), (4, 10), (7, 13), (10, 1000)]:
        e1 = gen_example1(n, alpha)
        assert approx_promote(e1).objective == n - 1 + alpha
        assert approx_restrict(e1).objective == n * alpha
        e2 = gen_example2(n, alpha)
        assert approx_promote(e2).objective == 2 + (n - 1) * alpha
        assert approx_restrict(e2).objective == 2 * (n - 1) + alpha


def test_heuristic_outputs_are_stable_and_bounded():
    for seed in range(120):
        inst = bench_instance(seed)
        choice = min_cost_choice(inst)
        lb = lower_bound_sum(inst)
        opt = oracle_minsum(inst).objective
        assert lb <= opt
        for solver in (approx_promote, approx_restrict, approx_via_minmax):
            report = solver(inst)
            assert is_a_perfect(inst, report.matching), (seed, report.method)
            assert is_envy_free(inst, report.matching).ok, (seed, report.method)
            assert report.objective >= opt
        assert approx_promote(inst).objective <= choice.ell_p * lb
        assert approx_restrict(inst).objective <= choice.ell_p * lb
        assert approx_via_minmax(inst).objective <= len(inst.programs) * opt


def test_promotion_only_ever_fills_cheapest_seats():
    for seed in range(120):
        inst = bench_instance(seed)
        report = approx_promote(inst)
        allowed = set(min_cost_choice(inst).p_star.values())
        assert set(report.matching.roster()) <= allowed, seed
