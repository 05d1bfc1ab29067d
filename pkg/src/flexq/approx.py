"""Polynomial-time approximations for the total-spend objective.

All three stay within a provable factor of the optimum:

* ``approx_promote`` starts everyone at their cheapest program and repairs
  envy by promotions only; its total spend is at most the longest program
  list times the cheap-seat lower bound.
* ``approx_restrict`` matches agents only within the set of cheapest
  programs; same factor, incomparable in practice with promotion.
* ``approx_via_minmax`` reuses the exact max-spend solver; its total spend is
  at most the number of programs times the optimal total.
"""

from __future__ import annotations

from dataclasses import dataclass

from .minmax import solve_minmax
from .model import Matching, SmfqInstance, SolveReport, total_cost


@dataclass
class MinCostChoice:
    """Each agent's cheapest program (ties to the most preferred), plus the
    longest list length on either side."""

    p_star: dict[str, str]
    ell_p: int
    ell_a: int


def min_cost_program(instance: SmfqInstance, agent: str) -> str:
    """Cheapest program on the agent's list; ties go to the most preferred."""
    best = None
    best_cost = None
    for p in instance.agent_pref[agent]:
        c = instance.cost[p]
        if best_cost is None or c < best_cost:
            best, best_cost = p, c
    return best


def min_cost_choice(instance: SmfqInstance) -> MinCostChoice:
    return MinCostChoice(
        p_star={a: min_cost_program(instance, a) for a in instance.agents},
        ell_p=max((len(instance.program_pref[p]) for p in instance.programs), default=0),
        ell_a=max((len(instance.agent_pref[a]) for a in instance.agents), default=0),
    )


def lower_bound_sum(instance: SmfqInstance) -> int:
    """Sum of each agent's cheapest list entry: no full matching spends less."""
    return sum(instance.cost[min_cost_program(instance, a)] for a in instance.agents)


def approx_promote(instance: SmfqInstance) -> SolveReport:
    """Start all agents at their cheapest program, then repair envy upward.

    Programs are processed in instance order; each scans its list from worst
    to best and pulls in any agent that prefers it while it houses somebody
    worse.  Agents only ever move to programs they like strictly better, and
    a program never gains its first agent this way, so only cheapest-choice
    programs are ever occupied.
    """
    choice = min_cost_choice(instance)
    match = dict(choice.p_star)
    roster: dict[str, set[str]] = {p: set() for p in instance.programs}
    for a, p in match.items():
        roster[p].add(a)
    prank = instance._prank

    for p in instance.programs:
        ranks = prank[p]
        members = roster[p]
        worst = max((ranks[x] for x in members), default=-1)
        for a in reversed(instance.program_pref[p]):
            if match[a] == p:
                continue
            r = ranks[a]
            if r >= worst:
                continue  # nobody currently at p is worse than a
            if not instance.agent_prefers(a, p, match[a]):
                continue
            assert instance.agent_rank(a, p) < instance.agent_rank(a, match[a])
            roster[match[a]].discard(a)
            members.add(a)  # joins above the current worst, so worst stands
            match[a] = p

    occupied = {p for p, members in roster.items() if members}
    assert occupied <= set(choice.p_star.values())
    m = Matching({a: match[a] for a in instance.agents})
    return SolveReport(m, total_cost(instance, m), "total_cost", "promote", certified_optimal=False)


def approx_restrict(instance: SmfqInstance) -> SolveReport:
    """Match every agent to its most preferred cheapest-choice program.

    Restricting the market to the cheapest-choice programs makes top choices
    envy-free, at the price of possibly crowding an expensive program.
    """
    choice = min_cost_choice(instance)
    allowed = set(choice.p_star.values())
    match = {}
    for a in instance.agents:
        match[a] = next(p for p in instance.agent_pref[a] if p in allowed)
    m = Matching(match)
    return SolveReport(m, total_cost(instance, m), "total_cost", "restrict", certified_optimal=False)


def approx_via_minmax(instance: SmfqInstance) -> SolveReport:
    """Report the exact max-spend matching under the total-spend objective."""
    rep = solve_minmax(instance)
    return SolveReport(
        rep.matching,
        total_cost(instance, rep.matching),
        "total_cost",
        "via-minmax",
        certified_optimal=False,
    )
