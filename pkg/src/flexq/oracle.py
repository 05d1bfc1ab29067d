"""Brute-force reference solvers.

These enumerate candidate assignments outright and keep only the stable
ones.  They are the ground truth the clever solvers are tested against, so
they stay deliberately independent of the solver code paths: the only shared
ingredients are the instance accessors and the stability scans.

The search prunes on envy already created by a partial assignment.  That is
sound because an envy pair never goes away as more agents are placed: the
envied roster only grows and the envious agent's assignment is already
fixed.
"""

from __future__ import annotations

import math
from typing import Iterator

from .budget import resolve_budget
from .errors import BudgetExceeded
from .model import (
    HrInstance,
    Matching,
    SmfqInstance,
    SolveReport,
    _assignment_hr_stable,
    max_cost,
    total_cost,
)


def enumerate_a_perfect_stable(
    instance: SmfqInstance, budget: int | None = None, force: bool = False
) -> Iterator[Matching]:
    """Yield every full envy-free assignment, in lexicographic order.

    Agents are placed in instance order and each agent's candidates run in
    its preference order.  Raises :class:`BudgetExceeded` upfront when the
    full assignment space tops the budget, unless forced.
    """
    space = math.prod(len(instance.agent_pref.get(a, [])) for a in instance.agents)
    limit = resolve_budget(budget)
    if space > limit and not force:
        raise BudgetExceeded(f"{space} assignments exceed the budget of {limit}")
    return _stable_assignments(instance)


def _stable_assignments(instance: SmfqInstance) -> Iterator[Matching]:
    agents = instance.agents
    n = len(agents)
    pref = instance.agent_pref
    arank = instance._arank
    prank = instance._prank
    assignment: dict[str, str] = {}
    members: dict[str, list[int]] = {p: [] for p in instance.programs}
    enviers: dict[str, list[int]] = {p: [] for p in instance.programs}

    def place(i: int) -> Iterator[Matching]:
        if i == n:
            yield Matching(dict(assignment))
            return
        a = agents[i]
        lst = pref.get(a, [])
        for p in lst:
            rp = prank[p][a]
            env = enviers[p]
            # someone already placed prefers p and outranks a there
            if env and min(env) < rp:
                continue
            watched: list[tuple[str, int]] = []
            ok = True
            for q in lst[: arank[a][p]]:
                rq = prank[q][a]
                mq = members[q]
                if mq and max(mq) > rq:
                    ok = False  # a would envy a worse agent already at q
                    break
                watched.append((q, rq))
            if not ok:
                continue
            assignment[a] = p
            members[p].append(rp)
            for q, rq in watched:
                enviers[q].append(rq)
            yield from place(i + 1)
            del assignment[a]
            members[p].pop()
            for q, _ in watched:
                enviers[q].pop()

    return place(0)


def oracle_minsum(instance: SmfqInstance, budget: int | None = None, force: bool = False) -> SolveReport:
    """Minimum total spend over all full stable assignments, by enumeration."""
    best: Matching | None = None
    best_cost = 0
    for m in enumerate_a_perfect_stable(instance, budget=budget, force=force):
        c = total_cost(instance, m)
        if best is None or c < best_cost:
            best, best_cost = m, c
    assert best is not None, "a validated instance always admits the top-choice matching"
    return SolveReport(best, best_cost, "total_cost", "oracle-minsum", certified_optimal=True)


def oracle_minmax(instance: SmfqInstance, budget: int | None = None, force: bool = False) -> SolveReport:
    """Minimum max spend over all full stable assignments, by enumeration."""
    best: Matching | None = None
    best_cost = 0
    for m in enumerate_a_perfect_stable(instance, budget=budget, force=force):
        c = max_cost(instance, m)
        if best is None or c < best_cost:
            best, best_cost = m, c
    assert best is not None, "a validated instance always admits the top-choice matching"
    return SolveReport(best, best_cost, "max_cost", "oracle-minmax", certified_optimal=True)


def enumerate_hr_stable(
    instance: HrInstance, budget: int | None = None, force: bool = False
) -> Iterator[Matching]:
    """Yield every quota-respecting stable matching (partial ones included).

    Each agent's candidates are its list followed by staying unmatched, so
    the space is the product of (list length + 1) per agent; the budget guard
    applies to that product.  Partial assignments are pruned on quota
    overflow; stability, whose under-subscription side depends on the final
    rosters, is checked once each assignment is complete.
    """
    space = math.prod(len(instance.agent_pref.get(a, [])) + 1 for a in instance.agents)
    limit = resolve_budget(budget)
    if space > limit and not force:
        raise BudgetExceeded(f"{space} assignments exceed the budget of {limit}")
    return _hr_stable_assignments(instance)


def _hr_stable_assignments(instance: HrInstance) -> Iterator[Matching]:
    agents = instance.agents
    n = len(agents)
    pref = instance.agent_pref
    prank = instance._prank
    quota = instance.quota
    assignment: dict[str, str] = {}
    sizes: dict[str, int] = {p: 0 for p in instance.programs}

    def place(i: int) -> Iterator[Matching]:
        if i == n:
            if _assignment_hr_stable(instance, assignment):
                yield Matching(dict(assignment))
            return
        a = agents[i]
        for p in pref.get(a, []):
            if sizes[p] >= quota[p]:
                continue
            assignment[a] = p
            sizes[p] += 1
            yield from place(i + 1)
            sizes[p] -= 1
            del assignment[a]
        # leaving a unmatched is always within quota
        yield from place(i + 1)

    return place(0)
