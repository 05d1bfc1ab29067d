"""Deferred acceptance for markets with rigid quotas.

Agents propose down their lists; a full program keeps its best tentative
roster and bounces the rest.  The outcome is the agent-optimal stable
matching, and it does not depend on the order in which free agents propose.
"""

from __future__ import annotations

from collections import deque

from .model import HrInstance, Matching


def gale_shapley_a_optimal(instance: HrInstance, proposal_order: list[str] | None = None) -> Matching:
    """Run agent-proposing deferred acceptance.

    ``proposal_order`` reorders the initial proposal queue; the returned
    matching is the same for every order (the tests shuffle it).  Agents whose
    lists run out stay unmatched.
    """
    order = list(instance.agents) if proposal_order is None else list(proposal_order)
    pref = instance.agent_pref
    prank = instance._prank
    quota = instance.quota

    nxt = {a: 0 for a in instance.agents}
    match: dict[str, str] = {}
    roster: dict[str, set[str]] = {p: set() for p in instance.programs}
    free = deque(order)

    while free:
        a = free.popleft()
        lst = pref.get(a, [])
        while nxt[a] < len(lst):
            p = lst[nxt[a]]
            nxt[a] += 1
            held = roster[p]
            if len(held) < quota[p]:
                held.add(a)
                match[a] = p
                break
            ranks = prank[p]
            w = max(held, key=ranks.__getitem__)
            if ranks[a] < ranks[w]:
                # p trades its worst tentative agent for the proposer
                held.discard(w)
                del match[w]
                free.append(w)
                held.add(a)
                match[a] = p
                break
        # list exhausted: a stays unmatched

    return Matching({a: match[a] for a in instance.agents if a in match})


def unmatched_agents(instance: HrInstance, matching: Matching) -> list[str]:
    """Agents without an assignment, in instance order.

    For stable matchings this set is an invariant of the instance: every
    stable matching leaves exactly the same agents unmatched.
    """
    return [a for a in instance.agents if a not in matching.assignment]
