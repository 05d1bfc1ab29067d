"""Two-round pipeline: extend a stable quota matching without creating envy.

Round one fixes a stable matching under rigid quotas.  Round two may assign
the leftover agents beyond the quotas, as long as the combined matching
stays envy-free with respect to the original preferences.  Which programs an
unmatched agent may still join is governed by each program's *barrier*: its
most preferred matched agent that would rather be there.  Unmatched agents
ranked below a barrier are out; what survives is the extension graph.

Within that graph, round two can chase different goals: match as many
leftover agents as possible, minimize the largest per-program overflow, or
minimize the total round-two cost under fresh per-program prices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import NotStable, ValidationError
from .minmax import solve_minmax
from .minsum import solve_minsum_exact
from .model import (
    HrInstance,
    Matching,
    PrunedGraph,
    SmfqInstance,
    is_hr_stable,
    validate,
)
from .hr import unmatched_agents


@dataclass
class ExtensionContext:
    """Everything round two needs: the pruned extension graph and who can use it."""

    round1: HrInstance
    m1: Matching
    a_u: list[str]
    barriers: dict[str, str | None]
    g_m: PrunedGraph
    a_u_matchable: list[str]

    @property
    def unextendable(self) -> list[str]:
        """Unmatched agents every stable extension must leave unmatched."""
        matchable = set(self.a_u_matchable)
        return [a for a in self.a_u if a not in matchable]


@dataclass
class Extension:
    """A round-two outcome: the combined matching plus per-program overflow."""

    m2: Matching
    deviation: dict[str, int]
    d_star: int
    round2_cost: int | None = None


def barrier(round1: HrInstance, m1: Matching, program: str) -> str | None:
    """The program's most preferred matched agent that prefers the program.

    Any unmatched agent the program likes less than its barrier cannot join
    it in round two without making the barrier agent envious.  Returns None
    when no matched agent wants in.
    """
    assignment = m1.assignment
    for a in round1.program_pref[program]:
        cur = assignment.get(a)
        if cur is not None and round1.agent_prefers(a, program, cur):
            return a
    return None


def compute_extendable(round1: HrInstance, m1: Matching) -> ExtensionContext:
    """Build the extension graph for a stable round-one matching.

    Starts from all edges incident to unmatched agents and removes those
    below a barrier.  Raises :class:`NotStable` when ``m1`` is not stable in
    ``round1`` (quota violations surface as :class:`QuotaViolated`).
    Unmatched agents stripped of every edge are reported as unextendable
    rather than failing the computation.
    """
    ok, _ = is_hr_stable(round1, m1)
    if not ok:
        raise NotStable("the round-one matching admits a blocking pair")

    a_u = unmatched_agents(round1, m1)
    barriers = {p: barrier(round1, m1, p) for p in round1.programs}
    prank = round1._prank
    adj: dict[str, list[str]] = {}
    for a in a_u:
        keep = []
        for p in round1.agent_pref[a]:
            b = barriers[p]
            if b is not None and prank[p][a] > prank[p][b]:
                continue  # below the barrier: joining p would make b envious
            keep.append(p)
        adj[a] = keep
    g_m = PrunedGraph(adj)
    return ExtensionContext(
        round1=round1,
        m1=m1,
        a_u=a_u,
        barriers=barriers,
        g_m=g_m,
        a_u_matchable=[a for a in a_u if adj[a]],
    )


def _deviations(round1: HrInstance, m1: Matching, m2: Matching) -> tuple[dict[str, int], int]:
    s1 = Counter(m1.assignment.values())
    s2 = Counter(m2.assignment.values())
    dev = {p: s2.get(p, 0) - s1.get(p, 0) for p in round1.programs}
    return dev, max(dev.values(), default=0)


def _merge(ctx: ExtensionContext, extra: dict[str, str]) -> Matching:
    merged = dict(ctx.m1.assignment)
    merged.update(extra)
    return Matching({a: merged[a] for a in ctx.round1.agents if a in merged})


def _restricted_market(ctx: ExtensionContext, cost: dict[str, int]) -> SmfqInstance:
    """The extension graph as a standalone cost market for the round-two solvers."""
    adj = ctx.g_m.adj
    agents = list(ctx.a_u_matchable)
    onlist = {a: set(adj[a]) for a in agents}
    programs = [p for p in ctx.round1.programs if any(p in onlist[a] for a in agents)]
    inst = SmfqInstance(
        agents=agents,
        programs=programs,
        agent_pref={a: list(adj[a]) for a in agents},
        program_pref={
            p: [a for a in ctx.round1.program_pref[p] if a in onlist and p in onlist[a]]
            for p in programs
        },
        cost={p: cost[p] for p in programs},
    )
    validate(inst)
    return inst


def largest_extension(ctx: ExtensionContext) -> Extension:
    """Match every matchable leftover agent to its best surviving program.

    This extends the matching to the full matchable set; no stable extension
    can match an agent outside it.
    """
    extra = {a: ctx.g_m.adj[a][0] for a in ctx.a_u_matchable}
    m2 = _merge(ctx, extra)
    dev, d_star = _deviations(ctx.round1, ctx.m1, m2)
    return Extension(m2=m2, deviation=dev, d_star=d_star)


def min_deviation_extension(ctx: ExtensionContext) -> Extension:
    """Match all matchable leftovers while minimizing the largest overflow.

    Runs the exact max-spend solver on the extension graph with unit costs,
    so a program's spend there is exactly how many new agents it takes on.
    """
    if not ctx.a_u_matchable:
        dev, d_star = _deviations(ctx.round1, ctx.m1, ctx.m1)
        return Extension(m2=ctx.m1, deviation=dev, d_star=d_star)
    sub = _restricted_market(ctx, {p: 1 for p in ctx.round1.programs})
    rep = solve_minmax(sub)
    m2 = _merge(ctx, rep.matching.assignment)
    dev, d_star = _deviations(ctx.round1, ctx.m1, m2)
    assert d_star == rep.objective
    return Extension(m2=m2, deviation=dev, d_star=d_star)


def min_cost_extension(ctx: ExtensionContext, round2_costs: dict[str, int]) -> Extension:
    """Match all matchable leftovers while minimizing round-two spend.

    ``round2_costs`` prices each program for the second round; every program
    that survives in the extension graph must be priced, non-negatively.
    """
    adj = ctx.g_m.adj
    needed = {p for a in ctx.a_u_matchable for p in adj[a]}
    missing = [p for p in ctx.round1.programs if p in needed and p not in round2_costs]
    if missing:
        raise ValidationError(f"missing round-two cost for program {missing[0]}")
    for p in needed:
        c = round2_costs[p]
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise ValidationError(f"round-two cost for {p} must be a non-negative integer, got {c!r}")

    if not ctx.a_u_matchable:
        dev, d_star = _deviations(ctx.round1, ctx.m1, ctx.m1)
        return Extension(m2=ctx.m1, deviation=dev, d_star=d_star, round2_cost=0)
    sub = _restricted_market(ctx, dict(round2_costs))
    rep = solve_minsum_exact(sub)
    m2 = _merge(ctx, rep.matching.assignment)
    dev, d_star = _deviations(ctx.round1, ctx.m1, m2)
    return Extension(m2=m2, deviation=dev, d_star=d_star, round2_cost=rep.objective)
