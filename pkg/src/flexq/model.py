"""Core domain types and stability primitives.

The market has agents on one side and programs on the other, both with strict
preference lists over acceptable partners.  Programs carry a non-negative
integer cost per assigned agent; a program with no rigid quota absorbs any
number of agents, its cost controlling how expensive crowding becomes.  The
quota-based variant adds a hard per-program capacity on top.

A matching of the flexible market is *envy-free* when no agent prefers a
program that currently holds a strictly worse agent; an unmatched agent
prefers every program on its list.  Envy-freeness is the stability notion for
all solvers in this package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    DuplicateInList,
    EmptyAgentList,
    NegativeCost,
    NonMutualEdge,
    QuotaViolated,
    ZeroQuota,
)


def _positions(lst: list[str]) -> dict[str, int]:
    pos: dict[str, int] = {}
    for i, x in enumerate(lst):
        pos.setdefault(x, i)
    return pos


@dataclass
class SmfqInstance:
    """A two-sided market with per-program costs and no quotas.

    ``agents`` and ``programs`` fix identifier order; every deterministic
    iteration in the package follows these lists.  ``agent_pref[a]`` and
    ``program_pref[p]`` are strict preference lists, most preferred first.
    Missing cost entries default to 0.  Instances are treated as immutable
    values once constructed.
    """

    agents: list[str]
    programs: list[str]
    agent_pref: dict[str, list[str]]
    program_pref: dict[str, list[str]]
    cost: dict[str, int] = field(default_factory=dict)

    _arank: dict = field(init=False, repr=False, compare=False, default_factory=dict)
    _prank: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        self.cost = {p: self.cost.get(p, 0) for p in self.programs}
        self._arank = {a: _positions(self.agent_pref.get(a, [])) for a in self.agents}
        self._prank = {p: _positions(self.program_pref.get(p, [])) for p in self.programs}

    def agent_rank(self, agent: str, program: str) -> int:
        """Position of ``program`` on the agent's list (0 = most preferred)."""
        return self._arank[agent][program]

    def program_rank(self, program: str, agent: str) -> int:
        """Position of ``agent`` on the program's list (0 = most preferred)."""
        return self._prank[program][agent]

    def is_acceptable(self, agent: str, program: str) -> bool:
        return program in self._arank.get(agent, ())

    def agent_prefers(self, agent: str, program: str, current: str | None) -> bool:
        """True when the agent strictly prefers ``program`` to ``current``.

        ``current=None`` means the agent is unmatched and loses to anything
        acceptable.  ``program`` must be on the agent's list.
        """
        r = self._arank[agent][program]
        if current is None:
            return True
        return r < self._arank[agent][current]


@dataclass
class HrInstance(SmfqInstance):
    """SmfqInstance plus a rigid per-program quota.

    Costs are optional here (default 0), so quota-only markets round-trip
    cleanly; quotas missing from the dict normalize to 0 and fail validation.
    """

    quota: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        super().__post_init__()
        self.quota = {p: self.quota.get(p, 0) for p in self.programs}


@dataclass
class Matching:
    """A partial assignment of agents to programs.

    ``assignment`` maps each matched agent to its program; unmatched agents
    are simply absent.  Equality ignores insertion order.
    """

    assignment: dict[str, str] = field(default_factory=dict)

    def get(self, agent: str) -> str | None:
        return self.assignment.get(agent)

    def roster(self) -> dict[str, list[str]]:
        """Programs with at least one assigned agent, in assignment order."""
        out: dict[str, list[str]] = {}
        for a, p in self.assignment.items():
            out.setdefault(p, []).append(a)
        return out

    def __len__(self) -> int:
        return len(self.assignment)


OBJECTIVE_KINDS = ("total_cost", "max_cost", "max_deviation")


@dataclass
class SolveReport:
    """A solver result: the matching plus the objective it was scored on."""

    matching: Matching
    objective: int
    objective_kind: str
    method: str
    certified_optimal: bool

    def __post_init__(self):
        if self.objective_kind not in OBJECTIVE_KINDS:
            raise ValueError(f"unknown objective kind {self.objective_kind!r}")


@dataclass
class PrunedGraph:
    """Surviving acceptable pairs after envy pruning.

    ``adj[a]`` lists the programs still available to agent ``a`` in the
    agent's own preference order.
    """

    adj: dict[str, list[str]]

    def edge_set(self) -> set[tuple[str, str]]:
        return {(a, p) for a, ps in self.adj.items() for p in ps}

    def degree(self, agent: str) -> int:
        return len(self.adj.get(agent, ()))


class StabilityCheck(NamedTuple):
    """Result of a stability scan: overall verdict plus every violating pair."""

    ok: bool
    violations: list[tuple[str, str]]


def validate(instance: SmfqInstance) -> None:
    """Check every structural invariant, raising on the first violation found.

    Checks run in a fixed order (mutual acceptability, strictness, non-empty
    agent lists, costs, then quotas for the quota variant) and the error
    message names the offending identifier.  Returns None when well formed.
    """
    if len(set(instance.agents)) != len(instance.agents):
        raise DuplicateInList("instance declares a duplicate agent identifier")
    if len(set(instance.programs)) != len(instance.programs):
        raise DuplicateInList("instance declares a duplicate program identifier")

    agent_sets = {a: set(instance.agent_pref.get(a, [])) for a in instance.agents}
    program_sets = {p: set(instance.program_pref.get(p, [])) for p in instance.programs}

    for a in instance.agents:
        for p in instance.agent_pref.get(a, []):
            if p not in program_sets or a not in program_sets[p]:
                raise NonMutualEdge(f"agent {a} lists {p}, but {p} does not list {a}")
    for p in instance.programs:
        for a in instance.program_pref.get(p, []):
            if a not in agent_sets or p not in agent_sets[a]:
                raise NonMutualEdge(f"program {p} lists {a}, but {a} does not list {p}")

    for a in instance.agents:
        lst = instance.agent_pref.get(a, [])
        if len(set(lst)) != len(lst):
            raise DuplicateInList(f"agent {a} repeats an entry in its preference list")
    for p in instance.programs:
        lst = instance.program_pref.get(p, [])
        if len(set(lst)) != len(lst):
            raise DuplicateInList(f"program {p} repeats an entry in its preference list")

    for a in instance.agents:
        if not instance.agent_pref.get(a, []):
            raise EmptyAgentList(f"agent {a} has an empty preference list")

    for p in instance.programs:
        c = instance.cost[p]
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise NegativeCost(f"program {p} has cost {c!r}; costs must be non-negative integers")

    if isinstance(instance, HrInstance):
        for p in instance.programs:
            q = instance.quota[p]
            if isinstance(q, bool) or not isinstance(q, int) or q < 1:
                raise ZeroQuota(f"program {p} has quota {q!r}; quotas must be positive integers")


def _check_assigned_acceptable(instance: SmfqInstance, matching: Matching) -> None:
    for a, p in matching.assignment.items():
        if not instance.is_acceptable(a, p):
            raise ValueError(f"matching assigns {a} to {p}, which is not on its list")


def _roster_worst(instance: SmfqInstance, assignment: dict[str, str]) -> dict[str, int]:
    """For each program with a non-empty roster, the rank of its worst member."""
    worst: dict[str, int] = {}
    prank = instance._prank
    for a, p in assignment.items():
        r = prank[p][a]
        if worst.get(p, -1) < r:
            worst[p] = r
    return worst


def is_envy_free(instance: SmfqInstance, matching: Matching) -> StabilityCheck:
    """Scan for envy pairs: an agent preferring a program whose roster holds a
    strictly worse agent.  Unmatched agents prefer every acceptable program.

    Returns the verdict together with the exhaustive list of envy pairs,
    ordered by (agent position, program position) in the instance.
    """
    _check_assigned_acceptable(instance, matching)
    assignment = matching.assignment
    worst = _roster_worst(instance, assignment)
    pindex = {p: i for i, p in enumerate(instance.programs)}
    prank = instance._prank
    violations: list[tuple[str, str]] = []
    for a in instance.agents:
        lst = instance.agent_pref.get(a, [])
        cur = assignment.get(a)
        limit = instance._arank[a][cur] if cur is not None else len(lst)
        envied = [p for p in lst[:limit] if p in worst and worst[p] > prank[p][a]]
        envied.sort(key=pindex.__getitem__)
        violations.extend((a, p) for p in envied)
    return StabilityCheck(not violations, violations)


def is_hr_stable(instance: HrInstance, matching: Matching) -> StabilityCheck:
    """Scan for classical blocking pairs under rigid quotas.

    A pair (a, p) off the matching blocks when a prefers p to its current
    assignment (or is unmatched) and p is under-subscribed or holds an agent
    it likes less than a.  The matching must respect quotas.
    """
    _check_assigned_acceptable(instance, matching)
    assignment = matching.assignment
    sizes = Counter(assignment.values())
    for p in instance.programs:
        if sizes.get(p, 0) > instance.quota[p]:
            raise QuotaViolated(f"program {p} holds {sizes[p]} agents but has quota {instance.quota[p]}")
    worst = _roster_worst(instance, assignment)
    pindex = {p: i for i, p in enumerate(instance.programs)}
    prank = instance._prank
    violations: list[tuple[str, str]] = []
    for a in instance.agents:
        lst = instance.agent_pref.get(a, [])
        cur = assignment.get(a)
        limit = instance._arank[a][cur] if cur is not None else len(lst)
        blocking = [
            p
            for p in lst[:limit]
            if sizes.get(p, 0) < instance.quota[p] or (p in worst and worst[p] > prank[p][a])
        ]
        blocking.sort(key=pindex.__getitem__)
        violations.extend((a, p) for p in blocking)
    return StabilityCheck(not violations, violations)


def total_cost(instance: SmfqInstance, matching: Matching) -> int:
    """Sum over programs of roster size times program cost."""
    return sum(instance.cost[p] for p in matching.assignment.values())


def max_cost(instance: SmfqInstance, matching: Matching) -> int:
    """Largest roster size times cost over all programs; 0 for the empty matching."""
    sizes = Counter(matching.assignment.values())
    return max((n * instance.cost[p] for p, n in sizes.items()), default=0)


def is_a_perfect(instance: SmfqInstance, matching: Matching) -> bool:
    """True when every agent of the instance is assigned."""
    return all(a in matching.assignment for a in instance.agents)


def top_choice_matching(instance: SmfqInstance) -> Matching:
    """Assign every agent to its most preferred program.

    Always envy-free: each agent sits at the top of its own list, so nobody
    prefers anything over its assignment.
    """
    return Matching({a: instance.agent_pref[a][0] for a in instance.agents})


def _assignment_envy_free(instance: SmfqInstance, assignment: dict[str, str]) -> bool:
    """Fast verdict-only envy scan over a raw assignment dict."""
    worst = _roster_worst(instance, assignment)
    prank = instance._prank
    for a in instance.agents:
        lst = instance.agent_pref.get(a, [])
        cur = assignment.get(a)
        limit = instance._arank[a][cur] if cur is not None else len(lst)
        for p in lst[:limit]:
            w = worst.get(p)
            if w is not None and w > prank[p][a]:
                return False
    return True


def _assignment_hr_stable(instance: HrInstance, assignment: dict[str, str]) -> bool:
    """Fast verdict-only blocking-pair scan; assumes quotas are respected."""
    sizes = Counter(assignment.values())
    worst = _roster_worst(instance, assignment)
    prank = instance._prank
    quota = instance.quota
    for a in instance.agents:
        lst = instance.agent_pref.get(a, [])
        cur = assignment.get(a)
        limit = instance._arank[a][cur] if cur is not None else len(lst)
        for p in lst[:limit]:
            if sizes.get(p, 0) < quota[p]:
                return False
            w = worst.get(p)
            if w is not None and w > prank[p][a]:
                return False
    return True
