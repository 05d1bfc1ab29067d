"""Line-oriented text formats for instances, matchings, and reduction inputs.

Instance files::

    # comments run to end of line, blank lines are skipped
    smfq 1                      <- or "hr 1"; the header picks the type
    [agents]
    a1: p1 p2
    [programs]
    p1 cost=1: a2 a4 a1 a3      <- "hr" files additionally require quota=<int>
    p2 cost=2: a1 a2 a5 a3 a4

Identifiers match ``[A-Za-z0-9_]+``.  Parsing validates the result, so a
grammatically fine but structurally broken file raises the corresponding
validation error.  ``serialize_instance`` emits the canonical form above and
round-trips: parse(serialize(x)) == x.

Matching files hold one line per agent, in instance order, ``<agent> ->
<program>`` with ``-`` for unmatched, followed by optional ``# key=value``
trailer comments.

Set-cover inputs are ``elements <n>`` followed by ``set <id>: <element
ids>`` lines; graph inputs are ``edge <u> <v>`` lines.  Cost files (for the
second round of the extension pipeline) are ``<program> <cost>`` lines.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .generators import GraphInstance, SetCoverInstance
from .model import HrInstance, Matching, SmfqInstance, validate

_IDENT = re.compile(r"^[A-Za-z0-9_]+$")
_MATCH_LINE = re.compile(r"^([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+|-)$")


def _meaningful_lines(text: str):
    """Yield (line_number, content) with comments and blanks stripped."""
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def _check_ident(name: str, lineno: int) -> str:
    if not _IDENT.match(name):
        raise ParseError(f"bad identifier {name!r}", lineno)
    return name


def parse_instance(text: str) -> SmfqInstance | HrInstance:
    """Parse an instance file; the header decides which type comes back.

    The parsed instance is validated before being returned.
    """
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError("empty input: expected a 'smfq 1' or 'hr 1' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("smfq", "hr") or parts[1] != "1":
        raise ParseError(f"expected header 'smfq 1' or 'hr 1', got {header!r}", lineno)
    kind = parts[0]

    agents: list[str] = []
    programs: list[str] = []
    agent_pref: dict[str, list[str]] = {}
    program_pref: dict[str, list[str]] = {}
    cost: dict[str, int] = {}
    quota: dict[str, int] = {}

    section = None
    for lineno, line in lines[1:]:
        if line == "[agents]":
            if section is not None:
                raise ParseError("unexpected [agents] section", lineno)
            section = "agents"
            continue
        if line == "[programs]":
            if section != "agents":
                raise ParseError("[programs] must follow the [agents] section", lineno)
            section = "programs"
            continue
        if line.startswith("["):
            raise ParseError(f"unknown section {line!r}", lineno)
        if section is None:
            raise ParseError("expected the [agents] section", lineno)

        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected '<id> ...: <list>'", lineno)
        names = tail.split()

        if section == "agents":
            tokens = head.split()
            if len(tokens) != 1:
                raise ParseError("agent lines are '<id>: <program ids>'", lineno)
            a = _check_ident(tokens[0], lineno)
            if a in agent_pref:
                raise ParseError(f"duplicate agent line for {a}", lineno)
            agents.append(a)
            agent_pref[a] = [_check_ident(x, lineno) for x in names]
        else:
            tokens = head.split()
            if not tokens:
                raise ParseError("program lines are '<id> cost=<int> [quota=<int>]: <agent ids>'", lineno)
            p = _check_ident(tokens[0], lineno)
            if p in program_pref:
                raise ParseError(f"duplicate program line for {p}", lineno)
            keys: dict[str, int] = {}
            for tok in tokens[1:]:
                key, eq, val = tok.partition("=")
                if not eq or key not in ("cost", "quota"):
                    raise ParseError(f"unknown attribute {tok!r}", lineno)
                if key in keys:
                    raise ParseError(f"duplicate attribute {key!r}", lineno)
                try:
                    keys[key] = int(val)
                except ValueError:
                    raise ParseError(f"{key} must be an integer, got {val!r}", lineno) from None
            if "cost" not in keys:
                raise ParseError(f"program {p} is missing cost=<int>", lineno)
            if kind == "hr" and "quota" not in keys:
                raise ParseError(f"program {p} is missing quota=<int>, required by 'hr 1'", lineno)
            if kind == "smfq" and "quota" in keys:
                raise ParseError(f"program {p} carries a quota, not allowed in 'smfq 1'", lineno)
            programs.append(p)
            program_pref[p] = [_check_ident(x, lineno) for x in names]
            cost[p] = keys["cost"]
            if kind == "hr":
                quota[p] = keys["quota"]

    if section != "programs":
        raise ParseError("missing [programs] section")

    known_a, known_p = set(agents), set(programs)
    for a in agents:
        for p in agent_pref[a]:
            if p not in known_p:
                raise ParseError(f"agent {a} references undeclared program {p}")
    for p in programs:
        for a in program_pref[p]:
            if a not in known_a:
                raise ParseError(f"program {p} references undeclared agent {a}")

    if kind == "hr":
        instance: SmfqInstance = HrInstance(agents, programs, agent_pref, program_pref, cost, quota=quota)
    else:
        instance = SmfqInstance(agents, programs, agent_pref, program_pref, cost)
    validate(instance)
    return instance


def serialize_instance(instance: SmfqInstance) -> str:
    """Emit the canonical text form; parses back to an equal instance."""
    is_hr = isinstance(instance, HrInstance)
    out = ["hr 1" if is_hr else "smfq 1", "[agents]"]
    for a in instance.agents:
        lst = instance.agent_pref[a]
        out.append(f"{a}: {' '.join(lst)}" if lst else f"{a}:")
    out.append("[programs]")
    for p in instance.programs:
        attrs = f"cost={instance.cost[p]}"
        if is_hr:
            attrs += f" quota={instance.quota[p]}"
        lst = instance.program_pref[p]
        out.append(f"{p} {attrs}: {' '.join(lst)}" if lst else f"{p} {attrs}:")
    return "\n".join(out) + "\n"


def parse_matching(text: str, instance: SmfqInstance) -> Matching:
    """Parse a matching file against its instance.

    Requires one line per agent in instance order; assigned programs must be
    acceptable to their agents.  Trailer comments are ignored.
    """
    assignment: dict[str, str] = {}
    expected = list(instance.agents)
    idx = 0
    for lineno, line in _meaningful_lines(text):
        m = _MATCH_LINE.match(line)
        if not m:
            raise ParseError("expected '<agent> -> <program>' or '<agent> -> -'", lineno)
        agent, program = m.group(1), m.group(2)
        if idx >= len(expected):
            raise ParseError(f"unexpected extra line for {agent}", lineno)
        if agent != expected[idx]:
            raise ParseError(f"expected agent {expected[idx]}, got {agent}", lineno)
        idx += 1
        if program == "-":
            continue
        if not instance.is_acceptable(agent, program):
            raise ParseError(f"agent {agent} does not accept program {program}", lineno)
        assignment[agent] = program
    if idx != len(expected):
        raise ParseError(f"missing line for agent {expected[idx]}")
    return Matching(assignment)


def _fmt_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_matching(instance: SmfqInstance, matching: Matching,
                    notes: list[tuple[str, object]] | None = None) -> str:
    """Emit a matching file: one line per agent plus ``# key=value`` trailers."""
    out = [f"{a} -> {matching.assignment.get(a, '-')}" for a in instance.agents]
    for key, value in notes or []:
        out.append(f"# {key}={_fmt_value(value)}")
    return "\n".join(out) + "\n"


def parse_cost_file(text: str) -> dict[str, int]:
    """Parse ``<program> <cost>`` lines into a cost table."""
    costs: dict[str, int] = {}
    for lineno, line in _meaningful_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected '<program> <cost>'", lineno)
        p = _check_ident(parts[0], lineno)
        if p in costs:
            raise ParseError(f"duplicate cost for {p}", lineno)
        try:
            costs[p] = int(parts[1])
        except ValueError:
            raise ParseError(f"cost must be an integer, got {parts[1]!r}", lineno) from None
    return costs


def parse_set_cover(text: str) -> SetCoverInstance:
    """Parse a covering problem; the occurrence count f is derived from the data."""
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ParseError("empty input: expected 'elements <n>'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "elements":
        raise ParseError(f"expected 'elements <n>', got {header!r}", lineno)
    try:
        declared = int(parts[1])
    except ValueError:
        raise ParseError(f"element count must be an integer, got {parts[1]!r}", lineno) from None

    sets: dict[str, list[str]] = {}
    elements: list[str] = []
    seen = set()
    for lineno, line in lines[1:]:
        if not line.startswith("set "):
            raise ParseError("expected 'set <id>: <element ids>'", lineno)
        head, sep, tail = line[4:].partition(":")
        if not sep:
            raise ParseError("expected 'set <id>: <element ids>'", lineno)
        sid = _check_ident(head.strip(), lineno)
        if sid in sets:
            raise ParseError(f"duplicate set {sid}", lineno)
        members = [_check_ident(x, lineno) for x in tail.split()]
        sets[sid] = members
        for e in members:
            if e not in seen:
                seen.add(e)
                elements.append(e)
    if len(elements) != declared:
        raise ParseError(f"header declares {declared} elements but {len(elements)} appear")
    counts = {e: 0 for e in elements}
    for members in sets.values():
        for e in set(members):
            counts[e] += 1
    occs = sorted(set(counts.values()))
    if not occs:
        raise ParseError("no elements declared")
    if len(occs) != 1:
        raise ParseError("every element must occur in the same number of sets")
    try:
        return SetCoverInstance(sets=sets, elements=elements, f=occs[0])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_graph(text: str) -> GraphInstance:
    """Parse ``edge <u> <v>`` lines; vertices appear in first-mention order."""
    vertices: list[str] = []
    seen = set()
    edges: list[tuple[str, str]] = []
    for lineno, line in _meaningful_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[0] != "edge":
            raise ParseError("expected 'edge <u> <v>'", lineno)
        u = _check_ident(parts[1], lineno)
        v = _check_ident(parts[2], lineno)
        for w in (u, v):
            if w not in seen:
                seen.add(w)
                vertices.append(w)
        edges.append((u, v))
    try:
        return GraphInstance(vertices=vertices, edges=edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
