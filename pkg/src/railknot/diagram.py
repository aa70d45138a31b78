"""Combinatorial data model for rail knotoid diagrams and closed link diagrams.

A rail knotoid diagram is stored as a signed-Gauss-code-style record: the
arc's event sequence from leg to head, plus a bottom-to-top order of items on
each rail.  Rail 1 stands to the left of rail 2 and both rails are oriented
upward; all direction flags are relative to this frame.  No planar embedding
is stored and no planar-realizability check is made; a non-realizable code
still computes consistent (virtual-diagram) values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import UsageError

OVER = "O"
UNDER = "U"

FLAG_OVER = "over"   # arc passes over the rail
FLAG_UNDER = "under"  # arc passes under the rail

L2R = "l2r"  # arc crosses the rail left-to-right
R2L = "r2l"

ENDPOINT = "endpoint"  # the one endpoint item in each rail order


class SelfPass(NamedTuple):
    crossing: int
    role: str  # OVER | UNDER


class RailPass(NamedTuple):
    rail: int  # 1 | 2
    crossing: int


class RailCrossing(NamedTuple):
    crossing: int
    flag: str  # FLAG_OVER | FLAG_UNDER
    dir: str   # L2R | R2L


class CrossPass(NamedTuple):
    crossing: int
    role: str  # OVER | UNDER


@dataclass(frozen=True)
class RailKnotoidDiagram:
    """Signed Gauss code of a rail knotoid diagram (leg on rail 1, head on rail 2)."""

    self_crossings: dict[int, int] = field(default_factory=dict)  # id -> sign
    arc_events: tuple = ()          # SelfPass | RailPass, ordered leg -> head
    rail1: tuple = (ENDPOINT,)      # ENDPOINT | RailCrossing, ordered bottom -> top
    rail2: tuple = (ENDPOINT,)

    def rail_order(self, rail: int) -> tuple:
        return self.rail1 if rail == 1 else self.rail2

    def rail_crossing(self, rail: int, crossing: int) -> RailCrossing:
        for item in self.rail_order(rail):
            if item != ENDPOINT and item.crossing == crossing:
                return item
        raise KeyError(crossing)

    def crossing_ids(self) -> set[int]:
        ids = set(self.self_crossings)
        for item in self.rail1 + self.rail2:
            if item != ENDPOINT:
                ids.add(item.crossing)
        return ids

    def fresh_id(self) -> int:
        ids = self.crossing_ids()
        return max(ids) + 1 if ids else 1


@dataclass(frozen=True)
class LinkDiagram:
    """Closed-component crossing code with signs and over/under passes.

    A diagram with an empty crossing map and one empty component is the
    0-crossing unknot.  Components are traversed in their stored orientation.
    """

    components: tuple[tuple[CrossPass, ...], ...]
    signs: dict[int, int]  # crossing id -> sign

    def crossing_count(self) -> int:
        return len(self.signs)


EMPTY_DIAGRAM = RailKnotoidDiagram()
UNKNOT = LinkDiagram(((),), {})


def validate(d: RailKnotoidDiagram) -> list[str]:
    """Return every violated structural invariant; an empty list certifies validity."""
    violations = []

    self_roles: dict[int, list[str]] = {}
    rail_pass_ids: dict[int, list[int]] = {1: [], 2: []}
    for ev in d.arc_events:
        if isinstance(ev, SelfPass):
            if ev.crossing not in d.self_crossings:
                violations.append(f"arc event references unknown self-crossing {ev.crossing}")
            self_roles.setdefault(ev.crossing, []).append(ev.role)
        elif isinstance(ev, RailPass):
            if ev.rail not in (1, 2):
                violations.append(f"rail pass with invalid rail {ev.rail}")
            else:
                rail_pass_ids[ev.rail].append(ev.crossing)
        else:
            violations.append(f"unrecognized arc event {ev!r}")

    for cid, sign in d.self_crossings.items():
        if sign not in (1, -1):
            violations.append(f"self-crossing {cid} has invalid sign {sign}")
        roles = sorted(self_roles.get(cid, []))
        if roles != [OVER, UNDER]:
            violations.append(
                f"self-crossing {cid} must occur exactly once Over and once Under, got {roles}"
            )
    for cid in self_roles:
        if cid not in d.self_crossings:
            violations.append(f"self pass for unregistered crossing {cid}")

    rail_ids: dict[int, set[int]] = {}
    for rail in (1, 2):
        order = d.rail_order(rail)
        endpoints = [i for i, item in enumerate(order) if item == ENDPOINT]
        if len(endpoints) != 1:
            violations.append(f"rail {rail} must contain exactly one endpoint, got {len(endpoints)}")
        ids = []
        for item in order:
            if item == ENDPOINT:
                continue
            if not isinstance(item, RailCrossing):
                violations.append(f"rail {rail} contains unrecognized item {item!r}")
                continue
            if item.flag not in (FLAG_OVER, FLAG_UNDER) or item.dir not in (L2R, R2L):
                violations.append(f"rail crossing {item.crossing} has invalid flag/dir")
            ids.append(item.crossing)
        if len(set(ids)) != len(ids):
            violations.append(f"duplicate rail-crossing id on rail {rail}")
        rail_ids[rail] = set(ids)
        passes = rail_pass_ids[rail]
        if sorted(passes) != sorted(ids):
            violations.append(
                f"rail {rail} crossings in arc_events {sorted(passes)} do not match rail order {sorted(ids)}"
            )
        if len(passes) != len(set(passes)):
            violations.append(f"rail crossing passed more than once on rail {rail}")

    if rail_ids[1] & rail_ids[2]:
        violations.append(f"rail-crossing ids shared between rails: {sorted(rail_ids[1] & rail_ids[2])}")
    shared = set(d.self_crossings) & (rail_ids[1] | rail_ids[2])
    if shared:
        violations.append(f"id namespaces for self- and rail-crossings overlap: {sorted(shared)}")

    return violations


def validate_link(l: LinkDiagram) -> list[str]:
    violations = []
    seen: dict[int, list[str]] = {}
    for comp in l.components:
        for ev in comp:
            if not isinstance(ev, CrossPass):
                violations.append(f"unrecognized link event {ev!r}")
                continue
            seen.setdefault(ev.crossing, []).append(ev.role)
    for cid, sign in l.signs.items():
        if sign not in (1, -1):
            violations.append(f"crossing {cid} has invalid sign {sign}")
        if sorted(seen.get(cid, [])) != [OVER, UNDER]:
            violations.append(f"crossing {cid} must occur exactly once Over and once Under")
    for cid in seen:
        if cid not in l.signs:
            violations.append(f"pass for unregistered crossing {cid}")
    return violations


# -- JSON document format ----------------------------------------------------

_DOC_FIELDS = {"self_crossings", "arc_events", "rail1", "rail2"}


def _parse_rail_items(raw, rail_name):
    items = []
    for entry in raw:
        if entry == ENDPOINT:
            items.append(ENDPOINT)
        elif isinstance(entry, dict):
            extra = set(entry) - {"id", "flag", "dir"}
            if extra:
                raise UsageError(f"unknown fields {sorted(extra)} in {rail_name} item")
            try:
                items.append(RailCrossing(int(entry["id"]), entry["flag"], entry["dir"]))
            except KeyError as exc:
                raise UsageError(f"missing field {exc} in {rail_name} item") from None
        else:
            raise UsageError(f"unrecognized {rail_name} item {entry!r}")
    return tuple(items)


def parse_diagram(text: bytes | str) -> RailKnotoidDiagram:
    """Parse the JSON diagram document; raises UsageError on malformed or invalid input."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("diagram document must be a JSON object")
    extra = set(doc) - _DOC_FIELDS
    if extra:
        raise UsageError(f"unknown fields {sorted(extra)} in diagram document")
    missing = _DOC_FIELDS - set(doc)
    if missing:
        raise UsageError(f"missing fields {sorted(missing)} in diagram document")

    try:
        self_crossings = {int(k): int(v) for k, v in doc["self_crossings"].items()}
    except (AttributeError, ValueError) as exc:
        raise UsageError(f"bad self_crossings map: {exc}") from None
    if len(self_crossings) != len(doc["self_crossings"]):
        raise UsageError("duplicate self-crossing id in self_crossings")

    events = []
    for entry in doc["arc_events"]:
        if not isinstance(entry, dict):
            raise UsageError(f"unrecognized arc event {entry!r}")
        if set(entry) == {"self", "role"}:
            events.append(SelfPass(int(entry["self"]), entry["role"]))
        elif set(entry) == {"rail", "id"}:
            events.append(RailPass(int(entry["rail"]), int(entry["id"])))
        else:
            raise UsageError(f"unrecognized arc event fields {sorted(entry)}")

    d = RailKnotoidDiagram(
        self_crossings=self_crossings,
        arc_events=tuple(events),
        rail1=_parse_rail_items(doc["rail1"], "rail1"),
        rail2=_parse_rail_items(doc["rail2"], "rail2"),
    )
    violations = validate(d)
    if violations:
        raise UsageError("invalid diagram: " + "; ".join(violations))
    return d


def _rail_items_doc(items):
    out = []
    for item in items:
        if item == ENDPOINT:
            out.append(ENDPOINT)
        else:
            out.append({"id": item.crossing, "flag": item.flag, "dir": item.dir})
    return out


def serialize_diagram(d: RailKnotoidDiagram) -> bytes:
    """Canonical JSON serialization; serialize . parse is the identity on canonical form."""
    doc = {
        "self_crossings": {str(k): d.self_crossings[k] for k in sorted(d.self_crossings)},
        "arc_events": [
            {"self": ev.crossing, "role": ev.role}
            if isinstance(ev, SelfPass)
            else {"rail": ev.rail, "id": ev.crossing}
            for ev in d.arc_events
        ],
        "rail1": _rail_items_doc(d.rail1),
        "rail2": _rail_items_doc(d.rail2),
    }
    return (json.dumps(doc, indent=2, sort_keys=False) + "\n").encode("utf-8")


# -- Gauss-code text rendering ------------------------------------------------

_ARROW = {L2R: "→", R2L: "←"}
_SIGN = {1: "+", -1: "-"}


def render_gauss(d) -> str:
    """Render the event string of a rail knotoid diagram or a link diagram."""
    if isinstance(d, RailKnotoidDiagram):
        parts = []
        for ev in d.arc_events:
            if isinstance(ev, SelfPass):
                parts.append(f"{ev.role}{ev.crossing}{_SIGN[d.self_crossings[ev.crossing]]}")
            else:
                rc = d.rail_crossing(ev.rail, ev.crossing)
                parts.append(f"R{ev.rail}{rc.flag[0]}{_ARROW[rc.dir]}")
        return " ".join(parts)
    if isinstance(d, LinkDiagram):
        return " | ".join(
            " ".join(f"{ev.role}{ev.crossing}{_SIGN[d.signs[ev.crossing]]}" for ev in comp)
            for comp in d.components
        )
    raise UsageError(f"cannot render {type(d).__name__}")
