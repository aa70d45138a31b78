"""Companion loops of rail knotoid diagrams, oriented variants, and the
forget-rails closures.

The over companion joins head to leg along rail 2 upward, a far top segment,
and rail 1 downward; the under companion goes the other way around the bottom.
Rail crossings met by the closure path become crossings of the resulting
single-component link diagram; rail crossings on the non-traversed side of an
endpoint vanish.
"""

from __future__ import annotations

from .diagram import (
    ENDPOINT,
    FLAG_OVER,
    L2R,
    OVER,
    UNDER,
    CrossPass,
    LinkDiagram,
    RailCrossing,
    RailKnotoidDiagram,
    RailPass,
    SelfPass,
    validate,
)
from .errors import UsageError

SIDE_OVER = "over"
SIDE_UNDER = "under"

ORIENT_PLUS = "plus"    # leg-to-head orientation induced by the rail knotoid
ORIENT_MINUS = "minus"


def _det_sign(a: tuple[int, int], b: tuple[int, int]) -> int:
    d = a[0] * b[1] - a[1] * b[0]
    return 1 if d > 0 else -1


def _arc_dir(item: RailCrossing) -> tuple[int, int]:
    return (1, 0) if item.dir == L2R else (-1, 0)


def crossing_sign(arc_role: str, arc_dir: tuple[int, int], other_dir: tuple[int, int]) -> int:
    """Right-handed-frame rule: +1 iff (over direction, under direction) is counterclockwise."""
    if arc_role == OVER:
        return _det_sign(arc_dir, other_dir)
    return _det_sign(other_dir, arc_dir)


def _traversed(d: RailKnotoidDiagram, side: str):
    """Rail crossings met by the closure path, in traversal order, with closure direction.

    Over: up rail 2 from the head (crossings above it, bottom to top, direction up),
    then down rail 1 to the leg (crossings above it, top to bottom, direction down).
    Under: down rail 2 (below the head, top to bottom), then up rail 1 (below the
    leg, bottom to top).
    """
    out = []
    for rail in (2, 1):
        order = d.rail_order(rail)
        pivot = order.index(ENDPOINT)
        if side == SIDE_OVER:
            items = order[pivot + 1:]        # above the endpoint, bottom to top
            direction = (0, 1)
        else:
            items = tuple(reversed(order[:pivot]))  # below, top to bottom
            direction = (0, -1)
        if rail == 1:
            items = tuple(reversed(items))   # second leg of the path runs back toward the leg
            direction = (0, -direction[1])
        out.append((rail, items, direction))
    return out


def _closure_events(d: RailKnotoidDiagram, side: str, forget_rails: bool):
    converted: dict[int, tuple[str, int]] = {}  # rail crossing id -> (arc role, sign)
    closure_path = []
    for _rail, items, direction in _traversed(d, side):
        for item in items:
            if forget_rails:
                arc_role = UNDER if side == SIDE_OVER else OVER
            else:
                arc_role = OVER if item.flag == FLAG_OVER else UNDER
            sign = crossing_sign(arc_role, _arc_dir(item), direction)
            converted[item.crossing] = (arc_role, sign)
            closure_role = UNDER if arc_role == OVER else OVER
            closure_path.append(CrossPass(item.crossing, closure_role))
    return converted, closure_path


def _build(d: RailKnotoidDiagram, side: str, forget_rails: bool) -> LinkDiagram:
    if side not in (SIDE_OVER, SIDE_UNDER):
        raise UsageError(f"unknown closure side {side!r}")
    violations = validate(d)
    if violations:
        raise UsageError("invalid diagram: " + "; ".join(violations))

    converted, closure_path = _closure_events(d, side, forget_rails)
    signs = dict(d.self_crossings)
    events = []
    for ev in d.arc_events:
        if isinstance(ev, SelfPass):
            events.append(CrossPass(ev.crossing, ev.role))
        elif isinstance(ev, RailPass):
            if ev.crossing in converted:
                arc_role, sign = converted[ev.crossing]
                events.append(CrossPass(ev.crossing, arc_role))
                signs[ev.crossing] = sign
            # crossings on the non-traversed side of the endpoint vanish
    events.extend(closure_path)
    return LinkDiagram(components=(tuple(events),), signs=signs)


def companion(d: RailKnotoidDiagram, side: str) -> LinkDiagram:
    """Over or under companion loop of a rail knotoid diagram, as a one-component link diagram."""
    return _build(d, side, forget_rails=False)


def forget_rails_closure(d: RailKnotoidDiagram, side: str) -> LinkDiagram:
    """Over/under closure of the knotoid obtained by forgetting the rails: the
    connecting arc passes over (resp. under) everything it meets."""
    return _build(d, side, forget_rails=True)


def orient(l: LinkDiagram, orientation: str) -> LinkDiagram:
    """Orientation Plus keeps the stored leg-to-head traversal; Minus reverses it.

    Full reversal of a one-component diagram preserves all crossing signs.
    """
    if len(l.components) != 1:
        raise UsageError("orient expects a single-component diagram (companions are knots)")
    if orientation == ORIENT_PLUS:
        return l
    if orientation == ORIENT_MINUS:
        return LinkDiagram((tuple(reversed(l.components[0])),), dict(l.signs))
    raise UsageError(f"unknown orientation {orientation!r}")
