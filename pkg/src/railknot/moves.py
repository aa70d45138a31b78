"""The rail knotoid move calculus as code rewrites.

Supported rewrites: the classical moves R1/R2/R3 on the arc's self-crossings,
their rail variants (a poke across a rail and back, and a strand sliding past
a rail crossing of another strand), and the slide moves that let an endpoint
travel along its rail past an adjacent rail crossing, trading it for a
terminal self-crossing.

R3-type moves are gated by a table of locally realizable triangle
configurations, generated from the affine model of three pairwise crossing
lines (docs/moves.md lists the resulting pattern rows).  The arbiter of these
tables is the invariant-certificate invariance suite in the tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace

from .closure import crossing_sign
from .diagram import (
    ENDPOINT,
    FLAG_OVER,
    FLAG_UNDER,
    L2R,
    OVER,
    R2L,
    UNDER,
    RailCrossing,
    RailKnotoidDiagram,
    RailPass,
    SelfPass,
)
from .errors import MoveNotApplicable, UsageError

R1_ADD = "R1Add"
R1_REMOVE = "R1Remove"
R2_ADD = "R2Add"
R2_REMOVE = "R2Remove"
R3 = "R3"
RAIL_R2_ADD = "RailR2Add"
RAIL_R2_REMOVE = "RailR2Remove"
RAIL_R3 = "RailR3"
SLIDE_ADD = "SlideAdd"
SLIDE_REMOVE = "SlideRemove"

ALL_KINDS = frozenset({
    R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3,
    RAIL_R2_ADD, RAIL_R2_REMOVE, RAIL_R3, SLIDE_ADD, SLIDE_REMOVE,
})
REMOVE_KINDS = frozenset({R1_REMOVE, R2_REMOVE, RAIL_R2_REMOVE, SLIDE_REMOVE})
R1_KINDS = frozenset({R1_ADD, R1_REMOVE})


@dataclass(frozen=True)
class Move:
    """One applicable rewrite site; Add variants carry their parameter choices."""

    kind: str
    site: tuple
    params: tuple = ()

    def sort_key(self):
        return (self.kind, str(self.site), str(self.params))


@dataclass(frozen=True)
class WalkSpec:
    steps: int
    seed: int
    regular_only: bool = False


# -- the classical triangle table for R3-type moves ---------------------------

def _r3_classical_entries() -> frozenset:
    """Observable (orders, roles, signs) triples of locally planar triangles.

    Model: three pairwise crossing straight lines, all direction choices, all
    height orderings, both plane orientations, all strand labelings.  Crossings
    are named by the sorted pair of strand labels they join.
    """
    base_dirs = {1: (1, 0), 2: (1, 1), 3: (1, -1)}
    base_order = {1: ((1, 2), (1, 3)), 2: ((1, 2), (2, 3)), 3: ((2, 3), (1, 3))}
    entries = set()
    for sig in itertools.product((1, -1), repeat=3):
        dirs = {i: (s * base_dirs[i][0], s * base_dirs[i][1]) for i, s in zip((1, 2, 3), sig)}
        orders = {
            i: base_order[i] if s == 1 else (base_order[i][1], base_order[i][0])
            for i, s in zip((1, 2, 3), sig)
        }
        for ranks in itertools.permutations((1, 2, 3)):
            h = dict(zip((1, 2, 3), ranks))
            for mirror in (1, -1):
                signs = {}
                for i, j in ((1, 2), (1, 3), (2, 3)):
                    over, under = (i, j) if h[i] > h[j] else (j, i)
                    det = dirs[over][0] * dirs[under][1] - dirs[over][1] * dirs[under][0]
                    signs[(i, j)] = (1 if det > 0 else -1) * mirror

                def role(i, pair):
                    other = pair[0] + pair[1] - i
                    return OVER if h[i] > h[other] else UNDER

                for perm in itertools.permutations((1, 2, 3)):
                    rel = dict(zip((1, 2, 3), perm))

                    def rp(pair):
                        return tuple(sorted((rel[pair[0]], rel[pair[1]])))

                    inv = {v: k for k, v in rel.items()}
                    new_orders = tuple(
                        (rp(orders[inv[k]][0]), rp(orders[inv[k]][1])) for k in (1, 2, 3)
                    )
                    new_roles = tuple(
                        (role(inv[k], orders[inv[k]][0]), role(inv[k], orders[inv[k]][1]))
                        for k in (1, 2, 3)
                    )
                    new_signs = tuple(
                        signs[tuple(sorted((inv[a], inv[b])))] for a, b in ((1, 2), (1, 3), (2, 3))
                    )
                    entries.add((new_orders, new_roles, new_signs))
    return frozenset(entries)


_R3_TABLE = _r3_classical_entries()


def _r3_observable(strand_data, signs):
    """strand_data[k] = ((first_pair, first_role), (second_pair, second_role)) for k in 0..2;
    signs maps sorted strand pairs to +-1."""
    orders = tuple((sd[0][0], sd[1][0]) for sd in strand_data)
    roles = tuple((sd[0][1], sd[1][1]) for sd in strand_data)
    sign_tuple = tuple(signs[p] for p in ((1, 2), (1, 3), (2, 3)))
    return (orders, roles, sign_tuple)


# -- shared helpers ------------------------------------------------------------

def _arc_dir_vec(direction: str):
    return (1, 0) if direction == L2R else (-1, 0)


def _rail_sign(item: RailCrossing) -> int:
    """Geometric sign of an arc/rail crossing with the rail oriented upward."""
    arc_role = OVER if item.flag == FLAG_OVER else UNDER
    return crossing_sign(arc_role, _arc_dir_vec(item.dir), (0, 1))


def _with(d: RailKnotoidDiagram, **kw) -> RailKnotoidDiagram:
    return replace(d, **kw)


def _insert(seq: tuple, slot: int, items) -> tuple:
    return seq[:slot] + tuple(items) + seq[slot:]


def _remove_positions(seq: tuple, positions) -> tuple:
    drop = set(positions)
    return tuple(ev for i, ev in enumerate(seq) if i not in drop)


def _adjacent_self_pairs(d: RailKnotoidDiagram):
    """(position, first SelfPass, second SelfPass) for every adjacent pass pair."""
    out = []
    ev = d.arc_events
    for i in range(len(ev) - 1):
        if isinstance(ev[i], SelfPass) and isinstance(ev[i + 1], SelfPass):
            out.append((i, ev[i], ev[i + 1]))
    return out


def _endpoint_index(d: RailKnotoidDiagram, rail: int) -> int:
    return d.rail_order(rail).index(ENDPOINT)


def _endpoint_side(d: RailKnotoidDiagram, endpoint: str) -> str:
    """Side of its own rail on which the terminal segment leaves the endpoint.

    The arc stays on one side of rail 1 from the leg until its first crossing
    of rail 1 (and symmetrically for the head and rail 2); with no crossing of
    that rail at all, the arc must stay inside the strip between the rails.
    """
    if endpoint == "leg":
        for ev in d.arc_events:
            if isinstance(ev, RailPass) and ev.rail == 1:
                item = d.rail_crossing(1, ev.crossing)
                return "left" if item.dir == L2R else "right"
        return "right"
    for ev in reversed(d.arc_events):
        if isinstance(ev, RailPass) and ev.rail == 2:
            item = d.rail_crossing(2, ev.crossing)
            return "right" if item.dir == L2R else "left"
    return "left"


def _slide_pass_side(d: RailKnotoidDiagram, endpoint: str, item: RailCrossing) -> str:
    """Where the slide-created self-crossing sits on the other strand, relative
    to that strand's rail pass: 'before' when the strand reaches the rail
    crossing from the endpoint's side, 'after' when it leaves toward it."""
    approach = "left" if item.dir == L2R else "right"
    return "before" if approach == _endpoint_side(d, endpoint) else "after"


def _slide_geometry(endpoint: str, slide_dir: str, item: RailCrossing):
    """(terminal role, sign) of the self-crossing created by sliding an endpoint
    past a rail crossing.  The terminal strand runs parallel to the rail: with
    the slide direction for the head, against it for the leg."""
    vertical = 1 if slide_dir == "up" else -1
    if endpoint == "leg":
        vertical = -vertical
    terminal_role = OVER if item.flag == FLAG_UNDER else UNDER
    sign = crossing_sign(terminal_role, (0, vertical), _arc_dir_vec(item.dir))
    return terminal_role, sign


# -- enumeration ---------------------------------------------------------------

def enumerate_moves(d: RailKnotoidDiagram, kinds=None) -> list[Move]:
    """Every applicable move of the requested kinds, in canonical order.

    Remove-kind moves are found exhaustively; Add-kind moves are enumerated at
    every insertion site with every legal parameter choice.
    """
    kinds = ALL_KINDS if kinds is None else frozenset(kinds)
    unknown = kinds - ALL_KINDS
    if unknown:
        raise UsageError(f"unknown move kinds {sorted(unknown)}")
    moves: list[Move] = []
    n = len(d.arc_events)

    if R1_ADD in kinds:
        for slot in range(n + 1):
            for sign in (1, -1):
                for first_role in (OVER, UNDER):
                    moves.append(Move(R1_ADD, (slot,), (sign, first_role)))

    if R1_REMOVE in kinds:
        for i, a, b in _adjacent_self_pairs(d):
            if a.crossing == b.crossing:
                moves.append(Move(R1_REMOVE, (i,)))

    if R2_ADD in kinds:
        # self-poke: a finger folded across the strand's own continuation is the
        # only R2 insertion that is geometric at every arc position
        for i in range(n + 1):
            for over_first in (True, False):
                for sign_first in (1, -1):
                    moves.append(Move(R2_ADD, (i, i), (over_first, sign_first, "reversed")))

    if R2_REMOVE in kinds:
        pairs = [(i, a, b) for i, a, b in _adjacent_self_pairs(d) if a.crossing != b.crossing]
        for (i, a1, b1), (j, a2, b2) in itertools.combinations(pairs, 2):
            if j < i + 2:
                continue
            if {a1.crossing, b1.crossing} != {a2.crossing, b2.crossing}:
                continue
            if not (a1.role == b1.role and a2.role == b2.role and a1.role != a2.role):
                continue
            if d.self_crossings[a1.crossing] != -d.self_crossings[b1.crossing]:
                continue
            moves.append(Move(R2_REMOVE, (i, j)))

    if R3 in kinds:
        moves.extend(_enumerate_r3(d))

    if RAIL_R2_ADD in kinds:
        # Pokes are only enumerated hugging an anchor: a point where the arc
        # provably touches the rail (an endpoint, or an existing rail pass).
        # The anchor fixes the entry direction (the side the strand lies on),
        # and the pair crossing nearest the anchor in arc order must sit
        # rail-adjacent to the anchor, else the return strand is trapped in the
        # pocket between the outgoing path and the rail.
        sites = set()

        def poke(arc_slot, rail, anchor_idx, anchor_before_pair, first_dir):
            for above in (True, False):
                rail_slot = anchor_idx + 1 if above else anchor_idx
                first_lower = above == anchor_before_pair
                for flag in (FLAG_OVER, FLAG_UNDER):
                    sites.add(((arc_slot, rail, rail_slot), (flag, first_dir, first_lower)))

        leg_side = _endpoint_side(d, "leg")
        poke(0, 1, _endpoint_index(d, 1), True, L2R if leg_side == "left" else R2L)
        head_side = _endpoint_side(d, "head")
        poke(n, 2, _endpoint_index(d, 2), False, L2R if head_side == "left" else R2L)
        for pos, ev in enumerate(d.arc_events):
            if not isinstance(ev, RailPass):
                continue
            item = d.rail_crossing(ev.rail, ev.crossing)
            idx = d.rail_order(ev.rail).index(item)
            opposite = R2L if item.dir == L2R else L2R
            poke(pos, ev.rail, idx, False, item.dir)       # pair just before the pass
            poke(pos + 1, ev.rail, idx, True, opposite)    # pair just after the pass
        for site, params in sites:
            moves.append(Move(RAIL_R2_ADD, site, params))

    if RAIL_R2_REMOVE in kinds:
        ev = d.arc_events
        for i in range(n - 1):
            if not (isinstance(ev[i], RailPass) and isinstance(ev[i + 1], RailPass)):
                continue
            if ev[i].rail != ev[i + 1].rail:
                continue
            rail = ev[i].rail
            order = d.rail_order(rail)
            ids = {ev[i].crossing, ev[i + 1].crossing}
            for k in range(len(order) - 1):
                lo, hi = order[k], order[k + 1]
                if lo == ENDPOINT or hi == ENDPOINT:
                    continue
                if {lo.crossing, hi.crossing} != ids:
                    continue
                if lo.flag == hi.flag and lo.dir != hi.dir:
                    moves.append(Move(RAIL_R2_REMOVE, (i, rail, k)))

    if RAIL_R3 in kinds:
        moves.extend(_enumerate_rail_r3(d))

    if SLIDE_ADD in kinds:
        for endpoint, rail in (("leg", 1), ("head", 2)):
            order = d.rail_order(rail)
            e = order.index(ENDPOINT)
            if e + 1 < len(order):
                moves.append(Move(SLIDE_ADD, (endpoint, "up")))
            if e > 0:
                moves.append(Move(SLIDE_ADD, (endpoint, "down")))

    if SLIDE_REMOVE in kinds:
        moves.extend(_enumerate_slide_remove(d))

    moves.sort(key=Move.sort_key)
    return moves


def _enumerate_r3(d: RailKnotoidDiagram) -> list[Move]:
    moves = []
    pairs = [
        (i, a, b) for i, a, b in _adjacent_self_pairs(d) if a.crossing != b.crossing
    ]
    for combo in itertools.combinations(pairs, 3):
        positions = [p[0] for p in combo]
        if any(abs(positions[x] - positions[y]) < 2 for x in range(3) for y in range(x + 1, 3)):
            continue
        crossings = set()
        for _, a, b in combo:
            crossings |= {a.crossing, b.crossing}
        if len(crossings) != 3:
            continue
        pair_sets = [frozenset((a.crossing, b.crossing)) for _, a, b in combo]
        if len(set(pair_sets)) != 3:
            continue
        if _r3_matches(d, combo):
            moves.append(Move(R3, tuple(sorted(positions))))
    return moves


def _r3_matches(d: RailKnotoidDiagram, combo) -> bool:
    # strand k (1-based) is the k-th adjacent pair; crossings named by the
    # sorted pair of strands they join
    strand_of = {}
    for k, (_, a, b) in enumerate(combo, start=1):
        for ev in (a, b):
            strand_of.setdefault(ev.crossing, []).append(k)
    pair_name = {cid: tuple(sorted(ks)) for cid, ks in strand_of.items()}
    strand_data = []
    for k, (_, a, b) in enumerate(combo, start=1):
        strand_data.append(((pair_name[a.crossing], a.role), (pair_name[b.crossing], b.role)))
    signs = {}
    for cid, name in pair_name.items():
        signs[name] = d.self_crossings[cid]
    if set(signs) != {(1, 2), (1, 3), (2, 3)}:
        return False
    return _r3_observable(strand_data, signs) in _R3_TABLE


def _enumerate_rail_r3(d: RailKnotoidDiagram) -> list[Move]:
    moves = []
    ev = d.arc_events
    pos_of_railpass = {}
    for i, e in enumerate(ev):
        if isinstance(e, RailPass):
            pos_of_railpass[e.crossing] = i
    for rail in (1, 2):
        order = d.rail_order(rail)
        for k in range(len(order) - 1):
            lo, hi = order[k], order[k + 1]
            if lo == ENDPOINT or hi == ENDPOINT:
                continue
            p1, p2 = pos_of_railpass[lo.crossing], pos_of_railpass[hi.crossing]
            # the self-crossing x must have one pass adjacent to each rail pass
            for d1 in (-1, 1):
                for d2 in (-1, 1):
                    a1, a2 = p1 + d1, p2 + d2
                    if not (0 <= a1 < len(ev) and 0 <= a2 < len(ev)):
                        continue
                    if a1 == a2 or len({a1, a2, p1, p2}) != 4:
                        continue
                    e1, e2 = ev[a1], ev[a2]
                    if not (isinstance(e1, SelfPass) and isinstance(e2, SelfPass)):
                        continue
                    if e1.crossing != e2.crossing:
                        continue
                    if _rail_r3_matches(d, lo, hi, (p1, a1, e1), (p2, a2, e2)):
                        moves.append(
                            Move(RAIL_R3, (rail, k, min(p1, a1), min(p2, a2)))
                        )
    return moves


def _rail_r3_matches(d, lo, hi, s1, s2) -> bool:
    """Strand 1 carries lo and x, strand 2 carries hi and x, strand 3 is the rail."""
    p1, a1, e1 = s1
    p2, a2, e2 = s2
    x_sign = d.self_crossings[e1.crossing]
    # crossing names: x = (1,2), lo = (1,3), hi = (2,3)
    strand_data = [None, None, None]
    first1 = ((1, 2), e1.role) if a1 < p1 else ((1, 3), OVER if lo.flag == FLAG_OVER else UNDER)
    second1 = ((1, 3), OVER if lo.flag == FLAG_OVER else UNDER) if a1 < p1 else ((1, 2), e1.role)
    strand_data[0] = (first1, second1)
    first2 = ((1, 2), e2.role) if a2 < p2 else ((2, 3), OVER if hi.flag == FLAG_OVER else UNDER)
    second2 = ((2, 3), OVER if hi.flag == FLAG_OVER else UNDER) if a2 < p2 else ((1, 2), e2.role)
    strand_data[1] = (first2, second2)
    rail_role_lo = UNDER if lo.flag == FLAG_OVER else OVER
    rail_role_hi = UNDER if hi.flag == FLAG_OVER else OVER
    strand_data[2] = (((1, 3), rail_role_lo), ((2, 3), rail_role_hi))
    signs = {(1, 2): x_sign, (1, 3): _rail_sign(lo), (2, 3): _rail_sign(hi)}
    return _r3_observable(strand_data, signs) in _R3_TABLE


def _enumerate_slide_remove(d: RailKnotoidDiagram) -> list[Move]:
    moves = []
    ev = d.arc_events
    for endpoint, rail in (("leg", 1), ("head", 2)):
        order = d.rail_order(rail)
        e = order.index(ENDPOINT)
        for c_relpos, idx in (("above", e + 1), ("below", e - 1)):
            if not (0 <= idx < len(order)):
                continue
            item = order[idx]
            if item == ENDPOINT:
                continue
            if _slide_remove_pattern(d, endpoint, rail, item) is not None:
                moves.append(Move(SLIDE_REMOVE, (endpoint, c_relpos)))
    return moves


def _slide_remove_pattern(d, endpoint, rail, item):
    """Return the two arc positions of the removable terminal self-crossing, or None."""
    ev = d.arc_events
    if not ev:
        return None
    term_pos = 0 if endpoint == "leg" else len(ev) - 1
    terminal = ev[term_pos]
    if not isinstance(terminal, SelfPass):
        return None
    x = terminal.crossing
    # locate the rail pass of the adjacent crossing and x's other pass
    rail_pos = None
    for i, e in enumerate(ev):
        if isinstance(e, RailPass) and e.crossing == item.crossing:
            rail_pos = i
            break
    if rail_pos is None:
        return None
    cand = rail_pos - 1 if _slide_pass_side(d, endpoint, item) == "before" else rail_pos + 1
    if not (0 <= cand < len(ev)) or cand == term_pos:
        return None
    e = ev[cand]
    if not (isinstance(e, SelfPass) and e.crossing == x):
        return None
    other_pos = cand
    # the removal slide moves the endpoint back past the crossing
    order = d.rail_order(rail)
    e_idx = order.index(ENDPOINT)
    item_idx = order.index(item)
    add_dir = "up" if item_idx < e_idx else "down"  # the slide that created this state
    expected_role, expected_sign = _slide_geometry(endpoint, add_dir, item)
    if terminal.role != expected_role:
        return None
    if d.self_crossings[x] != expected_sign:
        return None
    return (term_pos, other_pos)


# -- application ---------------------------------------------------------------

def apply_move(d: RailKnotoidDiagram, m: Move) -> RailKnotoidDiagram:
    """Apply one move; raises MoveNotApplicable if the pattern does not match."""
    if m.kind not in ALL_KINDS:
        raise UsageError(f"unknown move kind {m.kind!r}")
    if m not in enumerate_moves(d, kinds={m.kind}):
        raise MoveNotApplicable(
            f"{m.kind} at site {m.site} with params {m.params} does not match its pattern"
        )
    return _APPLY[m.kind](d, m)


def _apply_r1_add(d, m):
    (slot,) = m.site
    sign, first_role = m.params
    x = d.fresh_id()
    second = UNDER if first_role == OVER else OVER
    events = _insert(d.arc_events, slot, (SelfPass(x, first_role), SelfPass(x, second)))
    sc = dict(d.self_crossings)
    sc[x] = sign
    return _with(d, self_crossings=sc, arc_events=events)


def _apply_r1_remove(d, m):
    (i,) = m.site
    x = d.arc_events[i].crossing
    events = _remove_positions(d.arc_events, (i, i + 1))
    sc = {k: v for k, v in d.self_crossings.items() if k != x}
    return _with(d, self_crossings=sc, arc_events=events)


def _apply_r2_add(d, m):
    i, j = m.site
    over_first, sign_first, order = m.params
    a = d.fresh_id()
    b = a + 1
    r1 = OVER if over_first else UNDER
    r2 = UNDER if over_first else OVER
    first_sub = (SelfPass(a, r1), SelfPass(b, r1))
    second_sub = (SelfPass(a, r2), SelfPass(b, r2))
    if order == "reversed":
        second_sub = (second_sub[1], second_sub[0])
    if i == j:
        events = _insert(d.arc_events, i, first_sub + second_sub)
    else:
        events = _insert(d.arc_events, j, second_sub)
        events = _insert(events, i, first_sub)
    sc = dict(d.self_crossings)
    sc[a] = sign_first
    sc[b] = -sign_first
    return _with(d, self_crossings=sc, arc_events=events)


def _apply_r2_remove(d, m):
    i, j = m.site
    ids = {d.arc_events[i].crossing, d.arc_events[i + 1].crossing}
    events = _remove_positions(d.arc_events, (i, i + 1, j, j + 1))
    sc = {k: v for k, v in d.self_crossings.items() if k not in ids}
    return _with(d, self_crossings=sc, arc_events=events)


def _apply_r3(d, m):
    events = list(d.arc_events)
    for p in m.site:
        events[p], events[p + 1] = events[p + 1], events[p]
    return _with(d, arc_events=tuple(events))


def _apply_rail_r2_add(d, m):
    arc_slot, rail, rail_slot = m.site
    flag, first_dir, first_lower = m.params
    c1 = d.fresh_id()
    c2 = c1 + 1
    second_dir = R2L if first_dir == L2R else L2R
    events = _insert(d.arc_events, arc_slot, (RailPass(rail, c1), RailPass(rail, c2)))
    item1 = RailCrossing(c1, flag, first_dir)
    item2 = RailCrossing(c2, flag, second_dir)
    items = (item1, item2) if first_lower else (item2, item1)
    order = _insert(d.rail_order(rail), rail_slot, items)
    kw = {"rail1": order} if rail == 1 else {"rail2": order}
    return _with(d, arc_events=events, **kw)


def _apply_rail_r2_remove(d, m):
    i, rail, k = m.site
    events = _remove_positions(d.arc_events, (i, i + 1))
    order = _remove_positions(d.rail_order(rail), (k, k + 1))
    kw = {"rail1": order} if rail == 1 else {"rail2": order}
    return _with(d, arc_events=events, **kw)


def _apply_rail_r3(d, m):
    rail, k, a1, a2 = m.site
    events = list(d.arc_events)
    events[a1], events[a1 + 1] = events[a1 + 1], events[a1]
    events[a2], events[a2 + 1] = events[a2 + 1], events[a2]
    order = list(d.rail_order(rail))
    order[k], order[k + 1] = order[k + 1], order[k]
    kw = {"rail1": tuple(order)} if rail == 1 else {"rail2": tuple(order)}
    return _with(d, arc_events=tuple(events), **kw)


def _apply_slide_add(d, m):
    endpoint, slide_dir = m.site
    rail = 1 if endpoint == "leg" else 2
    order = list(d.rail_order(rail))
    e = order.index(ENDPOINT)
    other = e + 1 if slide_dir == "up" else e - 1
    item = order[other]
    order[e], order[other] = order[other], order[e]
    terminal_role, sign = _slide_geometry(endpoint, slide_dir, item)
    x = d.fresh_id()
    s_role = UNDER if terminal_role == OVER else OVER
    rail_pos = next(
        i for i, ev in enumerate(d.arc_events)
        if isinstance(ev, RailPass) and ev.crossing == item.crossing
    )
    slot = rail_pos if _slide_pass_side(d, endpoint, item) == "before" else rail_pos + 1
    events = _insert(d.arc_events, slot, (SelfPass(x, s_role),))
    if endpoint == "leg":
        events = (SelfPass(x, terminal_role),) + events
    else:
        events = events + (SelfPass(x, terminal_role),)
    sc = dict(d.self_crossings)
    sc[x] = sign
    kw = {"rail1": tuple(order)} if rail == 1 else {"rail2": tuple(order)}
    return _with(d, self_crossings=sc, arc_events=events, **kw)


def _apply_slide_remove(d, m):
    endpoint, c_relpos = m.site
    rail = 1 if endpoint == "leg" else 2
    order = list(d.rail_order(rail))
    e = order.index(ENDPOINT)
    other = e + 1 if c_relpos == "above" else e - 1
    item = order[other]
    positions = _slide_remove_pattern(d, endpoint, rail, item)
    term_pos, other_pos = positions
    x = d.arc_events[term_pos].crossing
    events = _remove_positions(d.arc_events, (term_pos, other_pos))
    order[e], order[other] = order[other], order[e]
    sc = {k: v for k, v in d.self_crossings.items() if k != x}
    kw = {"rail1": tuple(order)} if rail == 1 else {"rail2": tuple(order)}
    return _with(d, self_crossings=sc, arc_events=events, **kw)


_APPLY = {
    R1_ADD: _apply_r1_add,
    R1_REMOVE: _apply_r1_remove,
    R2_ADD: _apply_r2_add,
    R2_REMOVE: _apply_r2_remove,
    R3: _apply_r3,
    RAIL_R2_ADD: _apply_rail_r2_add,
    RAIL_R2_REMOVE: _apply_rail_r2_remove,
    RAIL_R3: _apply_rail_r3,
    SLIDE_ADD: _apply_slide_add,
    SLIDE_REMOVE: _apply_slide_remove,
}


# -- walks and simplification ----------------------------------------------------

def walk_trace(d: RailKnotoidDiagram, spec: WalkSpec):
    """Seeded random walk returning (final diagram, applied moves)."""
    if spec.steps < 0:
        raise UsageError("steps must be >= 0")
    rng = random.Random(spec.seed)
    kinds = ALL_KINDS - R1_KINDS if spec.regular_only else ALL_KINDS
    cur = d
    applied = []
    for _ in range(spec.steps):
        options = enumerate_moves(cur, kinds)
        if not options:
            continue
        move = options[rng.randrange(len(options))]
        cur = _APPLY[move.kind](cur, move)
        applied.append(move)
    return cur, applied


def random_walk(d: RailKnotoidDiagram, spec: WalkSpec) -> RailKnotoidDiagram:
    """Deterministic seeded walk over the enumerated moves."""
    return walk_trace(d, spec)[0]


def simplify(d: RailKnotoidDiagram) -> RailKnotoidDiagram:
    """Greedily apply Remove-kind moves until none applies.

    Every step strictly decreases the crossing count, so this terminates; it is
    not a decision procedure for rail-knotoid equivalence.
    """
    cur = d
    while True:
        options = enumerate_moves(cur, REMOVE_KINDS)
        if not options:
            return cur
        cur = _APPLY[options[0].kind](cur, options[0])
