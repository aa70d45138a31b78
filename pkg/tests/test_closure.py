"""Companion-loop construction: traversal order, crossing conversion, signs."""

from __future__ import annotations

import pytest

from railknot import UNKNOT, UsageError, companion, forget_rails_closure, orient
from railknot.closure import (
    ORIENT_MINUS,
    ORIENT_PLUS,
    SIDE_OVER,
    SIDE_UNDER,
    crossing_sign,
)
from railknot.diagram import (
    ENDPOINT,
    OVER,
    UNDER,
    CrossPass,
    RailCrossing,
    RailKnotoidDiagram,
)

SIDES = (SIDE_OVER, SIDE_UNDER)


def test_empty_diagram_companions_are_the_unknot(corpus):
    for side in SIDES:
        assert companion(corpus["empty"], side) == UNKNOT
        assert forget_rails_closure(corpus["empty"], side) == UNKNOT


def test_no_rail_crossings_makes_sides_agree(corpus):
    for name in ("kink", "trefoil_arc", "fig8_arc"):
        d = corpus[name]
        over = companion(d, SIDE_OVER)
        under = companion(d, SIDE_UNDER)
        assert over == under
        assert over.signs == d.self_crossings
        assert [p.crossing for p in over.components[0]] == [
            ev.crossing for ev in d.arc_events
        ]


def test_rail_crossing_on_non_traversed_side_vanishes(corpus):
    # rail_wrap's single rail crossing sits above the leg on rail 1, so the
    # under companion (which closes below) never meets it.
    assert companion(corpus["rail_wrap"], SIDE_UNDER) == UNKNOT


def test_rail_wrap_over_companion_is_a_negative_kink(corpus):
    l = companion(corpus["rail_wrap"], SIDE_OVER)
    assert l.components == ((CrossPass(1, OVER), CrossPass(1, UNDER)),)
    assert l.signs == {1: -1}


def test_rail_wrap2_each_side_sees_its_own_crossing(corpus):
    over = companion(corpus["rail_wrap2"], SIDE_OVER)
    under = companion(corpus["rail_wrap2"], SIDE_UNDER)
    assert over.signs == {1: 1}
    assert under.signs == {2: -1}
    assert over.components == ((CrossPass(1, UNDER), CrossPass(1, OVER)),)
    assert under.components == ((CrossPass(2, OVER), CrossPass(2, UNDER)),)


def test_witness_over_companion_is_a_trefoil_code(corpus):
    l = companion(corpus["figure7_witness"], SIDE_OVER)
    assert [(p.crossing, p.role) for p in l.components[0]] == [
        (1, OVER), (2, UNDER), (3, OVER), (1, UNDER), (2, OVER), (3, UNDER),
    ]
    assert l.signs == {1: -1, 2: -1, 3: -1}
    assert companion(corpus["figure7_witness"], SIDE_UNDER) == UNKNOT


def test_forget_rails_roles(corpus):
    # Forgetting the rails, the over closure passes over everything it meets,
    # so each met rail crossing is an Under pass of the closure arc's partner.
    l = forget_rails_closure(corpus["figure7_witness"], SIDE_OVER)
    arc_passes = [p for p in l.components[0]][:3]
    assert all(p.role == UNDER for p in arc_passes)
    u = forget_rails_closure(corpus["figure7_witness"], SIDE_UNDER)
    assert u == UNKNOT


def test_crossing_sign_frame_rule():
    up, down, right, left = (0, 1), (0, -1), (1, 0), (-1, 0)
    assert crossing_sign(OVER, right, up) == 1
    assert crossing_sign(OVER, right, down) == -1
    assert crossing_sign(UNDER, right, up) == -1
    assert crossing_sign(UNDER, left, up) == 1


def test_orient_minus_reverses_and_keeps_signs(corpus):
    l = companion(corpus["trefoil_arc"], SIDE_OVER)
    rev = orient(l, ORIENT_MINUS)
    assert rev.components[0] == tuple(reversed(l.components[0]))
    assert rev.signs == l.signs
    assert orient(l, ORIENT_PLUS) == l


def test_bad_side_and_orientation_rejected(corpus):
    with pytest.raises(UsageError):
        companion(corpus["empty"], "sideways")
    with pytest.raises(UsageError):
        orient(UNKNOT, "widdershins")


def test_invalid_diagram_rejected():
    d = RailKnotoidDiagram(rail1=(ENDPOINT, RailCrossing(1, "over", "l2r")))
    with pytest.raises(UsageError, match="invalid diagram"):
        companion(d, SIDE_OVER)
