"""Exact invariants of link diagrams and their rail-knotoid wrappers.

The Kauffman bracket is a state sum over all smoothings with loop counting by
union-find.  HOMFLYPT uses the descending-diagram skein recursion with the
convention l*P(L+) + l^-1*P(L-) + m*P(L0) = 0, and the Kauffman two-variable
polynomial F = a^{-w} * Lambda with Lambda(L+) + Lambda(L-) =
z*(Lambda(L0) + Lambda(Loo)).  All values are exact Laurent polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .closure import ORIENT_MINUS, ORIENT_PLUS, SIDE_OVER, SIDE_UNDER, companion, orient
from .diagram import OVER, UNDER, LinkDiagram, RailKnotoidDiagram
from .errors import ResourceLimitError, UsageError
from .linkops import (
    canonical_key,
    pass_positions,
    smooth_disoriented,
    smooth_oriented,
    switch_crossing,
)
from .polynomial import (
    TAG_A,
    TAG_TQ,
    TAGS_AZ,
    TAGS_LM,
    Laurent1,
    Laurent2,
    substitute_A_to_t,
)

DEFAULT_BRACKET_BOUND = 20
DEFAULT_HOMFLYPT_BOUND = 14
DEFAULT_KAUFFMAN_BOUND = 12

FAMILY_BRACKET = "bracket"
FAMILY_X = "x"
FAMILY_JONES = "jones"
FAMILY_HOMFLYPT = "homflypt"
FAMILY_KAUFFMAN = "kauffman"


def _check_bound(l: LinkDiagram, bound: int, what: str) -> None:
    n = l.crossing_count()
    if n > bound:
        raise ResourceLimitError(f"{what}: {n} crossings exceed the configured bound {bound}")


def writhe(l: LinkDiagram) -> int:
    """Sum of crossing signs of an oriented diagram."""
    return sum(l.signs.values())


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def bracket(l: LinkDiagram, max_crossings: int = DEFAULT_BRACKET_BOUND) -> Laurent1:
    """Kauffman bracket by the 2^n state sum.

    Each state contributes A^(#A-smoothings - #B-smoothings) * delta^(loops-1)
    with delta = -A^2 - A^-2.  The A-smoothing of a positive crossing is the
    orientation-respecting reconnection; of a negative crossing, the
    orientation-breaking one.
    """
    _check_bound(l, max_crossings, "bracket")

    # global segment indices: segment i of a component follows its i-th event
    seg_base = []
    nseg = 0
    empty_components = 0
    for comp in l.components:
        seg_base.append(nseg)
        nseg += len(comp)
        if not comp:
            empty_components += 1

    crossings = sorted(l.signs)
    # for each crossing, the union pairs of its oriented / disoriented smoothing
    oriented_pairs = {}
    disoriented_pairs = {}
    for cid in crossings:
        (ci, p), (cj, q) = pass_positions(l, cid)
        mi, mj = len(l.components[ci]), len(l.components[cj])
        in_p = seg_base[ci] + (p - 1) % mi
        out_p = seg_base[ci] + p
        in_q = seg_base[cj] + (q - 1) % mj
        out_q = seg_base[cj] + q
        oriented_pairs[cid] = ((in_p, out_q), (in_q, out_p))
        disoriented_pairs[cid] = ((in_p, in_q), (out_p, out_q))

    delta = Laurent1.from_dict(TAG_A, {2: -1, -2: -1})
    total = Laurent1.zero(TAG_A)
    for state in itertools.product((1, -1), repeat=len(crossings)):
        uf = _UnionFind(nseg)
        exponent = 0
        for cid, choice in zip(crossings, state):
            exponent += choice  # +1 for an A-smoothing, -1 for B
            use_oriented = (choice == 1) == (l.signs[cid] == 1)
            pairs = oriented_pairs[cid] if use_oriented else disoriented_pairs[cid]
            for a, b in pairs:
                uf.union(a, b)
        loops = len({uf.find(i) for i in range(nseg)}) + empty_components
        total = total + Laurent1.monomial(TAG_A, 1, exponent) * delta ** (loops - 1)
    return total


def normalized_bracket(l: LinkDiagram, max_crossings: int = DEFAULT_BRACKET_BOUND) -> Laurent1:
    """(-A^3)^(-writhe) times the bracket."""
    neg_a3 = Laurent1.monomial(TAG_A, -1, 3)
    return neg_a3 ** (-writhe(l)) * bracket(l, max_crossings)


def jones(l: LinkDiagram, max_crossings: int = DEFAULT_BRACKET_BOUND) -> Laurent1:
    """Jones polynomial on the quarter-power grid of t, via A = t^{-1/4}."""
    return substitute_A_to_t(normalized_bracket(l, max_crossings))


# -- HOMFLYPT ------------------------------------------------------------------

def _first_bad_crossing(l: LinkDiagram):
    """First crossing met on its under strand when traversing components in
    order from their basepoints; None if the diagram is descending."""
    seen = set()
    for comp in l.components:
        for ev in comp:
            if ev.crossing in seen:
                continue
            seen.add(ev.crossing)
            if ev.role == UNDER:
                return ev.crossing
    return None


_L = Laurent2.monomial(TAGS_LM, 1, (1, 0))
_L_INV = Laurent2.monomial(TAGS_LM, 1, (-1, 0))
_M = Laurent2.monomial(TAGS_LM, 1, (0, 1))
# P of the k-component descending unlink is (-(l + l^-1) / m)^(k-1)
_UNLINK_FACTOR_LM = Laurent2.from_dict(TAGS_LM, {(1, -1): -1, (-1, -1): -1})


def homflypt(l: LinkDiagram, max_crossings: int = DEFAULT_HOMFLYPT_BOUND) -> Laurent2:
    """HOMFLYPT polynomial in (l, m) by the descending-diagram skein recursion."""
    _check_bound(l, max_crossings, "homflypt")
    memo: dict = {}

    def rec(link: LinkDiagram) -> Laurent2:
        key = canonical_key(link)
        cached = memo.get(key)
        if cached is not None:
            return cached
        bad = _first_bad_crossing(link)
        if bad is None:
            value = _UNLINK_FACTOR_LM ** (len(link.components) - 1)
        else:
            switched = rec(switch_crossing(link, bad))
            smoothed = rec(smooth_oriented(link, bad))
            if link.signs[bad] == 1:
                # l*P(this) + l^-1*P(switched) + m*P(smoothed) = 0
                value = -(_L_INV * _L_INV * switched) - (_L_INV * _M * smoothed)
            else:
                value = -(_L * _L * switched) - (_L * _M * smoothed)
        memo[key] = value
        return value

    return rec(l)


# -- Kauffman two-variable polynomial -------------------------------------------

_A2 = Laurent2.monomial(TAGS_AZ, 1, (1, 0))
_Z = Laurent2.monomial(TAGS_AZ, 1, (0, 1))
# Lambda of the k-component descending unlink is ((a + a^-1)/z - 1)^(k-1)
_UNLINK_FACTOR_AZ = Laurent2.from_dict(TAGS_AZ, {(1, -1): 1, (-1, -1): 1, (0, 0): -1})


def _find_kink(l: LinkDiagram):
    """A crossing whose two passes are cyclically adjacent on one component."""
    for comp in l.components:
        m = len(comp)
        for i in range(m):
            if m >= 2 and comp[i].crossing == comp[(i + 1) % m].crossing:
                return comp[i].crossing
    return None


def _strip_kink(l: LinkDiagram, crossing: int) -> LinkDiagram:
    (ci, p), (_, q) = pass_positions(l, crossing)
    comp = list(l.components[ci])
    for idx in sorted((p, q), reverse=True):
        del comp[idx]
    comps = list(l.components)
    comps[ci] = tuple(comp)
    return LinkDiagram(tuple(comps), {k: v for k, v in l.signs.items() if k != crossing})


def kauffman_f(l: LinkDiagram, max_crossings: int = DEFAULT_KAUFFMAN_BOUND) -> Laurent2:
    """Kauffman two-variable polynomial F = a^{-w} * Lambda, in (a, z)."""
    _check_bound(l, max_crossings, "kauffman")
    memo: dict = {}

    def lam(link: LinkDiagram) -> Laurent2:
        key = canonical_key(link)
        cached = memo.get(key)
        if cached is not None:
            return cached
        kink = _find_kink(link)
        if kink is not None:
            value = _A2 ** link.signs[kink] * lam(_strip_kink(link, kink))
        else:
            bad = _first_bad_crossing(link)
            if bad is None:
                # descending diagram: regular isotopic to an unlink with curls
                value = _A2 ** writhe(link) * _UNLINK_FACTOR_AZ ** (len(link.components) - 1)
            else:
                sm1 = lam(smooth_oriented(link, bad))
                sm2 = lam(smooth_disoriented(link, bad))
                value = _Z * (sm1 + sm2) - lam(switch_crossing(link, bad))
        memo[key] = value
        return value

    return _A2 ** (-writhe(l)) * lam(l)


# -- specializations used as cross-oracles --------------------------------------

def homflypt_to_jones(p: Laurent2) -> Laurent1:
    """Jones value of a knot's HOMFLYPT via l = i*t^-1, m = i*(t^-1/2 - t^1/2).

    For knots every (l, m)-term has even total degree and non-negative
    m-degree, so the image is integral on the quarter-power grid of t.
    """
    if p.tags != TAGS_LM:
        raise UsageError(f"expected tags {TAGS_LM}, got {p.tags}")
    out = Laurent1.zero(TAG_TQ)
    m_binom = Laurent1.from_dict(TAG_TQ, {-2: 1, 2: -1})  # t^-1/2 - t^1/2 in quarter units
    for (a, b), c in p.terms:
        if (a + b) % 2 != 0 or b < 0:
            raise UsageError("HOMFLYPT value is not that of a knot; Jones specialization undefined")
        i_power = -1 if (a + b) % 4 == 2 else 1
        term = Laurent1.monomial(TAG_TQ, c * i_power, -4 * a) * m_binom ** b
        out = out + term
    return out


def kauffman_to_x(p: Laurent2) -> Laurent1:
    """Normalized-bracket value of a knot's Kauffman polynomial via
    a = -A^3, z = A + A^-1."""
    if p.tags != TAGS_AZ:
        raise UsageError(f"expected tags {TAGS_AZ}, got {p.tags}")
    out = Laurent1.zero(TAG_A)
    z_sub = Laurent1.from_dict(TAG_A, {1: 1, -1: 1})
    for (a, b), c in p.terms:
        if b < 0:
            raise UsageError("Kauffman value is not that of a knot; bracket specialization undefined")
        sign = -1 if a % 2 else 1
        term = Laurent1.monomial(TAG_A, c * sign, 3 * a) * z_sub ** b
        out = out + term
    return out


# -- rail-knotoid wrappers -------------------------------------------------------

@dataclass
class Bounds:
    bracket: int = DEFAULT_BRACKET_BOUND
    homflypt: int = DEFAULT_HOMFLYPT_BOUND
    kauffman: int = DEFAULT_KAUFFMAN_BOUND

    @classmethod
    def capped(cls, max_crossings: int | None) -> "Bounds":
        if max_crossings is None:
            return cls()
        return cls(bracket=max_crossings, homflypt=max_crossings, kauffman=max_crossings)


def rail_bracket(d: RailKnotoidDiagram, side: str,
                 max_crossings: int = DEFAULT_BRACKET_BOUND) -> Laurent1:
    """Bracket of the chosen companion loop."""
    return bracket(companion(d, side), max_crossings)


def rail_invariant(d: RailKnotoidDiagram, family: str, side: str, orientation: str,
                   bounds: Bounds | None = None):
    """One invariant of the oriented companion: family in {bracket, x, jones, homflypt}."""
    bounds = bounds or Bounds()
    loop = orient(companion(d, side), orientation)
    if family == FAMILY_BRACKET:
        return bracket(loop, bounds.bracket)
    if family == FAMILY_X:
        return normalized_bracket(loop, bounds.bracket)
    if family == FAMILY_JONES:
        return jones(loop, bounds.bracket)
    if family == FAMILY_HOMFLYPT:
        return homflypt(loop, bounds.homflypt)
    raise UsageError(f"unknown invariant family {family!r}")


def rail_kauffman(d: RailKnotoidDiagram, side: str,
                  max_crossings: int = DEFAULT_KAUFFMAN_BOUND) -> Laurent2:
    """Kauffman polynomial of the unoriented companion."""
    return kauffman_f(companion(d, side), max_crossings)


_CERT_FIELDS = (
    "bracket_o", "bracket_u",
    "writhe_o_plus", "writhe_u_plus",
    "x_o_plus", "x_o_minus", "x_u_plus", "x_u_minus",
    "jones_o_plus", "jones_o_minus", "jones_u_plus", "jones_u_minus",
    "homfly_o_plus", "homfly_o_minus", "homfly_u_plus", "homfly_u_minus",
    "kauffman_o", "kauffman_u",
)


@dataclass(frozen=True)
class InvariantCertificate:
    """The full tuple of computed invariants of one rail knotoid diagram.

    Equal certificates mean no computed invariant distinguishes the diagrams;
    unequal certificates prove the diagrams represent distinct rail knotoids.
    """

    bracket_o: Laurent1
    bracket_u: Laurent1
    writhe_o_plus: int
    writhe_u_plus: int
    x_o_plus: Laurent1
    x_o_minus: Laurent1
    x_u_plus: Laurent1
    x_u_minus: Laurent1
    jones_o_plus: Laurent1
    jones_o_minus: Laurent1
    jones_u_plus: Laurent1
    jones_u_minus: Laurent1
    homfly_o_plus: Laurent2
    homfly_o_minus: Laurent2
    homfly_u_plus: Laurent2
    homfly_u_minus: Laurent2
    kauffman_o: Laurent2
    kauffman_u: Laurent2

    FIELDS = _CERT_FIELDS

    def to_doc(self) -> dict:
        doc = {}
        for name in _CERT_FIELDS:
            value = getattr(self, name)
            doc[name] = value if isinstance(value, int) else value.render()
        return doc

    def differing_fields(self, other: "InvariantCertificate") -> list[str]:
        return [f for f in _CERT_FIELDS if getattr(self, f) != getattr(other, f)]


def certificate(d: RailKnotoidDiagram, bounds: Bounds | None = None) -> InvariantCertificate:
    """Compute every invariant field for one rail knotoid diagram."""
    bounds = bounds or Bounds()
    values = {}
    for side, tag in ((SIDE_OVER, "o"), (SIDE_UNDER, "u")):
        loop = companion(d, side)
        values[f"bracket_{tag}"] = bracket(loop, bounds.bracket)
        values[f"writhe_{tag}_plus"] = writhe(orient(loop, ORIENT_PLUS))
        for orientation, otag in ((ORIENT_PLUS, "plus"), (ORIENT_MINUS, "minus")):
            oriented = orient(loop, orientation)
            values[f"x_{tag}_{otag}"] = normalized_bracket(oriented, bounds.bracket)
            values[f"jones_{tag}_{otag}"] = jones(oriented, bounds.bracket)
            values[f"homfly_{tag}_{otag}"] = homflypt(oriented, bounds.homflypt)
        values[f"kauffman_{tag}"] = kauffman_f(loop, bounds.kauffman)
    return InvariantCertificate(**values)


DISTINGUISHED = "Distinguished"
INDISTINGUISHABLE = "IndistinguishableByComputedInvariants"


def compare(d1: RailKnotoidDiagram, d2: RailKnotoidDiagram,
            bounds: Bounds | None = None) -> tuple[str, list[str]]:
    """(verdict, differing fields).  Invariants are one-sided: the second
    verdict never claims equivalence, only indistinguishability."""
    c1 = certificate(d1, bounds)
    c2 = certificate(d2, bounds)
    diff = c1.differing_fields(c2)
    if diff:
        return DISTINGUISHED, diff
    return INDISTINGUISHABLE, []
