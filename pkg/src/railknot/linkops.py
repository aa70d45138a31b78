"""Crossing-level surgery on link diagrams: switching, the two smoothings,
and a rotation-invariant canonical key for memoization."""

from __future__ import annotations

from .diagram import OVER, UNDER, CrossPass, LinkDiagram


def pass_positions(l: LinkDiagram, crossing: int) -> list[tuple[int, int]]:
    """(component index, event index) of the two passes of a crossing."""
    out = []
    for ci, comp in enumerate(l.components):
        for i, ev in enumerate(comp):
            if ev.crossing == crossing:
                out.append((ci, i))
    return out


def switch_crossing(l: LinkDiagram, crossing: int) -> LinkDiagram:
    """Exchange over and under strands at one crossing; its sign flips."""
    comps = []
    for comp in l.components:
        comps.append(
            tuple(
                CrossPass(ev.crossing, OVER if ev.role == UNDER else UNDER)
                if ev.crossing == crossing
                else ev
                for ev in comp
            )
        )
    signs = dict(l.signs)
    signs[crossing] = -signs[crossing]
    return LinkDiagram(tuple(comps), signs)


def _drop_sign(l: LinkDiagram, crossing: int) -> dict[int, int]:
    return {k: v for k, v in l.signs.items() if k != crossing}


def smooth_oriented(l: LinkDiagram, crossing: int) -> LinkDiagram:
    """Orientation-respecting smoothing: in(over) joins out(under) and vice versa.

    Splits a component in two when both passes are on the same component,
    merges two components otherwise.  No strand is reversed.
    """
    (ci, p), (cj, q) = pass_positions(l, crossing)
    comps = list(l.components)
    if ci == cj:
        comp = comps[ci]
        if p > q:
            p, q = q, p
        first = comp[p + 1:q]
        second = comp[q + 1:] + comp[:p]
        comps[ci:ci + 1] = [tuple(first), tuple(second)]
    else:
        a, b = comps[ci], comps[cj]
        merged = a[p + 1:] + a[:p] + b[q + 1:] + b[:q]
        hi, lo = max(ci, cj), min(ci, cj)
        del comps[hi]
        comps[lo] = tuple(merged)
    return LinkDiagram(tuple(comps), _drop_sign(l, crossing))


def _flip_straddling(signs: dict[int, int], reversed_events) -> dict[int, int]:
    # crossings with exactly one pass in the reversed section change sign
    counts: dict[int, int] = {}
    for ev in reversed_events:
        counts[ev.crossing] = counts.get(ev.crossing, 0) + 1
    out = dict(signs)
    for cid, n in counts.items():
        if n == 1 and cid in out:
            out[cid] = -out[cid]
    return out


def smooth_disoriented(l: LinkDiagram, crossing: int) -> LinkDiagram:
    """Orientation-breaking smoothing: in(over) joins in(under), out joins out.

    One strand section is traversed backward afterwards; crossings with exactly
    one pass on that section flip sign.
    """
    (ci, p), (cj, q) = pass_positions(l, crossing)
    comps = list(l.components)
    signs = _drop_sign(l, crossing)
    if ci == cj:
        comp = comps[ci]
        if p > q:
            p, q = q, p
        reversed_part = comp[p + 1:q]
        merged = comp[q + 1:] + comp[:p] + tuple(reversed(reversed_part))
        comps[ci] = tuple(merged)
        signs = _flip_straddling(signs, reversed_part)
    else:
        a, b = comps[ci], comps[cj]
        reversed_part = b[q + 1:] + b[:q]
        merged = a[p + 1:] + a[:p] + tuple(reversed(reversed_part))
        hi, lo = max(ci, cj), min(ci, cj)
        del comps[hi]
        comps[lo] = tuple(merged)
        signs = _flip_straddling(signs, reversed_part)
    return LinkDiagram(tuple(comps), signs)


def canonical_key(l: LinkDiagram):
    """Hashable key, invariant under component rotation and component order."""
    comps = []
    for comp in l.components:
        if not comp:
            comps.append(())
            continue
        best = min(tuple(comp[i:] + comp[:i]) for i in range(len(comp)))
        comps.append(best)
    return (tuple(sorted(comps)), tuple(sorted(l.signs.items())))
