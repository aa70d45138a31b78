"""Independent brute-force oracles for the invariant tests.

Everything here is deliberately written on a separate code path from the
package: plain-dict Laurent polynomials and depth-first graph walks for loop
counting, sharing no smoothing or union-find logic with ``railknot``.
"""

from __future__ import annotations

from railknot.diagram import OVER, UNDER, LinkDiagram

# A plain {exponent: coefficient} Laurent polynomial in A.


def poly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
            if out[e] == 0:
                del out[e]
    return out


def poly_pow(p: dict, n: int) -> dict:
    out = {0: 1}
    for _ in range(n):
        out = poly_mul(out, p)
    return out


DELTA = {2: -1, -2: -1}  # value of one extra loop


def _loop_count(l: LinkDiagram, state: dict[int, str]) -> int:
    """Loops of the smoothed diagram, counted by walking the arc graph.

    Arcs are the strand segments between consecutive passes; each smoothing
    joins four arc ends pairwise.  The oriented smoothing splices incoming
    strands to the *other* outgoing strand; the disoriented one splices the
    two incoming strands together and the two outgoing strands together.
    """
    arcs: list[tuple[int, int]] = []
    incoming: dict[tuple[int, str], tuple[int, int]] = {}
    outgoing: dict[tuple[int, str], tuple[int, int]] = {}
    empty_loops = 0
    for ci, comp in enumerate(l.components):
        if not comp:
            empty_loops += 1
            continue
        for j, p in enumerate(comp):
            arc = (ci, j)  # the arc entering pass j
            arcs.append(arc)
            incoming[(p.crossing, p.role)] = arc
            outgoing[(p.crossing, p.role)] = (ci, (j + 1) % len(comp))

    adjacency: dict[tuple[int, int], list[tuple[int, int]]] = {a: [] for a in arcs}

    def join(a, b):
        adjacency[a].append(b)
        adjacency[b].append(a)

    for crossing, sign in l.signs.items():
        in_o = incoming[(crossing, OVER)]
        out_o = outgoing[(crossing, OVER)]
        in_u = incoming[(crossing, UNDER)]
        out_u = outgoing[(crossing, "U")]
        oriented = (state[crossing] == "A") == (sign == 1)
        if oriented:
            join(in_o, out_u)
            join(in_u, out_o)
        else:
            join(in_o, in_u)
            join(out_o, out_u)

    loops = empty_loops
    seen: set[tuple[int, int]] = set()
    for start in arcs:
        if start in seen:
            continue
        loops += 1
        stack = [start]
        while stack:
            a = stack.pop()
            if a in seen:
                continue
            seen.add(a)
            stack.extend(adjacency[a])
    return loops


def brute_bracket(l: LinkDiagram) -> dict:
    """Kauffman bracket by full enumeration of the 2^n smoothing states."""
    ids = sorted(l.signs)
    total: dict = {}
    for bits in range(1 << len(ids)):
        state = {c: ("A" if bits & (1 << k) else "B") for k, c in enumerate(ids)}
        a_count = sum(1 for v in state.values() if v == "A")
        weight = {a_count - (len(ids) - a_count): 1}
        loops = _loop_count(l, state)
        term = poly_mul(weight, poly_pow(DELTA, loops - 1))
        total = poly_add(total, term)
    return total


def brute_writhe(l: LinkDiagram) -> int:
    return sum(l.signs.values())


def brute_normalized_bracket(l: LinkDiagram) -> dict:
    """(-A^3)^(-w) * bracket, with the sign folded into the coefficient."""
    w = brute_writhe(l)
    sign = 1 if w % 2 == 0 else -1
    return poly_mul({-3 * w: sign}, brute_bracket(l))


def brute_jones(l: LinkDiagram) -> dict:
    """Normalized bracket under A = t^(-1/4), keyed by the exponent of t^(1/4)."""
    return {-e: c for e, c in brute_normalized_bracket(l).items()}
