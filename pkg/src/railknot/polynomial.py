"""Exact integer-coefficient Laurent polynomials in one and two variables.

Values are immutable; arithmetic never leaves the Laurent ring.  The
one-variable flavour carries a variable tag ("A" for bracket-type values,
"t^{1/4}" for Jones values on the quarter-power grid), the two-variable
flavour a tag pair (("l", "m") or ("a", "z")).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UsageError

TAG_A = "A"
TAG_TQ = "t^{1/4}"
TAGS_LM = ("l", "m")
TAGS_AZ = ("a", "z")


def _clean(items: Iterable[tuple]) -> tuple:
    acc: dict = {}
    for exp, coeff in items:
        acc[exp] = acc.get(exp, 0) + coeff
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


def _symbol(tag: str) -> str:
    return tag if tag.isalnum() else f"({tag})"


@dataclass(frozen=True)
class Laurent1:
    """Laurent polynomial in one variable with arbitrary-precision integer coefficients."""

    tag: str
    terms: tuple[tuple[int, int], ...]  # ((exponent, coefficient), ...) sorted, coeff != 0

    @classmethod
    def from_dict(cls, tag: str, terms: Mapping[int, int]) -> "Laurent1":
        return cls(tag, _clean(terms.items()))

    @classmethod
    def zero(cls, tag: str) -> "Laurent1":
        return cls(tag, ())

    @classmethod
    def one(cls, tag: str) -> "Laurent1":
        return cls.monomial(tag, 1, 0)

    @classmethod
    def monomial(cls, tag: str, coeff: int, exp: int) -> "Laurent1":
        return cls(tag, ((exp, coeff),) if coeff else ())

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_tag(self, other: "Laurent1") -> None:
        if not isinstance(other, Laurent1) or other.tag != self.tag:
            raise UsageError(f"variable tag mismatch: {self.tag!r} vs {getattr(other, 'tag', other)!r}")

    def __add__(self, other: "Laurent1") -> "Laurent1":
        self._check_tag(other)
        return Laurent1(self.tag, _clean(self.terms + other.terms))

    def __neg__(self) -> "Laurent1":
        return Laurent1(self.tag, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Laurent1") -> "Laurent1":
        return self + (-other)

    def __mul__(self, other: "Laurent1") -> "Laurent1":
        self._check_tag(other)
        return Laurent1(
            self.tag,
            _clean((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms),
        )

    def __pow__(self, n: int) -> "Laurent1":
        if n < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise UsageError("negative power of a non-unit-monomial Laurent polynomial")
            exp, coeff = self.terms[0]
            inv = Laurent1.monomial(self.tag, coeff, -exp)  # coeff in {1,-1} is its own inverse
            return inv ** (-n)
        out = Laurent1.one(self.tag)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        sym = _symbol(self.tag)
        return " + ".join(f"{c}*{sym}^{e}" for e, c in self.terms)

    @classmethod
    def parse(cls, text: str, tag: str) -> "Laurent1":
        text = text.strip()
        if text == "0":
            return cls.zero(tag)
        sym = re.escape(_symbol(tag))
        pat = re.compile(rf"^(-?\d+)\*{sym}\^(-?\d+)$")
        terms = {}
        for piece in text.split(" + "):
            m = pat.match(piece.strip())
            if m is None:
                raise UsageError(f"cannot parse polynomial term {piece!r} for tag {tag!r}")
            exp = int(m.group(2))
            terms[exp] = terms.get(exp, 0) + int(m.group(1))
        return cls.from_dict(tag, terms)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Laurent2:
    """Laurent polynomial in two variables with integer coefficients."""

    tags: tuple[str, str]
    terms: tuple[tuple[tuple[int, int], int], ...]  # (((e1, e2), coefficient), ...)

    @classmethod
    def from_dict(cls, tags: tuple[str, str], terms: Mapping[tuple[int, int], int]) -> "Laurent2":
        return cls(tuple(tags), _clean(terms.items()))

    @classmethod
    def zero(cls, tags: tuple[str, str]) -> "Laurent2":
        return cls(tuple(tags), ())

    @classmethod
    def one(cls, tags: tuple[str, str]) -> "Laurent2":
        return cls.monomial(tags, 1, (0, 0))

    @classmethod
    def monomial(cls, tags: tuple[str, str], coeff: int, exps: tuple[int, int]) -> "Laurent2":
        return cls(tuple(tags), (((tuple(exps)), coeff),) if coeff else ())

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_tag(self, other: "Laurent2") -> None:
        if not isinstance(other, Laurent2) or other.tags != self.tags:
            raise UsageError(f"variable tag mismatch: {self.tags!r} vs {getattr(other, 'tags', other)!r}")

    def __add__(self, other: "Laurent2") -> "Laurent2":
        self._check_tag(other)
        return Laurent2(self.tags, _clean(self.terms + other.terms))

    def __neg__(self) -> "Laurent2":
        return Laurent2(self.tags, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Laurent2") -> "Laurent2":
        return self + (-other)

    def __mul__(self, other: "Laurent2") -> "Laurent2":
        self._check_tag(other)
        return Laurent2(
            self.tags,
            _clean(
                ((e1[0] + e2[0], e1[1] + e2[1]), c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            ),
        )

    def __pow__(self, n: int) -> "Laurent2":
        if n < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise UsageError("negative power of a non-unit-monomial Laurent polynomial")
            (e1, e2), coeff = self.terms[0]
            return Laurent2.monomial(self.tags, coeff, (-e1, -e2)) ** (-n)
        out = Laurent2.one(self.tags)
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        s1, s2 = _symbol(self.tags[0]), _symbol(self.tags[1])
        return " + ".join(f"{c}*{s1}^{e1}*{s2}^{e2}" for (e1, e2), c in self.terms)

    @classmethod
    def parse(cls, text: str, tags: tuple[str, str]) -> "Laurent2":
        text = text.strip()
        if text == "0":
            return cls.zero(tags)
        s1, s2 = re.escape(_symbol(tags[0])), re.escape(_symbol(tags[1]))
        pat = re.compile(rf"^(-?\d+)\*{s1}\^(-?\d+)\*{s2}\^(-?\d+)$")
        terms: dict[tuple[int, int], int] = {}
        for piece in text.split(" + "):
            m = pat.match(piece.strip())
            if m is None:
                raise UsageError(f"cannot parse polynomial term {piece!r} for tags {tags!r}")
            key = (int(m.group(2)), int(m.group(3)))
            terms[key] = terms.get(key, 0) + int(m.group(1))
        return cls.from_dict(tags, terms)

    def __str__(self) -> str:
        return self.render()


def substitute_A_to_t(p: Laurent1) -> Laurent1:
    """Map an A-polynomial to the quarter-power grid of t via A = t^{-1/4}.

    Each exponent k of A becomes exponent -k of t^{1/4}; coefficients are unchanged.
    """
    if p.tag != TAG_A:
        raise UsageError(f"substitute_A_to_t expects tag {TAG_A!r}, got {p.tag!r}")
    return Laurent1(TAG_TQ, tuple(sorted((-e, c) for e, c in p.terms)))
