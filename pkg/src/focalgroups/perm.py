"""Permutations of {1, ..., n} and their cycle notation.

Composition is left-to-right throughout the package: ``compose(a, b)`` first
applies ``a`` and then ``b``, so that ``point ^ (a*b) == (point ^ a) ^ b``.
With this convention conjugation is ``x^h = h^-1 x h`` and the commutator is
``[a, b] = a^-1 b^-1 a b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm

from .errors import DegreeMismatch, MalformedCycle, PointOutOfRange, RepeatedPoint

__all__ = [
    "Permutation",
    "identity",
    "parse_cycle_notation",
    "compose",
    "inverse",
    "format_cycles",
]

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{1..degree}`` stored as its 1-based image tuple.

    Ordering is lexicographic on the image tuple, which is the canonical
    element order used by every group in the package.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        if n < 1:
            raise PointOutOfRange("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise RepeatedPoint(f"{images} is not a bijection of 1..{n}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else inverse(self)
        result = identity(self.degree)
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(1, degree + 1)))


def parse_cycle_notation(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles such as ``"(1 2 3)(4 5)"``.

    Empty text and ``"()"`` give the identity.  Points not mentioned are fixed.
    """
    if degree < 1:
        raise PointOutOfRange(f"degree must be positive, got {degree}")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    current: list[int] | None = None
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        pos = m.end()
        lparen, rparen, number, other = m.groups()
        if other is not None:
            raise MalformedCycle(f"unexpected token {other!r} in {text!r}")
        if lparen:
            if current is not None:
                raise MalformedCycle(f"nested '(' in {text!r}")
            current = []
        elif rparen:
            if current is None:
                raise MalformedCycle(f"unbalanced ')' in {text!r}")
            for i, a in enumerate(current):
                images[a - 1] = current[(i + 1) % len(current)]
            current = None
        else:
            if current is None:
                raise MalformedCycle(f"point {number} outside a cycle in {text!r}")
            point = int(number)
            if not 1 <= point <= degree:
                raise PointOutOfRange(f"point {point} not in 1..{degree}")
            if point in seen:
                raise RepeatedPoint(f"point {point} appears twice in {text!r}")
            seen.add(point)
            current.append(point)
    if current is not None:
        raise MalformedCycle(f"unclosed '(' in {text!r}")
    return Permutation(tuple(images))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree} differ")
    bi = b.images
    return Permutation(tuple(bi[x - 1] for x in a.images))


def inverse(a: Permutation) -> Permutation:
    out = [0] * a.degree
    for i, x in enumerate(a.images, 1):
        out[x - 1] = i
    return Permutation(tuple(out))


def format_cycles(a: Permutation) -> str:
    cycles = a.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
