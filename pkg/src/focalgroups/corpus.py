"""Built-in permutation groups and a tiny text format for user groups.

Group file format (UTF-8, line oriented)::

    # comment
    degree 4
    gen (1 2 3 4)
    gen (1 2)

Names accepted by :func:`build_named` (case-insensitive): ``Sn``, ``An``,
``Dn`` (dihedral of order 2n), ``Cn``, ``Q8``, ``SL23``, ``PSL27`` and
direct products joined by ``x`` such as ``S3xS3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import FileFormatError, ParameterOutOfRange
from .groups import DEFAULT_CAP, FiniteGroup, generate_group, minimal_normal_subgroups, whole_group
from .perm import Permutation, parse_cycle_notation

__all__ = [
    "GroupDescriptor",
    "symmetric",
    "alternating",
    "dihedral",
    "cyclic",
    "quaternion8",
    "sl23",
    "psl27",
    "direct_product",
    "build_named",
    "load_group_file",
    "build_group",
    "default_corpus",
]

MAX_SYMMETRIC_DEGREE = 7


def _cycle(*points: int, degree: int) -> Permutation:
    return parse_cycle_notation("(" + " ".join(map(str, points)) + ")", degree)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise ParameterOutOfRange(f"symmetric(n) needs 1 <= n <= {MAX_SYMMETRIC_DEGREE}, got {n}")
    gens = [] if n == 1 else [_cycle(1, 2, degree=n), _cycle(*range(1, n + 1), degree=n)]
    return generate_group(gens, n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise ParameterOutOfRange(f"alternating(n) needs 1 <= n <= {MAX_SYMMETRIC_DEGREE}, got {n}")
    gens = [_cycle(1, 2, i, degree=n) for i in range(3, n + 1)]
    return generate_group(gens, n, name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order ``2n``, acting on its vertices."""
    if n < 3:
        raise ParameterOutOfRange(f"dihedral(n) needs n >= 3, got {n}")
    rotation = _cycle(*range(1, n + 1), degree=n)
    reflection = Permutation(tuple(n + 1 - i for i in range(1, n + 1)))
    return generate_group([rotation, reflection], n, name=f"D{n}")


def cyclic(n: int) -> FiniteGroup:
    if n < 1 or n > DEFAULT_CAP:
        raise ParameterOutOfRange(f"cyclic(n) needs 1 <= n <= {DEFAULT_CAP}, got {n}")
    gens = [] if n == 1 else [_cycle(*range(1, n + 1), degree=n)]
    return generate_group(gens, n, name=f"C{n}")


def quaternion8() -> FiniteGroup:
    """Q8 in its right regular representation on 8 points."""
    units = ["1", "i", "j", "k"]
    # unit products: (a, b) -> (sign, unit)
    rule = {
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }

    def mul(x, y):
        (s, a), (t, b) = x, y
        if a == "1":
            return (s * t, b)
        if b == "1":
            return (s * t, a)
        if a == b:
            return (-s * t, "1")
        r, c = rule[(a, b)]
        return (s * t * r, c)

    elements = [(s, u) for s in (1, -1) for u in units]
    pos = {e: i + 1 for i, e in enumerate(elements)}

    def right_mult(g):
        return Permutation(tuple(pos[mul(x, g)] for x in elements))

    return generate_group([right_mult((1, "i")), right_mult((1, "j"))], 8, name="Q8")


def sl23() -> FiniteGroup:
    """SL(2,3) acting on the 8 nonzero row vectors of the plane over GF(3)."""
    vectors = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    pos = {v: i + 1 for i, v in enumerate(vectors)}

    def action(M):
        (p, q), (r, s) = M
        return Permutation(tuple(pos[((a * p + b * r) % 3, (a * q + b * s) % 3)] for a, b in vectors))

    return generate_group([action(((1, 1), (0, 1))), action(((1, 0), (1, 1)))], 8, name="SL23")


def psl27() -> FiniteGroup:
    """PSL(2,7) on the projective line over GF(7), points 0..6 -> 1..7 and infinity -> 8.

    The generators are ``z -> z + 1`` and ``z -> -1/z``.
    """
    gens = [
        parse_cycle_notation("(1 2 3 4 5 6 7)", 8),
        parse_cycle_notation("(1 8)(2 7)(3 4)(5 6)", 8),
    ]
    G = generate_group(gens, 8, name="PSL27")
    if G.order != 168 or minimal_normal_subgroups(G) != [whole_group(G)]:
        raise AssertionError("PSL(2,7) generators do not give a simple group of order 168")
    return G


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """``G x H`` acting on the disjoint union of the two point sets."""
    if not (G.is_permutation_group and H.is_permutation_group):
        raise ParameterOutOfRange("direct_product needs permutation groups")
    dg, dh = G.degree, H.degree
    ident_g = tuple(range(1, dg + 1))
    ident_h = tuple(range(dg + 1, dg + dh + 1))
    gens = [Permutation(G.labels[g].images + ident_h) for g in G.generators]
    gens += [Permutation(ident_g + tuple(x + dg for x in H.labels[h].images)) for h in H.generators]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return generate_group(gens, dg + dh, name=name)


_NAME = re.compile(r"^(s|a|d|c)(\d+)$|^(q8|sl23|psl27)$")


def _build_factor(name: str) -> FiniteGroup:
    m = _NAME.match(name)
    if m is None:
        raise ParameterOutOfRange(f"unknown group name {name!r}")
    if m.group(3):
        return {"q8": quaternion8, "sl23": sl23, "psl27": psl27}[m.group(3)]()
    kind, n = m.group(1), int(m.group(2))
    return {"s": symmetric, "a": alternating, "d": dihedral, "c": cyclic}[kind](n)


@lru_cache(maxsize=64)
def build_named(name: str) -> FiniteGroup:
    """Build a group from a name such as ``S4``, ``Q8`` or ``S3xS3``.

    Results are cached; groups are immutable so sharing them is safe.
    """
    parts = name.strip().lower().split("x")
    if not all(parts):
        raise ParameterOutOfRange(f"malformed group name {name!r}")
    G = _build_factor(parts[0])
    for part in parts[1:]:
        G = direct_product(G, _build_factor(part))
    G.name = name.strip()
    return G


def load_group_file(path: str | Path, cap: int = DEFAULT_CAP) -> FiniteGroup:
    degree = None
    gens = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if degree is None:
            if key != "degree":
                raise FileFormatError(f"{path}:{lineno}: expected 'degree <n>' first")
            try:
                degree = int(rest)
            except ValueError:
                raise FileFormatError(f"{path}:{lineno}: bad degree {rest!r}") from None
            if degree < 1:
                raise FileFormatError(f"{path}:{lineno}: degree must be positive")
        elif key == "gen":
            gens.append(parse_cycle_notation(rest, degree))
        else:
            raise FileFormatError(f"{path}:{lineno}: unexpected line {line!r}")
    if degree is None:
        raise FileFormatError(f"{path}: missing 'degree' line")
    return generate_group(gens, degree, cap=cap, name=f"@{path}")


def build_group(source: str) -> FiniteGroup:
    """Builder name, or ``@path`` for a group file."""
    if source.startswith("@"):
        return load_group_file(source[1:])
    return build_named(source)


@dataclass(frozen=True)
class GroupDescriptor:
    name: str
    construction: str
    expected_order: int | None = None

    def build(self) -> FiniteGroup:
        G = build_group(self.construction)
        if self.expected_order is not None and G.order != self.expected_order:
            raise AssertionError(f"{self.name}: built order {G.order}, expected {self.expected_order}")
        return G


_MANIFEST = [
    ("S3", 6), ("S4", 24), ("S5", 120), ("A4", 12), ("A5", 60),
    ("D4", 8), ("D5", 10), ("D6", 12), ("C2xC2", 4), ("C6", 6),
    ("Q8", 8), ("SL23", 24), ("S3xS3", 36), ("PSL27", 168),
]


def default_corpus() -> list[GroupDescriptor]:
    return [GroupDescriptor(name, name, order) for name, order in _MANIFEST]
