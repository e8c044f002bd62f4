"""Outer commutator words as binary trees.

A word is either an indeterminate ``Leaf(k)`` (printed ``xk``) or a
commutator ``Comm(u, v)`` (printed ``[u,v]``).  Outer commutator words never
repeat an indeterminate, so a word is determined by its tree shape; the
canonical form numbers the leaves ``1..n`` from left to right.

The bracket shorthand ``[a,b,c]`` means ``[[a,b],c]``.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from .errors import (
    ArityMismatch,
    EnumerationCapExceeded,
    InvalidIndex,
    WordSyntaxError,
)

__all__ = [
    "Leaf",
    "Comm",
    "Word",
    "RenumberedWarning",
    "parse_word",
    "format_word",
    "canonical",
    "gamma",
    "delta",
    "height",
    "vertex_count",
    "leaf_count",
    "defect",
    "is_extension",
    "words_up_to_height",
    "proper_extensions_same_height",
    "evaluate",
    "render_tree",
]


@dataclass(frozen=True)
class Leaf:
    index: int = 1

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Comm:
    left: Word
    right: Word

    def __str__(self):
        return format_word(self)


Word = Union[Leaf, Comm]


class RenumberedWarning(UserWarning):
    """The parsed word did not number its indeterminates 1..n left to right."""


# -- parsing / printing ------------------------------------------------------

_TOKENS = re.compile(r"\s*(?:(x\d+)|(\[)|(\])|(,)|(\S))")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        pos = m.end()
        var, lb, rb, comma, bad = m.groups()
        if bad is not None:
            raise WordSyntaxError(f"unexpected {bad!r} at position {m.start(5)} in {text!r}")
        out.append(var or lb or rb or comma)
    return out


def parse_word(text: str) -> Word:
    """Parse bracket notation into a canonical word.

    Raises :class:`WordSyntaxError` on malformed input or when an
    indeterminate occurs twice (that is not an outer commutator word).
    Emits :class:`RenumberedWarning` if leaves had to be renumbered.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise WordSyntaxError("empty word")
    pos = 0

    def word() -> Word:
        nonlocal pos
        if pos >= len(tokens):
            raise WordSyntaxError(f"unexpected end of {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok.startswith("x"):
            k = int(tok[1:])
            if k < 1:
                raise WordSyntaxError(f"indeterminate index must be positive in {text!r}")
            return Leaf(k)
        if tok != "[":
            raise WordSyntaxError(f"unexpected {tok!r} in {text!r}")
        parts = [word()]
        while pos < len(tokens) and tokens[pos] == ",":
            pos += 1
            parts.append(word())
        if pos >= len(tokens) or tokens[pos] != "]":
            raise WordSyntaxError(f"expected ']' in {text!r}")
        pos += 1
        if len(parts) < 2:
            raise WordSyntaxError(f"a commutator needs at least two entries in {text!r}")
        out = parts[0]
        for p in parts[1:]:
            out = Comm(out, p)
        return out

    w = word()
    if pos != len(tokens):
        raise WordSyntaxError(f"trailing input after word in {text!r}")
    seen = [leaf.index for leaf in _leaves(w)]
    if len(set(seen)) != len(seen):
        raise WordSyntaxError(f"{text!r} repeats an indeterminate; not an outer commutator word")
    if seen != list(range(1, len(seen) + 1)):
        warnings.warn(f"indeterminates of {text!r} renumbered left to right", RenumberedWarning, stacklevel=2)
    return canonical(w)


def format_word(w: Word) -> str:
    if isinstance(w, Leaf):
        return f"x{w.index}"
    return f"[{format_word(w.left)},{format_word(w.right)}]"


def _leaves(w: Word) -> list[Leaf]:
    if isinstance(w, Leaf):
        return [w]
    return _leaves(w.left) + _leaves(w.right)


def canonical(w: Word) -> Word:
    counter = itertools.count(1)

    def go(t: Word) -> Word:
        if isinstance(t, Leaf):
            return Leaf(next(counter))
        left = go(t.left)
        return Comm(left, go(t.right))

    return go(w)


# -- the two classical families ------------------------------------------------


def gamma(i: int) -> Word:
    """``gamma_1 = x1``, ``gamma_i = [gamma_(i-1), x_i]``."""
    if i < 1:
        raise InvalidIndex(f"gamma needs i >= 1, got {i}")
    w: Word = Leaf(1)
    for k in range(2, i + 1):
        w = Comm(w, Leaf(k))
    return w


def delta(i: int) -> Word:
    """Full binary tree of height ``i``: ``delta_i = [delta_(i-1), delta_(i-1)]``."""
    if i < 0:
        raise InvalidIndex(f"delta needs i >= 0, got {i}")
    w: Word = Leaf(1)
    for _ in range(i):
        w = Comm(w, w)
    return canonical(w)


# -- tree invariants -------------------------------------------------------------


@lru_cache(maxsize=None)
def height(w: Word) -> int:
    if isinstance(w, Leaf):
        return 0
    return 1 + max(height(w.left), height(w.right))


@lru_cache(maxsize=None)
def leaf_count(w: Word) -> int:
    if isinstance(w, Leaf):
        return 1
    return leaf_count(w.left) + leaf_count(w.right)


def vertex_count(w: Word) -> int:
    return 2 * leaf_count(w) - 1


def defect(w: Word) -> int:
    """Vertices missing from ``w``'s tree relative to the full tree of the same height."""
    return 2 ** (height(w) + 1) - 1 - vertex_count(w)


def is_extension(u: Word, w: Word) -> bool:
    """True when ``w``'s tree is ``u``'s tree with some complete subtrees cut back to leaves."""
    if isinstance(w, Leaf):
        return True
    if isinstance(u, Leaf):
        return False
    return is_extension(u.left, w.left) and is_extension(u.right, w.right)


def _shape_key(w: Word) -> tuple:
    if isinstance(w, Leaf):
        return (0,)
    return (1, _shape_key(w.left), _shape_key(w.right))


def _order_key(w: Word) -> tuple:
    return (vertex_count(w), _shape_key(w))


@lru_cache(maxsize=None)
def words_up_to_height(h: int) -> tuple[Word, ...]:
    """All canonical words of height ``<= h``, by vertex count then shape."""
    if h < 0:
        return ()
    if h == 0:
        return (Leaf(1),)
    smaller = words_up_to_height(h - 1)
    shapes = [Leaf(1)] + [canonical(Comm(a, b)) for a in smaller for b in smaller]
    return tuple(sorted(shapes, key=_order_key))


def _leaf_depths(w: Word, depth: int = 0) -> list[int]:
    if isinstance(w, Leaf):
        return [depth]
    return _leaf_depths(w.left, depth + 1) + _leaf_depths(w.right, depth + 1)


def _graft(w: Word, replacements: list[Word]) -> Word:
    it = iter(replacements)

    def go(t: Word) -> Word:
        if isinstance(t, Leaf):
            return next(it)
        left = go(t.left)
        return Comm(left, go(t.right))

    return canonical(go(w))


def proper_extensions_same_height(w: Word, cap: int = 10_000) -> list[Word]:
    """Every proper extension of ``w`` with the same height as ``w``.

    Each leaf at depth ``d`` is independently replaced by a tree of height at
    most ``height(w) - d``; the all-leaves choice (``w`` itself) is dropped.
    """
    h = height(w)
    options = [words_up_to_height(h - d) for d in _leaf_depths(w)]
    total = 1
    for opt in options:
        total *= len(opt)
    if total - 1 > cap:
        raise EnumerationCapExceeded(f"{total - 1} extensions of {format_word(w)} exceed cap {cap}")
    out = []
    for choice in itertools.product(*options):
        if all(isinstance(c, Leaf) for c in choice):
            continue
        u = _graft(w, list(choice))
        if height(u) == h:
            out.append(u)
    return out


# -- evaluation ---------------------------------------------------------------------


def evaluate(w: Word, G, args):
    """Value of ``w`` at ``args`` (element indices, one per leaf).

    ``args`` may also be a tuple of equally shaped index arrays, in which case
    the word is evaluated elementwise.
    """
    n = leaf_count(w)
    if len(args) != n:
        raise ArityMismatch(f"{format_word(w)} takes {n} arguments, got {len(args)}")
    arrays = [np.asarray(a, dtype=np.int64) for a in args]
    for a in arrays:
        if a.size and (a.min() < 0 or a.max() >= G.order):
            G.check_index(int(a.min()) if a.min() < 0 else int(a.max()))
    position = {k: i for i, k in enumerate(sorted(leaf.index for leaf in _leaves(w)))}

    def go(t: Word):
        if isinstance(t, Leaf):
            return arrays[position[t.index]]
        left = go(t.left)
        return G.comm_arr(left, go(t.right))

    value = go(w)
    return int(value) if value.ndim == 0 else value


def render_tree(w: Word) -> str:
    """ASCII drawing of the tree with every vertex labelled by its subword."""
    lines: list[str] = []

    def go(t: Word, prefix: str, tail: str, child_prefix: str) -> None:
        lines.append(f"{prefix}{tail}{format_word(t)}")
        if isinstance(t, Comm):
            go(t.left, child_prefix, "├── ", child_prefix + "│   ")
            go(t.right, child_prefix, "└── ", child_prefix + "    ")

    go(w, "", "", "")
    return "\n".join(lines)
