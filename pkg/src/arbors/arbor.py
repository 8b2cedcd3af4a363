"""Arbors: rooted trees whose vertices carry positive multiplicities."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator


class ArborSyntaxError(ValueError):
    pass


@dataclass(frozen=True, repr=False)
class Arbor:
    """A vertex of multiplicity ``mult`` with an ordered tuple of sub-arbors."""

    mult: int
    children: tuple["Arbor", ...] = ()
    _enc: str = field(default="", init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.mult, int) or self.mult < 1:
            raise ValueError(f"multiplicity must be a positive integer, got {self.mult!r}")
        object.__setattr__(self, "children", tuple(self.children))
        inner = "".join(" " + c.encode() for c in self.children)
        object.__setattr__(self, "_enc", f"({self.mult}{inner})")

    def encode(self) -> str:
        return self._enc

    __str__ = encode

    def __repr__(self):
        return f"Arbor({self._enc!r})"

    @property
    def size(self) -> int:
        return self.mult + sum(c.size for c in self.children)

    @property
    def is_linear(self) -> bool:
        return len(self.children) <= 1 and all(c.is_linear for c in self.children)

    def vertices(self, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], "Arbor"]]:
        """Preorder walk yielding (address, subtree)."""
        yield path, self
        for k, c in enumerate(self.children):
            yield from c.vertices(path + (k,))

    def at(self, path: tuple[int, ...]) -> "Arbor":
        node = self
        for k in path:
            try:
                node = node.children[k]
            except IndexError:
                raise KeyError(f"invalid vertex address {path}") from None
        return node

    @property
    def num_vertices(self) -> int:
        return 1 + sum(c.num_vertices for c in self.children)

    def multiplicities(self) -> list[int]:
        """Multiplicity sequence of a linear arbor, root first."""
        if not self.is_linear:
            raise ValueError("not a linear arbor")
        out, node = [], self
        while True:
            out.append(node.mult)
            if not node.children:
                return out
            node = node.children[0]


_TOKEN = re.compile(r"\s*(\(|\)|\d+)")


def parse_arbor(text: str) -> Arbor:
    """Parse ``( INT child* )`` and return the canonical arbor."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ArborSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse(i: int) -> tuple[Arbor, int]:
        if i >= len(tokens) or tokens[i] != "(":
            raise ArborSyntaxError("expected '('")
        if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
            raise ArborSyntaxError("expected a multiplicity after '('")
        mult = int(tokens[i + 1])
        if mult < 1:
            raise ArborSyntaxError("multiplicity must be >= 1")
        i += 2
        kids = []
        while i < len(tokens) and tokens[i] == "(":
            child, i = parse(i)
            kids.append(child)
        if i >= len(tokens) or tokens[i] != ")":
            raise ArborSyntaxError("expected ')'")
        return Arbor(mult, tuple(kids)), i + 1

    if not tokens:
        raise ArborSyntaxError("empty input")
    tree, end = parse(0)
    if end != len(tokens):
        raise ArborSyntaxError("trailing tokens after arbor")
    return canonicalize(tree)


def canonicalize(t: Arbor) -> Arbor:
    kids = sorted((canonicalize(c) for c in t.children), key=Arbor.encode)
    return Arbor(t.mult, tuple(kids))


def is_canonical(t: Arbor) -> bool:
    return canonicalize(t) == t


@lru_cache(maxsize=None)
def _forests(total: int, start: int, pool_size: int) -> tuple[tuple[Arbor, ...], ...]:
    """Multisets (as sorted tuples) of arbors drawn from the size-ordered pool,
    using pool indices >= start, with total size ``total``."""
    if total == 0:
        return ((),)
    pool = _pool(pool_size)
    out = []
    for idx in range(start, len(pool)):
        a = pool[idx]
        if a.size > total:
            break
        for rest in _forests(total - a.size, idx, pool_size):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _pool(max_size: int) -> tuple[Arbor, ...]:
    out: list[Arbor] = []
    for s in range(1, max_size + 1):
        out.extend(enumerate_arbors(s))
    return tuple(out)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Arbor, ...]:
    out = []
    for r in range(n, 0, -1):
        for forest in _forests(n - r, 0, n - r):
            out.append(canonicalize(Arbor(r, forest)))
    return tuple(sorted(out, key=Arbor.encode))


def enumerate_arbors(n: int) -> list[Arbor]:
    """All isomorphism classes of arbors of size n, canonical, sorted by encoding."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_enumerate(n))


def enumerate_linear(n: int) -> list[Arbor]:
    """Linear arbors of size n: one per composition of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def comps(rem: int) -> Iterator[list[int]]:
        if rem == 0:
            yield []
            return
        for first in range(1, rem + 1):
            for tail in comps(rem - first):
                yield [first] + tail

    for seq in comps(n):
        out.append(linear_from_mults(seq))
    return sorted(out, key=Arbor.encode)


def linear_from_mults(mults: list[int]) -> Arbor:
    if not mults:
        raise ValueError("empty multiplicity sequence")
    node = Arbor(mults[-1])
    for m in reversed(mults[:-1]):
        node = Arbor(m, (node,))
    return node


def reverse_linear(t: Arbor) -> Arbor:
    if not t.is_linear:
        raise ValueError(f"reverse_linear needs a linear arbor, got {t}")
    return linear_from_mults(t.multiplicities()[::-1])


# -- families ------------------------------------------------------------

def type_a(n: int) -> Arbor:
    if n < 1:
        raise ValueError("type_a needs n >= 1")
    return linear_from_mults([1] * n)


def type_b(n: int) -> Arbor:
    if n < 1:
        raise ValueError("type_b needs n >= 1")
    return Arbor(n)


def halo(n: int) -> Arbor:
    """Root with n-1 elements and one single-element leaf."""
    if n < 2:
        raise ValueError("halo needs n >= 2")
    return Arbor(n - 1, (Arbor(1),))


def halo_rev(n: int) -> Arbor:
    """Root with one element and a leaf with n-1 elements; "(1)" at n = 1."""
    if n < 1:
        raise ValueError("halo_rev needs n >= 1")
    if n == 1:
        return Arbor(1)
    return Arbor(1, (Arbor(n - 1),))


def hochschild(n: int) -> Arbor:
    """Single-element root with n-1 single-element leaves."""
    if n < 1:
        raise ValueError("hochschild needs n >= 1")
    return Arbor(1, tuple(Arbor(1) for _ in range(n - 1)))
