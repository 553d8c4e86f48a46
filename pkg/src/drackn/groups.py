"""Finite abelian groups, their characters, and group-ring bookkeeping.

Groups are products of cyclic factors Z/d1 x ... x Z/dk with elements stored
as exponent tuples.  Character values are exact cyclotomic numbers; they are
only defined for groups of prime exponent (equivalently, elementary abelian
groups), which covers every group this library constructs.  The regular
expansion turns an arc matrix over a group of order r into the 0/1 adjacency
matrix of the derived rn-vertex graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import lcm
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .arith import is_prime
from .cyclotomic import CycNum
from .errors import GroupMismatchError, UnsupportedError
from .exact_matrix import ExactMatrix

if TYPE_CHECKING:  # pragma: no cover
    from .covers import ArcMatrix


@dataclass(frozen=True)
class AbelianGroup:
    """Z/d1 x ... x Z/dk; the empty product is the trivial group."""

    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        if any(d < 2 for d in self.orders):
            raise ValueError(f"cyclic factor orders must be >= 2, got {self.orders}")

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.orders, 1)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    @property
    def prime_exponent(self) -> int | None:
        """p if the group is elementary abelian of exponent p, else None."""
        e = self.exponent
        return e if is_prime(e) else None

    def contains(self, el) -> bool:
        return (
            isinstance(el, tuple)
            and len(el) == len(self.orders)
            and all(isinstance(x, int) and 0 <= x < d for x, d in zip(el, self.orders))
        )

    def coerce(self, el) -> tuple[int, ...]:
        es = tuple(el)
        if len(es) != len(self.orders):
            raise GroupMismatchError(
                f"element of length {len(es)} for group with {len(self.orders)} factors"
            )
        return tuple(int(x) % d for x, d in zip(es, self.orders))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(a, self.orders))

    def sub(self, a, b) -> tuple[int, ...]:
        return tuple((x - y) % d for x, y, d in zip(a, b, self.orders))

    def elements(self) -> tuple[tuple[int, ...], ...]:
        """All elements in lexicographic order (identity first)."""
        return _elements(self.orders)

    def index(self, el) -> int:
        idx = 0
        for x, d in zip(el, self.orders):
            idx = idx * d + x
        return idx

    def element(self, idx: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.orders):
            out.append(idx % d)
            idx //= d
        return tuple(reversed(out))


@lru_cache(maxsize=None)
def _elements(orders: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(product(*(range(d) for d in orders)))


@dataclass(frozen=True)
class Character:
    """A character of an abelian group, indexed by an exponent tuple.

    For a group of prime exponent p the value at g is zeta_p ** <exponents, g>,
    an exact cyclotomic number.
    """

    group: AbelianGroup
    exponents: tuple[int, ...]

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def value(self, el) -> CycNum:
        p = self.group.prime_exponent
        if p is None:
            raise UnsupportedError(
                f"character values need a prime-exponent group, got exponent {self.group.exponent}"
            )
        k = sum(e * x for e, x in zip(self.exponents, el)) % p
        return CycNum.zeta_pow(p, k)

    def value_table(self) -> dict[tuple[int, ...], CycNum]:
        return {g: self.value(g) for g in self.group.elements()}


def characters_of(group: AbelianGroup) -> tuple[Character, ...]:
    """All characters, the trivial one first (exponent tuples in lex order)."""
    return tuple(Character(group, exps) for exps in group.elements())


def char_apply(f: "ArcMatrix", chi: Character) -> ExactMatrix:
    """The n x n character block of an arc matrix: entries chi(f(u,v)).

    The diagonal is cyclotomic zero.  The result is Hermitian because
    f(v,u) = -f(u,v) and chi(-g) is the complex conjugate of chi(g).
    """
    if chi.group != f.group:
        raise GroupMismatchError("character group differs from arc matrix group")
    p = chi.group.prime_exponent
    if p is None:
        raise UnsupportedError("char_apply needs a prime-exponent group")
    table = chi.value_table()
    zero = CycNum.zero(p)
    n = f.n
    return ExactMatrix(
        tuple(
            tuple(zero if u == v else table[f.entry(u, v)] for v in range(n))
            for u in range(n)
        )
    )


def regular_expand(f: "ArcMatrix") -> np.ndarray:
    """The 0/1 adjacency matrix of the cover graph defined by an arc matrix.

    Vertices are pairs (fibre u, group element g) numbered fibre-major with
    group elements in lexicographic order: vertex index = u*r + index(g).
    (u, g) is adjacent to (v, h) for u != v exactly when h - g = f(u, v).
    """
    g = f.group
    els = g.elements()
    r = g.order
    n = f.n
    adj = np.zeros((n * r, n * r), dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            arc = f.entry(u, v)
            for gi, gel in enumerate(els):
                hi = g.index(g.add(gel, arc))
                adj[u * r + gi, v * r + hi] = 1
                adj[v * r + hi, u * r + gi] = 1
    return adj


class GroupRingElement:
    """An element of the integral (or rational) group ring Z[G].

    Stored as a coefficient tuple indexed by the group's element order.
    Multiplication is convolution over the group operation.
    """

    __slots__ = ("group", "counts")

    def __init__(self, group: AbelianGroup, counts: Sequence):
        cs = tuple(counts)
        if len(cs) != group.order:
            raise ValueError(
                f"need {group.order} coefficients for {group}, got {len(cs)}"
            )
        self.group = group
        self.counts = cs

    @classmethod
    def zero(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls(group, (0,) * group.order)

    @classmethod
    def from_element(cls, group: AbelianGroup, el) -> "GroupRingElement":
        cs = [0] * group.order
        cs[group.index(el)] = 1
        return cls(group, cs)

    @classmethod
    def identity(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls.from_element(group, group.identity)

    @classmethod
    def group_sum(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls(group, (1,) * group.order)

    def coefficient(self, el):
        return self.counts[self.group.index(el)]

    def _check(self, other: "GroupRingElement"):
        if self.group != other.group:
            raise GroupMismatchError("group ring elements over different groups")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        return GroupRingElement(
            self.group, tuple(a + b for a, b in zip(self.counts, other.counts))
        )

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        return GroupRingElement(
            self.group, tuple(a - b for a, b in zip(self.counts, other.counts))
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupRingElement(self.group, tuple(c * other for c in self.counts))
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        g = self.group
        els = g.elements()
        out = [0] * g.order
        for i, a in enumerate(self.counts):
            if not a:
                continue
            for j, b in enumerate(other.counts):
                if not b:
                    continue
                out[g.index(g.add(els[i], els[j]))] += a * b
        return GroupRingElement(g, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.group == other.group
            and self.counts == other.counts
        )

    def __hash__(self):
        return hash((self.group, self.counts))

    def __repr__(self):
        return f"GroupRingElement({self.group}, {self.counts})"


def gring_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution product in the group ring."""
    return x * y


def subgroup_closure(group: AbelianGroup, generators: Iterable) -> set[tuple[int, ...]]:
    """The subgroup generated by the given elements (breadth-first closure)."""
    gens = [group.coerce(g) for g in generators]
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                s = group.add(h, g)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return seen
