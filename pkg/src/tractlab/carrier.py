"""Finite multiplicative carriers and formal sums over their unit groups.

A carrier is a finite commutative monoid ``F`` with an absorbing zero such
that ``F \\ {0}`` is an abelian group.  Formal sums live in the group semiring
``N[F^x]``: finite multisets of units.  They are stored as multiplicity
vectors indexed by the carrier's unit order, which makes equality, hashing
and the canonical ordering structural.
"""
from __future__ import annotations

from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, Mapping, Sequence


class CarrierError(ValueError):
    pass


class TractCarrier:
    """Finite carrier ``{0} u F^x`` with a multiplication table.

    ``mul`` is either a mapping ``(a, b) -> c`` over element names or a square
    matrix indexed like ``elements``.  Units keep the order in which they
    appear in ``elements``; that order drives every enumeration.
    """

    def __init__(self, elements: Sequence[str], mul, one: str, epsilon: str,
                 zero: str = "0"):
        elements = [str(e) for e in elements]
        if len(set(elements)) != len(elements):
            raise CarrierError("duplicate element names")
        if zero not in elements or one not in elements or epsilon not in elements:
            raise CarrierError("zero, one and epsilon must be carrier elements")
        if zero in (one, epsilon):
            raise CarrierError("one and epsilon must be units")
        self.elements = tuple(elements)
        self.zero = zero
        self.one = one
        self.epsilon = epsilon
        self.units = tuple(e for e in elements if e != zero)
        self.index = {u: i for i, u in enumerate(self.units)}
        table = _as_table(elements, mul)
        self._table = table
        self._check_zero(table)
        n = len(self.units)
        self.unit_mul = [[0] * n for _ in range(n)]
        for i, a in enumerate(self.units):
            for j, b in enumerate(self.units):
                c = table[a, b]
                if c not in self.index:
                    raise CarrierError(f"units not closed: {a}*{b} = {c}")
                self.unit_mul[i][j] = self.index[c]
        self._check_group()
        self.one_index = self.index[one]
        self.eps_index = self.index[epsilon]
        if self.unit_mul[self.eps_index][self.eps_index] != self.one_index:
            raise CarrierError("epsilon * epsilon must equal one")
        self.inverse = [row.index(self.one_index) for row in self.unit_mul]
        self.neg_index = [self.unit_mul[self.eps_index][i] for i in range(n)]
        # permutation of unit indices induced by multiplication by each unit
        self.scale_perm = [tuple(self.unit_mul[u]) for u in range(n)]

    def _check_zero(self, table):
        for x in self.elements:
            if table[self.zero, x] != self.zero or table[x, self.zero] != self.zero:
                raise CarrierError(f"zero is not absorbing against {x}")

    def _check_group(self):
        n = len(self.units)
        one = self.index.get(self.one)
        m = self.unit_mul
        for i in range(n):
            if m[one][i] != i:
                raise CarrierError(f"{self.one} is not a multiplicative identity")
            if sorted(m[i]) != list(range(n)):
                raise CarrierError(f"{self.units[i]} is not invertible")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise CarrierError("multiplication is not commutative")
                for k in range(n):
                    if m[m[i][j]][k] != m[i][m[j][k]]:
                        raise CarrierError("multiplication is not associative")

    @property
    def n_units(self) -> int:
        return len(self.units)

    @property
    def minus_one(self) -> str:
        return self.epsilon

    def mul(self, a: str, b: str) -> str:
        return self._table[a, b]

    def neg(self, a: str) -> str:
        if a == self.zero:
            return a
        return self.units[self.neg_index[self.index[a]]]

    def inv(self, a: str) -> str:
        if a == self.zero:
            raise CarrierError("zero has no inverse")
        return self.units[self.inverse[self.index[a]]]

    def is_unit(self, a: str) -> bool:
        return a in self.index

    # -- formal sums -------------------------------------------------------
    def sum(self, terms: Iterable[str] = ()) -> "FormalSum":
        """Formal sum of the given element names; zeros are dropped."""
        counts = [0] * self.n_units
        for t in terms:
            t = str(t)
            if t == self.zero:
                continue
            if t not in self.index:
                raise CarrierError(f"unknown element {t!r}")
            counts[self.index[t]] += 1
        return FormalSum(self, tuple(counts))

    def from_pairs(self, pairs: Iterable[Sequence]) -> "FormalSum":
        """Inverse of :meth:`FormalSum.to_wire`: ``[[element, multiplicity], ...]``."""
        counts = [0] * self.n_units
        for name, mult in pairs:
            name = str(name)
            if name == self.zero:
                continue
            if int(mult) < 0:
                raise CarrierError("negative multiplicity")
            counts[self.index[name]] += int(mult)
        return FormalSum(self, tuple(counts))

    def empty(self) -> "FormalSum":
        return FormalSum(self, (0,) * self.n_units)

    def sums_of_norm(self, k: int) -> Iterator["FormalSum"]:
        """All formal sums of norm exactly ``k`` in lexicographic term order."""
        for combo in combinations_with_replacement(range(self.n_units), k):
            counts = [0] * self.n_units
            for i in combo:
                counts[i] += 1
            yield FormalSum(self, tuple(counts))

    def sums_up_to(self, bound: int, start: int = 0) -> Iterator["FormalSum"]:
        for k in range(start, bound + 1):
            yield from self.sums_of_norm(k)

    def __repr__(self):
        return f"TractCarrier(units={list(self.units)}, epsilon={self.epsilon!r})"


def _as_table(elements: Sequence[str], mul) -> dict:
    if isinstance(mul, Mapping):
        table = {(str(a), str(b)): str(c) for (a, b), c in mul.items()}
    else:
        rows = list(mul)
        if len(rows) != len(elements) or any(len(r) != len(elements) for r in rows):
            raise CarrierError("multiplication matrix has the wrong shape")
        table = {(a, b): str(rows[i][j])
                 for i, a in enumerate(elements) for j, b in enumerate(elements)}
    for a, b in product(elements, repeat=2):
        if (a, b) not in table:
            raise CarrierError(f"multiplication undefined for ({a}, {b})")
        if table[a, b] not in elements:
            raise CarrierError(f"{a}*{b} = {table[a, b]} is not an element")
    return table


class FormalSum:
    """Element of ``N[F^x]``: a multiset of units, stored as multiplicities.

    ``x - x`` is a two-term sum, not the empty one.
    """

    __slots__ = ("carrier", "counts", "_hash")

    def __init__(self, carrier: TractCarrier, counts: tuple):
        self.carrier = carrier
        self.counts = counts
        self._hash = hash(counts)

    @property
    def norm(self) -> int:
        return sum(self.counts)

    def __len__(self):
        return self.norm

    def is_empty(self) -> bool:
        return not any(self.counts)

    def __bool__(self):
        return not self.is_empty()

    def _same(self, other: "FormalSum"):
        if not isinstance(other, FormalSum):
            return NotImplemented
        if other.carrier is not self.carrier:
            raise CarrierError("formal sums over different carriers")
        return True

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.carrier is other.carrier and self.counts == other.counts

    def __hash__(self):
        return self._hash

    def sort_key(self):
        """Canonical (norm, lexicographic) ordering key."""
        return (self.norm, self.index_tuple())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def index_tuple(self) -> tuple:
        out = []
        for i, c in enumerate(self.counts):
            out.extend([i] * c)
        return tuple(out)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._same(other)
        return FormalSum(self.carrier, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __mul__(self, other: "FormalSum") -> "FormalSum":
        """Product in the group semiring (bilinear expansion)."""
        self._same(other)
        m = self.carrier.unit_mul
        counts = [0] * len(self.counts)
        for i, a in enumerate(self.counts):
            if a:
                row = m[i]
                for j, b in enumerate(other.counts):
                    if b:
                        counts[row[j]] += a * b
        return FormalSum(self.carrier, tuple(counts))

    def scale(self, u: str) -> "FormalSum":
        c = self.carrier
        if u == c.zero:
            raise CarrierError("cannot scale a formal sum by zero")
        return self.scale_index(c.index[u])

    def scale_index(self, u: int) -> "FormalSum":
        perm = self.carrier.scale_perm[u]
        counts = [0] * len(self.counts)
        for i, a in enumerate(self.counts):
            if a:
                counts[perm[i]] += a
        return FormalSum(self.carrier, tuple(counts))

    def __neg__(self) -> "FormalSum":
        return self.scale_index(self.carrier.eps_index)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def contains(self, other: "FormalSum") -> bool:
        """Sub-multiset test."""
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def remove(self, other: "FormalSum") -> "FormalSum":
        """Multiset difference; ``other`` must be contained in ``self``."""
        if not self.contains(other):
            raise CarrierError("not a sub-multiset")
        return FormalSum(self.carrier, tuple(a - b for a, b in zip(self.counts, other.counts)))

    def terms(self) -> list[str]:
        units = self.carrier.units
        return [units[i] for i in self.index_tuple()]

    def to_wire(self) -> list:
        """Sorted ``[[element, multiplicity], ...]`` (carrier order)."""
        units = self.carrier.units
        return [[units[i], c] for i, c in enumerate(self.counts) if c]

    def __repr__(self):
        if self.is_empty():
            return "0"
        return " + ".join(self.terms())

    __str__ = __repr__


# Functional aliases mirroring the operation names used across the package.

def fs_add(a: FormalSum, b: FormalSum) -> FormalSum:
    return a + b


def fs_scale(u: str, a: FormalSum) -> FormalSum:
    return a.scale(u)


def fs_negate(a: FormalSum) -> FormalSum:
    return -a


def sub_multisets(counts: tuple) -> Iterator[tuple]:
    """Every sub-multiset of a multiplicity vector, including empty and full."""
    return product(*(range(c + 1) for c in counts))
