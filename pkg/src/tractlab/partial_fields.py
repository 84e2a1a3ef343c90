"""Partial fields P_(G,R) over finite commutative rings.

The pasture keeps the relations ``x + y + z = 0`` (and the shorter ones) in
``R``; the tract embedding declares a formal sum null when its ring sum
vanishes, for every norm.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from .axioms import _Universe
from .carrier import FormalSum, TractCarrier
from .closure import fusion_closure
from .tract import AxiomReport, NullOracle, OutOfBoundError, Pasture, Tract


class RingError(ValueError):
    pass


class FiniteRing:
    """Commutative ring with 1 given by addition and multiplication tables."""

    def __init__(self, elements: Sequence, add: Mapping, mul: Mapping, zero, one,
                 name: str = "", check: bool = True):
        self.elements = tuple(str(e) for e in elements)
        self.zero, self.one = str(zero), str(one)
        self.name = name
        self._add = {(str(a), str(b)): str(c) for (a, b), c in add.items()}
        self._mul = {(str(a), str(b)): str(c) for (a, b), c in mul.items()}
        if check:
            self._check()
        self._neg = {a: next(b for b in self.elements if self._add[a, b] == self.zero)
                     for a in self.elements}

    @classmethod
    def from_matrices(cls, elements, add_rows, mul_rows, zero, one, name=""):
        els = [str(e) for e in elements]
        add = {(a, b): add_rows[i][j] for i, a in enumerate(els) for j, b in enumerate(els)}
        mul = {(a, b): mul_rows[i][j] for i, a in enumerate(els) for j, b in enumerate(els)}
        return cls(els, add, mul, zero, one, name)

    def _check(self):
        E = self.elements
        for a, b in product(E, repeat=2):
            for op in (self._add, self._mul):
                if (a, b) not in op or op[a, b] not in E:
                    raise RingError(f"table undefined or not closed at ({a}, {b})")
        for a in E:
            if self._add[self.zero, a] != a:
                raise RingError("zero is not an additive identity")
            if self._mul[self.one, a] != a:
                raise RingError("one is not a multiplicative identity")
            if not any(self._add[a, b] == self.zero for b in E):
                raise RingError(f"{a} has no additive inverse")
        for a, b in product(E, repeat=2):
            if self._add[a, b] != self._add[b, a] or self._mul[a, b] != self._mul[b, a]:
                raise RingError("ring is not commutative")
        for a, b, c in product(E, repeat=3):
            if self._add[self._add[a, b], c] != self._add[a, self._add[b, c]]:
                raise RingError("addition is not associative")
            if self._mul[self._mul[a, b], c] != self._mul[a, self._mul[b, c]]:
                raise RingError("multiplication is not associative")
            if self._mul[a, self._add[b, c]] != self._add[self._mul[a, b], self._mul[a, c]]:
                raise RingError("multiplication does not distribute")

    def add(self, a, b):
        return self._add[a, b]

    def mul(self, a, b):
        return self._mul[a, b]

    def neg(self, a):
        return self._neg[a]

    def units(self) -> list[str]:
        return [a for a in self.elements if any(self._mul[a, b] == self.one for b in self.elements)]

    def total(self, terms: Iterable[str]) -> str:
        s = self.zero
        for t in terms:
            s = self._add[s, t]
        return s


def zmod(n: int) -> FiniteRing:
    if n < 2:
        raise RingError("n must be at least 2")
    els = [str(i) for i in range(n)]
    add = {(a, b): str((int(a) + int(b)) % n) for a in els for b in els}
    mul = {(a, b): str(int(a) * int(b) % n) for a in els for b in els}
    return FiniteRing(els, add, mul, "0", "1", name=f"Z/{n}", check=False)


def gf(p: int) -> FiniteRing:
    if p not in (2, 3, 5, 7):
        raise RingError("built-in prime fields are GF(p) for p in 2, 3, 5, 7")
    r = zmod(p)
    r.name = f"GF({p})"
    return r


class PartialFieldPasture:
    """A ring together with a unit subgroup containing -1."""

    def __init__(self, ring: FiniteRing, group: Sequence[str]):
        self.ring = ring
        self.group = tuple(group)
        units = set(ring.units())
        if not set(self.group) <= units:
            raise RingError("group must consist of units")
        if ring.neg(ring.one) not in self.group:
            raise RingError("group must contain -1")
        gset = set(self.group)
        for a in self.group:
            for b in self.group:
                if ring.mul(a, b) not in gset:
                    raise RingError("group is not closed under multiplication")
        els = [ring.zero] + list(self.group)
        mul = {(a, b): ring.mul(a, b) for a in els for b in els}
        self.carrier = TractCarrier(els, mul, ring.one, ring.neg(ring.one), ring.zero)
        self.name = f"P({ring.name})"

    def ring_sum(self, a: FormalSum) -> str:
        return self.ring.total(a.terms())

    def pasture(self) -> Pasture:
        rel = [a for a in self.carrier.sums_up_to(3) if self.ring_sum(a) == self.ring.zero]
        return Pasture(self.carrier, rel, name=self.name)


def make_partial_field(ring: FiniteRing, generators: Iterable[str]) -> PartialFieldPasture:
    """Subgroup of ``R^x`` generated by ``generators`` and -1."""
    gens = [str(g) for g in generators]
    units = set(ring.units())
    for g in gens:
        if g not in units:
            raise RingError(f"generator {g} is not a unit of {ring.name}")
    group = [ring.one]
    frontier = [ring.one]
    gens.append(ring.neg(ring.one))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = ring.mul(x, g)
                if y not in group:
                    group.append(y)
                    nxt.append(y)
        frontier = nxt
    group.sort(key=lambda e: (e != ring.one, ring.elements.index(e)))
    return PartialFieldPasture(ring, group)


def pasture_null(p: PartialFieldPasture, a: FormalSum) -> bool:
    if a.norm > 3:
        raise OutOfBoundError(a.norm, 3)
    return p.ring_sum(a) == p.ring.zero


def tract_embedding(p: PartialFieldPasture) -> Tract:
    """Null iff the ring sum of the terms vanishes (valid at every norm)."""
    zero = p.ring.zero
    return Tract(p.carrier, NullOracle(lambda a: p.ring_sum(a) == zero, None,
                                       f"embed({p.ring.name})"), name=f"embed({p.ring.name})")


def gf_tract(p: int) -> Tract:
    ring = gf(p)
    return tract_embedding(make_partial_field(ring, ring.units()))


def compare_closure_embedding(p: PartialFieldPasture, bound: int) -> AxiomReport:
    """Fusion closure of the 3-term pasture against the whole-sum tract.

    ``holds`` reports soundness (closure contained in the embedding);
    ``detail["equal"]`` says whether the two agree on all norms <= bound.
    """
    closed = fusion_closure(p.pasture(), bound)
    t = tract_embedding(p)
    U = _Universe(p.carrier, bound)
    unsound, missing = None, []
    for c in U.up_to(bound):
        a = U.wrap(c)
        if closed(a) and not t.is_null(a):
            unsound = unsound or a
        if t.is_null(a) and not closed(a):
            missing.append(a)
    return AxiomReport("closure<=embedding", unsound is None, bound,
                       None if unsound is None else {"sum": unsound},
                       detail={"equal": not missing and unsound is None,
                               "first_missing": missing[0] if missing else None,
                               "missing_count": len(missing)})
