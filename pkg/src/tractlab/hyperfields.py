"""Finite hyperfields (and hyperrings), their tracts and pastures.

A hyperfield is given by tables: multiplication, negation and hyperaddition
``a [+] b -> nonempty subset``.  Iterated hypersums fold left through the
union recursion.  :func:`tract_of` uses the invertible elements as the unit
group and declares a formal sum null when 0 lies in its hypersum, so the
componentwise product of two hyperfields (a hyperring with zero divisors)
still yields the product tract.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from .axioms import check_strong_fusion
from .carrier import FormalSum, TractCarrier
from .closure import fusion_closure
from .tract import AxiomReport, NullOracle, Pasture, Tract


@dataclass(frozen=True)
class HypersumResult:
    kind: str  # "set" or "arc"
    elements: Optional[frozenset] = None
    arc: Optional[tuple] = None
    contains_zero: bool = False

    def __len__(self):
        if self.elements is None:
            raise TypeError("symbolic hypersum has no finite size")
        return len(self.elements)


class Hyperfield:
    def __init__(self, elements: Sequence[str], zero: str, one: str,
                 mul: Mapping, neg: Mapping, add: Mapping, name: str = ""):
        self.elements = tuple(str(e) for e in elements)
        self.zero = str(zero)
        self.one = str(one)
        self.name = name
        self._mul = {(str(a), str(b)): str(c) for (a, b), c in mul.items()}
        self._neg = {str(a): str(b) for a, b in neg.items()}
        self._add = {(str(a), str(b)): frozenset(str(x) for x in v) for (a, b), v in add.items()}
        for a, b in product(self.elements, repeat=2):
            if (a, b) not in self._mul or (a, b) not in self._add:
                raise ValueError(f"tables undefined at ({a}, {b})")
        self.units = tuple(a for a in self.elements
                           if any(self._mul[a, b] == self.one for b in self.elements))
        self._fold_cache: dict = {}
        self._carrier: Optional[TractCarrier] = None

    def mul(self, a: str, b: str) -> str:
        return self._mul[a, b]

    def neg(self, a: str) -> str:
        return self._neg[a]

    def add(self, a: str, b: str) -> frozenset:
        return self._add[a, b]

    def add_sets(self, xs: Iterable[str], b: str) -> frozenset:
        out = set()
        for x in xs:
            out |= self._add[x, b]
        return frozenset(out)

    def hypersum(self, xs: Sequence[str]) -> frozenset:
        """Iterated hypersum by the left-fold union recursion."""
        xs = list(xs)
        if not xs:
            return frozenset([self.zero])
        acc = frozenset([xs[0]])
        for b in xs[1:]:
            acc = self.add_sets(acc, b)
        return acc

    def hypersum_of_counts(self, units: Sequence[str], counts: tuple) -> frozenset:
        """Memoised hypersum of a multiset of units given as multiplicities."""
        key = (units, counts)
        hit = self._fold_cache.get(key)
        if hit is not None:
            return hit
        if not any(counts):
            res = frozenset([self.zero])
        else:
            i = max(k for k, c in enumerate(counts) if c)
            rest = list(counts)
            rest[i] -= 1
            rest = tuple(rest)
            if not any(rest):
                res = frozenset([units[i]])
            else:
                res = self.add_sets(self.hypersum_of_counts(units, rest), units[i])
        self._fold_cache[key] = res
        return res

    def carrier(self) -> TractCarrier:
        """Carrier on ``{0} u units``; built once so all derived tracts share it."""
        if self._carrier is None:
            els = [self.zero] + list(self.units)
            mul = {(a, b): self._mul[a, b] for a in els for b in els}
            self._carrier = TractCarrier(els, mul, self.one, self._neg[self.one], self.zero)
        return self._carrier

    def __repr__(self):
        return f"Hyperfield({self.name or '?'}, {len(self.elements)} elements)"


def hypersum2(h: Hyperfield, a: str, b: str) -> HypersumResult:
    s = h.add(a, b)
    return HypersumResult("set", s, contains_zero=h.zero in s)


def hypersum_many(h: Hyperfield, xs: Sequence[str]) -> HypersumResult:
    if not xs:
        raise ValueError("hypersum of an empty list")
    s = h.hypersum(xs)
    return HypersumResult("set", s, contains_zero=h.zero in s)


# -- built-in examples --------------------------------------------------------

def make_sign() -> Hyperfield:
    els = ["0", "1", "-1"]
    val = {"0": 0, "1": 1, "-1": -1}
    name = {0: "0", 1: "1", -1: "-1"}
    mul = {(a, b): name[val[a] * val[b]] for a in els for b in els}
    neg = {a: name[-val[a]] for a in els}
    add = {}
    for a in els:
        for b in els:
            x, y = val[a], val[b]
            if x == 0 or y == 0:
                add[a, b] = [name[x + y]]
            elif x == y:
                add[a, b] = [a]
            else:
                add[a, b] = els
    return Hyperfield(els, "0", "1", mul, neg, add, name="sign")


def make_field(p: int) -> Hyperfield:
    """The prime field GF(p) viewed as a hyperfield with singleton sums."""
    els = [str(i) for i in range(p)]
    mul = {(a, b): str(int(a) * int(b) % p) for a in els for b in els}
    neg = {a: str(-int(a) % p) for a in els}
    add = {(a, b): [str((int(a) + int(b)) % p)] for a in els for b in els}
    return Hyperfield(els, "0", "1", mul, neg, add, name=f"GF({p})")


def make_product(h1: Hyperfield, h2: Hyperfield) -> Hyperfield:
    """Componentwise product; elements are named ``(a,b)``."""
    pairs = list(product(h1.elements, h2.elements))
    nm = {p: f"({p[0]},{p[1]})" for p in pairs}
    # (0,0) first so the carrier's zero leads; units keep lexicographic order
    pairs.sort(key=lambda p: (p != (h1.zero, h2.zero),))
    els = [nm[p] for p in pairs]
    mul = {(nm[a], nm[b]): nm[(h1.mul(a[0], b[0]), h2.mul(a[1], b[1]))]
           for a in pairs for b in pairs}
    neg = {nm[a]: nm[(h1.neg(a[0]), h2.neg(a[1]))] for a in pairs}
    add = {(nm[a], nm[b]): [nm[(x, y)] for x in sorted(h1.add(a[0], b[0]), key=h1.elements.index)
                            for y in sorted(h2.add(a[1], b[1]), key=h2.elements.index)]
           for a in pairs for b in pairs}
    return Hyperfield(els, nm[(h1.zero, h2.zero)], nm[(h1.one, h2.one)], mul, neg, add,
                      name=f"{h1.name}x{h2.name}")


# -- axioms -------------------------------------------------------------------

def check_hyperfield_axioms(h: Hyperfield) -> list[AxiomReport]:
    """(HG1)-(HG6) and (HR1)-(HR4), exhaustively over the finite carrier."""
    E, z = h.elements, h.zero
    reps = []

    def report(tag, bad):
        reps.append(AxiomReport(tag, bad is None, None, bad))

    report("HG1", next(({"a": a, "b": b} for a in E for b in E if not h.add(a, b)), None))

    bad = None
    for a, b, c in product(E, repeat=3):
        left = set()
        for d in h.add(b, c):
            left |= h.add(a, d)
        right = set()
        for d in h.add(a, b):
            right |= h.add(d, c)
        if left != right:
            bad = {"a": a, "b": b, "c": c}
            break
    report("HG2", bad)

    report("HG3", next(({"a": a} for a in E
                        if h.add(z, a) != {a} or h.add(a, z) != {a}), None))

    bad = None
    for a in E:
        inv = [b for b in E if z in h.add(a, b)]
        if inv != [h.neg(a)]:
            bad = {"a": a, "inverses": inv}
            break
    report("HG4", bad)

    report("HG5", next(({"a": a, "b": b} for a in E for b in E
                        if h.add(a, b) != h.add(b, a)), None))

    report("HG6", next(({"a": a, "b": b, "c": c} for a, b, c in product(E, repeat=3)
                        if (c in h.add(a, b)) != (b in h.add(c, h.neg(a)))), None))

    reps.append(AxiomReport("HR1", all(r.holds for r in reps), None))

    bad = None
    for a, b, c in product(E, repeat=3):
        if h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c)) or h.mul(a, b) != h.mul(b, a):
            bad = {"a": a, "b": b, "c": c}
            break
    if bad is None:
        bad = next(({"a": a} for a in E if h.mul(h.one, a) != a), None)
    report("HR2", bad)

    report("HR3", next(({"a": a} for a in E
                        if h.mul(z, a) != z or h.mul(a, z) != z), None))

    report("HR4", next(({"a": a, "b": b, "c": c} for a, b, c in product(E, repeat=3)
                        if {h.mul(a, d) for d in h.add(b, c)} != h.add(h.mul(a, b), h.mul(a, c))),
                       None))
    return reps


def check_units(h: Hyperfield) -> AxiomReport:
    """Hyperfield condition: 0 != 1 and every nonzero element is invertible."""
    non_units = [a for a in h.elements if a != h.zero and a not in h.units]
    ok = h.zero != h.one and not non_units
    return AxiomReport("HF", ok, None, None if ok else {"non_units": non_units})


def is_stringent(h: Hyperfield):
    """``(True, None)`` or ``(False, witness)`` with |a [+] b| != 1, a != -b."""
    for a in h.elements:
        for b in h.elements:
            if a == h.neg(b):
                continue
            s = h.add(a, b)
            if len(s) != 1:
                return False, {"a": a, "b": b, "sum": sorted(s, key=h.elements.index)}
    return True, None


def is_doubly_distributive(h: Hyperfield):
    for a, b, c, d in product(h.elements, repeat=4):
        left = set()
        for x in h.add(a, b):
            for y in h.add(c, d):
                left.add(h.mul(x, y))
        right = h.hypersum([h.mul(a, c), h.mul(b, c), h.mul(a, d), h.mul(b, d)])
        if left != right:
            return False, {"a": a, "b": b, "c": c, "d": d}
    return True, None


# -- tracts and pastures ------------------------------------------------------

def tract_of(h: Hyperfield, bound: Optional[int] = None) -> Tract:
    """Tract whose null sums are those with 0 in their iterated hypersum."""
    carrier = h.carrier()
    units = carrier.units

    def member(a: FormalSum) -> bool:
        return h.zero in h.hypersum_of_counts(units, a.counts)

    return Tract(carrier, NullOracle(member, bound, f"F_{h.name}"))


def pasture_of(h: Hyperfield) -> Pasture:
    t = tract_of(h)
    rel = [a for a in t.carrier.sums_up_to(3) if t.is_null(a)]
    return Pasture(t.carrier, rel, name=f"P_{h.name}")


def check_hap(h: Hyperfield, bound: int) -> AxiomReport:
    """Fusion closure of the 3-term pasture agrees with the hyperfield tract
    on every formal sum of norm <= bound (both inclusions)."""
    t = tract_of(h)
    closed = fusion_closure(pasture_of(h), bound)
    missing, extra = None, None
    for a in t.carrier.sums_up_to(bound):
        in_t, in_c = t.is_null(a), closed(a)
        if in_t and not in_c and missing is None:
            missing = a
        if in_c and not in_t and extra is None:
            extra = a
    ok = missing is None and extra is None
    witness = None
    if not ok:
        witness = {"in_tract_not_closure": missing, "in_closure_not_tract": extra}
    return AxiomReport("HAP", ok, bound, witness,
                       detail={"closure_size": len(closed.members)})


def check_stringency_equivalence(h: Hyperfield, bound: int) -> AxiomReport:
    """Stringency versus (SF) at the bound, plus the singleton-hypersum clause:
    for a stringent h every zero-free hypersum of length <= bound is a singleton."""
    stringent, s_wit = is_stringent(h)
    sf = check_strong_fusion(tract_of(h), bound)
    clause2 = None
    if stringent:
        for k in range(1, bound + 1):
            for combo in _multisets(h.elements, k):
                s = h.hypersum(combo)
                if h.zero not in s and len(s) != 1:
                    clause2 = {"terms": list(combo), "sum": sorted(s)}
                    break
            if clause2:
                break
    ok = stringent == sf.holds and clause2 is None
    witness = None
    if not ok:
        witness = {"stringent": stringent, "SF": sf.holds, "clause2": clause2}
    return AxiomReport("stringency<->SF", ok, bound, witness,
                       detail={"stringent": stringent, "SF": sf.holds,
                               "stringency_witness": s_wit, "SF_witness": sf.witness})


def _multisets(elements, k):
    from itertools import combinations_with_replacement
    return combinations_with_replacement(elements, k)


def weak_hyperfield_tract(base: Tract, name: str = "") -> Tract:
    """Keep the base null set below norm 4 and declare every sum of norm >= 4 null."""
    def member(a: FormalSum) -> bool:
        return a.norm >= 4 or base.is_null(a)
    return Tract(base.carrier, NullOracle(member, base.bound, name or f"weak({base.name})"),
                 base.involution)


__all__ = [
    "Hyperfield", "HypersumResult", "hypersum2", "hypersum_many", "make_sign", "make_field",
    "make_product", "check_hyperfield_axioms", "check_units", "is_stringent",
    "is_doubly_distributive", "tract_of", "pasture_of", "check_hap",
    "check_stringency_equivalence", "weak_hyperfield_tract",
]
