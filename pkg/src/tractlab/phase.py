"""Phase hyperfield restricted to finite groups of rational points on the unit
circle, and the tract P' obtained by declaring every sum of norm >= 4 null.

Nullity of ``x_1 + ... + x_n`` means some strictly positive reals ``c_i``
give ``sum c_i x_i = 0``.  By Stiemke's alternative this fails exactly when
a direction ``w`` has ``<x_i, w> >= 0`` for all ``i`` with at least one
strict inequality.  In the plane the cone of such ``w`` is bounded by rays
perpendicular to the ``x_i``, so trying ``w = +-perp(x_i)`` decides the
question in exact rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .carrier import FormalSum, TractCarrier
from .hyperfields import HypersumResult
from .tract import NullOracle, Tract


@dataclass(frozen=True, order=True)
class PhasePoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if self.x * self.x + self.y * self.y != 1:
            raise ValueError(f"({self.x}, {self.y}) is not on the unit circle")

    @classmethod
    def parse(cls, pair: Sequence) -> "PhasePoint":
        return cls(Fraction(str(pair[0])), Fraction(str(pair[1])))

    def __mul__(self, other: "PhasePoint") -> "PhasePoint":
        return PhasePoint(self.x * other.x - self.y * other.y,
                          self.x * other.y + self.y * other.x)

    def __neg__(self) -> "PhasePoint":
        return PhasePoint(-self.x, -self.y)

    def conj(self) -> "PhasePoint":
        return PhasePoint(self.x, -self.y)

    def to_wire(self) -> list:
        return [str(self.x), str(self.y)]

    @property
    def name(self) -> str:
        special = {(1, 0): "1", (-1, 0): "-1", (0, 1): "i", (0, -1): "-i"}
        return special.get((self.x, self.y), f"({self.x},{self.y})")


ONE = PhasePoint(1, 0)


def _dot(p: PhasePoint, w: tuple) -> Fraction:
    return p.x * w[0] + p.y * w[1]


def contains_zero_positive_combination(points: Iterable[PhasePoint]) -> bool:
    """Do strictly positive coefficients exist making the points sum to zero?

    The empty list answers False; the tract layer handles the empty sum.
    """
    pts = list(points)
    if not pts:
        return False
    for p in pts:
        for w in ((-p.y, p.x), (p.y, -p.x)):
            dots = [_dot(q, w) for q in pts]
            if all(d >= 0 for d in dots) and any(d > 0 for d in dots):
                return False
    # no separating direction among the perpendiculars; the points may still
    # all lie on one open half-line, which the perpendiculars do not separate
    return _not_single_ray(pts)


def _not_single_ray(pts: list) -> bool:
    # every w perpendicular to a lone direction p gives <q, w> = 0, so the
    # loop above accepts {p, p, ...}; the direction p itself separates it
    for p in pts:
        w = (p.x, p.y)
        dots = [_dot(q, w) for q in pts]
        if all(d >= 0 for d in dots) and any(d > 0 for d in dots):
            return False
    return True


def phase_hypersum2(a: PhasePoint | None, b: PhasePoint | None) -> HypersumResult:
    """``a [+] b`` in the phase hyperfield (``None`` is zero).

    Equal phases give ``{a}``; opposite phases give ``{a, 0, -a}``; otherwise
    the open arc between them (shorter way round), reported symbolically.
    """
    if a is None and b is None:
        return HypersumResult("set", frozenset([None]), contains_zero=True)
    if a is None or b is None:
        p = a if b is None else b
        return HypersumResult("set", frozenset([p]), contains_zero=False)
    if a == b:
        return HypersumResult("set", frozenset([a]), contains_zero=False)
    if a == -b:
        return HypersumResult("set", frozenset([a, None, b]), contains_zero=True)
    cross = a.x * b.y - a.y * b.x
    arc = (a, b) if cross > 0 else (b, a)
    return HypersumResult("arc", arc=arc, contains_zero=False)


def quarter_turns() -> list[PhasePoint]:
    return [PhasePoint(1, 0), PhasePoint(-1, 0), PhasePoint(0, 1), PhasePoint(0, -1)]


def phase_carrier(points: Sequence[PhasePoint]) -> TractCarrier:
    """Carrier on a finite multiplicative group of circle points.

    Rejects sets that are not groups or do not contain -1.
    """
    pts = list(dict.fromkeys(points))
    if ONE not in pts:
        raise ValueError("point set must contain 1")
    if -ONE not in pts:
        raise ValueError("point set must contain -1")
    pset = set(pts)
    for p in pts:
        for q in pts:
            if p * q not in pset:
                raise ValueError(f"point set is not closed: {p.name} * {q.name}")
    pts.sort(key=lambda p: p != ONE)
    names = ["0"] + [p.name for p in pts]
    by_name = {p.name: p for p in pts}
    mul = {}
    for a in names:
        for b in names:
            if a == "0" or b == "0":
                mul[a, b] = "0"
            else:
                mul[a, b] = (by_name[a] * by_name[b]).name
    carrier = TractCarrier(names, mul, ONE.name, (-ONE).name)
    carrier.points = tuple(by_name[u] for u in carrier.units)
    return carrier


def _phase_member(carrier: TractCarrier):
    pts = carrier.points

    def member(a: FormalSum) -> bool:
        if a.is_empty():
            return True
        return contains_zero_positive_combination(
            [pts[i] for i, c in enumerate(a.counts) if c])

    return member


def make_phase_subset(points: Sequence[PhasePoint], bound: Optional[int] = None) -> Tract:
    """Phase tract on a finite point group: null iff 0 is a positive combination."""
    carrier = phase_carrier(points)
    return Tract(carrier, NullOracle(_phase_member(carrier), bound, "phase"))


def make_p_prime(points: Optional[Sequence[PhasePoint]] = None,
                 bound: Optional[int] = None) -> Tract:
    """Phase tract with every formal sum of norm >= 4 added to the null set."""
    carrier = phase_carrier(points or quarter_turns())
    base = _phase_member(carrier)

    def member(a: FormalSum) -> bool:
        return a.norm >= 4 or base(a)

    return Tract(carrier, NullOracle(member, bound, "P'"))
