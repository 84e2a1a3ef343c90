"""Tracts, pastures, null-set oracles, involutions and morphisms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional

from .carrier import CarrierError, FormalSum, TractCarrier


class OutOfBoundError(ValueError):
    """A null-set query exceeded the oracle's declared validity bound."""

    def __init__(self, norm: int, bound: int):
        super().__init__(f"formal sum of norm {norm} exceeds oracle bound {bound}")
        self.norm = norm
        self.bound = bound


class NullOracle:
    """Membership predicate for a null set ``N_F``.

    ``bound`` is the largest norm for which answers are meaningful; ``None``
    means unbounded.  Answers are memoised per multiplicity vector.
    """

    def __init__(self, membership: Callable[[FormalSum], bool],
                 bound: Optional[int] = None, name: str = ""):
        self._membership = membership
        self.bound = bound
        self.name = name
        self._cache: dict = {}

    def __call__(self, a: FormalSum) -> bool:
        if self.bound is not None and a.norm > self.bound:
            raise OutOfBoundError(a.norm, self.bound)
        hit = self._cache.get(a.counts)
        if hit is None:
            hit = bool(self._membership(a))
            self._cache[a.counts] = hit
        return hit

    def covers(self, bound: int) -> bool:
        return self.bound is None or bound <= self.bound

    @classmethod
    def explicit(cls, carrier: TractCarrier, sums: Iterable[FormalSum], bound: int,
                 name: str = "explicit", orbit_close: bool = True) -> "NullOracle":
        members = set()
        for s in sums:
            if s.norm > bound:
                raise OutOfBoundError(s.norm, bound)
            if orbit_close:
                members.update(s.scale_index(u).counts for u in range(carrier.n_units))
            else:
                members.add(s.counts)
        oracle = cls(lambda a: a.counts in members, bound, name)
        oracle.members = frozenset(members)
        return oracle


class Involution:
    """Multiplicative self-map of the carrier squaring to the identity."""

    def __init__(self, carrier: TractCarrier, mapping: Optional[Mapping[str, str]] = None):
        self.carrier = carrier
        if mapping is None:
            mapping = {e: e for e in carrier.elements}
        self.mapping = {str(k): str(v) for k, v in mapping.items()}
        if set(self.mapping) != set(carrier.elements):
            raise CarrierError("involution must be defined on every element")
        if self.mapping[carrier.zero] != carrier.zero:
            raise CarrierError("involution must fix zero")
        for e in carrier.elements:
            if self.mapping[self.mapping[e]] != e:
                raise CarrierError(f"involution does not square to the identity at {e}")
        for a in carrier.units:
            if self.mapping[a] == carrier.zero:
                raise CarrierError("involution must send units to units")
            for b in carrier.units:
                if self.mapping[carrier.mul(a, b)] != carrier.mul(self.mapping[a], self.mapping[b]):
                    raise CarrierError("involution is not multiplicative")
        self.is_identity = all(k == v for k, v in self.mapping.items())
        self._perm = [carrier.index[self.mapping[u]] for u in carrier.units]

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def apply(self, a: FormalSum) -> FormalSum:
        if self.is_identity:
            return a
        counts = [0] * len(a.counts)
        for i, c in enumerate(a.counts):
            counts[self._perm[i]] += c
        return FormalSum(a.carrier, tuple(counts))


class Tract:
    """A carrier, a null-set oracle and an involution."""

    def __init__(self, carrier: TractCarrier, null: NullOracle,
                 involution: Optional[Involution] = None, name: str = ""):
        self.carrier = carrier
        self.null = null
        self.involution = involution or Involution(carrier)
        if self.involution.carrier is not carrier:
            raise CarrierError("involution over a different carrier")
        self.name = name or null.name

    @property
    def bound(self) -> Optional[int]:
        return self.null.bound

    def is_null(self, a: FormalSum) -> bool:
        if a.carrier is not self.carrier:
            raise CarrierError("formal sum over a different carrier")
        return self.null(a)

    def sum(self, terms=()) -> FormalSum:
        return self.carrier.sum(terms)

    def null_table(self, bound: int) -> set:
        """Multiplicity vectors of every null sum of norm <= bound."""
        if not self.null.covers(bound):
            raise OutOfBoundError(bound, self.null.bound)
        return {a.counts for a in self.carrier.sums_up_to(bound) if self.null(a)}

    def __repr__(self):
        return f"Tract({self.name or '?'}, units={list(self.carrier.units)})"


def is_null(t: Tract, a: FormalSum) -> bool:
    return t.is_null(a)


class Pasture:
    """Carrier plus an explicit null set of sums of norm <= 3.

    Sums are given up to the unit action; the stored set is orbit-closed.
    """

    def __init__(self, carrier: TractCarrier, null3: Iterable[FormalSum], name: str = ""):
        self.carrier = carrier
        self.name = name
        members = set()
        for s in null3:
            if s.norm > 3:
                raise CarrierError(f"pasture relation {s} has norm {s.norm} > 3")
            for u in range(carrier.n_units):
                members.add(s.scale_index(u).counts)
        members.add(carrier.empty().counts)
        one_eps = carrier.sum([carrier.one, carrier.epsilon])
        if one_eps.counts not in members:
            raise CarrierError("pasture must contain 1 + epsilon")
        self.null3 = frozenset(members)

    def is_null(self, a: FormalSum) -> bool:
        if a.norm > 3:
            raise OutOfBoundError(a.norm, 3)
        return a.counts in self.null3

    def relations(self) -> list[FormalSum]:
        return sorted(FormalSum(self.carrier, c) for c in self.null3)

    def as_tract(self, name: str = "") -> Tract:
        """The pasture viewed as a tract valid up to norm 3."""
        return Tract(self.carrier, NullOracle(lambda a: a.counts in self.null3, 3,
                                              name or self.name), name=name or self.name)


@dataclass
class AxiomReport:
    axiom: str
    holds: bool
    bound_checked: Optional[int] = None
    witness: Optional[dict] = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"axiom": self.axiom, "holds": self.holds,
                               "bound_checked": self.bound_checked,
                               "witness": _wire(self.witness)}
        if self.detail:
            out["detail"] = _wire(self.detail)
        return out

    def summary(self) -> str:
        verdict = "holds" if self.holds else "FAILS"
        bound = "" if self.bound_checked is None else f" (bound {self.bound_checked})"
        line = f"{self.axiom} {verdict}{bound}"
        if self.witness:
            parts = ", ".join(f"{k}={_pretty(v)}" for k, v in self.witness.items())
            line += f"; witness: {parts}"
        return line


def _pretty(v):
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_pretty(x) for x in v) + ")"
    return str(v)


def _wire(obj):
    if isinstance(obj, FormalSum):
        return obj.to_wire()
    if hasattr(obj, "to_wire"):
        return obj.to_wire()
    if isinstance(obj, dict):
        return {str(k): _wire(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_wire(x) for x in obj]
    return obj


class Morphism:
    """Element map between tracts; see :func:`check_morphism`."""

    def __init__(self, source: Tract, target: Tract, mapping: Mapping[str, str]):
        self.source = source
        self.target = target
        self.mapping = {str(k): str(v) for k, v in mapping.items()}
        missing = set(source.carrier.elements) - set(self.mapping)
        if missing:
            raise CarrierError(f"morphism undefined on {sorted(missing)}")

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def apply(self, a: FormalSum) -> FormalSum:
        return self.target.carrier.sum(self.mapping[t] for t in a.terms())
