"""Classical matroids on small ground sets, presented by circuits.

Ground elements are arbitrary hashable labels kept in a fixed order; every
subset computation goes through brute force over that order, which is fine
for the handful of elements the exhaustive checks can afford anyway.
"""
from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Sequence


class MatroidError(ValueError):
    pass


def _minimal(sets: Iterable[frozenset]) -> set[frozenset]:
    sets = {frozenset(s) for s in sets if s}
    return {s for s in sets if not any(t < s for t in sets)}


class Matroid:
    def __init__(self, ground: Sequence[Hashable], circuits: Iterable[Iterable], check: bool = True):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise MatroidError("duplicate ground elements")
        self.circuits = frozenset(frozenset(c) for c in circuits)
        if check:
            self._check()
        self._bases = None

    def _check(self):
        E = set(self.ground)
        for c in self.circuits:
            if not c:
                raise MatroidError("empty circuit")
            if not c <= E:
                raise MatroidError(f"circuit {set(c)} not inside the ground set")
        for a in self.circuits:
            for b in self.circuits:
                if a < b:
                    raise MatroidError("circuits are not an antichain")
                if a != b:
                    for e in a & b:
                        u = (a | b) - {e}
                        if not any(c <= u for c in self.circuits):
                            raise MatroidError("circuit elimination fails")

    def order(self, subset) -> tuple:
        return tuple(e for e in self.ground if e in subset)

    def positions(self, subset) -> tuple:
        """Ground-order positions of ``subset``; a sort key safe for mixed labels."""
        return tuple(i for i, e in enumerate(self.ground) if e in subset)

    def is_independent(self, subset) -> bool:
        s = frozenset(subset)
        return not any(c <= s for c in self.circuits)

    def bases(self) -> list[frozenset]:
        if self._bases is None:
            for r in range(len(self.ground), -1, -1):
                found = [frozenset(s) for s in combinations(self.ground, r) if self.is_independent(s)]
                if found:
                    self._bases = found
                    break
        return self._bases

    def rank(self) -> int:
        return len(self.bases()[0])

    def dual(self) -> "Matroid":
        """Circuits of the dual: minimal sets meeting every basis."""
        E = frozenset(self.ground)
        cobases = [E - b for b in self.bases()]
        dependent = []
        for r in range(1, len(self.ground) + 1):
            for s in combinations(self.ground, r):
                fs = frozenset(s)
                if not any(fs <= cb for cb in cobases):
                    dependent.append(fs)
        return Matroid(self.ground, _minimal(dependent), check=False)

    def delete(self, e) -> "Matroid":
        self._need(e)
        return Matroid([x for x in self.ground if x != e],
                       [c for c in self.circuits if e not in c], check=False)

    def contract(self, e) -> "Matroid":
        self._need(e)
        return Matroid([x for x in self.ground if x != e],
                       _minimal(c - {e} for c in self.circuits), check=False)

    def loops(self) -> list:
        return [e for e in self.ground if frozenset([e]) in self.circuits]

    def coloops(self) -> list:
        return self.dual().loops()

    def parallel_extend(self, e, e1, e2) -> "Matroid":
        """Replace ``e`` by two parallel elements appended to the ground set."""
        self._need(e)
        rest = [x for x in self.ground if x != e]
        if e1 in rest or e2 in rest or e1 == e2:
            raise MatroidError("fresh labels collide with the ground set")
        circs = [{e1, e2}]
        for c in self.circuits:
            if e in c:
                circs.append((c - {e}) | {e1})
                circs.append((c - {e}) | {e2})
            else:
                circs.append(c)
        return Matroid(rest + [e1, e2], _minimal(circs), check=False)

    def series_extend(self, e, e1, e2) -> "Matroid":
        d = self.dual().parallel_extend(e, e1, e2)
        return d.dual()

    def relabel(self, mapping: dict) -> "Matroid":
        return Matroid([mapping.get(x, x) for x in self.ground],
                       [{mapping.get(x, x) for x in c} for c in self.circuits], check=False)

    def _need(self, e):
        if e not in self.ground:
            raise MatroidError(f"{e!r} is not in the ground set")

    def __eq__(self, other):
        return (isinstance(other, Matroid) and set(self.ground) == set(other.ground)
                and self.circuits == other.circuits)

    def __hash__(self):
        return hash((frozenset(self.ground), self.circuits))

    def __repr__(self):
        cs = [self.order(c) for c in sorted(self.circuits, key=self.positions)]
        return f"Matroid(ground={list(self.ground)}, circuits={cs})"


def matroid_from_circuits(E, circuits) -> Matroid:
    return Matroid(E, circuits)


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n} on ground set 1..n."""
    if not 0 <= r <= n:
        raise MatroidError("need 0 <= r <= n")
    E = list(range(1, n + 1))
    return Matroid(E, [frozenset(c) for c in combinations(E, r + 1)], check=False)


def dual(M: Matroid) -> Matroid:
    return M.dual()


def delete(M: Matroid, e) -> Matroid:
    return M.delete(e)


def contract(M: Matroid, e) -> Matroid:
    return M.contract(e)
