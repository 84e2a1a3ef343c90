"""Bounded exhaustive checkers for tract axioms and fusion-type axioms.

Every checker enumerates formal sums up to a norm bound in canonical order,
keeps the least violation in a fixed canonical order and records the
bound in the returned :class:`AxiomReport`.  Work is done on multiplicity
vectors against a precomputed null table; witnesses are re-wrapped as
:class:`FormalSum` objects.
"""
from __future__ import annotations

from itertools import combinations
from typing import Optional

from .carrier import FormalSum, TractCarrier
from .tract import AxiomReport, Morphism, OutOfBoundError, Tract


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _unit_vec(n: int, i: int) -> tuple:
    v = [0] * n
    v[i] = 1
    return tuple(v)


class _Universe:
    """All multiplicity vectors up to a norm bound, bucketed by norm."""

    def __init__(self, carrier: TractCarrier, bound: int):
        self.carrier = carrier
        self.bound = bound
        self.by_norm = [[s.counts for s in carrier.sums_of_norm(k)] for k in range(bound + 1)]
        self.key = {}
        for bucket in self.by_norm:
            for c in bucket:
                self.key[c] = FormalSum(carrier, c).sort_key()

    def up_to(self, k: int):
        for j in range(min(k, self.bound) + 1):
            yield from self.by_norm[j]

    def wrap(self, c: tuple) -> FormalSum:
        return FormalSum(self.carrier, c)


def _require(t: Tract, bound: int):
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if not t.null.covers(bound):
        raise OutOfBoundError(bound, t.null.bound)


def _neg(carrier: TractCarrier, c: tuple) -> tuple:
    perm = carrier.neg_index
    out = [0] * len(c)
    for i, m in enumerate(c):
        out[perm[i]] += m
    return tuple(out)


# -- (T1)-(T3) ----------------------------------------------------------------

def check_tract_axioms(t: Tract, bound: int) -> list[AxiomReport]:
    _require(t, bound)
    c = t.carrier
    reports = []
    empty = c.empty()
    reports.append(AxiomReport("T1", t.is_null(empty), bound,
                               None if t.is_null(empty) else {"sum": empty}))

    hits = [u for u in c.units if bound >= 2 and t.is_null(c.sum([c.one, u]))]
    ok = hits == [c.epsilon]
    reports.append(AxiomReport("T2", ok, bound, None if ok else {"units": hits},
                               detail={"epsilon": c.epsilon}))

    witness = None
    for a in c.sums_up_to(bound):
        na = t.is_null(a)
        for u in c.units:
            if t.is_null(a.scale(u)) != na:
                witness = {"sum": a, "unit": u}
                break
        if witness:
            break
    reports.append(AxiomReport("T3", witness is None, bound, witness))
    return reports


def check_involution(t: Tract, bound: int) -> AxiomReport:
    """The involution must map null sums to null sums."""
    _require(t, bound)
    tau = t.involution
    for a in t.carrier.sums_up_to(bound):
        if t.is_null(a) and not t.is_null(tau.apply(a)):
            return AxiomReport("involution", False, bound, {"sum": a})
    return AxiomReport("involution", True, bound)


# -- (I), (F), (SF), (MSF) ----------------------------------------------------

def check_idyll(t: Tract, bound: int) -> AxiomReport:
    """(I): null + null is null, over pairs with total norm <= bound."""
    _require(t, bound)
    U = _Universe(t.carrier, bound)
    null = t.null_table(bound)
    best = None
    nulls = [a for a in U.up_to(bound) if a in null]
    for a in nulls:
        na = sum(a)
        for b in nulls:
            if na + sum(b) > bound:
                continue
            s = _add(a, b)
            if s not in null:
                key = (sum(s), U.key[a], U.key[b])
                if best is None or key < best[0]:
                    best = (key, a, b)
    if best is None:
        return AxiomReport("I", True, bound)
    _, a, b = best
    return AxiomReport("I", False, bound, {"alpha": U.wrap(a), "beta": U.wrap(b)})


def check_fusion(t: Tract, bound: int) -> AxiomReport:
    """(F): alpha + z and beta - z null implies alpha + beta null.

    ``z`` ranges over the whole carrier including 0.  Only instances whose
    three sums all have norm <= bound are examined.
    """
    _require(t, bound)
    c = t.carrier
    U = _Universe(c, bound)
    null = t.null_table(bound)
    n = c.n_units
    best = None
    # z = 0 first, then units in carrier order
    for zi in [None] + list(range(n)):
        if zi is None:
            A = B = [a for a in U.up_to(bound) if a in null]
        else:
            ez = _unit_vec(n, zi)
            emz = _unit_vec(n, c.neg_index[zi])
            A = [a for a in U.up_to(bound - 1) if _add(a, ez) in null]
            B = [b for b in U.up_to(bound - 1) if _add(b, emz) in null]
        for a in A:
            na = sum(a)
            for b in B:
                if na + sum(b) > bound:
                    continue
                s = _add(a, b)
                if s not in null:
                    key = (sum(s), U.key[a], U.key[b], -1 if zi is None else zi)
                    if best is None or key < best[0]:
                        best = (key, a, b, zi)
    if best is None:
        return AxiomReport("F", True, bound)
    _, a, b, zi = best
    z = c.zero if zi is None else c.units[zi]
    return AxiomReport("F", False, bound, {"alpha": U.wrap(a), "beta": U.wrap(b), "z": z})


def _visible_at(na: int, nb: int, ng: int) -> int:
    """Smallest bound at which a (SF)-type instance is inside the search caps."""
    return max(na + nb, na + ng, nb + ng, ng + 2)


def _support(v: tuple) -> int:
    return sum(1 for x in v if x)


def _strong_fusion_scan(t: Tract, bound: int, min_norm: int, tag: str) -> AxiomReport:
    """Shared scan for (SF) and (MSF).

    Violations are ranked by the smallest bound exposing them, then by the
    number of distinct units across alpha, beta and gamma, then norms, then
    lexicographically, so the reported witness does not change as the
    bound grows.  For (SF) the least violation that also breaks (MSF)
    (``|alpha + beta| >= 4``) is kept in the detail.
    """
    _require(t, bound)
    c = t.carrier
    U = _Universe(c, bound)
    null = t.null_table(bound)
    best, best4 = None, None
    instances = 0
    for g in U.up_to(bound - 2):
        ng = sum(g)
        if ng and g in null:
            continue
        mg = _neg(c, g)
        A = [a for a in U.up_to(bound - ng) if _add(a, g) in null]
        B = [b for b in U.up_to(bound - ng) if _add(b, mg) in null]
        for a in A:
            na = sum(a)
            for b in B:
                nab = na + sum(b)
                if nab > bound or nab < min_norm:
                    continue
                instances += 1
                s = _add(a, b)
                if s not in null:
                    key = (_visible_at(na, sum(b), ng), _support(a) + _support(b) + _support(g),
                           nab, ng, U.key[a], U.key[b], U.key[g])
                    if best is None or key < best[0]:
                        best = (key, a, b, g)
                    if nab >= 4 and (best4 is None or key < best4[0]):
                        best4 = (key, a, b, g)
    detail: dict = {"instances": instances}
    if best is None:
        return AxiomReport(tag, True, bound, detail=detail)

    def wit(w):
        return {"alpha": U.wrap(w[1]), "beta": U.wrap(w[2]), "gamma": U.wrap(w[3])}

    if min_norm < 4:
        detail["msf_witness"] = None if best4 is None else wit(best4)
    return AxiomReport(tag, False, bound, wit(best), detail=detail)


def check_strong_fusion(t: Tract, bound: int) -> AxiomReport:
    """(SF) over triples with |alpha+beta|, |alpha+gamma|, |beta+gamma| <= bound
    and |gamma| <= bound - 2; gamma is empty or non-null."""
    return _strong_fusion_scan(t, bound, 0, "SF")


def check_msf(t: Tract, bound: int) -> AxiomReport:
    """(MSF): as :func:`check_strong_fusion`, conclusion only when |alpha+beta| >= 4."""
    return _strong_fusion_scan(t, bound, 4, "MSF")


def strong_fusion_holds_for(t: Tract, alpha: FormalSum, beta: FormalSum,
                            gamma: FormalSum) -> Optional[bool]:
    """Evaluate one (SF) instance directly through the oracle.

    Returns None if the hypotheses fail, else whether alpha + beta is null.
    """
    if not gamma.is_empty() and t.is_null(gamma):
        return None
    if not (t.is_null(alpha + gamma) and t.is_null(beta - gamma)):
        return None
    return t.is_null(alpha + beta)


# -- morphisms ----------------------------------------------------------------

def check_morphism(m: Morphism, bound: int) -> AxiomReport:
    src, tgt = m.source, m.target
    _require(src, bound)
    _require(tgt, bound)
    sc, tc = src.carrier, tgt.carrier
    if m(sc.zero) != tc.zero:
        return AxiomReport("morphism", False, bound, {"reason": "zero not preserved"})
    for u in sc.units:
        if not tc.is_unit(m(u)):
            return AxiomReport("morphism", False, bound, {"reason": "unit sent to zero", "element": u})
    for a in sc.units:
        for b in sc.units:
            if m(sc.mul(a, b)) != tc.mul(m(a), m(b)):
                return AxiomReport("morphism", False, bound,
                                   {"reason": "not multiplicative", "pair": [a, b]})
    for a in sc.sums_up_to(bound):
        if src.is_null(a) and not tgt.is_null(m.apply(a)):
            return AxiomReport("morphism", False, bound,
                               {"reason": "null sum not preserved", "sum": a, "image": m.apply(a)})
    return AxiomReport("morphism", True, bound)


# -- derived statements -------------------------------------------------------

def check_ffpt_decomposition(t: Tract, bound: int) -> AxiomReport:
    """Every null sum of norm 4..bound splits as alpha + beta with
    |alpha|, |beta| >= 2 and some z in F with alpha + z, beta - z null."""
    _require(t, bound)
    c = t.carrier
    U = _Universe(c, bound)
    null = t.null_table(bound)
    n = c.n_units
    zs = [None] + list(range(n))
    from .carrier import sub_multisets
    for g in U.up_to(bound):
        if sum(g) < 4 or g not in null:
            continue
        found = False
        for a in sub_multisets(g):
            na = sum(a)
            if na < 2 or sum(g) - na < 2:
                continue
            b = tuple(x - y for x, y in zip(g, a))
            for zi in zs:
                if zi is None:
                    ok = a in null and b in null
                else:
                    ok = (_add(a, _unit_vec(n, zi)) in null
                          and _add(b, _unit_vec(n, c.neg_index[zi])) in null)
                if ok:
                    found = True
                    break
            if found:
                break
        if not found:
            return AxiomReport("FFPT", False, bound, {"sum": U.wrap(g)})
    return AxiomReport("FFPT", True, bound)


def check_msf_prime(t: Tract, bound: int) -> AxiomReport:
    """gamma non-null, alpha + beta*gamma and delta - gamma null, and
    4 <= |alpha + beta*delta| <= bound imply alpha + beta*delta null."""
    _require(t, bound)
    c = t.carrier
    U = _Universe(c, bound)
    null = t.null_table(bound)
    instances = 0
    for g in U.up_to(bound):
        ng = sum(g)
        if ng == 0 or g in null:
            continue
        gs = U.wrap(g)
        mg = _neg(c, g)
        D = [d for d in U.up_to(bound - ng) if _add(d, mg) in null]
        for nb in range(1, bound // ng + 1):
            for b in U.by_norm[nb]:
                bs = U.wrap(b)
                bg = (bs * gs).counts
                A = [a for a in U.up_to(bound - nb * ng) if _add(a, bg) in null]
                for d in D:
                    nd = sum(d)
                    bd = (bs * U.wrap(d)).counts
                    for a in A:
                        total = sum(a) + nb * nd
                        if total < 4 or total > bound:
                            continue
                        instances += 1
                        if _add(a, bd) not in null:
                            return AxiomReport("MSF'", False, bound,
                                               {"alpha": U.wrap(a), "beta": bs,
                                                "gamma": gs, "delta": U.wrap(d)},
                                               detail={"instances": instances})
    return AxiomReport("MSF'", True, bound, detail={"instances": instances})


def check_sum_prime(t: Tract, n: int, bound: int) -> AxiomReport:
    """X_1..X_n with every (n-1)- and (n-2)-subset sum null have a null total."""
    _require(t, bound)
    if n < 2:
        raise ValueError("n must be at least 2")
    U = _Universe(t.carrier, bound)
    null = t.null_table(bound)
    subsets = [I for k in (n - 2, n - 1) if k >= 0 for I in combinations(range(n), k)]
    zero = t.carrier.empty().counts
    instances = 0

    def rec(prefix, budget):
        nonlocal instances
        if len(prefix) == n:
            for I in subsets:
                s = zero
                for i in I:
                    s = _add(s, prefix[i])
                if s not in null:
                    return None
            instances += 1
            total = zero
            for x in prefix:
                total = _add(total, x)
            return None if total in null else prefix
        for x in U.up_to(budget):
            bad = rec(prefix + [x], budget - sum(x))
            if bad is not None:
                return bad
        return None

    bad = rec([], bound)
    detail = {"n": n, "instances": instances}
    if bad is None:
        return AxiomReport("sum'", True, bound, detail=detail)
    return AxiomReport("sum'", False, bound, {"parts": [U.wrap(x) for x in bad]}, detail=detail)
