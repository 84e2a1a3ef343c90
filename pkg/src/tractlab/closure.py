"""Saturation closures of null sets: the fusion closure of a pasture and the
iterated (MSF)-style closure of a tract, plus 3-term truncation."""
from __future__ import annotations

from .axioms import _Universe, _add, _neg
from .carrier import FormalSum
from .tract import NullOracle, OutOfBoundError, Pasture, Tract


def truncate3(t: Tract) -> Pasture:
    if not t.null.covers(3):
        raise OutOfBoundError(3, t.null.bound)
    rel = [a for a in t.carrier.sums_up_to(3) if t.is_null(a)]
    return Pasture(t.carrier, rel, name=f"trunc3({t.name})")


def _closure_oracle(carrier, members: set, bound: int, name: str) -> NullOracle:
    frozen = frozenset(members)
    oracle = NullOracle(lambda a: a.counts in frozen, bound, name)
    oracle.members = frozen
    return oracle


def fusion_closure(p: Pasture, bound: int) -> NullOracle:
    """Smallest (F)-closed null set containing the pasture's relations,
    truncated at ``bound``.

    Saturation by worklist: each new member ``s`` is fused with every member
    ``t`` (itself included) along every ``z`` in the carrier.  For ``z = 0``
    the fused sum is ``s + t``; for a unit ``z`` it is ``s + t`` with one
    ``z`` removed from ``s`` and one ``-z`` removed from ``t``.
    """
    if bound < 3:
        raise ValueError("fusion closure needs bound >= 3")
    c = p.carrier
    n = c.n_units
    members = set(p.null3)
    neg = c.neg_index
    work = sorted(members)
    pool = list(members)
    while work:
        fresh = []
        for s in work:
            ns = sum(s)
            for t in pool:
                nt = sum(t)
                cands = []
                if ns + nt <= bound:
                    cands.append(_add(s, t))
                if ns + nt - 2 <= bound:
                    # s = alpha + z, t = beta - z; the swapped roles are the z -> -z case
                    for z in range(n):
                        mz = neg[z]
                        if s[z] and t[mz]:
                            r = list(_add(s, t))
                            r[z] -= 1
                            r[mz] -= 1
                            cands.append(tuple(r))
                for r in cands:
                    if r not in members:
                        members.add(r)
                        fresh.append(r)
        pool = list(members)
        work = fresh
    return _closure_oracle(c, members, bound, f"fusion_closure({p.name})")


def fusion_candidates(carrier, members: set, bound: int, universe: _Universe,
                      min_norm: int):
    """All alpha + beta with 4 <= ... fused from ``members``.

    Yields ``alpha + beta`` for every gamma (empty, or not in ``members``)
    with ``alpha + gamma`` and ``beta - gamma`` in ``members``, respecting
    the norm caps used by :func:`tractlab.axioms.check_msf`.
    """
    for g in universe.up_to(bound - 2):
        ng = sum(g)
        if ng and g in members:
            continue
        mg = _neg(carrier, g)
        A = [a for a in universe.up_to(bound - ng) if _add(a, g) in members]
        B = [b for b in universe.up_to(bound - ng) if _add(b, mg) in members]
        for a in A:
            na = sum(a)
            for b in B:
                nab = na + sum(b)
                if min_norm <= nab <= bound:
                    yield _add(a, b)


def sigma_closure(t: Tract, bound: int, return_stages: bool = False):
    """Iterated (MSF)-type saturation of the null set of ``t`` up to ``bound``.

    Stage k+1 adds every alpha + beta of norm >= 4 such that either alpha and
    beta are both in stage k, or alpha + gamma and beta - gamma are in stage k
    for some gamma not in stage k.  Stages are cumulative and recomputed
    until nothing changes; gamma-nullity is always judged against the
    current stage.
    """
    if bound < 4:
        raise ValueError("sigma closure needs bound >= 4")
    if not t.null.covers(bound):
        raise OutOfBoundError(bound, t.null.bound)
    c = t.carrier
    U = _Universe(c, bound)
    members = t.null_table(bound)
    stages = [len(members)]
    while True:
        new = {r for r in fusion_candidates(c, members, bound, U, 4) if r not in members}
        if not new:
            break
        members = members | new
        stages.append(len(members))
    oracle = _closure_oracle(c, members, bound, f"sigma({t.name})")
    if return_stages:
        return oracle, stages
    return oracle


def closure_tract(t_or_p, oracle: NullOracle, name: str = "") -> Tract:
    carrier = t_or_p.carrier
    involution = getattr(t_or_p, "involution", None)
    return Tract(carrier, oracle, involution, name=name or oracle.name)


def members_as_sums(oracle: NullOracle, carrier) -> list[FormalSum]:
    return sorted(FormalSum(carrier, c) for c in oracle.members)
