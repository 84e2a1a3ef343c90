from collections import Counter

import pytest

from conftest import product_null
from tractlab.axioms import check_fusion, check_msf
from tractlab.closure import (closure_tract, fusion_closure, members_as_sums, sigma_closure,
                              truncate3)
from tractlab.hyperfields import pasture_of, make_product, make_sign


def naive_fusion_closure(carrier, seed: set, bound: int) -> set:
    """Fixpoint of the fusion rule over every pair and every z, recomputed from scratch."""
    members = set(seed)
    units = carrier.units
    while True:
        new = set()
        sums = [carrier.empty().__class__(carrier, c) for c in members]
        for s in sums:
            for t in sums:
                if s.norm + t.norm <= bound:
                    new.add((s + t).counts)
                for z in units:
                    zs, mz = carrier.sum([z]), carrier.sum([carrier.neg(z)])
                    if s.contains(zs) and t.contains(mz):
                        r = s.remove(zs) + t.remove(mz)
                        if r.norm <= bound:
                            new.add(r.counts)
        if new <= members:
            return members
        members |= new


def test_truncation_keeps_short_relations(SS):
    p = truncate3(SS)
    assert p.null3 == SS.null_table(3)


@pytest.mark.parametrize("name,bound", [("S", 6), ("SS", 5), ("P", 5)])
def test_fusion_closure_matches_naive_fixpoint(name, bound, request):
    t = request.getfixturevalue(name)
    p = truncate3(t)
    assert fusion_closure(p, bound).members == naive_fusion_closure(t.carrier, set(p.null3), bound)


def test_product_closure_counts(SS):
    closed = fusion_closure(pasture_of(make_product(make_sign(), make_sign())), 5)
    by_norm = Counter(sum(c) for c in closed.members)
    assert dict(by_norm) == {0: 1, 2: 2, 3: 8, 4: 19, 5: 36}
    independent = Counter(a.norm for a in SS.carrier.sums_up_to(5) if product_null(a.terms()))
    assert by_norm == independent


def test_closure_is_fusion_closed_and_sound(SS):
    o = fusion_closure(truncate3(SS), 5)
    t = closure_tract(SS, o)
    assert check_fusion(t, 5).holds
    assert o.members <= SS.null_table(5)
    assert members_as_sums(o, SS.carrier)[0].is_empty()


def test_p_prime_closure_is_small(P):
    # the norm >= 4 sums of P' are not forced by its 3-term relations
    o = fusion_closure(truncate3(P), 5)
    assert len(o.members) == 26
    assert len(P.null_table(5)) == 98


def test_sigma_is_identity_on_sign(S):
    o, stages = sigma_closure(S, 6, return_stages=True)
    assert o.members == S.null_table(6)
    assert stages == [len(S.null_table(6))]


def test_sigma_of_product(SS):
    o, stages = sigma_closure(SS, 6, return_stages=True)
    assert stages == [126, 174, 186]
    assert SS.null_table(6) < o.members
    assert check_msf(closure_tract(SS, o), 6).holds


def test_closure_bounds(S):
    with pytest.raises(ValueError):
        fusion_closure(truncate3(S), 2)
    with pytest.raises(ValueError):
        sigma_closure(S, 3)


def test_fusion_closure_monotone_in_bound(SS):
    p = truncate3(SS)
    lo, hi = fusion_closure(p, 4).members, fusion_closure(p, 5).members
    assert lo == {c for c in hi if sum(c) <= 4}


@pytest.mark.parametrize("name", ["GF3", "P"])
def test_sigma_fixed_point_when_msf_holds(name, request):
    t = request.getfixturevalue(name)
    assert check_msf(t, 5).holds
    assert sigma_closure(t, 5).members == t.null_table(5)
