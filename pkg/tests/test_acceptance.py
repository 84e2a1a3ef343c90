"""Acceptance suite: one test per criterion, each printing one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are written
with capture disabled so they appear in the normal pytest output.
"""
import time

import pytest

from tractlab.axioms import (check_fusion, check_idyll, check_msf, check_strong_fusion,
                             check_sum_prime, check_tract_axioms, strong_fusion_holds_for)
from tractlab.closure import closure_tract, sigma_closure
from tractlab.fixtures import FIXTURES, fixture
from tractlab.fmatroids import (GenVector, check_dual_pair, check_lower_term, check_minor_props,
                                check_supp_lemma, check_wedge_closure, certify_strong_perfection,
                                expand_matroid, gen_covectors, inner_product, is_gen_covector,
                                is_gen_vector, parallel_extend, series_extend)
from tractlab.hyperfields import (check_hap, check_stringency_equivalence, make_product,
                                  make_sign, tract_of)
from tractlab.partial_fields import gf_tract
from tractlab.phase import make_p_prime


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, checks: dict):
        failed = [k for k, ok in checks.items() if not ok]
        tag = "PASS" if not failed else "FAIL"
        extra = f" [failed: {', '.join(failed)}]" if failed else ""
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:2d} {tag}: {title}{extra}")
        assert not failed, failed
    return emit


def sign_product():
    return tract_of(make_product(make_sign(), make_sign()))


def same_orbit(t, w, alpha, beta, gamma) -> bool:
    return w is not None and any(
        w["alpha"] == alpha.scale(u) and w["beta"] == beta.scale(u) and w["gamma"] == gamma.scale(u)
        for u in t.carrier.units)


def test_criterion_01_sign_tract_axioms(verdict):
    t0 = time.perf_counter()
    t = tract_of(make_sign())
    reps = check_tract_axioms(t, 6) + [check_idyll(t, 6), check_fusion(t, 6),
                                       check_strong_fusion(t, 6), check_msf(t, 6)]
    elapsed = time.perf_counter() - t0
    checks = {r.axiom: r.holds for r in reps}
    checks[f"runtime {elapsed:.2f} s < 10 s"] = elapsed < 10
    verdict(1, "sign tract passes T1-T3, I, F, SF, MSF at bound 6", checks)


def test_criterion_02_sign_product_counterexample(verdict):
    t = sign_product()
    c = t.carrier
    alpha = c.sum(["(1,-1)", "(1,-1)"])
    beta = c.sum(["(1,1)", "(1,1)"])
    gamma = c.sum(["(1,1)", "(-1,1)"])
    sf, msf, f = check_strong_fusion(t, 6), check_msf(t, 6), check_fusion(t, 6)
    verdict(2, "SxS fails SF and MSF with the known triple (up to units); F holds at bound 6", {
        "SF fails": not sf.holds,
        "MSF fails": not msf.holds,
        "MSF minimal witness in the triple's orbit": same_orbit(t, msf.witness, alpha, beta, gamma),
        "SF minimal witness with |alpha+beta| >= 4 in the triple's orbit":
            same_orbit(t, sf.detail.get("msf_witness"), alpha, beta, gamma),
        "triple violates SF": strong_fusion_holds_for(t, alpha, beta, gamma) is False,
        "F holds": f.holds,
    })


def test_criterion_03_p_prime(verdict):
    t = make_p_prime()
    c = t.carrier
    msf, sf = check_msf(t, 6), check_strong_fusion(t, 6)
    want = {"alpha": c.sum(["1"]), "beta": c.sum(["1", "1"]), "gamma": c.sum(["-1", "-1"])}
    assert c.units == ("1", "-1", "i", "-i")
    verdict(3, "P' passes MSF at bound 6 and fails SF with alpha=1, beta=1+1, gamma=-1+-1", {
        "MSF holds": msf.holds, "SF fails": not sf.holds, "SF witness": sf.witness == want})


def test_criterion_04_hap(verdict):
    a = check_hap(make_sign(), 6)
    b = check_hap(make_product(make_sign(), make_sign()), 5)
    verdict(4, "fusion closure of the 3-term pasture equals the tract (S to 6, SxS to 5)",
            {"S bound 6": a.holds, "SxS bound 5": b.holds})


def test_criterion_05_stringency(verdict):
    a = check_stringency_equivalence(make_sign(), 5)
    b = check_stringency_equivalence(make_product(make_sign(), make_sign()), 5)
    verdict(5, "stringency agrees with SF (sign true/true, SxS false/false)", {
        "sign stringent": a.detail["stringent"] is True,
        "sign SF": a.detail["SF"] is True,
        "sign singleton hypersums to length 5": a.holds,
        "SxS not stringent": b.detail["stringent"] is False,
        "SxS not SF": b.detail["SF"] is False,
        "SxS agreement": b.holds,
    })


def test_criterion_06_prime_fields(verdict):
    verdict(6, "GF(2) and GF(3) tract embeddings pass SF at bound 6",
            {f"GF({p})": check_strong_fusion(gf_tract(p), 6).holds for p in (2, 3)})


def test_criterion_07_sigma(verdict):
    s = tract_of(make_sign())
    ss = sign_product()
    verdict(7, "sigma(F_S) = F_S to norm 6; sigma(SxS) passes MSF at bound 6", {
        "sigma(F_S) = F_S": sigma_closure(s, 6).members == s.null_table(6),
        "sigma(SxS) MSF": check_msf(closure_tract(ss, sigma_closure(ss, 6)), 6).holds,
    })


def test_criterion_08_wedge(verdict):
    checks = {}
    for name in ("u23_sign", "u12_sign"):
        rep = check_wedge_closure(fixture(name), 2)
        checks[f"{name} ({rep.detail['wedges_checked']} wedges)"] = rep.holds
    verdict(8, "wedges of generalized covectors are generalized covectors at coord bound 2", checks)


def test_criterion_09_sum_prime(verdict):
    s = tract_of(make_sign())
    checks = {}
    for n, b in ((3, 6), (4, 8)):
        rep = check_sum_prime(s, n, b)
        checks[f"n={n} norm<={b} ({rep.detail['instances']} instances)"] = (
            rep.holds and rep.detail["instances"] > 0)
    verdict(9, "sum' over S finds no violation", checks)


def test_criterion_10_lower_term(verdict):
    verdict(10, "pairs with |X.Y| <= 3 are orthogonal on every fixture",
            {name: check_lower_term(fixture(name), 2).holds for name in FIXTURES})


def test_criterion_11_certificates(verdict):
    checks = {}
    for name in ("u12_sign", "u23_sign", "u23_gf3"):
        t0 = time.perf_counter()
        rep = certify_strong_perfection(fixture(name), 2)
        dt = time.perf_counter() - t0
        cert = rep.detail["certificate"]
        checks[f"{name} certified ({cert['pairs_checked']} pairs)"] = (
            rep.holds and cert["verdict"] == "certified" and cert["pairs_checked"] > 0)
        checks[f"{name} {dt:.2f} s < 60 s"] = dt < 60
    verdict(11, "strong-perfection certificates at coord bound 2", checks)


def test_criterion_12_series_parallel(verdict):
    checks = {}
    for name in FIXTURES:
        fm = fixture(name)
        ok_s = ok_p = pair_s = pair_p = True
        for e in fm.ground:
            s, p = series_extend(fm, e), parallel_extend(fm, e)
            pair = frozenset([f"{e}a", f"{e}b"])
            ok_s &= check_dual_pair(s).holds
            ok_p &= check_dual_pair(p).holds
            pair_s &= any(frozenset(D.support()) == pair for D in s.cocircuits)
            pair_p &= any(frozenset(C.support()) == pair for C in p.circuits)
        checks[f"{name} series DP"] = ok_s
        checks[f"{name} parallel DP"] = ok_p
        checks[f"{name} series pair cocircuit"] = pair_s
        checks[f"{name} parallel pair circuit"] = pair_p
    fm = fixture("u12_sign")
    t = fm.tract
    X = GenVector.from_values(t.carrier, fm.ground, [["1", "-1"], "1"])
    preserved = genuine = True
    n = 0
    for Y in gen_covectors(fm, 2):
        fm2, X2, Y2 = expand_matroid(fm, X, Y)
        n += 1
        preserved &= inner_product(t, X2, Y2) == inner_product(t, X, Y)
        genuine &= (X2.is_fvector() and Y2.is_fvector() and check_dual_pair(fm2).holds
                    and is_gen_vector(fm2, X2) and is_gen_covector(fm2, Y2))
    checks["X=(1+(-1),1) is a generalized vector"] = is_gen_vector(fm, X)
    checks[f"expansion preserves X.Y exactly ({n} covectors)"] = preserved and n > 0
    checks["expanded pair are F-(co)vectors of a dual pair"] = genuine
    verdict(12, "series/parallel extensions are dual pairs; expansion preserves X.Y", checks)


def test_criterion_13_minors(verdict):
    checks = {}
    for name in FIXTURES:
        fm = fixture(name)
        checks[f"{name} minors"] = check_minor_props(fm, 2).holds
        checks[f"{name} supp"] = check_supp_lemma(fm, 2).holds
    verdict(13, "minor propositions and the support lemma at coord bound 2", checks)
