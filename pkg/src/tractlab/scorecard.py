"""Reruns the worked examples and counterexamples and grades each claim.

Each ``criterion_N`` returns a :class:`Result`; :func:`run_all` runs them
in order.  The ``demo`` CLI verb prints the scorecard and exits 0 only if
every line passes.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .axioms import (check_fusion, check_idyll, check_msf, check_strong_fusion,
                     check_sum_prime, check_tract_axioms, strong_fusion_holds_for)
from .closure import closure_tract, sigma_closure
from .fixtures import FIXTURES, fixture
from .fmatroids import (GenVector, check_dual_pair, check_lower_term, check_minor_props,
                        check_supp_lemma, check_wedge_closure, certify_perfection,
                        certify_strong_perfection, expand_matroid, gen_covectors,
                        inner_product, is_gen_covector, is_gen_vector, parallel_extend,
                        series_extend)
from .hyperfields import (check_hap, check_stringency_equivalence, make_product, make_sign,
                          tract_of)
from .partial_fields import gf_tract
from .phase import make_p_prime


@dataclass
class Result:
    number: int
    title: str
    checks: list = field(default_factory=list)  # (label, passed, note)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def add(self, label: str, ok: bool, note: str = ""):
        self.checks.append((label, bool(ok), note))

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        failed = [lbl for lbl, ok, _ in self.checks if not ok]
        extra = f" [failed: {', '.join(failed)}]" if failed else ""
        return f"{tag}  {self.number:2d}. {self.title}{extra}"


def sign_tract():
    return tract_of(make_sign())


def sign_product_tract():
    return tract_of(make_product(make_sign(), make_sign()))


def in_unit_orbit(t, witness: dict, alpha, beta, gamma) -> bool:
    """Is ``(alpha, beta, gamma)`` a common unit multiple of the witness triple?"""
    if witness is None:
        return False
    for u in t.carrier.units:
        if (witness["alpha"] == alpha.scale(u) and witness["beta"] == beta.scale(u)
                and witness["gamma"] == gamma.scale(u)):
            return True
    return False


def known_product_triple(t):
    c = t.carrier
    alpha = c.sum(["(1,-1)", "(1,-1)"])
    beta = c.sum(["(1,1)", "(1,1)"])
    gamma = c.sum(["(1,1)", "(-1,1)"])
    return alpha, beta, gamma


def _timed(fn):
    def wrapper():
        t0 = time.perf_counter()
        r = fn()
        r.seconds = time.perf_counter() - t0
        return r
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def criterion_1() -> Result:
    r = Result(1, "sign tract: T1-T3, I, F, SF, MSF at bound 6 in under 10 s")
    t0 = time.perf_counter()
    t = sign_tract()
    reps = check_tract_axioms(t, 6) + [check_idyll(t, 6), check_fusion(t, 6),
                                       check_strong_fusion(t, 6), check_msf(t, 6)]
    elapsed = time.perf_counter() - t0
    for rep in reps:
        r.add(rep.axiom, rep.holds, rep.summary())
    r.add("runtime < 10 s", elapsed < 10, f"{elapsed:.3f} s")
    return r


@_timed
def criterion_2() -> Result:
    r = Result(2, "SxS fails SF and MSF with the known triple as witness; F holds at bound 6")
    t = sign_product_tract()
    alpha, beta, gamma = known_product_triple(t)
    sf, msf, f = check_strong_fusion(t, 6), check_msf(t, 6), check_fusion(t, 6)
    r.add("SF fails", not sf.holds, sf.summary())
    r.add("MSF fails", not msf.holds, msf.summary())
    r.add("MSF witness in the triple's unit orbit",
          in_unit_orbit(t, msf.witness, alpha, beta, gamma), msf.summary())
    r.add("SF witness breaking MSF in the triple's unit orbit",
          in_unit_orbit(t, sf.detail.get("msf_witness"), alpha, beta, gamma))
    r.add("known triple violates SF", strong_fusion_holds_for(t, alpha, beta, gamma) is False)
    r.add("F holds", f.holds, f.summary())
    return r


@_timed
def criterion_3() -> Result:
    r = Result(3, "P' passes MSF at bound 6 and fails SF with alpha=1, beta=1+1, gamma=-1+-1")
    t = make_p_prime()
    c = t.carrier
    msf, sf = check_msf(t, 6), check_strong_fusion(t, 6)
    r.add("MSF holds", msf.holds, msf.summary())
    r.add("SF fails", not sf.holds, sf.summary())
    want = {"alpha": c.sum(["1"]), "beta": c.sum(["1", "1"]), "gamma": c.sum(["-1", "-1"])}
    r.add("SF witness", sf.witness == want, sf.summary())
    return r


@_timed
def criterion_4() -> Result:
    r = Result(4, "fusion closure of the 3-term pasture equals the hyperfield tract (S to 6, SxS to 5)")
    a = check_hap(make_sign(), 6)
    b = check_hap(make_product(make_sign(), make_sign()), 5)
    r.add("sign, bound 6", a.holds, a.summary())
    r.add("SxS, bound 5", b.holds, b.summary())
    return r


@_timed
def criterion_5() -> Result:
    r = Result(5, "stringency agrees with SF (sign true/true, SxS false/false)")
    a = check_stringency_equivalence(make_sign(), 5)
    b = check_stringency_equivalence(make_product(make_sign(), make_sign()), 5)
    r.add("sign stringent and SF", a.holds and a.detail["stringent"] and a.detail["SF"], a.summary())
    r.add("sign singleton hypersums up to length 5", a.holds)
    r.add("SxS neither", b.holds and not b.detail["stringent"] and not b.detail["SF"], b.summary())
    return r


@_timed
def criterion_6() -> Result:
    r = Result(6, "GF(2) and GF(3) tract embeddings pass SF at bound 6")
    for p in (2, 3):
        rep = check_strong_fusion(gf_tract(p), 6)
        r.add(f"GF({p})", rep.holds, rep.summary())
    return r


@_timed
def criterion_7() -> Result:
    r = Result(7, "sigma(F_S) = F_S up to norm 6; sigma(SxS) passes MSF at bound 6")
    s = sign_tract()
    o = sigma_closure(s, 6)
    r.add("sigma(F_S) = F_S", o.members == s.null_table(6))
    ss = sign_product_tract()
    rep = check_msf(closure_tract(ss, sigma_closure(ss, 6)), 6)
    r.add("sigma(SxS) passes MSF", rep.holds, rep.summary())
    return r


@_timed
def criterion_8() -> Result:
    r = Result(8, "wedge of generalized covectors is a generalized covector (U23/S, U12/S, coord bound 2)")
    for name in ("u23_sign", "u12_sign"):
        rep = check_wedge_closure(fixture(name), 2)
        r.add(name, rep.holds, rep.summary())
    return r


@_timed
def criterion_9() -> Result:
    r = Result(9, "sum' over S: n=3 to norm 6 and n=4 to norm 8")
    s = sign_tract()
    for n, b in ((3, 6), (4, 8)):
        rep = check_sum_prime(s, n, b)
        r.add(f"n={n}", rep.holds, rep.summary())
    return r


@_timed
def criterion_10() -> Result:
    r = Result(10, "pairs with |X.Y| <= 3 are orthogonal on every fixture")
    for name in FIXTURES:
        rep = check_lower_term(fixture(name), 2)
        r.add(name, rep.holds, rep.summary())
    return r


@_timed
def criterion_11() -> Result:
    r = Result(11, "strong-perfection certificates at coord bound 2, each under 60 s")
    for name in ("u12_sign", "u23_sign", "u23_gf3"):
        t0 = time.perf_counter()
        rep = certify_strong_perfection(fixture(name), 2)
        dt = time.perf_counter() - t0
        r.add(name, rep.holds, f"{rep.detail['pairs_checked']} pairs")
        r.add(f"{name} < 60 s", dt < 60, f"{dt:.2f} s")
        r.add(f"{name} perfection", certify_perfection(fixture(name)).holds)
    return r


@_timed
def criterion_12() -> Result:
    r = Result(12, "series/parallel extensions are dual pairs; expansion preserves X.Y")
    for name in FIXTURES:
        fm = fixture(name)
        for e in fm.ground:
            s = series_extend(fm, e)
            p = parallel_extend(fm, e)
            e1, e2 = f"{e}a", f"{e}b"
            pair = frozenset([e1, e2])
            r.add(f"{name} series at {e}", check_dual_pair(s).holds)
            r.add(f"{name} parallel at {e}", check_dual_pair(p).holds)
            r.add(f"{name} series pair cocircuit at {e}",
                  any(frozenset(D.support()) == pair for D in s.cocircuits))
            r.add(f"{name} parallel pair circuit at {e}",
                  any(frozenset(C.support()) == pair for C in p.circuits))
    fm = fixture("u12_sign")
    t = fm.tract
    X = GenVector.from_values(t.carrier, fm.ground, [["1", "-1"], "1"])
    ok = is_gen_vector(fm, X)
    n = 0
    for Y in gen_covectors(fm, 2):
        fm2, X2, Y2 = expand_matroid(fm, X, Y)
        n += 1
        ok = ok and inner_product(t, X2, Y2) == inner_product(t, X, Y)
        ok = ok and X2.is_fvector() and Y2.is_fvector()
        ok = ok and is_gen_vector(fm2, X2) and is_gen_covector(fm2, Y2)
        ok = ok and check_dual_pair(fm2).holds
    r.add("expansion of X=(1+(-1),1) against every covector", ok, f"{n} covectors")
    return r


@_timed
def criterion_13() -> Result:
    r = Result(13, "minor propositions and the support lemma on every fixture at coord bound 2")
    for name in FIXTURES:
        fm = fixture(name)
        a, b = check_minor_props(fm, 2), check_supp_lemma(fm, 2)
        r.add(f"{name} minors", a.holds, a.summary())
        r.add(f"{name} supp", b.holds, b.summary())
    return r


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
            criterion_13]


def run_all() -> list[Result]:
    return [c() for c in CRITERIA]
