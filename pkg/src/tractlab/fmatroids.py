"""Matroids over tracts given by a dual pair of signatures.

Signatures store one representative per unit orbit, scaled so the first
support coordinate (in ground order) is 1.  Orthogonality to a whole orbit
follows from orthogonality of its representative because null sets are
closed under the unit action, so every check below runs on representatives.

Generalized vectors are enumerated exhaustively with every coordinate a
formal sum of norm at most ``coord_bound``; coordinates vary in ground
order (first coordinate slowest) and each coordinate runs through sums in
(norm, lex) order, so streams and reported witnesses are deterministic.
"""
from __future__ import annotations

from itertools import product
from typing import Hashable, Iterable, Iterator, Optional, Sequence

from .carrier import FormalSum, TractCarrier
from .matroids import Matroid
from .tract import AxiomReport, OutOfBoundError, Tract


class FMatroidError(ValueError):
    pass


class PairBoundError(OutOfBoundError):
    """Oracle bound exceeded while testing a specific pair of vectors."""

    def __init__(self, norm: int, bound: int, pair: tuple):
        super().__init__(norm, bound)
        self.pair = pair


class GenVector:
    """A map from the ground set to formal sums (zero is the empty sum)."""

    __slots__ = ("ground", "entries", "_hash")

    def __init__(self, ground: Sequence[Hashable], entries: Sequence[FormalSum]):
        self.ground = tuple(ground)
        self.entries = tuple(entries)
        if len(self.ground) != len(self.entries):
            raise FMatroidError("ground set and entries differ in length")
        self._hash = hash((self.ground, tuple(a.counts for a in self.entries)))

    @classmethod
    def from_values(cls, carrier: TractCarrier, ground: Sequence, values: Sequence) -> "GenVector":
        """``values[i]`` is an element name or a list of element names."""
        entries = []
        for v in values:
            if isinstance(v, FormalSum):
                entries.append(v)
            elif isinstance(v, (list, tuple)):
                entries.append(carrier.sum(v))
            else:
                entries.append(carrier.sum([v]))
        return cls(ground, entries)

    @property
    def carrier(self) -> TractCarrier:
        return self.entries[0].carrier

    def __getitem__(self, e) -> FormalSum:
        return self.entries[self.ground.index(e)]

    def support(self) -> tuple:
        return tuple(e for e, a in zip(self.ground, self.entries) if not a.is_empty())

    def is_zero(self) -> bool:
        return all(a.is_empty() for a in self.entries)

    def is_fvector(self) -> bool:
        return all(a.norm <= 1 for a in self.entries)

    def scale(self, u: str) -> "GenVector":
        return GenVector(self.ground, [a.scale(u) for a in self.entries])

    def drop(self, e) -> "GenVector":
        i = self.ground.index(e)
        return GenVector(self.ground[:i] + self.ground[i + 1:], self.entries[:i] + self.entries[i + 1:])

    def normalized(self) -> "GenVector":
        """Orbit representative of an F-vector: first support entry scaled to 1."""
        for a in self.entries:
            if not a.is_empty():
                lead = a.terms()[0]
                return self.scale(a.carrier.inv(lead))
        return self

    def norms(self) -> tuple:
        return tuple(a.norm for a in self.entries)

    def to_wire(self) -> dict:
        return {str(e): a.to_wire() for e, a in zip(self.ground, self.entries) if not a.is_empty()}

    def __eq__(self, other):
        return (isinstance(other, GenVector) and self.ground == other.ground
                and self.entries == other.entries)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        parts = []
        for a in self.entries:
            s = str(a)
            parts.append(f"{s}" if a.norm <= 1 else f"[{s}]")
        return "(" + ", ".join(parts) + ")"


def FVector(carrier: TractCarrier, ground: Sequence, values: Sequence[str]) -> GenVector:
    """A generalized vector whose coordinates are single elements or zero."""
    v = GenVector.from_values(carrier, ground, values)
    if not v.is_fvector():
        raise FMatroidError("F-vector coordinates must be single elements")
    return v


class FSignature:
    """Orbit representatives of an F-signature of ``matroid``."""

    def __init__(self, matroid: Matroid, vectors: Iterable[GenVector]):
        self.matroid = matroid
        reps = []
        for v in vectors:
            if v.ground != matroid.ground:
                raise FMatroidError("signature vector over a different ground set")
            n = v.normalized()
            if n not in reps:
                reps.append(n)
        pos = {e: i for i, e in enumerate(matroid.ground)}
        reps.sort(key=lambda v: (tuple(pos[e] for e in v.support()),
                                 tuple(a.index_tuple() for a in v.entries)))
        self.vectors = tuple(reps)

    def orbit(self, v: GenVector) -> list[GenVector]:
        return [v.scale(u) for u in v.carrier.units]

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __repr__(self):
        return f"FSignature({list(self.vectors)})"


def inner_product(t: Tract, X: GenVector, Y: GenVector) -> FormalSum:
    """``sum_e X(e) * tau(Y(e))`` expanded in the group semiring."""
    if X.ground != Y.ground:
        raise FMatroidError("inner product of vectors on different ground sets")
    carrier = t.carrier
    m = carrier.unit_mul
    perm = t.involution._perm
    n = carrier.n_units
    acc = [0] * n
    for a, b in zip(X.entries, Y.entries):
        ac, bc = a.counts, b.counts
        for i in range(n):
            if ac[i]:
                row = m[i]
                for j in range(n):
                    if bc[j]:
                        acc[row[perm[j]]] += ac[i] * bc[j]
    return FormalSum(carrier, tuple(acc))


def is_orthogonal(t: Tract, X: GenVector, Y: GenVector) -> bool:
    s = inner_product(t, X, Y)
    try:
        return t.is_null(s)
    except OutOfBoundError as exc:
        raise PairBoundError(exc.norm, exc.bound, (X, Y)) from None


def check_f_signature(sig: FSignature) -> AxiomReport:
    M = sig.matroid
    c0 = next((v for v in sig.vectors if v.is_zero()), None)
    c1 = next((v for v in sig.vectors if not v.is_fvector()), None)
    by_support: dict = {}
    for v in sig.vectors:
        by_support.setdefault(frozenset(v.support()), []).append(v)
    c2 = None
    for s, vs in by_support.items():
        if s and s not in M.circuits:
            c2 = {"reason": "support is not a circuit", "support": M.order(s)}
            break
        if len(vs) > 1:
            c2 = {"reason": "several orbits on one support", "support": M.order(s)}
            break
    if c2 is None:
        for c in sorted(M.circuits, key=M.positions):
            if c not in by_support:
                c2 = {"reason": "circuit without a signed representative", "support": M.order(c)}
                break
    detail = {"C0": c0 is None, "C1": c1 is None, "C2": c2 is None}
    witness = None
    if c0 is not None:
        witness = {"axiom": "C0", "vector": c0}
    elif c1 is not None:
        witness = {"axiom": "C1", "vector": c1}
    elif c2 is not None:
        witness = dict(axiom="C2", **c2)
    return AxiomReport("C0-C2", witness is None, None, witness, detail)


class FMatroid:
    """Underlying matroid with a dual pair of signatures over a tract."""

    def __init__(self, matroid: Matroid, circuits: FSignature, cocircuits: FSignature,
                 tract: Tract, check: bool = True, name: str = ""):
        self.matroid = matroid
        self.circuits = circuits
        self.cocircuits = cocircuits
        self.tract = tract
        self.name = name
        self._cache: dict = {}
        if check:
            rep = check_dual_pair(self)
            if not rep.holds:
                raise FMatroidError(rep.summary())

    @classmethod
    def from_vectors(cls, matroid: Matroid, tract: Tract, circuits: Iterable,
                     cocircuits: Iterable, check: bool = True, name: str = "") -> "FMatroid":
        """Circuits and cocircuits given as value lists in ground order."""
        def vec(v):
            if isinstance(v, GenVector):
                return v
            return FVector(tract.carrier, matroid.ground, v)
        return cls(matroid, FSignature(matroid, [vec(v) for v in circuits]),
                   FSignature(matroid.dual(), [vec(v) for v in cocircuits]),
                   tract, check=check, name=name)

    @property
    def ground(self) -> tuple:
        return self.matroid.ground

    def __repr__(self):
        return (f"FMatroid({self.name or '?'}, ground={list(self.ground)}, "
                f"circuits={list(self.circuits.vectors)}, "
                f"cocircuits={list(self.cocircuits.vectors)})")


def check_dual_pair(fm: FMatroid) -> AxiomReport:
    """(DP1) circuits form a signature of M, (DP2) cocircuits one of M*,
    (DP3) every circuit representative is orthogonal to every cocircuit one."""
    dp1 = check_f_signature(fm.circuits)
    dual_ok = fm.cocircuits.matroid.circuits == fm.matroid.dual().circuits
    dp2 = check_f_signature(fm.cocircuits)
    bad = None
    for C in fm.circuits:
        for D in fm.cocircuits:
            if not is_orthogonal(fm.tract, C, D):
                bad = {"circuit": C, "cocircuit": D, "product": inner_product(fm.tract, C, D)}
                break
        if bad:
            break
    detail = {"DP1": dp1.holds, "DP2": dp2.holds and dual_ok, "DP3": bad is None}
    witness = None
    if not dp1.holds:
        witness = {"axiom": "DP1", "signature": dp1.witness}
    elif not dual_ok:
        witness = {"axiom": "DP2", "reason": "cocircuit matroid is not the dual"}
    elif not dp2.holds:
        witness = {"axiom": "DP2", "signature": dp2.witness}
    elif bad is not None:
        witness = dict(axiom="DP3", **bad)
    return AxiomReport("DP1-DP3", witness is None, None, witness, detail)


def check_dp3_orbits(fm: FMatroid) -> AxiomReport:
    """DP3 over full unit orbits rather than representatives."""
    t = fm.tract
    for C in fm.circuits:
        for D in fm.cocircuits:
            for c in fm.circuits.orbit(C):
                for d in fm.cocircuits.orbit(D):
                    if not is_orthogonal(t, c, d):
                        return AxiomReport("DP3-orbits", False, None, {"circuit": c, "cocircuit": d})
    return AxiomReport("DP3-orbits", True)


# -- canonical signatures by search ------------------------------------------

def _signings(carrier: TractCarrier, ground: tuple, support: frozenset) -> Iterator[GenVector]:
    """Normalised signings of ``support`` in lexicographic unit-index order."""
    pos = [i for i, e in enumerate(ground) if e in support]
    units = carrier.units
    for rest in product(range(carrier.n_units), repeat=len(pos) - 1):
        vals = [carrier.zero] * len(ground)
        vals[pos[0]] = carrier.one
        for p, u in zip(pos[1:], rest):
            vals[p] = units[u]
        yield GenVector.from_values(carrier, ground, vals)


def find_dual_pair(matroid: Matroid, tract: Tract, name: str = "") -> Optional[FMatroid]:
    """Lexicographically least dual pair of signatures, or None.

    Circuits are signed first (circuits in ground-position order, signings
    in unit-index order); each cocircuit then takes its least signing
    orthogonal to all chosen circuits.
    """
    carrier, ground = tract.carrier, matroid.ground
    def key(c):
        return matroid.positions(c)

    circs = sorted(matroid.circuits, key=key)
    cocircs = sorted(matroid.dual().circuits, key=key)
    c_opts = [list(_signings(carrier, ground, c)) for c in circs]
    d_opts = [list(_signings(carrier, ground, d)) for d in cocircs]
    for choice in product(*c_opts):
        picked = []
        for opts in d_opts:
            d = next((d for d in opts if all(is_orthogonal(tract, c, d) for c in choice)), None)
            if d is None:
                break
            picked.append(d)
        else:
            return FMatroid(matroid, FSignature(matroid, choice),
                            FSignature(matroid.dual(), picked), tract, name=name)
    return None


# -- generalized vectors and covectors ---------------------------------------

def _enumerate(fm: FMatroid, coord_bound: int, against: FSignature, kind: str) -> list[GenVector]:
    key = (kind, coord_bound)
    if key in fm._cache:
        return fm._cache[key]
    if coord_bound < 0:
        raise ValueError("coordinate bound must be non-negative")
    t = fm.tract
    options = list(t.carrier.sums_up_to(coord_bound))
    out = []
    for entries in product(options, repeat=len(fm.ground)):
        X = GenVector(fm.ground, entries)
        if all(is_orthogonal(t, X, Y) for Y in against):
            out.append(X)
    fm._cache[key] = out
    return out


def gen_vectors(fm: FMatroid, coord_bound: int) -> Iterator[GenVector]:
    """Generalized vectors: orthogonal to every cocircuit."""
    return iter(_enumerate(fm, coord_bound, fm.cocircuits, "V"))


def gen_covectors(fm: FMatroid, coord_bound: int) -> Iterator[GenVector]:
    """Generalized covectors: orthogonal to every circuit."""
    return iter(_enumerate(fm, coord_bound, fm.circuits, "V*"))


def vectors(fm: FMatroid) -> list[GenVector]:
    return list(gen_vectors(fm, 1))


def covectors(fm: FMatroid) -> list[GenVector]:
    return list(gen_covectors(fm, 1))


def is_gen_vector(fm: FMatroid, X: GenVector) -> bool:
    return all(is_orthogonal(fm.tract, X, D) for D in fm.cocircuits)


def is_gen_covector(fm: FMatroid, Y: GenVector) -> bool:
    return all(is_orthogonal(fm.tract, Y, C) for C in fm.circuits)


# -- wedge --------------------------------------------------------------------

def wedge(t: Tract, X: GenVector, Y: GenVector, e) -> GenVector:
    """Empty at ``e``; ``Y(e)X(f) - X(e)Y(f)`` elsewhere (as formal sums)."""
    if X.ground != Y.ground:
        raise FMatroidError("wedge of vectors on different ground sets")
    xe, ye = X[e], Y[e]
    out = []
    for f, xf, yf in zip(X.ground, X.entries, Y.entries):
        out.append(t.carrier.empty() if f == e else ye * xf - xe * yf)
    return GenVector(X.ground, out)


def check_wedge_closure(fm: FMatroid, coord_bound: int) -> AxiomReport:
    covs = list(gen_covectors(fm, coord_bound))
    checked = 0
    for X in covs:
        for Y in covs:
            for e in fm.ground:
                W = wedge(fm.tract, X, Y, e)
                checked += 1
                if not is_gen_covector(fm, W):
                    return AxiomReport("wedge", False, coord_bound,
                                       {"X": X, "Y": Y, "e": e, "wedge": W},
                                       {"covectors": len(covs), "wedges_checked": checked})
    return AxiomReport("wedge", True, coord_bound, None,
                       {"covectors": len(covs), "wedges_checked": checked})


# -- series and parallel extension -------------------------------------------

def _splice(v: GenVector, e, ground: tuple, a1: FormalSum, a2: FormalSum) -> GenVector:
    rest = v.drop(e)
    return GenVector(ground, list(rest.entries) + [a1, a2])


def _fresh(fm: FMatroid, e, labels) -> tuple:
    if e not in fm.ground:
        raise FMatroidError(f"{e!r} is not in the ground set")
    e1, e2 = labels if labels is not None else (f"{e}a", f"{e}b")
    return e1, e2


def _pair_vector(carrier: TractCarrier, ground: tuple) -> GenVector:
    vals = [carrier.zero] * (len(ground) - 2) + [carrier.one, carrier.minus_one]
    return GenVector.from_values(carrier, ground, vals)


def series_extend(fm: FMatroid, e, labels: Optional[tuple] = None) -> FMatroid:
    """Replace ``e`` by two elements in series, appended to the ground set.

    Circuits copy ``C(e)`` onto both new elements; each cocircuit splits
    into the two placements of ``D(e)``; the pair itself carries the new
    cocircuit ``(..., 0, 1, -1)`` whenever it is a cocircuit of the new
    matroid (it is not when ``e`` is a coloop).
    """
    e1, e2 = _fresh(fm, e, labels)
    M2 = fm.matroid.series_extend(e, e1, e2)
    G = M2.ground
    z = fm.tract.carrier.empty()
    circs = [_splice(C, e, G, C[e], C[e]) for C in fm.circuits]
    cocircs = []
    for D in fm.cocircuits:
        if D[e].is_empty():
            cocircs.append(_splice(D, e, G, z, z))
        else:
            cocircs.append(_splice(D, e, G, z, D[e]))
            cocircs.append(_splice(D, e, G, D[e], z))
    if frozenset([e1, e2]) in M2.dual().circuits:
        cocircs.append(_pair_vector(fm.tract.carrier, G))
    return FMatroid(M2, FSignature(M2, circs), FSignature(M2.dual(), cocircs), fm.tract,
                    check=False, name=f"series({fm.name},{e})")


def parallel_extend(fm: FMatroid, e, labels: Optional[tuple] = None) -> FMatroid:
    """Replace ``e`` by two parallel elements; the dual of :func:`series_extend`."""
    e1, e2 = _fresh(fm, e, labels)
    M2 = fm.matroid.parallel_extend(e, e1, e2)
    G = M2.ground
    z = fm.tract.carrier.empty()
    cocircs = [_splice(D, e, G, D[e], D[e]) for D in fm.cocircuits]
    circs = []
    for C in fm.circuits:
        if C[e].is_empty():
            circs.append(_splice(C, e, G, z, z))
        else:
            circs.append(_splice(C, e, G, z, C[e]))
            circs.append(_splice(C, e, G, C[e], z))
    if frozenset([e1, e2]) in M2.circuits:
        circs.append(_pair_vector(fm.tract.carrier, G))
    return FMatroid(M2, FSignature(M2, circs), FSignature(M2.dual(), cocircs), fm.tract,
                    check=False, name=f"parallel({fm.name},{e})")


def expand_matroid(fm: FMatroid, X: GenVector, Y: GenVector):
    """Spread the multi-term coordinates of ``X`` and ``Y`` over new elements.

    Each ``e`` becomes ``k(e) = max(1, |Y(e)|)`` series copies of a bundle
    of ``l(e) = max(1, |X(e)|)`` parallel elements.  The ``i``-th parallel
    element of every bundle carries the ``i``-th term of ``X(e)``; every
    element of the ``j``-th series copy carries the ``j``-th term of
    ``Y(e)``.  Returns ``(fm', X', Y')`` with ``X'.Y' = X.Y`` exactly.
    """
    if X.ground != fm.ground or Y.ground != fm.ground:
        raise FMatroidError("vectors must live on the matroid's ground set")
    cur = fm
    carrier = fm.tract.carrier
    xval: dict = {}
    yval: dict = {}
    for e in fm.ground:
        xs, ys = X[e].terms(), Y[e].terms()
        k, l = max(1, len(ys)), max(1, len(xs))
        series = [e] if k == 1 else [f"{e}s{j}" for j in range(1, k + 1)]
        rest = e
        for j in range(k - 1):
            nxt = series[j + 1] if j == k - 2 else f"{e}~s{j}"
            cur = series_extend(cur, rest, (series[j], nxt))
            rest = nxt
        for j, s in enumerate(series):
            bundle = [s] if l == 1 else [f"{s}p{i}" for i in range(1, l + 1)]
            rest = s
            for i in range(l - 1):
                nxt = bundle[i + 1] if i == l - 2 else f"{s}~p{i}"
                cur = parallel_extend(cur, rest, (bundle[i], nxt))
                rest = nxt
            for i, f in enumerate(bundle):
                xval[f] = carrier.sum(xs[i:i + 1])
                yval[f] = carrier.sum(ys[j:j + 1])
    G = cur.ground
    X2 = GenVector(G, [xval[f] for f in G])
    Y2 = GenVector(G, [yval[f] for f in G])
    return cur, X2, Y2


# -- minors -------------------------------------------------------------------

def _support_minimal(vs: Iterable[GenVector]) -> list[GenVector]:
    vs = [v for v in vs if not v.is_zero()]
    sups = [frozenset(v.support()) for v in vs]
    return [v for v, s in zip(vs, sups) if not any(o < s for o in sups)]


def fm_delete(fm: FMatroid, e) -> FMatroid:
    """``M \\ e``: circuits avoiding ``e``; support-minimal restricted cocircuits."""
    M2 = fm.matroid.delete(e)
    circs = [C.drop(e) for C in fm.circuits if C[e].is_empty()]
    cocircs = _support_minimal(D.drop(e) for D in fm.cocircuits)
    return FMatroid(M2, FSignature(M2, circs), FSignature(M2.dual(), cocircs), fm.tract,
                    check=False, name=f"{fm.name}\\{e}")


def fm_contract(fm: FMatroid, e) -> FMatroid:
    """``M / e``: support-minimal restricted circuits; cocircuits avoiding ``e``."""
    M2 = fm.matroid.contract(e)
    circs = _support_minimal(C.drop(e) for C in fm.circuits)
    cocircs = [D.drop(e) for D in fm.cocircuits if D[e].is_empty()]
    return FMatroid(M2, FSignature(M2, circs), FSignature(M2.dual(), cocircs), fm.tract,
                    check=False, name=f"{fm.name}/{e}")


def check_minor_props(fm: FMatroid, coord_bound: int) -> AxiomReport:
    """Restrictions of generalized (co)vectors land in the right minors:
    covectors zero at e go to M/e, vectors zero at e go to M\\e, all
    covectors go to M\\e and all vectors go to M/e."""
    V = list(gen_vectors(fm, coord_bound))
    Vs = list(gen_covectors(fm, coord_bound))
    checked = 0
    for e in fm.ground:
        md, mc = fm_delete(fm, e), fm_contract(fm, e)
        for minor in (md, mc):
            rep = check_dual_pair(minor)
            if not rep.holds:
                return AxiomReport("minors", False, coord_bound,
                                   {"e": e, "minor": minor.name, "dual_pair": rep.witness})
        for Y in Vs:
            r = Y.drop(e)
            claims = [("covector restricts to M\\e", is_gen_covector(md, r))]
            if Y[e].is_empty():
                claims.append(("covector zero at e restricts to M/e", is_gen_covector(mc, r)))
            for claim, ok in claims:
                checked += 1
                if not ok:
                    return AxiomReport("minors", False, coord_bound,
                                       {"e": e, "claim": claim, "vector": Y})
        for X in V:
            r = X.drop(e)
            claims = [("vector restricts to M/e", is_gen_vector(mc, r))]
            if X[e].is_empty():
                claims.append(("vector zero at e restricts to M\\e", is_gen_vector(md, r)))
            for claim, ok in claims:
                checked += 1
                if not ok:
                    return AxiomReport("minors", False, coord_bound,
                                       {"e": e, "claim": claim, "vector": X})
    return AxiomReport("minors", True, coord_bound, None,
                       {"vectors": len(V), "covectors": len(Vs), "restrictions_checked": checked})


def check_supp_lemma(fm: FMatroid, coord_bound: int) -> AxiomReport:
    """A non-null coordinate of a generalized vector lies on a circuit inside its support."""
    t = fm.tract
    checked = 0
    for X in gen_vectors(fm, coord_bound):
        sup = frozenset(X.support())
        for e, a in zip(X.ground, X.entries):
            if a.is_empty() or t.is_null(a):
                continue
            checked += 1
            if not any(e in c and c <= sup for c in fm.matroid.circuits):
                return AxiomReport("supp", False, coord_bound, {"X": X, "e": e})
    return AxiomReport("supp", True, coord_bound, None, {"coordinates_checked": checked})


def _product_norm(X: GenVector, Y: GenVector) -> int:
    return sum(a * b for a, b in zip(X.norms(), Y.norms()))


def check_lower_term(fm: FMatroid, coord_bound: int = 2) -> AxiomReport:
    """Every vector/covector pair with an inner product of norm <= 3 is orthogonal."""
    V = list(gen_vectors(fm, coord_bound))
    Vs = list(gen_covectors(fm, coord_bound))
    checked = 0
    for X in V:
        for Y in Vs:
            if _product_norm(X, Y) > 3:
                continue
            checked += 1
            if not is_orthogonal(fm.tract, X, Y):
                return AxiomReport("lower-term", False, coord_bound,
                                   {"X": X, "Y": Y, "product": inner_product(fm.tract, X, Y)})
    return AxiomReport("lower-term", True, coord_bound, None, {"pairs_checked": checked})


# -- perfection certificates -------------------------------------------------

def _certify(fm: FMatroid, coord_bound: int, claim: str) -> AxiomReport:
    V = list(gen_vectors(fm, coord_bound))
    Vs = list(gen_covectors(fm, coord_bound))
    t = fm.tract
    pairs, oracle_bound, witness = 0, 0, None
    for X in V:
        for Y in Vs:
            s = inner_product(t, X, Y)
            oracle_bound = max(oracle_bound, s.norm)
            pairs += 1
            if not is_orthogonal(t, X, Y):
                witness = {"X": X, "Y": Y, "product": s}
                break
        if witness:
            break
    cert = {"claim": claim, "coord_bound": coord_bound, "oracle_bound": oracle_bound,
            "pairs_checked": pairs, "verdict": "certified" if witness is None else "violated",
            "witness": witness}
    return AxiomReport(claim, witness is None, coord_bound, witness,
                       {"vectors": len(V), "covectors": len(Vs), "pairs_checked": pairs,
                        "certificate": cert})


def certify_strong_perfection(fm: FMatroid, coord_bound: int) -> AxiomReport:
    """Exhaustive orthogonality of generalized vectors against generalized covectors."""
    return _certify(fm, coord_bound, "strong-perfection")


def certify_perfection(fm: FMatroid) -> AxiomReport:
    """Vectors against covectors (single-element coordinates only)."""
    return _certify(fm, 1, "perfection")
