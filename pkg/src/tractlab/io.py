"""JSON loading for tracts, hyperfields, rings and F-matroids.

References of the form ``builtin:NAME`` select a built-in object; anything
else is read as a path to a JSON file.
"""
from __future__ import annotations

import json
from typing import Any, Optional

from .carrier import CarrierError, FormalSum, TractCarrier
from .fmatroids import FMatroid, FMatroidError, FSignature, GenVector
from .hyperfields import Hyperfield, make_field, make_product, make_sign, tract_of
from .matroids import Matroid, MatroidError
from .partial_fields import FiniteRing, RingError, gf, make_partial_field, tract_embedding
from .phase import PhasePoint, make_p_prime, quarter_turns
from .tract import Involution, NullOracle, Tract


class InputError(ValueError):
    """Malformed input or an unknown built-in name."""


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def _resolve(ref: str, builtin, from_json):
    if ref.startswith("builtin:"):
        return builtin(ref[len("builtin:"):])
    return from_json(load_json(ref))


# -- formal sums --------------------------------------------------------------

def sum_from_wire(carrier: TractCarrier, wire) -> FormalSum:
    """Accepts ``[[element, mult], ...]``, a list of term names or one name."""
    try:
        if isinstance(wire, str):
            return carrier.sum([wire])
        if all(isinstance(x, (list, tuple)) and len(x) == 2 for x in wire):
            return carrier.from_pairs(wire)
        return carrier.sum(wire)
    except (CarrierError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad formal sum {wire!r}: {exc}") from None


def sum_to_wire(a: FormalSum) -> list:
    return a.to_wire()


# -- hyperfields --------------------------------------------------------------

BUILTIN_HYPERFIELDS = ("sign", "sign_product", "gf2", "gf3", "gf5", "gf7")


def builtin_hyperfield(name: str) -> Hyperfield:
    if name == "sign":
        return make_sign()
    if name == "sign_product":
        return make_product(make_sign(), make_sign())
    if name in ("gf2", "gf3", "gf5", "gf7"):
        return make_field(int(name[2:]))
    raise InputError(f"unknown built-in hyperfield {name!r}; choose from {', '.join(BUILTIN_HYPERFIELDS)}")


def _table(obj, elements, what):
    """A table given as a square matrix or as a list of ``[a, b, value]`` rows."""
    if isinstance(obj, list) and len(obj) == len(elements) and all(
            isinstance(r, list) and len(r) == len(elements) for r in obj):
        return {(a, b): obj[i][j] for i, a in enumerate(elements) for j, b in enumerate(elements)}
    if isinstance(obj, list) and all(isinstance(r, list) and len(r) == 3 for r in obj):
        return {(str(a), str(b)): v for a, b, v in obj}
    raise InputError(f"{what} must be a square matrix or a list of [a, b, value] rows")


def hyperfield_from_json(obj: dict) -> Hyperfield:
    if "builtin" in obj:
        return builtin_hyperfield(obj["builtin"])
    try:
        els = [str(e) for e in obj["elements"]]
        mul = _table(obj["mul"], els, "mul")
        add = _table(obj["add"], els, "add")
        neg = {str(k): str(v) for k, v in obj["neg"].items()}
        return Hyperfield(els, obj.get("zero", "0"), obj.get("one", "1"), mul, neg, add,
                          name=obj.get("name", "custom"))
    except KeyError as exc:
        raise InputError(f"hyperfield description lacks {exc.args[0]!r}") from None
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad hyperfield description: {exc}") from None


def resolve_hyperfield(ref: str) -> Hyperfield:
    return _resolve(ref, builtin_hyperfield, hyperfield_from_json)


# -- rings and partial fields -------------------------------------------------

def ring_from_json(obj: dict) -> FiniteRing:
    if obj.get("kind") == "gf":
        try:
            return gf(int(obj["p"]))
        except (KeyError, RingError) as exc:
            raise InputError(f"bad prime field description: {exc}") from None
    try:
        els = [str(e) for e in obj["elements"]]
        return FiniteRing(els, _table(obj["add"], els, "add"), _table(obj["mul"], els, "mul"),
                          obj.get("zero", "0"), obj.get("one", "1"), name=obj.get("name", "R"))
    except KeyError as exc:
        raise InputError(f"ring description lacks {exc.args[0]!r}") from None
    except RingError as exc:
        raise InputError(f"bad ring: {exc}") from None


def partial_field_tract(obj: dict) -> Tract:
    ring = ring_from_json(obj["ring"])
    gens = obj.get("generators", ring.units())
    try:
        return tract_embedding(make_partial_field(ring, gens))
    except RingError as exc:
        raise InputError(str(exc)) from None


# -- tracts -------------------------------------------------------------------

BUILTIN_TRACTS = ("sign", "sign_product", "gf2", "gf3", "gf5", "gf7", "p_prime")


def builtin_tract(name: str, params: Optional[dict] = None) -> Tract:
    params = params or {}
    if name in ("sign", "sign_product"):
        t = tract_of(builtin_hyperfield(name))
        t.name = name
        return t
    if name == "gf" and "p" in params:
        name = f"gf{params['p']}"
    if name in ("gf2", "gf3", "gf5", "gf7"):
        t = tract_embedding(make_partial_field(gf(int(name[2:])), gf(int(name[2:])).units()))
        t.name = name
        return t
    if name == "p_prime":
        pts = params.get("points")
        points = [PhasePoint.parse(p) for p in pts] if pts else quarter_turns()
        t = make_p_prime(points)
        t.name = name
        return t
    raise InputError(f"unknown built-in tract {name!r}; choose from {', '.join(BUILTIN_TRACTS)}")


def tract_from_json(obj: dict) -> Tract:
    null = obj.get("null")
    if not isinstance(null, dict) or "kind" not in null:
        raise InputError("tract description needs a 'null' object with a 'kind'")
    kind = null["kind"]
    if kind == "builtin":
        return builtin_tract(null.get("name", ""), null.get("params"))
    if kind == "partial_field":
        return partial_field_tract(null)
    if kind != "explicit":
        raise InputError(f"unknown null-set kind {kind!r}")
    try:
        els = [str(e) for e in obj["elements"]]
        carrier = TractCarrier(els, obj["mul"], str(obj.get("one", "1")),
                               str(obj.get("epsilon", "-1")), str(obj.get("zero", "0")))
        bound = int(null["bound"])
        sums = [sum_from_wire(carrier, s) if s else carrier.empty() for s in null["sums"]]
        oracle = NullOracle.explicit(carrier, sums, bound, obj.get("name", "explicit"))
        inv = Involution(carrier, obj["involution"]) if "involution" in obj else None
    except KeyError as exc:
        raise InputError(f"tract description lacks {exc.args[0]!r}") from None
    except (CarrierError, ValueError, TypeError) as exc:
        raise InputError(f"bad tract description: {exc}") from None
    return Tract(carrier, oracle, inv, name=obj.get("name", "explicit"))


def resolve_tract(ref: str) -> Tract:
    return _resolve(ref, builtin_tract, tract_from_json)


# -- F-matroids ---------------------------------------------------------------

def _label(x):
    return x if isinstance(x, int) else str(x)


def _vectors(items, ground, carrier, what) -> list[GenVector]:
    out = []
    by_str = {str(e): e for e in ground}
    for it in items:
        vals = {str(k): v for k, v in it.get("values", {}).items()}
        sup = {str(s) for s in it.get("support", vals.keys())}
        if set(vals) != sup or not sup <= set(by_str):
            raise InputError(f"{what}: support and values disagree or leave the ground set")
        entries = [sum_from_wire(carrier, vals[str(e)]) if str(e) in vals else carrier.empty()
                   for e in ground]
        v = GenVector(ground, entries)
        if not v.is_fvector():
            raise InputError(f"{what}: values must be single elements")
        out.append(v)
    return out


def fmatroid_from_json(obj: dict) -> FMatroid:
    try:
        tref = obj["tract"]
        tract = resolve_tract(tref) if isinstance(tref, str) else tract_from_json(tref)
        ground = [_label(e) for e in obj["ground"]]
        circs = _vectors(obj["circuits"], ground, tract.carrier, "circuits")
        cocircs = _vectors(obj["cocircuits"], ground, tract.carrier, "cocircuits")
        if "matroid" in obj:
            M = Matroid(ground, [[_label(e) for e in c] for c in obj["matroid"]["circuits"]])
        else:
            M = Matroid(ground, [c.support() for c in circs])
        return FMatroid(M, FSignature(M, circs), FSignature(M.dual(), cocircs), tract,
                        check=False, name=obj.get("name", "custom"))
    except KeyError as exc:
        raise InputError(f"F-matroid description lacks {exc.args[0]!r}") from None
    except (MatroidError, FMatroidError) as exc:
        raise InputError(f"bad F-matroid: {exc}") from None


def fmatroid_to_json(fm: FMatroid, tract_ref: str) -> dict:
    def vec(v):
        return {"support": [e for e in v.support()],
                "values": {str(e): a.terms()[0] for e, a in zip(v.ground, v.entries) if a.norm}}
    return {"tract": tract_ref, "ground": list(fm.ground),
            "circuits": [vec(v) for v in fm.circuits],
            "cocircuits": [vec(v) for v in fm.cocircuits]}


def resolve_fmatroid(ref: str) -> FMatroid:
    from .fixtures import fixture
    return _resolve(ref, fixture, fmatroid_from_json)
