"""Named F-matroids used by the CLI, the scorecard and the tests.

Each one is the lexicographically least dual pair of signatures found by
:func:`~tractlab.fmatroids.find_dual_pair` on a uniform matroid.
"""
from __future__ import annotations

from functools import lru_cache

from .fmatroids import FMatroid, find_dual_pair
from .matroids import uniform

# name -> (rank, size, built-in tract)
FIXTURES = {
    "u12_sign": (1, 2, "sign"),
    "u23_sign": (2, 3, "sign"),
    "u23_gf3": (2, 3, "gf3"),
    "u24_sign": (2, 4, "sign"),
    "u12_gf2": (1, 2, "gf2"),
}


@lru_cache(maxsize=None)
def fixture(name: str) -> FMatroid:
    from .io import InputError, builtin_tract
    if name not in FIXTURES:
        raise InputError(f"unknown built-in F-matroid {name!r}; choose from {', '.join(FIXTURES)}")
    r, n, tname = FIXTURES[name]
    fm = find_dual_pair(uniform(r, n), builtin_tract(tname), name=name)
    if fm is None:
        raise RuntimeError(f"no dual pair of signatures for {name}")
    return fm
