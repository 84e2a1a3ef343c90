from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tractlab.phase import (PhasePoint, contains_zero_positive_combination, make_p_prime,
                            make_phase_subset, phase_carrier, phase_hypersum2, quarter_turns)

linprog = pytest.importorskip("scipy.optimize").linprog


def circle_point(t: Fraction, flip: bool) -> PhasePoint:
    # rational parametrisation of the unit circle
    x, y = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    return PhasePoint(-x, -y) if flip else PhasePoint(x, y)


def lp_null(points) -> bool:
    """Independent check: feasibility of sum c_i p_i = 0 with c_i >= 1."""
    n = len(points)
    A = [[float(p.x) for p in points], [float(p.y) for p in points]]
    res = linprog([0.0] * n, A_eq=A, b_eq=[0.0, 0.0], bounds=[(1, None)] * n, method="highs")
    return res.status == 0


POINTS = st.builds(circle_point,
                   st.fractions(min_value=-3, max_value=3, max_denominator=4), st.booleans())


@settings(max_examples=200, deadline=None)
@given(st.lists(POINTS, min_size=1, max_size=5))
def test_stiemke_matches_linear_programming(points):
    assert contains_zero_positive_combination(points) == lp_null(points)


def test_small_cases():
    one, i = PhasePoint(1, 0), PhasePoint(0, 1)
    assert contains_zero_positive_combination([one, -one])
    assert not contains_zero_positive_combination([one, one])
    assert not contains_zero_positive_combination([one, i])
    assert not contains_zero_positive_combination([one, i, -one])
    assert contains_zero_positive_combination([one, i, PhasePoint(Fraction(-3, 5), Fraction(-4, 5))])
    assert not contains_zero_positive_combination([])


def test_point_validation():
    with pytest.raises(ValueError):
        PhasePoint(1, 1)
    with pytest.raises(ValueError):
        phase_carrier([PhasePoint(1, 0), PhasePoint(-1, 0), PhasePoint(Fraction(3, 5), Fraction(4, 5))])
    with pytest.raises(ValueError):
        phase_carrier([PhasePoint(1, 0), PhasePoint(0, 1)] * 1 + [PhasePoint(0, -1)])
    assert PhasePoint.parse(["0", "-1"]).name == "-i"


def test_hypersum2():
    one, i = PhasePoint(1, 0), PhasePoint(0, 1)
    assert phase_hypersum2(one, one).elements == {one}
    assert phase_hypersum2(one, -one).contains_zero
    arc = phase_hypersum2(i, one)
    assert arc.kind == "arc" and arc.arc == (one, i) and not arc.contains_zero
    assert phase_hypersum2(None, i).elements == {i}
    assert phase_hypersum2(None, None).contains_zero


def test_phase_tract_and_p_prime():
    ph = make_phase_subset(quarter_turns())
    pp = make_p_prime()
    c = pp.carrier
    assert c.units == ("1", "-1", "i", "-i")
    d = ph.carrier
    assert not ph.is_null(d.sum(["1", "i", "-1"]))
    assert ph.is_null(d.sum(["1", "i", "-1", "-i"]))
    assert not ph.is_null(d.sum(["1", "1", "i", "i"]))
    assert pp.is_null(c.sum(["1", "1", "i", "i"]))
    assert not pp.is_null(c.sum(["1", "1", "i"]))
    assert pp.is_null(c.empty())
