from fractions import Fraction as Fr

import pytest

from gtsp.series import Series
from gtsp.vector import LinComb


def test_removable_singularity():
    # (x^2 - 1) / (x - 1) at x = 1 + eps
    x = Series.linear(1, 1)
    assert ((x * x - 1) / (x - 1)).limit() == 2


def test_zero_times_pole():
    eps = Series.linear(0, 1)
    assert (eps * (1 / eps)).limit() == 1
    assert ((eps * eps) / eps).limit() == 0


def test_pole_raises():
    eps = Series.linear(0, 3)
    with pytest.raises(ZeroDivisionError):
        (1 / eps).limit()
    with pytest.raises(ZeroDivisionError):
        Series(0, []).inverse()


def test_cancellation_to_zero():
    x = Series.linear(Fr(1, 3), Fr(2, 7))
    assert (x - x).limit() == 0
    assert (x ** 3 / x ** 2 - x).limit() == 0


def test_powers():
    x = Series.linear(2, 1)
    assert (x ** 0).limit() == 1 and (x ** 3).limit() == 8
    with pytest.raises(ValueError):
        x ** -1


def test_lincomb_drops_zeros():
    v = LinComb({"a": Fr(1, 2), "b": 0})
    assert len(v) == 1
    w = v - LinComb.basis("a").scaled(Fr(1, 2))
    assert not w and len(w) == 0
    assert (v + v)["a"] == 1 and v["zzz"] == 0
