import random
from fractions import Fraction as Fr

import pytest

from conftest import H, tab
from gtsp.modules import special_lower, special_upper
from gtsp.tableau import (
    Shift,
    TableauC,
    TableauD,
    apply_shift,
    is_C_generic,
    is_C_regular,
    is_C_standard,
    is_D_generic,
    is_D_standard,
    join_CD,
    row_sums,
    split_CD,
    tableau_from_json,
    tableau_to_json,
    weight_C,
    weight_from_row_sums,
)


def d2(u11, up22=-1):
    return TableauD(2, [[u11], [0, -1]], [[], [up22]])


def test_shape_validation():
    with pytest.raises(ValueError):
        TableauC(2, [[0], [0]], [[0], [0, 0]])
    with pytest.raises(IndexError):
        d2(0).shifted({(2, 1, True): 1})


def test_c_standard(trivial):
    assert is_C_standard(trivial)
    assert not is_C_standard(tab([[-H], [-H, -3 * H]], [[H], [-H, -3 * H]]))
    assert is_C_standard(tab([[-3 * H], [-H, -5 * H]], [[-3 * H], [-H, -5 * H]]))


def test_d_standard():
    assert is_D_standard(d2(0))
    assert is_D_standard(d2(1))
    assert not is_D_standard(d2(2))


def test_c_regular(trivial):
    assert is_C_regular(tab([[Fr(1, 3)], [Fr(1, 3), Fr(-2, 3)]], [[Fr(1, 5)], [Fr(2, 5), Fr(-4, 5)]]))
    assert not is_C_regular(tab([[Fr(1, 3)], [Fr(1, 3), Fr(-2, 3)]], [[Fr(1, 5)], [Fr(2, 5), Fr(2, 5)]]))
    assert not is_C_regular(tab([[H], [Fr(1, 3), Fr(-2, 3)]], [[Fr(1, 5)], [Fr(2, 5), Fr(-4, 5)]]))


def test_c_generic():
    a, b = Fr(1, 5), Fr(2, 5) + Fr(1, 7)
    t = tab([[Fr(1, 11)], [Fr(2, 13), Fr(3, 17)]], [[Fr(1, 19)], [a, b]])
    assert is_C_generic(t)
    assert not is_C_generic(tab([[Fr(1, 11)], [Fr(2, 13), Fr(3, 17)]], [[Fr(1, 19)], [a + 3, a]]))
    u = tab([[Fr(7, 2)], [Fr(2, 13), Fr(3, 17)]], [[Fr(1, 19)], [a, b]])
    assert not is_C_generic(u)
    # condition (iv) is type C only; the D part of u is judged without it
    v = tab([[Fr(7, 3)], [Fr(2, 13), Fr(3, 17)]], [[Fr(1, 19)], [a, b]])
    assert is_D_generic(split_CD(v)[0]) and is_D_generic(v)


def test_split_trivial(trivial):
    d, col = split_CD(trivial)
    assert d.rows == ((-H,), (-H, -3 * H))
    assert d.primed == ((), (-3 * H,))
    assert col == (-H, -H)


def test_split_special_upper_column():
    t = special_upper((Fr(1, 3), Fr(2, 5)), (-H, -H))
    assert split_CD(t)[1] == (Fr(1, 3), Fr(2, 5))


def test_split_join_roundtrip():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 4)
        rows = [[Fr(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(k)] for k in range(1, n + 1)]
        primed = [[Fr(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(k)] for k in range(1, n + 1)]
        t = TableauC(n, rows, primed)
        assert join_CD(*split_CD(t)) == t
        assert tableau_from_json(tableau_to_json(t)) == t


def test_weights(trivial):
    assert weight_C(trivial) == (0, 0)
    mu, lam = (Fr(1, 3), Fr(2, 5)), (-H, -H)
    assert weight_C(special_upper(mu, lam)) == (Fr(7, 6), Fr(13, 10))
    assert weight_C(special_lower(mu, lam)) == tuple(2 * m + l for m, l in zip(mu, lam))


def test_shifts(trivial):
    s = Shift(1, 1, primed=True)
    up = apply_shift(trivial, s)
    assert up.lp(1, 1) == H
    assert not is_C_standard(up)
    assert apply_shift(up, s.inverse()) == trivial


def test_row_sums(trivial):
    sums = row_sums(trivial)
    assert sums[0][1] == -2 and sums[1][1] == -2
    assert weight_from_row_sums(trivial) == weight_C(trivial)
    moved = trivial.shifted({(2, 1, False): 1})
    assert row_sums(moved)[0][1] == -1
    assert weight_from_row_sums(moved) == weight_C(moved)
