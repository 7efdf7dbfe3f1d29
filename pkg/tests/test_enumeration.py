from fractions import Fraction as Fr
from itertools import combinations, product

import pytest

from gtsp.enumeration import (
    DominantWeight,
    enumerate_standard,
    f_shift,
    f_subset,
    is_dominant,
    parity_key,
    rho,
    t_bound,
    top_row,
    weight_class_representatives,
    weyl_dimension,
)
from gtsp.tableau import TableauD, is_C_standard, is_D_standard, row_sums

H = Fr(1, 2)


def test_rho():
    assert rho("C", 3) == (-1, -2, -3)
    assert rho("D", 3) == (0, -1, -2)


def test_dominance():
    assert is_dominant("C", (0, -1))
    assert not is_dominant("C", (1, 0))
    assert not is_dominant("C", (-1, 0))
    assert is_dominant("D", (-H, -H))
    assert is_dominant("D", (H, -H))
    assert not is_dominant("D", (-H, H))
    with pytest.raises(ValueError):
        DominantWeight("C", (Fr(1, 3), 0))


@pytest.mark.parametrize("series,lam,count", [
    ("C", (0, 0), 1), ("C", (0, -1), 4), ("D", (-H, -H), 2), ("C", (-1, -1), 5), ("D", (-H, -H, -H), 4),
])
def test_seeded_counts(series, lam, count):
    lam = tuple(Fr(x) for x in lam)
    std = enumerate_standard(series, lam)
    assert len(std) == count == weyl_dimension(series, lam)


def test_members_are_standard():
    top = top_row("C", (Fr(-1), Fr(-2)))
    for t in enumerate_standard("C", (Fr(-1), Fr(-2))).tableaux:
        assert is_C_standard(t) and t.top == top
    for t in enumerate_standard("D", (-H, -3 * H)).tableaux:
        assert is_D_standard(t)


def test_half_spin_pair():
    tabs = enumerate_standard("D", (-H, -H)).tableaux
    assert sorted(t.u(1, 1) for t in tabs) == [0, 1]


def test_f_shift_branches():
    t0 = TableauD(2, [[0], [0, -1]], [[], [-1]])
    t1 = TableauD(2, [[1], [0, -1]], [[], [-1]])
    assert f_shift(t0, 1) == t1
    assert f_shift(t1, 1) == t0
    assert {f_subset(t0, ()), f_subset(t0, (1,))} == set(enumerate_standard("D", (-H, -H)).tableaux)


@pytest.mark.parametrize("lam", [(-H, -H, -H), (-H, -H, -3 * H), (H, -H, -5 * H)])
def test_f_family_closed_and_injective(lam):
    n = len(lam)
    for t in enumerate_standard("D", lam).tableaux:
        images = set()
        for r in range(n):
            for a in combinations(range(1, n), r):
                s = f_subset(t, a)
                assert is_D_standard(s)
                images.add(s)
        assert len(images) == 2 ** (n - 1)


@pytest.mark.parametrize("lam", [(-H, -H), (-H, -3 * H), (-H, -H, -H), (-H, -H, -3 * H), (H, -H, -3 * H)])
def test_class_count(lam):
    # 2^(n-1) parity classes, each of size dim L_D / 2^(n-1)
    classes = weight_class_representatives(lam)
    n = len(lam)
    assert len(classes) == 2 ** (n - 1)
    for cls in classes:
        assert len(cls) * 2 ** (n - 1) == weyl_dimension("D", lam)
        for t in cls:
            assert not any(parity_key(t, cls[0]))


def test_f_moves_between_classes():
    lam = (-H, -H, -3 * H)
    t = enumerate_standard("D", lam).tableaux[0]
    keys = {parity_key(f_subset(t, a), t) for r in range(3) for a in combinations((1, 2), r)}
    assert len(keys) == 4


def test_t_bound():
    assert t_bound((-H, -H), 1) == 0
    for k in (1, 2):
        assert t_bound((-H, -H, -3 * H), k) >= 0
    with pytest.raises(IndexError):
        t_bound((-H, -H), 2)
