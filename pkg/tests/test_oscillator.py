from fractions import Fraction as Fr

import pytest

from gtsp.modules import Bounded, ConeSpec
from gtsp.oscillator import (
    A_NORM,
    OracleInconsistency,
    OscSpec,
    compare_degree1,
    homomorphism_failures,
    matching_osc_spec,
    osc_act,
    osc_casimir_scalar,
)
from gtsp.scalars import RootTwo
from gtsp.verification import expected_casimir

H = Fr(1, 2)
ZERO = (Fr(0), Fr(0))
WEIL = OscSpec(ZERO)


def test_raising_and_lowering():
    assert osc_act((1, -1), ZERO, WEIL) == {(Fr(2), Fr(0)): RootTwo(0, H)}
    assert A_NORM == RootTwo(0, H)
    # d^2 t^2 = 2, times -sqrt 2
    assert osc_act((-1, 1), (Fr(2), Fr(0)), WEIL) == {ZERO: RootTwo(0, -2)}
    assert osc_act((-1, 1), ZERO, WEIL) == {}


def test_cartan_weight():
    alpha = (Fr(4), Fr(2))
    assert osc_act((1, 1), alpha, WEIL) == {alpha: RootTwo(Fr(9, 2))}
    assert WEIL.weight(alpha) == (Fr(9, 2), Fr(5, 2))


def test_twist_flips_weights():
    spec = OscSpec(ZERO, frozenset({2}))
    alpha = (Fr(2), Fr(4))
    assert spec.weight(alpha) == (Fr(5, 2), Fr(-9, 2))
    assert osc_act((2, 2), alpha, spec) == {alpha: RootTwo(Fr(-9, 2))}


def test_membership_and_escape():
    nonint = OscSpec((Fr(1, 3), Fr(0)))
    assert nonint.member((Fr(-5, 3), Fr(2)))
    assert not nonint.member((Fr(1, 3), Fr(-2)))
    assert not nonint.member((Fr(1, 3), Fr(1)))
    with pytest.raises(ValueError):
        OscSpec((Fr(1, 3), Fr(0)), frozenset({1}))
    # t_1 d_2 moves t^(0,1) to t^(1,0), odd total degree, not in the even span
    with pytest.raises(ValueError):
        osc_act((1, 2), (Fr(0), Fr(1)), WEIL)
    # a span that is not stable under the raising operator is caught
    class Truncated(OscSpec):
        def member(self, alpha):
            return super().member(alpha) and alpha[0] <= 4

    with pytest.raises(OracleInconsistency):
        osc_act((1, -1), (Fr(4), Fr(0)), Truncated(ZERO))


@pytest.mark.parametrize("spec", [WEIL, OscSpec((Fr(1, 3), Fr(2, 5))), OscSpec(ZERO, frozenset({1}))])
def test_homomorphism(spec):
    assert homomorphism_failures(spec, spec.sample(3, seed=1)) == []


def test_casimir_scalar_constant():
    spec = OscSpec((Fr(1, 3), Fr(2, 5)))
    scalars = {osc_casimir_scalar(spec, a) for a in spec.sample(8, seed=2)}
    assert scalars == {expected_casimir(Bounded((Fr(1, 3), Fr(2, 5)), (-H, -H)))}


def test_matching_spec_cone_orientation():
    mu, lam = (H, H), (-H, -H)
    for sigma in [(), (1,), (1, 2)]:
        osc = matching_osc_spec(mu, lam, sigma)
        assert osc.cone() == ConeSpec(frozenset(sigma), frozenset({1, 2}) - frozenset(sigma))


def test_compare_degree1_small_window():
    report = compare_degree1((H, H), (-H, -H), {1}, radius=3)
    assert report["mismatches"] == [] and report["fibers"] == 25
    with pytest.raises(ValueError):
        compare_degree1((H, Fr(1, 3)), (-H, -3 * H), (), radius=1)
