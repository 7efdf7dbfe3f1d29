import random
from fractions import Fraction as Fr

import pytest

from gtsp.modules import Bounded, BoundedSubPlus, FiniteC, GenericC, highest_weight_tableau
from gtsp.tableau import TableauC
from gtsp.verification import (
    casimir_polynomial,
    evaluate_polynomial,
    lagrange_sum,
    lemma_hypotheses,
    relation_failures,
    symbol_pairs,
    synthetic_lemma_tableau,
    vanishing_items,
    verify_casimir,
    verify_lagrange,
    verify_multiplicity,
    verify_primitive,
    verify_representation,
    verify_submodule,
    verify_vanishing_lemmas,
)

H = Fr(1, 2)
B11 = Bounded((Fr(1, 3), Fr(2, 5)), (-H, -H))
GENERIC = TableauC(2, [[Fr(1, 11)], [Fr(2, 13), Fr(3, 17)]], [[Fr(1, 19)], [Fr(1, 5), Fr(19, 35)]])


def test_lagrange_examples():
    assert lagrange_sum((Fr(0), Fr(5))) == 0 and verify_lagrange(2, (0, 5))
    assert verify_lagrange(3, (H, Fr(7, 3), Fr(-4)))
    with pytest.raises(ValueError):
        verify_lagrange(3, (1, 1, 2))
    with pytest.raises(ValueError):
        verify_lagrange(1, (1,))


def test_lagrange_random_k6():
    rng = random.Random(11)
    for _ in range(100):
        c = set()
        while len(c) < 6:
            c.add(Fr(rng.randint(-99, 99), rng.randint(1, 12)))
        assert verify_lagrange(6, sorted(c))


def test_symbol_pairs_coverage():
    assert len(symbol_pairs(2)) == 10 * 9 // 2
    assert len(symbol_pairs(3)) == 21 * 20 // 2
    assert len(symbol_pairs(4)) < 36 * 35 // 2


def test_finite_relations_exhaustive():
    report = verify_representation(FiniteC((Fr(0), Fr(-1))))
    assert report["failures"] == [] and report["count"] == 4


class HalfBasis(FiniteC):
    """Keeps only two of the four tableaux: the projected action stops being a representation."""

    def member(self, t):
        return t in self.basis[:2]


def test_relations_detect_broken_module():
    spec = HalfBasis((Fr(0), Fr(-1)))
    assert relation_failures(spec, spec.basis[:2])


def test_bounded_and_generic_relations_small():
    assert verify_representation(B11, samples=8, seed=1)["failures"] == []
    assert verify_representation(GenericC(GENERIC), samples=8, seed=1)["failures"] == []


def test_reports_are_deterministic():
    a = verify_representation(B11, samples=4, seed=7)
    b = verify_representation(B11, samples=4, seed=7)
    assert a == b and a["seed"] == 7 and a["check"] == "relations"


def test_casimir_polynomial_rank2():
    poly = dict(casimir_polynomial(2))
    assert poly == {(2, 0): H, (0, 2): H, (1, 0): -1, (0, 1): -2}


def test_casimir_trivial_and_bounded():
    trivial = verify_casimir(FiniteC((Fr(0), Fr(0))))
    assert trivial["failures"] == [] and trivial["scalars"] == ["0"]
    report = verify_casimir(B11, samples=6, seed=3)
    assert report["failures"] == [] and report["scalars"] == [report["expected"]] == ["-5/4"]


def test_casimir_generic_prediction():
    report = verify_casimir(GenericC(GENERIC), samples=4, seed=2)
    assert report["failures"] == [] and len(report["scalars"]) == 1


def test_multiplicity():
    assert verify_multiplicity(B11, window_radius=2)["failures"] == []
    assert verify_multiplicity(Bounded((Fr(1, 3), Fr(2, 5)), (-H, -3 * H)), window_radius=2)["failures"] == []


def test_primitive_report():
    assert verify_primitive((-H, -H))["failures"] == []


def test_submodule_small():
    report = verify_submodule(BoundedSubPlus((H, Fr(1, 3)), (-H, -3 * H), k=1), samples=30, seed=5)
    assert report["failures"] == []


def test_vanishing_on_highest_weight_tableau():
    t = highest_weight_tableau((-H, -H, -3 * H))
    assert verify_vanishing_lemmas(t)["failures"] == []


def test_vanishing_negative_control():
    t = highest_weight_tableau((-H, -H, -3 * H))
    bumped = t.shifted({(2, 1, True): 1})
    assert lemma_hypotheses(bumped, 2)
    with pytest.raises(ValueError, match="hypotheses"):
        verify_vanishing_lemmas(bumped, [2])
    assert vanishing_items(bumped, 2)["i"]


def test_vanishing_synthetic():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(2, 4)
        k = rng.randint(2, n)
        t = synthetic_lemma_tableau(n, k, rng)
        assert lemma_hypotheses(t, k, summation=True) == []
        assert verify_vanishing_lemmas(t, [k])["failures"] == []


def test_polynomial_evaluation():
    assert evaluate_polynomial(((( 1, 0), Fr(2)), ((0, 0), Fr(1))), (Fr(3), Fr(9))) == 7


def test_vanishing_singular_points_resolved_inside_locus():
    # T(W_lambda) with lambda = (-1/2,)*4 hits 0/0 in item (iii); the limit
    # along the hypothesis locus is 0, along a generic direction it is not
    from gtsp.action import generic_direction
    from gtsp.verification import _Evaluator

    t = highest_weight_tableau((-H,) * 4)
    report = verify_vanishing_lemmas(t)
    assert report["failures"] == [] and report["limits"]
    off_locus = vanishing_items(t, 4, _Evaluator(generic_direction(4)))
    assert off_locus["iii"]
