"""Property-based checks of the algebraic identities the library relies on."""

from fractions import Fraction as Fr

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gtsp.modules import Bounded, WeightCoset, iso_equivalent, psi_reachable, support_contains, tau1
from gtsp.scalars import RootTwo, format_rational, parse_rational
from gtsp.series import Series
from gtsp.tableau import TableauC, join_CD, split_CD, weight_C, weight_from_row_sums
from gtsp.verification import verify_lagrange

H = Fr(1, 2)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
nonint = rationals.filter(lambda x: x.denominator != 1)
roots = st.builds(RootTwo, rationals, rationals)


@given(rationals)
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


@given(roots, roots, roots)
def test_root_two_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(rationals, rationals, rationals)
def test_series_limit_of_rational_function(a, b, slope):
    # a rational function regular at x0 has limit equal to its value
    assume(slope != 0 and a + b != 0)
    x = Series.linear(a, slope)
    value = ((x * x + b * x) / (x + b)).limit()
    assert value == (a * a + b * a) / (a + b)


@given(rationals, st.integers(min_value=1, max_value=4))
def test_series_cancels_simple_pole(a, order):
    # (x - a)^order / (x - a)^order -> 1 even though both vanish at a
    x = Series.linear(a, 1) - a
    assert ((x ** order) / (x ** order)).limit() == 1


def tableaux(n):
    return st.builds(
        lambda rows, primed: TableauC(n, rows, primed),
        st.tuples(*[st.lists(rationals, min_size=k, max_size=k) for k in range(1, n + 1)]),
        st.tuples(*[st.lists(rationals, min_size=k, max_size=k) for k in range(1, n + 1)]),
    )


@given(st.integers(min_value=1, max_value=4).flatmap(tableaux))
def test_split_join_and_row_sum_weight(t):
    assert join_CD(*split_CD(t)) == t
    assert weight_C(t) == weight_from_row_sums(t)


vectors2 = st.tuples(rationals, rationals)


@given(vectors2, st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_weight_coset_shift(v, z):
    shifted = (v[0] + z[0], v[1] + z[1])
    assert (WeightCoset(v) == WeightCoset(shifted)) == ((z[0] + z[1]) % 2 == 0)


spins = st.sampled_from([(-H, -H), (-H, -3 * H), (H, -H), (-3 * H, -3 * H), (H, -3 * H)])
mus = st.tuples(nonint, nonint)
sigmas = st.sampled_from([(), (1,), (2,), (1, 2)])


@given(mus, spins, sigmas, mus, spins, sigmas)
def test_iso_equivalent_reflexive_symmetric(mu, lam, s, mu2, lam2, s2):
    a, b = (mu, lam, s), (mu2, lam2, s2)
    assert iso_equivalent(a, a)
    assert iso_equivalent(a, b) == iso_equivalent(b, a)


@given(mus, spins, sigmas)
def test_iso_equivalent_tau1_case(mu, lam, s):
    assert iso_equivalent((mu, lam, s), ((mu[0] - H, mu[1]), tau1(lam), s))


@given(spins, vectors2)
def test_psi_reachable_replays(lam, target):
    mu = psi_reachable(lam, target)
    missing = WeightCoset((lam[0] + 1, lam[1]))
    if mu is None:
        assert target in missing
    else:
        assert target not in missing
        assert all(m.denominator != 1 for m in mu)
        assert support_contains(Bounded(mu, lam), target)


@settings(max_examples=60)
@given(st.lists(rationals, min_size=2, max_size=6, unique=True))
def test_lagrange_identity(c):
    assert verify_lagrange(len(c), c)
