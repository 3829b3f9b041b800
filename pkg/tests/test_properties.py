"""Randomized invariants of greedy and quasi-greedy expansions.

Signed bases are only iterated for a finite prefix; positive pairs with a
Pisot product resolve, so full-word properties are checked on those.
"""
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from altbase.base import make_base
from altbase.classify import check_prop_equiv, is_admissible, star_from_types
from altbase.exactreal import sign_of
from altbase.expansion import evaluate_digits, greedy_expand, quasi_greedy_expand, reconstruction_error
from reals import GAMMAS, pisot_pairs, signed_bases, small_rationals

PREFIX = 24
EXAMPLES = settings(max_examples=200)


def point(gamma, t):
    """gamma + t for t in [0, 1], avoiding the excluded endpoint gamma+1 at gamma = -1."""
    if gamma == -1 and t == 1:
        t = Fraction(1, 2)
    return gamma + t


@EXAMPLES
@given(signed_bases, st.sampled_from(GAMMAS), small_rationals)
def test_orbit_stays_in_the_unit_window(betas, gamma, t):
    base = make_base(betas, gamma=gamma)
    rec = greedy_expand(base, point(gamma, t), cutoff=PREFIX)
    g = base.gamma
    for s in rec.states[1:]:
        assert sign_of(s - g) >= 0 and sign_of(s - g - 1) < 0


@EXAMPLES
@given(signed_bases, st.sampled_from(GAMMAS), small_rationals)
def test_digits_lie_in_the_alphabets(betas, gamma, t):
    base = make_base(betas, gamma=gamma)
    x = point(gamma, t)
    rec = greedy_expand(base, x, cutoff=PREFIX)
    for j, d in enumerate(rec.raw_digits, start=1):
        a = base.alphabet(j)
        if j == 1 and x == gamma + 1:
            # the top endpoint may reach the excluded upper digit once
            a = a.closed()
        assert d in a
        # one exact step: state_j = beta_j * state_{j-1} - d
        assert rec.states[j] == base.beta(j) * rec.states[j - 1] - d


@EXAMPLES
@given(signed_bases, st.sampled_from(GAMMAS), small_rationals, st.integers(1, 12))
def test_partial_sums_meet_the_reconstruction_bound(betas, gamma, t, M):
    base = make_base(betas, gamma=gamma)
    assert reconstruction_error(base, point(gamma, t), M).within_bound


@EXAMPLES
@given(pisot_pairs(), small_rationals)
def test_resolved_expansions_round_trip(pair, x):
    base = make_base(pair)
    rec = greedy_expand(base, x, cutoff=3000)
    assume(rec.resolved)
    assert rec.k % base.n == 0 and rec.m % base.n == 0
    assert evaluate_digits(base, rec.digits) == x


@EXAMPLES
@given(pisot_pairs(), small_rationals)
def test_greedy_words_are_admissible(pair, x):
    base = make_base(pair)
    rec = greedy_expand(base, x, cutoff=3000)
    assume(rec.resolved)
    assert is_admissible(base, rec.digits, cutoff=3000) is not False


@EXAMPLES
@given(pisot_pairs())
def test_quasi_greedy_matches_the_type_construction(pair):
    base = make_base(pair)
    rec = quasi_greedy_expand(base, cutoff=3000)
    assume(rec.resolved)
    assert rec.k % 2 == 0 and rec.m % 2 == 0
    assert star_from_types(*pair, cutoff=3000) == rec.digits
    for j, d in enumerate(rec.raw_digits, start=1):
        assert d in base.alphabet(j).closed()


@EXAMPLES
@given(pisot_pairs())
def test_periodicity_equivalence_is_never_contradicted(pair):
    assert check_prop_equiv(*pair, cutoff=3000) is not False
