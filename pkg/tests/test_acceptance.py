"""End-to-end acceptance checks, one test per criterion.

The terminal summary (see conftest.py) prints a PASS/FAIL line for each.
"""
import random
from fractions import Fraction

import mpmath
import pytest

import test_properties as props
from altbase.base import make_base
from altbase.catalog import catalog
from altbase.classify import Tri, classify_type, parry_status
from altbase.errors import DomainError, HypothesisViolated
from altbase.exactreal import poly as P
from altbase.expansion import DigitWord, evaluate_digits, greedy_expand, quasi_greedy_expand
from altbase.spectra import (
    Verdict,
    build_sharpness,
    circles,
    conjugate_bound_check,
    eq1_polynomial,
    eq2_residual,
    find_tangencies,
    kappa,
    tangency_note,
    table1_bound,
    to_svg,
    upsilon,
    z_bound,
    z_bound_oracle,
)
from altbase.spectra.eq1 import kp_eval
from reals import ALPHA, PHI, PHI_INV, PHI_SQ, PISOT, SPLITS, SQRT3

CRITERIA = {
    "test_worked_expansions": (1, "worked greedy and quasi-greedy expansions, digit for digit"),
    "test_boundary_modulus": (2, "z(0;1) = 1/phi and closed form = oracle on a 200-point grid"),
    "test_periodic_polynomial_pipeline": (3, "X^2-X-1 recovered; exact identity on 50 random instances"),
    "test_nonperiodicity_certificate": (4, "-sqrt3 exceeds phi/alpha; non-periodicity certificate"),
    "test_parry_catalog": (5, "Parry pairs certified; catalog conjugates inside bounds, residuals vanish"),
    "test_sharpness_ladder": (6, "sharpness instance at (9, 64, 67) within 0.05 of -phi, monotone ladder"),
    "test_small_beta_invariant": (7, "beta = 1/2: even states are beta times their predecessor, even digits 0"),
    "test_property_suites": (8, "randomized property suites, 200 instances each"),
    "test_circle_geometry": (9, "tangency at R = phi, at most 2 intersections, caption frames as SVG"),
    "test_table_values": (10, "conjugate-bound table: phi, kappa and Upsilon(1)"),
}

W = DigitWord.periodic


@pytest.fixture(autouse=True)
def high_precision():
    with mpmath.workdps(50):
        yield


def golden():
    return (1 + mpmath.sqrt(5)) / 2


def test_worked_expansions():
    def star(*betas):
        return quasi_greedy_expand(make_base(betas)).digits

    assert greedy_expand(make_base([ALPHA, SQRT3]), 1).digits == W((1, 0, 0, 1), (0,))
    assert star(ALPHA, SQRT3) == W((), (1, 0, 0, 0))
    assert star(PHI_INV, PHI_SQ) == W((), (0, 1, 0, 0))
    assert star(PHI_SQ, PHI_INV) == W((2,), (0, 0, 0, 1))
    assert star(PHI, -PHI) == W((), (1, -1, 0, -1))
    assert star(-PHI, PHI) == W((-2, 0, -2), (1, -1, 0, -1))


def test_boundary_modulus():
    assert abs(z_bound(0, 1) - 1 / golden()) < 1e-12
    worst = 0
    count = 0
    for a in range(20):
        g = Fraction(-2) + Fraction(3 * a, 19)
        for b in range(1, 11):
            y = g + Fraction(b, 11)
            if y == 0:
                y = g + Fraction(2 * b + 1, 22)
            worst = max(worst, abs(z_bound(g, y) - z_bound_oracle(g, y)))
            count += 1
    assert count == 200
    assert worst < 1e-9


def test_periodic_polynomial_pipeline():
    base = make_base([PHI])
    pp = eq1_polynomial(base, 1, greedy_expand(base, 1).digits, 1)
    assert P.primitive_int(pp.rational_minimal_factor(base.betas[0])) in ((-1, -1, 1), (1, 1, -1))

    rng = random.Random(20240611)
    names = sorted(PISOT)
    checked = 0
    while checked < 50:
        r = rng.choice(SPLITS)
        pair = [Fraction(r), PISOT[rng.choice(names)] / Fraction(r)]
        rng.shuffle(pair)
        x = Fraction(rng.randint(0, 12), rng.randint(1, 12))
        if x > 1:
            continue
        base = make_base(pair)
        rec = greedy_expand(base, x, cutoff=3000)
        assert rec.resolved
        assert evaluate_digits(base, rec.digits) == x
        for i in (1, 2):
            pp = eq1_polynomial(base, x, rec.digits, i)
            bi = base.beta(i)
            assert kp_eval(list(pp.lhs), bi) == kp_eval(list(pp.rhs), bi)
        checked += 1


def test_nonperiodicity_certificate():
    rep = conjugate_bound_check(make_base([SQRT3, ALPHA]), 1, 1, cutoff=300)
    alpha = (3 + mpmath.sqrt(21)) / 6
    (conj,) = rep.conjugates
    assert abs(conj.modulus - mpmath.sqrt(3)) < 1e-6
    assert abs(conj.modulus - mpmath.mpf("1.7320508")) < 1e-6
    assert abs(rep.bound - golden() / alpha) < 1e-6
    assert abs(rep.bound - mpmath.mpf("1.2803306")) < 1e-6
    assert conj.verdict is Verdict.OUTSIDE
    assert rep.certifies_nonperiodic
    assert rep.summary() == "violation => non-periodicity certificate"
    t = classify_type(SQRT3, ALPHA, cutoff=300)
    assert "not eventually periodic" in t.certificate


def test_parry_catalog():
    assert parry_status(PHI_INV, PHI_SQ).parry_pair is Tri.YES
    assert parry_status(PHI, -PHI).parry_pair is Tri.YES
    checked = 0
    for entry in catalog():
        base = make_base(entry.betas)
        rec = greedy_expand(base, 1)
        assert rec.resolved, entry.name
        for i in range(1, base.n + 1):
            try:
                rep = conjugate_bound_check(base, 1, i, record=rec)
            except (DomainError, HypothesisViolated):
                continue      # the bound does not apply at this index
            Mi = abs(rep.M_i.to_mpf(50))
            for c in rep.conjugates:
                assert c.modulus <= rep.bound + 1e-9, entry.name
                if i == 1:
                    assert c.modulus <= golden() / Mi + 1e-9, entry.name
                assert abs(eq2_residual(base, 1, i, c.value, record=rec, continuation=True)) < 1e-10
                fake = c.value * mpmath.mpf("1.01")
                assert abs(eq2_residual(base, 1, i, fake, record=rec, continuation=True)) > 1e-3
                checked += 1
    assert checked >= 5


def test_sharpness_ladder():
    distances = []
    for n, Q in ((3, 8), (5, 16), (9, 64)):
        inst = build_sharpness(n=n, Q=Q)
        assert inst.digits_match and inst.digits == inst.expected
        assert inst.theta_in_window
        distances.append(inst.distance)
    assert inst.N == 67
    assert abs(inst.achieved_conjugate + golden()) < 0.05
    assert distances[0] > distances[1] > distances[2]


def test_small_beta_invariant():
    beta = Fraction(1, 2)
    M, N = (8, 3, 1, 3), 5
    assert all(N * (M[0] * beta - m) > 1 for m in M[1:])
    inst = build_sharpness(beta=beta, M=M, N=N)
    states, digits = inst.record.states, inst.record.raw_digits
    half = states[0].context.rational(beta)
    assert len(digits) >= 8
    for j in range(2, len(states), 2):
        assert states[j] == half * states[j - 1]
        assert digits[j - 1] == 0


def test_property_suites():
    suites = [
        props.test_orbit_stays_in_the_unit_window,
        props.test_digits_lie_in_the_alphabets,
        props.test_partial_sums_meet_the_reconstruction_bound,
        props.test_resolved_expansions_round_trip,
        props.test_greedy_words_are_admissible,
        props.test_quasi_greedy_matches_the_type_construction,
        props.test_periodicity_equivalence_is_never_contradicted,
    ]
    assert props.EXAMPLES.max_examples == 200
    for suite in suites:
        suite()


def test_circle_geometry(tmp_path):
    tangencies = find_tangencies(0, 1, R_lo=1.0, R_hi=2.5, steps=1500)
    internal = [t for t in tangencies if t.kind == "internal"]
    assert len(internal) == 1
    assert abs(internal[0].R - golden()) < 1e-6
    for k in range(1000, 2501):
        assert circles(0, 1, Fraction(k, 1000), samples=8).count <= 2
    frames = {"1.775": Fraction(1775, 1000), "(3+sqrt(17))/4": (3 + mpmath.sqrt(17)) / 4, "1.8": Fraction(18, 10)}
    for label, R in frames.items():
        res = circles(0, 1, R, samples=200)
        path = tmp_path / f"frame_{len(list(tmp_path.iterdir()))}.svg"
        path.write_text(to_svg(res))
        assert path.read_text().startswith("<svg")
        # none of the caption radii is the tangency; the report must say so
        note = tangency_note(res, tangencies)
        assert "not a tangency" in note and "1.61803398875" in note
        print(f"R = {label}: {res.count} intersections; {note}")


def test_table_values():
    assert abs(table1_bound("scaled_positive", 1) - golden()) < 1e-12
    k = kappa()
    assert P.primitive_int(k.poly) in ((-1, 1, -2, 1), (1, -1, 2, -1))
    assert abs(k.to_mpf(30) - mpmath.mpf("1.754877")) < 1e-6
    assert abs(table1_bound("scaled_negative", 1) - mpmath.mpf("1.754877")) < 1e-6
    assert abs(upsilon(1, golden()) - golden()) < 1e-12
    assert abs(table1_bound("monomial", 1, n=1, alpha=golden()) - golden()) < 1e-12
