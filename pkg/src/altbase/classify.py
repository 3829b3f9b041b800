"""Five-way classification of positive pairs, quasi-greedy words built from it,
(semi-)Parry detection and an admissibility test for two-entry bases.

Throughout, a pair (alpha, beta) means the base (alpha, beta) repeated with
gamma = 0, and d(alpha, beta; 1) is its greedy expansion of 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from altbase.base import AlternateBase, make_base, shift
from altbase.errors import DomainError, HypothesisViolated, UnresolvedError
from altbase.exactreal import FieldElement, sign_of
from altbase.expansion import (
    DEFAULT_CUTOFF,
    DigitWord,
    ExpansionRecord,
    greedy_expand,
    lex_compare,
    quasi_greedy_expand,
)


class Tag(str, enum.Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    TYPE4 = "Type4"
    TYPE5 = "Type5"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class PairType:
    """The type together with its witness.

    ``c`` is d(alpha, beta; 1) and ``q`` is d(beta, alpha; 1) when it was
    needed; ``m`` and ``m_prime`` are their lengths when finite.
    ``certificate`` explains a non-finiteness that was proven rather than
    observed (an expansion that did not resolve but violates the conjugate
    bound).
    """

    tag: Tag
    c: Optional[DigitWord] = None
    q: Optional[DigitWord] = None
    m: Optional[int] = None
    m_prime: Optional[int] = None
    certificate: Optional[str] = None

    def __str__(self):
        parts = [self.tag.value]
        if self.c is not None:
            parts.append(f"d(alpha,beta;1) = {self.c}")
        if self.m is not None:
            parts.append(f"m = {self.m}")
        if self.q is not None:
            parts.append(f"d(beta,alpha;1) = {self.q}")
        if self.m_prime is not None:
            parts.append(f"m' = {self.m_prime}")
        if self.certificate:
            parts.append(self.certificate)
        return "; ".join(parts)


def _lift_pair(alpha, beta) -> AlternateBase:
    if isinstance(alpha, FieldElement) and isinstance(beta, FieldElement) and alpha.context is beta.context:
        ctx = alpha.context
        return AlternateBase((alpha, beta), ctx.zero(), ctx)

    def ra(v):
        return v.to_real_algebraic() if isinstance(v, FieldElement) else v

    return make_base([ra(alpha), ra(beta)], 0)


def _positive_pair(alpha, beta) -> AlternateBase:
    base = _lift_pair(alpha, beta)
    a, b = base.betas
    if sign_of(a) <= 0 or sign_of(b) <= 0:
        raise DomainError("the type classification needs alpha, beta > 0")
    return base


def nonperiodicity_certificate(base: AlternateBase, x, record: Optional[ExpansionRecord] = None,
                               cutoff: int = DEFAULT_CUTOFF) -> Optional[str]:
    """A conjugate-bound violation proving d(base; x) is not eventually periodic, if one exists."""
    from altbase.spectra.conjugates import conjugate_bound_check

    if record is None:
        record = greedy_expand(base, x, cutoff=cutoff)
    if record.resolved:
        return None
    for i in range(1, base.n + 1):
        if record.states[i - 1].is_zero():
            continue
        try:
            rep = conjugate_bound_check(base, x, i, record=record)
        except (DomainError, HypothesisViolated):
            continue
        if rep.violated:
            worst = max(rep.conjugates, key=lambda c: c.modulus)
            return (f"conjugate of modulus {float(worst.modulus):.6g} exceeds the bound "
                    f"{float(rep.bound):.6g} at i={i}: not eventually periodic")
    return None


def _non_finite(base: AlternateBase, cutoff: int, certify: bool) -> tuple[DigitWord, Optional[bool], Optional[str]]:
    """d(base; 1), whether it is finite (None if unknown) and any certificate."""
    rec = greedy_expand(base, 1, cutoff=cutoff)
    w = rec.digits
    if w.resolved:
        return w, w.is_finite(), None
    cert = nonperiodicity_certificate(base, 1, rec) if certify else None
    return w, (False if cert else None), cert


def classify_type(alpha, beta, cutoff: int = DEFAULT_CUTOFF, certify: bool = True) -> PairType:
    base = _positive_pair(alpha, beta)
    c, finite, cert = _non_finite(base, cutoff, certify)
    if finite is None:
        return PairType(Tag.UNRESOLVED, c)
    if not finite:
        return PairType(Tag.TYPE1, c, certificate=cert)
    m = c.finite_length()
    if m % 2 == 0:
        return PairType(Tag.TYPE2, c, m=m)
    q, qfinite, qcert = _non_finite(shift(base, 1), cutoff, certify)
    if qfinite is None:
        return PairType(Tag.UNRESOLVED, c, q, m=m)
    if not qfinite:
        return PairType(Tag.TYPE5, c, q, m=m, certificate=qcert)
    mp = q.finite_length()
    return PairType(Tag.TYPE3 if mp % 2 == 0 else Tag.TYPE4, c, q, m=m, m_prime=mp)


def _decrement_last(word: DigitWord, length: int) -> tuple:
    digits = list(word.prefix(length))
    digits[-1] -= 1
    return tuple(digits)


def star_from_types(alpha, beta, cutoff: int = DEFAULT_CUTOFF, pair_type: Optional[PairType] = None) -> DigitWord:
    """d*(alpha, beta; 1) assembled from the classification alone."""
    t = pair_type or classify_type(alpha, beta, cutoff)
    if t.tag is Tag.UNRESOLVED:
        raise UnresolvedError("pair type is unresolved within the cutoff")
    if t.tag is Tag.TYPE1:
        return t.c
    head = _decrement_last(t.c, t.m)
    if t.tag is Tag.TYPE2:
        return DigitWord.periodic((), head)
    if t.tag is Tag.TYPE5:
        if t.q.resolved:
            return DigitWord.periodic(head + t.q.preperiod, t.q.period)
        return DigitWord.unresolved(head + t.q.preperiod)
    tail = _decrement_last(t.q, t.m_prime)
    if t.tag is Tag.TYPE3:
        return DigitWord.periodic(head, tail)
    return DigitWord.periodic((), head + tail)


# -- Parry pairs --------------------------------------------------------------

class Tri(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class ParryStatus:
    """Semi-Parry status in both orders.

    ``no`` is only reported with a non-periodicity certificate (kept in the
    notes); a search that merely times out gives ``unresolved``.
    """

    semi_parry_forward: Tri
    semi_parry_backward: Tri
    forward_note: str = ""
    backward_note: str = ""

    @property
    def parry_pair(self) -> Tri:
        if self.semi_parry_forward is Tri.YES and self.semi_parry_backward is Tri.YES:
            return Tri.YES
        if Tri.NO in (self.semi_parry_forward, self.semi_parry_backward):
            return Tri.NO
        return Tri.UNRESOLVED

    def __str__(self):
        lines = [
            f"semi-Parry (alpha,beta): {self.semi_parry_forward.value}" + (f"  [{self.forward_note}]" if self.forward_note else ""),
            f"semi-Parry (beta,alpha): {self.semi_parry_backward.value}" + (f"  [{self.backward_note}]" if self.backward_note else ""),
            f"Parry pair: {self.parry_pair.value}",
        ]
        return "\n".join(lines)


def _semi_parry(base: AlternateBase, cutoff: int, certify: bool) -> tuple[Tri, str]:
    g = base.gamma
    star = quasi_greedy_expand(base, cutoff=cutoff)
    low = greedy_expand(base, g, cutoff=cutoff)
    if star.resolved and low.resolved:
        return Tri.YES, ""
    if certify:
        if not low.resolved:
            cert = nonperiodicity_certificate(base, g, low)
            if cert:
                return Tri.NO, f"d(B;gamma): {cert}"
        positive = all(sign_of(b) > 0 for b in base.betas)
        if not star.resolved and g.is_zero() and base.n == 2 and positive:
            # d(B;1) not eventually periodic makes the pair Type 1, where d* = d.
            cert = nonperiodicity_certificate(base, 1, cutoff=cutoff)
            if cert:
                return Tri.NO, f"d*(B;1) = d(B;1): {cert}"
    return Tri.UNRESOLVED, "no recurrence within the cutoff"


def parry_status(alpha, beta, cutoff: int = DEFAULT_CUTOFF, gamma=0, certify: bool = True) -> ParryStatus:
    if isinstance(alpha, FieldElement) and isinstance(beta, FieldElement) and alpha.context is beta.context:
        ctx = alpha.context
        base = AlternateBase((alpha, beta), ctx.element_of(gamma), ctx)
    else:
        ra = [v.to_real_algebraic() if isinstance(v, FieldElement) else v for v in (alpha, beta)]
        base = make_base(ra, gamma)
    fwd, fnote = _semi_parry(base, cutoff, certify)
    bwd, bnote = _semi_parry(shift(base, 1), cutoff, certify)
    return ParryStatus(fwd, bwd, fnote, bnote)


def _and3(a: Optional[bool], b: Optional[bool]) -> Optional[bool]:
    if a is False or b is False:
        return False
    if a is None or b is None:
        return None
    return True


def check_prop_equiv(alpha, beta, cutoff: int = DEFAULT_CUTOFF, certify: bool = False) -> Optional[bool]:
    """Both greedy expansions of 1 periodic <=> both quasi-greedy ones periodic.

    Each of the four expansions is periodic (resolved), not periodic (only
    with ``certify``, via a conjugate-bound certificate on d(B;1), which
    also settles d* because d* = d once d(B;1) is not even finite) or
    unknown.  None when either side of the equivalence stays unknown.
    """
    base = _positive_pair(alpha, beta)
    greedy, star = [], []
    for b in (base, shift(base, 1)):
        rec = greedy_expand(b, 1, cutoff=cutoff)
        qrec = quasi_greedy_expand(b, cutoff=cutoff)
        g_periodic: Optional[bool] = True if rec.resolved else None
        if g_periodic is None and certify and nonperiodicity_certificate(b, 1, rec):
            g_periodic = False
        s_periodic: Optional[bool] = True if qrec.resolved else (False if g_periodic is False else None)
        greedy.append(g_periodic)
        star.append(s_periodic)
    lhs, rhs = _and3(*greedy), _and3(*star)
    if lhs is None or rhs is None:
        return None
    return lhs == rhs


# -- admissibility ------------------------------------------------------------

def is_admissible(base: AlternateBase, word: DigitWord, cutoff: int = DEFAULT_CUTOFF) -> Optional[bool]:
    """Whether ``word`` is the greedy expansion of some x in [0, 1].

    Criterion for two positive entries and gamma = 0: the word is at most
    d(B; 1) and every shift sigma^k (k >= 1) is at most d*(sigma^k B; 1),
    all lexicographically.  Equality with the quasi-greedy word is allowed.
    Returns None when a comparison cannot be decided within the known digits.
    """
    if base.n != 2 or not base.gamma.is_zero() or any(sign_of(b) <= 0 for b in base.betas):
        raise DomainError("not implemented for this base class")
    known = word.known_length
    if any(d < 0 for d in word.prefix(known if known is not None else len(word.preperiod) + len(word.period))):
        return False
    top = greedy_expand(base, 1, cutoff=cutoff).digits
    stars = [quasi_greedy_expand(shift(base, p), cutoff=cutoff).digits for p in (0, 1)]
    undecided = False
    cmp = lex_compare(word, top)
    if cmp is None:
        undecided = True
    elif cmp > 0:
        return False
    if word.resolved:
        last = len(word.preperiod) + math.lcm(len(word.period), 2)
    else:
        last = len(word.preperiod)
    for k in range(1, last + 1):
        cmp = lex_compare(word.shifted(k), stars[k % 2])
        if cmp is None:
            undecided = True
        elif cmp > 0:
            return False
    return None if undecided else True
