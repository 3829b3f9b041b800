"""Greedy and quasi-greedy expansions with exact periodicity detection.

Orbit states are field elements, so a repeated state is detected by hashing
its canonical coordinate vector.  Only states reached after a multiple of n
digits are compared, which makes the reported preperiod and period lengths
multiples of the base length.

The quasi-greedy expansion of gamma+1 is simulated as a one-sided limit: each
state carries a side (approached from below or from above).  Multiplying by a
negative entry flips the side, and a product landing exactly on an integer
boundary is resolved toward the side it is approached from.
"""
from __future__ import annotations

import enum
import hashlib
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from altbase.base import AlternateBase, partial_product
from altbase.errors import DomainError, UnresolvedError
from altbase.exactreal import FieldElement, floor_of, sign_of

DEFAULT_CUTOFF = 10000


# -- digit words --------------------------------------------------------------

def _primitive_period(per: Sequence[int]) -> tuple:
    L = len(per)
    for d in range(1, L + 1):
        if L % d == 0 and tuple(per[:d]) * (L // d) == tuple(per):
            return tuple(per[:d])
    return tuple(per)


def _minimize(pre: Sequence[int], per: Sequence[int]) -> tuple[tuple, tuple]:
    per = list(_primitive_period(per))
    pre = list(pre)
    while pre and pre[-1] == per[-1]:
        per = [per[-1]] + per[:-1]
        pre.pop()
    return tuple(pre), tuple(per)


@dataclass(frozen=True)
class DigitWord:
    """An eventually periodic digit word ``preperiod (period)^omega``.

    Resolved words are kept in minimal form: primitive period and shortest
    preperiod.  An unresolved word stores the first ``cutoff_used`` digits in
    ``preperiod`` and an empty period.
    """

    preperiod: tuple
    period: tuple
    resolved: bool = True
    cutoff_used: int = field(default=0, compare=False)

    @classmethod
    def periodic(cls, pre: Sequence[int], per: Sequence[int], cutoff_used: int = 0) -> "DigitWord":
        if not per:
            raise DomainError("a resolved word needs a nonempty period")
        pre, per = _minimize(tuple(int(d) for d in pre), tuple(int(d) for d in per))
        return cls(pre, per, True, cutoff_used)

    @classmethod
    def unresolved(cls, digits: Sequence[int], cutoff_used: Optional[int] = None) -> "DigitWord":
        digits = tuple(int(d) for d in digits)
        return cls(digits, (), False, len(digits) if cutoff_used is None else cutoff_used)

    def digit(self, i: int) -> int:
        """The digit at 0-based position i."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.resolved:
            raise UnresolvedError(f"digit {i} lies beyond the computed prefix")
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, length: int) -> tuple:
        if not self.resolved:
            return self.preperiod[:length]
        return tuple(self.digit(i) for i in range(length))

    @property
    def known_length(self) -> Optional[int]:
        """Number of digits available (None when the word is infinite and resolved)."""
        return None if self.resolved else len(self.preperiod)

    def is_finite(self) -> bool:
        return self.resolved and self.period == (0,)

    def finite_length(self) -> int:
        """Index of the last nonzero digit of a finite word."""
        if not self.is_finite():
            raise DomainError("word is not finite")
        return len(self.preperiod)

    def shifted(self, k: int) -> "DigitWord":
        if not self.resolved:
            return DigitWord.unresolved(self.preperiod[k:], max(self.cutoff_used - k, 0))
        if k <= len(self.preperiod):
            return DigitWord.periodic(self.preperiod[k:], self.period)
        r = (k - len(self.preperiod)) % len(self.period)
        return DigitWord.periodic((), self.period[r:] + self.period[:r])

    def blocks(self, n: int) -> tuple[tuple, tuple]:
        """Preperiod and period unrolled so both lengths are multiples of n."""
        if not self.resolved:
            raise UnresolvedError("cannot split an unresolved word into blocks")
        k = -(-len(self.preperiod) // n) * n
        m = len(self.period) * n // math.gcd(len(self.period), n)
        pre = self.prefix(k)
        per = tuple(self.digit(k + i) for i in range(m))
        return pre, per

    def __str__(self):
        pre = " ".join(str(d) for d in self.preperiod)
        if not self.resolved:
            return f"{pre} ... (unresolved after {self.cutoff_used} digits)".strip()
        per = " ".join(str(d) for d in self.period)
        return f"{pre} | ({per})".strip() if pre else f"| ({per})"

    def to_json(self) -> dict:
        return {"pre": list(self.preperiod), "period": list(self.period)}


def lex_compare(a: DigitWord, b: DigitWord) -> Optional[int]:
    """-1, 0, +1 for a <, =, > b lexicographically; None if undecided within the known digits.

    Two eventually periodic words that agree on their first
    ``pre_a + pre_b + lcm(per_a, per_b)`` digits are equal.
    """
    exact = a.resolved and b.resolved
    if exact:
        L = len(a.preperiod) + len(b.preperiod) + math.lcm(len(a.period), len(b.period))
    else:
        L = min(x for x in (a.known_length, b.known_length) if x is not None)
    for i in range(L):
        da, db = a.digit(i), b.digit(i)
        if da != db:
            return -1 if da < db else 1
    return 0 if exact else None


# -- records ------------------------------------------------------------------

class Side(str, enum.Enum):
    EXACT = "exact"
    FROM_BELOW = "from_below"
    FROM_ABOVE = "from_above"

    def flipped(self) -> "Side":
        if self is Side.FROM_BELOW:
            return Side.FROM_ABOVE
        if self is Side.FROM_ABOVE:
            return Side.FROM_BELOW
        return self


@dataclass(frozen=True)
class SidedValue:
    value: FieldElement
    side: Side = Side.EXACT

    def key(self):
        return (self.value.key(), self.side.value)


@dataclass(frozen=True)
class ExpansionRecord:
    """Digits, exact orbit and periodicity metadata of one expansion.

    ``k`` and ``m`` are the preperiod/period lengths at which the orbit was
    found to recur; both are multiples of the base length (None if
    unresolved).  For quasi-greedy records ``sides`` holds the side of each
    state.
    """

    digits: DigitWord
    states: tuple
    kind: str
    k: Optional[int] = None
    m: Optional[int] = None
    sides: Optional[tuple] = None
    raw_digits: tuple = field(default=(), repr=False)

    @property
    def resolved(self) -> bool:
        return self.digits.resolved

    def states_hash(self) -> str:
        h = hashlib.sha256()
        for i, s in enumerate(self.states):
            h.update(repr(tuple((c.numerator, c.denominator) for c in map(Fraction, s.poly))).encode())
            if self.sides is not None:
                h.update(self.sides[i].value.encode())
            h.update(b";")
        return h.hexdigest()


# -- greedy -------------------------------------------------------------------

def _in_unit(base_gamma: FieldElement, x: FieldElement, allow_top: bool) -> bool:
    if sign_of(x - base_gamma) < 0:
        return False
    s = sign_of(x - base_gamma - 1)
    return s < 0 or (allow_top and s == 0)


def greedy_step(beta: FieldElement, gamma: FieldElement, x: FieldElement, allow_top: bool = True) -> tuple[int, FieldElement]:
    """One application of f(x) = beta*x - floor(beta*x - gamma)."""
    if not _in_unit(gamma, x, allow_top):
        raise DomainError("x must lie in [gamma, gamma+1]" if allow_top else "x must lie in [gamma, gamma+1)")
    w = beta * x
    d = floor_of(w - gamma)
    return d, w - d


def greedy_expand(base: AlternateBase, x, cutoff: int = DEFAULT_CUTOFF) -> ExpansionRecord:
    """The greedy expansion d(B; x) for gamma <= x <= gamma+1."""
    if cutoff < 1:
        raise DomainError("cutoff must be at least 1")
    x = base.lift(x)
    g = base.gamma
    if not _in_unit(g, x, True):
        raise DomainError("x must lie in [gamma, gamma+1]")
    if x == g + 1 and g == -1:
        raise DomainError("x = gamma+1 is not expandable when gamma = -1")
    n = base.n
    states = [x]
    digits: list[int] = []
    seen: dict = {}
    state = x
    pos = 0
    k = m = None
    while True:
        if pos % n == 0:
            key = state.key()
            if key in seen:
                k, m = seen[key], pos - seen[key]
                break
            seen[key] = pos
        if pos >= cutoff:
            break
        d, state = greedy_step(base.beta(pos + 1), g, state, allow_top=(pos == 0))
        digits.append(d)
        states.append(state)
        pos += 1
    if k is None:
        word = DigitWord.unresolved(digits, cutoff)
    else:
        word = DigitWord.periodic(digits[:k], digits[k:k + m], cutoff)
    return ExpansionRecord(word, tuple(states), "greedy", k, m, None, tuple(digits))


# -- quasi-greedy -------------------------------------------------------------

def sided_step(beta: FieldElement, gamma: FieldElement, sv: SidedValue) -> tuple[int, SidedValue]:
    """One greedy step applied to value +- epsilon, epsilon -> 0+."""
    w = beta * sv.value
    side = sv.side.flipped() if sign_of(beta) < 0 else sv.side
    t = w - gamma
    if t.is_rational() and t.as_fraction().denominator == 1:
        k = int(t.as_fraction())
        if side is Side.FROM_BELOW:
            return k - 1, SidedValue(gamma + 1, Side.FROM_BELOW)
        return k, SidedValue(gamma + 0, side)
    d = floor_of(t)
    return d, SidedValue(w - d, side)


def quasi_greedy_expand(base: AlternateBase, cutoff: int = DEFAULT_CUTOFF, x=None) -> ExpansionRecord:
    """d*(B; x) as the limit of d(B; x - eps); x defaults to gamma+1."""
    if cutoff < 1:
        raise DomainError("cutoff must be at least 1")
    g = base.gamma
    x = g + 1 if x is None else base.lift(x)
    if sign_of(x - g) <= 0 or sign_of(x - g - 1) > 0:
        raise DomainError("x must lie in (gamma, gamma+1]")
    n = base.n
    sv = SidedValue(x, Side.FROM_BELOW)
    states, sides = [sv.value], [sv.side]
    digits: list[int] = []
    seen: dict = {}
    pos = 0
    k = m = None
    while True:
        if pos % n == 0:
            key = sv.key()
            if key in seen:
                k, m = seen[key], pos - seen[key]
                break
            seen[key] = pos
        if pos >= cutoff:
            break
        d, sv = sided_step(base.beta(pos + 1), g, sv)
        digits.append(d)
        states.append(sv.value)
        sides.append(sv.side)
        pos += 1
    if k is None:
        word = DigitWord.unresolved(digits, cutoff)
    else:
        word = DigitWord.periodic(digits[:k], digits[k:k + m], cutoff)
    return ExpansionRecord(word, tuple(states), "quasi_greedy", k, m, tuple(sides), tuple(digits))


# -- values -------------------------------------------------------------------

def block_values(base: AlternateBase, digits: Sequence[int]) -> list[FieldElement]:
    """y_j = sum_{i<n} a_{nj-i} * B[n+1-i, n] for consecutive blocks of n digits."""
    n = base.n
    if len(digits) % n:
        raise DomainError("digit count must be a multiple of n")
    tails = [partial_product(base, t + 1, n) for t in range(1, n + 1)]  # B[t+1, n]
    out = []
    for j in range(len(digits) // n):
        acc = base.context.zero()
        for t in range(1, n + 1):
            a = digits[n * j + t - 1]
            if a:
                acc = acc + tails[t - 1] * a
        out.append(acc)
    return out


def evaluate_digits(base: AlternateBase, word: DigitWord) -> FieldElement:
    """Exact value sum a_m / B[m] of an eventually periodic word."""
    if not word.resolved:
        raise UnresolvedError("cannot evaluate an unresolved word")
    Bn = base.total
    if sign_of(abs(Bn) - 1) <= 0:
        raise DomainError("|B[n]| <= 1: the series does not converge")
    pre, per = word.blocks(base.n)
    ys_pre = block_values(base, pre)
    ys_per = block_values(base, per)
    inv = 1 / Bn
    total = base.context.zero()
    scale = base.context.one()
    for y in ys_pre:
        scale = scale * inv
        total = total + y * scale
    tail = base.context.zero()
    tscale = scale
    for y in ys_per:
        tscale = tscale * inv
        tail = tail + y * tscale
    Bm = Bn ** len(ys_per)
    return total + tail * Bm / (Bm - 1)


@dataclass(frozen=True)
class ReconstructionError:
    error: FieldElement
    bound: FieldElement

    @property
    def within_bound(self) -> bool:
        return sign_of(self.error - self.bound) <= 0


def reconstruction_error(base: AlternateBase, x, M: int, record: Optional[ExpansionRecord] = None) -> ReconstructionError:
    """|x - sum_{m<=M} a_m/B[m]| together with the bound max(|gamma|,|gamma+1|)/|B[M]|."""
    x = base.lift(x)
    if record is None:
        record = greedy_expand(base, x, cutoff=max(M, 1))
    raw = record.raw_digits
    if len(raw) < M:
        raw = tuple(record.digits.prefix(M))
    s = base.context.zero()
    B = base.context.one()
    for m in range(1, M + 1):
        B = B * base.beta(m)
        if raw[m - 1]:
            s = s + B.inverse() * raw[m - 1]
    err = abs(x - s)
    g = base.gamma
    cap = abs(g) if sign_of(abs(g) - abs(g + 1)) >= 0 else abs(g + 1)
    bound = cap / abs(B)
    out = ReconstructionError(err, bound)
    if not out.within_bound:
        raise AssertionError("reconstruction error exceeds max(|gamma|,|gamma+1|)/|B[M]|")
    return out
