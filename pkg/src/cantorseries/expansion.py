"""Digit generation by the shift operator, exact partial sums, and enclosures.

The shift operator drops the first digit of a Cantor series and rescales:
sigma(x) = q1*x - e1 where e1 = floor(q1*x).  Iterating it yields the digit
word of x, and after n steps the exact identity

    x = sum_{i<=n} e_i/(q1...q_i) + sigma^n(x)/(q1...q_n)

holds, which is what makes every operation here loss-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .foundation import DomainError, QSequence, Rational, base_product, q_at


@dataclass(frozen=True)
class DigitWord:
    """A finite run of digits occupying positions start, start+1, ..."""

    digits: tuple[int, ...]
    start: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.start < 1:
            raise DomainError(f"digit positions are 1-based, got start={self.start}")
        for off, d in enumerate(self.digits):
            if not isinstance(d, int) or isinstance(d, bool) or d < 0:
                raise DomainError(f"digit at position {self.start + off} must be a nonnegative integer, got {d!r}")

    def __len__(self) -> int:
        return len(self.digits)

    @property
    def end(self) -> int:
        """Last occupied position; start - 1 when empty."""
        return self.start + len(self.digits) - 1


@dataclass(frozen=True)
class ShiftState:
    """Exact value sigma^step(x) of the shifted tail."""

    step: int
    value: Fraction


@dataclass(frozen=True)
class Enclosure:
    """Closed interval containing every completion of a digit prefix."""

    low: Fraction
    high: Fraction


def _unit_value(x: Rational | int, what: str = "value") -> Fraction:
    v = Fraction(x)
    if not 0 <= v < 1:
        raise DomainError(f"{what} must lie in [0, 1), got {v}")
    return v


def validate_digits(word: DigitWord, Q: QSequence) -> None:
    """Check every digit against its position's alphabet {0, ..., q_k - 1}."""
    for off, d in enumerate(word.digits):
        k = word.start + off
        q = q_at(Q, k)
        if d >= q:
            raise DomainError(f"digit {d} at position {k} out of range for base {q}")


def shift_step(state: ShiftState, q: int) -> tuple[int, ShiftState]:
    """One application of the shift operator with base q.

    Emits the digit floor(q * value) and the next exact state; the digit is
    always in {0, ..., q-1} and the next value stays in [0, 1).
    """
    if q < 2:
        raise DomainError(f"shift base must be >= 2, got {q}")
    value = _unit_value(state.value, "shift value")
    scaled = q * value
    digit = math.floor(scaled)
    return digit, ShiftState(state.step + 1, scaled - digit)


def expand(x: Rational | int, Q: QSequence, count: int) -> tuple[DigitWord, ShiftState]:
    """First `count` digits of x under Q, plus the exact final shift state.

    Digits follow the greedy floor rule, which picks the terminating (all
    zero tail) representation whenever two exist.  On a reduced x = u/v the
    shift values are u_n/v with u_n = q_n * u_{n-1} mod v, so the loop runs
    on integers; each step is the incremental form of the partial-sum
    identity quoted in the module docstring.
    """
    x = _unit_value(x)
    if count < 1:
        raise DomainError(f"digit count must be positive, got {count}")
    u, v = x.numerator, x.denominator
    out = []
    for k in range(1, count + 1):
        q = q_at(Q, k)
        d, u = divmod(q * u, v)
        # incremental partial-sum identity: digit in alphabet, state in [0, 1)
        assert 0 <= d < q and 0 <= u < v
        out.append(d)
    word = DigitWord(tuple(out))
    return word, ShiftState(count, Fraction(u, v))


def shift_value(x: Rational | int, Q: QSequence, n: int) -> Fraction:
    """Exact value sigma^n(x) of the n-times shifted tail."""
    x = _unit_value(x)
    if n < 0:
        raise DomainError(f"shift count must be >= 0, got {n}")
    u, v = x.numerator, x.denominator
    for k in range(1, n + 1):
        u = q_at(Q, k) * u % v
    return Fraction(u, v)


def digit_stream(x: Rational | int, Q: QSequence) -> Iterator[tuple[int, ShiftState]]:
    """Generator facade over shift_step: yields (digit, state) forever.

    Holds a private cursor; the exact states it yields make resumption from
    any point trivial.
    """
    state = ShiftState(0, _unit_value(x))
    k = 0
    while True:
        k += 1
        digit, state = shift_step(state, q_at(Q, k))
        yield digit, state


def local_value(word: DigitWord, Q: QSequence) -> Fraction:
    """Value of a word in the radix system that begins at its own start.

    For a word at positions s..s+m-1 this is sum e_i/(q_s ... q_i), i.e. the
    contribution of the word to the shifted tail sigma^{s-1}.
    """
    validate_digits(word, Q)
    num = 0
    den = 1
    for off, d in enumerate(word.digits):
        q = q_at(Q, word.start + off)
        num = num * q + d
        den *= q
    return Fraction(num, den)


def evaluate_finite(word: DigitWord, Q: QSequence) -> Rational:
    """Exact value of a finite digit word starting at position 1."""
    if word.start != 1:
        raise DomainError(f"finite evaluation expects a word starting at position 1, got {word.start}")
    return local_value(word, Q)


def enclosure(word: DigitWord, Q: QSequence) -> Enclosure:
    """Interval [low, low + 1/(q1...qn)] containing every completion.

    Any infinite Cantor series whose digits begin with this word has its
    value inside the enclosure; the width is exactly the weight of position
    n, so enclosures shrink by a factor q_{n+1} per extra digit.
    """
    low = evaluate_finite(word, Q)
    width = Fraction(1, base_product(Q, 1, len(word)))
    return Enclosure(low, low + width)
