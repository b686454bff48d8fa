"""Exact rational values and base sequences for Cantor series.

A Cantor series writes a number x in [0, 1) as

    x = e1/q1 + e2/(q1*q2) + e3/(q1*q2*q3) + ...

over a fixed sequence Q = (q_k) of integer bases q_k >= 2, with digits
e_k in {0, ..., q_k - 1}.  This module provides the base-sequence kinds,
their text grammar, and tail-minimum queries; rationals are plain
`fractions.Fraction` values, which are always stored reduced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

Rational = Fraction


class ParseError(ValueError):
    """Text does not conform to the Q-sequence or number grammar."""


class DomainError(ValueError):
    """An exact operation was applied outside its domain."""


class UndecidableError(DomainError):
    """The requested property is not decidable from declared sequence facts."""


def _check_base(value: int, position: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"base at position {position} must be an integer, got {value!r}")
    if value < 2:
        raise ValueError(f"base at position {position} must be >= 2, got {value}")


@dataclass(frozen=True)
class Constant:
    """Every position uses the same base."""

    base: int

    def __post_init__(self) -> None:
        _check_base(self.base, 1)


@dataclass(frozen=True)
class Periodic:
    """Bases cycle through a fixed finite list, starting at position 1."""

    period: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("periodic base sequence needs at least one entry")
        for i, b in enumerate(self.period, 1):
            _check_base(b, i)


@dataclass(frozen=True)
class PrefixPeriodic:
    """A finite prefix of bases followed by a cycling period."""

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.prefix or not self.period:
            raise ValueError("prefix-periodic base sequence needs a non-empty prefix and period")
        for i, b in enumerate(self.prefix + self.period, 1):
            _check_base(b, i)


@dataclass(frozen=True)
class Rule:
    """Bases given by a closed-form rule from the fixed catalog."""

    rule_id: str

    def __post_init__(self) -> None:
        if self.rule_id not in RULE_CATALOG:
            raise ValueError(f"unknown rule {self.rule_id!r}; known rules: {sorted(RULE_CATALOG)}")


QSequence = Union[Constant, Periodic, PrefixPeriodic, Rule]


@dataclass(frozen=True)
class _RuleInfo:
    """Declared, proof-backed facts about a catalog rule.

    The catalog is closed on purpose: tail-minimum queries and divisibility
    decisions rely on properties (monotonicity, parity of entries) that
    cannot be inferred from an arbitrary user formula.
    """

    base: Callable[[int], int]
    monotone_increasing: bool
    odd_entries: bool
    # True when (q(1) - 1) divides eps * (q(k) - 1) for every k and every
    # digit candidate eps; lets fixed-point membership skip enumeration.
    all_fixed_point_candidates: bool


RULE_CATALOG: dict[str, _RuleInfo] = {
    # q_k = 2k + 1: the odd numbers 3, 5, 7, ...  Monotone, all entries odd,
    # and q(1) - 1 = 2 divides every q_k - 1 = 2k.
    "odd": _RuleInfo(
        base=lambda k: 2 * k + 1,
        monotone_increasing=True,
        odd_entries=True,
        all_fixed_point_candidates=True,
    ),
}


def q_at(Q: QSequence, k: int) -> int:
    """Base q_k at 1-based position k."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"base positions are 1-based, got {k!r}")
    match Q:
        case Constant(base=b):
            return b
        case Periodic(period=p):
            return p[(k - 1) % len(p)]
        case PrefixPeriodic(prefix=a, period=p):
            if k <= len(a):
                return a[k - 1]
            return p[(k - len(a) - 1) % len(p)]
        case Rule(rule_id=r):
            return RULE_CATALOG[r].base(k)
    raise TypeError(f"not a QSequence: {Q!r}")


def bases(Q: QSequence, count: int, start: int = 1) -> tuple[int, ...]:
    """The bases q_start, ..., q_{start+count-1}."""
    return tuple(q_at(Q, k) for k in range(start, start + count))


def base_product(Q: QSequence, lo: int, hi: int) -> int:
    """Product q_lo * q_{lo+1} * ... * q_hi; 1 when the range is empty."""
    return math.prod(q_at(Q, k) for k in range(lo, hi + 1))


def prefix_and_period(Q: QSequence) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Prefix/period view of a list-backed sequence, or None for rule kinds."""
    match Q:
        case Constant(base=b):
            return (), (b,)
        case Periodic(period=p):
            return (), p
        case PrefixPeriodic(prefix=a, period=p):
            return a, p
        case Rule():
            return None
    raise TypeError(f"not a QSequence: {Q!r}")


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    if not text:
        raise ParseError(f"empty {what} list")
    out = []
    for tok in text.split(","):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"bad integer {tok!r} in {what} list") from None
    return tuple(out)


def parse_qseq(text: str) -> QSequence:
    """Parse the base-sequence grammar.

    Accepted forms (whitespace is not significant):

        const:<q>
        periodic:<q1,q2,...>
        prefix:<a1,...;p1,...>
        rule:odd
    """
    s = "".join(text.split())
    head, sep, rest = s.partition(":")
    if not sep:
        raise ParseError(f"expected <kind>:<spec>, got {text!r}")
    try:
        if head == "const":
            (b,) = _parse_int_list(rest, "const")
            return Constant(b)
        if head == "periodic":
            return Periodic(_parse_int_list(rest, "period"))
        if head == "prefix":
            pre_text, semi, per_text = rest.partition(";")
            if not semi:
                raise ParseError(f"prefix form needs <prefix;period>, got {text!r}")
            return PrefixPeriodic(_parse_int_list(pre_text, "prefix"), _parse_int_list(per_text, "period"))
        if head == "rule":
            return Rule(rest)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown base-sequence kind {head!r}")


def format_qseq(Q: QSequence) -> str:
    """Render a QSequence back into the grammar; inverse of parse_qseq."""
    match Q:
        case Constant(base=b):
            return f"const:{b}"
        case Periodic(period=p):
            return "periodic:" + ",".join(map(str, p))
        case PrefixPeriodic(prefix=a, period=p):
            return "prefix:" + ",".join(map(str, a)) + ";" + ",".join(map(str, p))
        case Rule(rule_id=r):
            return f"rule:{r}"
    raise TypeError(f"not a QSequence: {Q!r}")


@dataclass(frozen=True)
class TailMin:
    """Minimum base strictly beyond a position.

    `value` is min{ q_k : k > after } when `decidable`, else None.
    """

    after: int
    value: int | None
    decidable: bool


def tail_min(Q: QSequence, n0: int = 0) -> TailMin:
    """Exact minimum of q_k over k > n0.

    List-backed kinds are decided by enumerating the remaining prefix plus
    one full period.  Rule kinds are decided only when the catalog declares
    the rule monotone increasing, in which case the minimum is q_{n0+1}.
    """
    if n0 < 0:
        raise DomainError(f"tail minimum needs n0 >= 0, got {n0}")
    view = prefix_and_period(Q)
    if view is not None:
        pre, per = view
        # Positions n0+1 .. max(n0, len(pre)) + len(per) cover whatever is
        # left of the prefix and one full period.
        hi = max(n0, len(pre)) + len(per)
        return TailMin(n0, min(q_at(Q, k) for k in range(n0 + 1, hi + 1)), True)
    info = RULE_CATALOG[Q.rule_id]
    if info.monotone_increasing:
        return TailMin(n0, q_at(Q, n0 + 1), True)
    return TailMin(n0, None, False)
