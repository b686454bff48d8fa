"""Structural analysis of Cantor series representations.

Covers the questions that sit on top of plain expansion: when a rational
has a second, trailing-maximum representation and how to convert between
the two; when the shift values of a number are eventually constant; which
numbers the shift operator fixes outright; and how digit blocks between
chosen breakpoints regroup into a coarser Cantor series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .foundation import (
    DomainError,
    QSequence,
    RULE_CATALOG,
    Rational,
    Rule,
    UndecidableError,
    base_product,
    prefix_and_period,
    q_at,
    tail_min,
)
from .expansion import (
    DigitWord,
    _unit_value,
    evaluate_finite,
    expand,
    shift_value,
    validate_digits,
)
from .rationality import BlockDescription, reconstruct


@dataclass(frozen=True)
class CofiniteExpansion:
    """Representation ending in maximal digits q_k - 1 forever.

    `head` holds positions 1..m, already including the decremented digit at
    position m; every position k > m implicitly carries q_k - 1.  Canonical
    form keeps the head's last digit <= q_m - 2, folding any trailing
    maximal digits into the tail, so equality of canonical forms is equality
    of values.
    """

    head: DigitWord

    def __post_init__(self) -> None:
        if self.head.start != 1:
            raise DomainError(f"cofinite head must start at position 1, got {self.head.start}")
        if len(self.head) < 1:
            raise DomainError("empty cofinite head would describe the excluded endpoint value 1")

    @property
    def tail_start(self) -> int:
        return len(self.head) + 1


def fold_cofinite(digits: Sequence[int], Q: QSequence) -> CofiniteExpansion:
    """Canonicalise raw head digits by folding trailing maximal digits left."""
    word = DigitWord(tuple(digits))
    validate_digits(word, Q)
    ds = list(word.digits)
    while ds and ds[-1] == q_at(Q, len(ds)) - 1:
        ds.pop()
    if not ds:
        raise DomainError("head folds away entirely: the all-maximal expansion of 1 is out of domain")
    return CofiniteExpansion(DigitWord(tuple(ds)))


def cofinite_value(cof: CofiniteExpansion, Q: QSequence) -> Rational:
    """Exact value: head digits plus the trailing-maximum tail.

    The tail sum telescopes to exactly one unit of the head's last weight:
    sum_{k>m} (q_k - 1)/(q1...q_k) = 1/(q1...q_m).
    """
    m = len(cof.head)
    return evaluate_finite(cof.head, Q) + Fraction(1, base_product(Q, 1, m))


def _validate_canonical(cof: CofiniteExpansion, Q: QSequence) -> None:
    validate_digits(cof.head, Q)
    m = len(cof.head)
    if cof.head.digits[-1] > q_at(Q, m) - 2:
        raise DomainError(f"cofinite head not canonical: digit at position {m} must be <= base - 2")


@dataclass(frozen=True)
class DualRepresentationReport:
    """Whether p/r also has a trailing-maximum representation.

    decision "yes" carries the minimal n0 with r | q1...q_{n0} and both
    materialised forms; "no" is proved (an unproductive full period, or a
    declared rule fact); "undecided" reports the exhausted search bound.
    """

    decision: str
    n0: int | None = None
    bound: int | None = None
    finite_form: DigitWord | None = None
    cofinite_form: CofiniteExpansion | None = None


def convert_dual(form: DigitWord | CofiniteExpansion, Q: QSequence) -> CofiniteExpansion | DigitWord:
    """Convert between the finite and trailing-maximum twin representations.

    Finite (..., e_m) with e_m >= 1 maps to head (..., e_m - 1) with maximal
    digits from m+1 on; the inverse increments the head's last digit.  Both
    forms evaluate to the same rational.  Trailing zeros on finite input are
    trimmed first; the zero value itself has no twin.
    """
    if isinstance(form, DigitWord):
        if form.start != 1:
            raise DomainError(f"finite form must start at position 1, got {form.start}")
        validate_digits(form, Q)
        ds = list(form.digits)
        while ds and ds[-1] == 0:
            ds.pop()
        if not ds:
            raise DomainError("the zero value has no trailing-maximum twin")
        ds[-1] -= 1
        return CofiniteExpansion(DigitWord(tuple(ds)))
    if isinstance(form, CofiniteExpansion):
        _validate_canonical(form, Q)
        ds = list(form.head.digits)
        ds[-1] += 1
        return DigitWord(tuple(ds))
    raise TypeError(f"expected DigitWord or CofiniteExpansion, got {form!r}")


def dual_representation(x: Rational, Q: QSequence, bound: int = 10000) -> DualRepresentationReport:
    """Decide whether reduced p/r in (0, 1) has two representations.

    Runs the residual chain r_k = r_{k-1} / gcd(r_{k-1}, q_k), which strips
    from r exactly the prime multiplicity the product q1...q_k supplies, so
    r_k = 1 iff r divides q1...q_k and the first such k is the minimal n0.
    For list-backed sequences a full period with no reduction proves "no".
    For rule sequences the catalog's declared facts apply (all-odd entries
    kill any even residual immediately); otherwise the search stops at
    `bound` and reports undecided.
    """
    x = Fraction(x)
    if not 0 < x < 1:
        raise DomainError(f"dual representation is defined on (0, 1), got {x}")
    if bound < 1:
        raise DomainError(f"search bound must be positive, got {bound}")
    residual = x.denominator

    view = prefix_and_period(Q)
    if view is not None:
        pre, per = view
        k = 0
        last_drop = 0
        while residual > 1:
            k += 1
            g = math.gcd(residual, q_at(Q, k))
            if g > 1:
                residual //= g
                last_drop = k
            elif k - max(last_drop, len(pre)) >= len(per):
                # One unproductive full period inside the cycle: the same
                # residual meets the same bases forever.
                return DualRepresentationReport("no")
        n0 = k
    else:
        info = RULE_CATALOG[Q.rule_id]
        if info.odd_entries and residual % 2 == 0:
            return DualRepresentationReport("no")
        k = 0
        while residual > 1:
            if k >= bound:
                return DualRepresentationReport("undecided", bound=bound)
            k += 1
            residual //= math.gcd(residual, q_at(Q, k))
        n0 = k

    word, state = expand(x, Q, n0)
    if state.value != 0:
        raise AssertionError("residual chain and greedy expansion disagree on termination")
    cof = convert_dual(word, Q)
    if evaluate_finite(word, Q) != x or cofinite_value(cof, Q) != x:
        raise AssertionError("materialised dual forms do not evaluate back to the input")
    return DualRepresentationReport("yes", n0=n0, finite_form=word, cofinite_form=cof)


@dataclass(frozen=True)
class ShiftConstantReport:
    """Digit-ratio constancy check over a window of positions.

    The shift values of x are constant from step `after` onward exactly when
    every later digit satisfies e_n/(q_n - 1) = sigma^after(x).  `holds`
    states that equality over the checked window; `conclusive` marks whether
    the window provably decides the unbounded claim (it always does for a
    failure, and for list-backed Q once the window covers every recurring
    shift state).
    """

    holds: bool
    after: int
    constant: Fraction | None
    ratio_witnesses: tuple[tuple[int, int, int], ...]
    conclusive: bool


def shift_constant_check(
    x: Rational | BlockDescription,
    Q: QSequence,
    n0: int = 0,
    horizon: int = 50,
) -> ShiftConstantReport:
    """Check e_n/(q_n - 1) = sigma^{n0}(x) for n0 < n <= n0 + horizon.

    Block descriptions are reconstructed to their exact value first.  For a
    list-backed Q the pair (shift state, position in period) recurs within
    denominator * period steps, so a clean window of that length decides the
    property for all n; shorter clean windows are reported as inconclusive,
    while any failing window is conclusive by counterexample.
    """
    if isinstance(x, BlockDescription):
        x = reconstruct(x, Q)
    x = _unit_value(x)
    if n0 < 0:
        raise DomainError(f"window start must be >= 0, got {n0}")
    if horizon < 1:
        raise DomainError(f"window length must be positive, got {horizon}")

    word, _ = expand(x, Q, n0 + horizon)
    target = shift_value(x, Q, n0)
    witnesses = []
    holds = True
    for n in range(n0 + 1, n0 + horizon + 1):
        e = word.digits[n - 1]
        q = q_at(Q, n)
        witnesses.append((n, e, q))
        if Fraction(e, q - 1) != target:
            holds = False

    if not holds:
        conclusive = True
    else:
        view = prefix_and_period(Q)
        if view is None:
            conclusive = False
        else:
            pre, per = view
            needed = (max(n0, len(pre)) - n0) + x.denominator * len(per)
            conclusive = horizon >= needed
    return ShiftConstantReport(holds, n0, target if holds else None, tuple(witnesses), conclusive)


@dataclass(frozen=True)
class FixedPointCandidate:
    """One candidate eps/(q-1) for a value fixed by every shift."""

    eps: int
    value: Fraction
    member: bool
    failing_position: int | None
    endpoint: bool


@dataclass(frozen=True)
class FixedPointReport:
    """All q candidates eps/(q-1), q = min base, with membership verdicts.

    A candidate is a true fixed point iff (q - 1) divides eps * (q_n - 1)
    at every position, so the candidate list can be strictly larger than
    the set of members; `failing_position` pins the first failure.  The
    eps = q - 1 candidate is the domain endpoint 1, reported here and
    nowhere else.
    """

    q: int
    candidates: tuple[FixedPointCandidate, ...]


def fixed_points(Q: QSequence) -> FixedPointReport:
    """Enumerate values x with sigma^n(x) = x for every n.

    Any such value is eps/(q-1) with q the minimum base and
    eps in {0, ..., q-1}; membership is the integrality of the digit rule
    e_n = eps*(q_n - 1)/(q - 1), checked over the prefix plus one full
    period for list-backed sequences and settled by catalog facts for rule
    sequences.
    """
    tm = tail_min(Q, 0)
    if not tm.decidable:
        raise UndecidableError("tail minimum undecidable: fixed-point candidates unknown")
    q = tm.value
    assert q is not None

    view = prefix_and_period(Q)
    if view is None and not RULE_CATALOG[Q.rule_id].all_fixed_point_candidates:
        raise UndecidableError(f"rule {Q.rule_id!r} declares no fixed-point membership fact")

    candidates = []
    for eps in range(q):
        if view is None:
            member, failing = True, None
        else:
            pre, per = view
            member, failing = True, None
            for n in range(1, len(pre) + len(per) + 1):
                if eps * (q_at(Q, n) - 1) % (q - 1) != 0:
                    member, failing = False, n
                    break
        candidates.append(
            FixedPointCandidate(eps, Fraction(eps, q - 1), member, failing, endpoint=eps == q - 1)
        )
    return FixedPointReport(q, tuple(candidates))


def fixed_point_digits(Q: QSequence, eps: int, q: int | None = None) -> Iterator[int]:
    """Digit generator e_n = eps*(q_n - 1)/(q - 1) of a fixed-point member.

    Raises on the first position where the rule is not integral, i.e. when
    eps is not actually a member.
    """
    if q is None:
        tm = tail_min(Q, 0)
        if not tm.decidable:
            raise UndecidableError("tail minimum undecidable: no digit rule")
        q = tm.value
        assert q is not None
    if not 0 <= eps <= q - 1:
        raise DomainError(f"digit candidate must lie in 0..{q - 1}, got {eps}")
    n = 0
    while True:
        n += 1
        num = eps * (q_at(Q, n) - 1)
        d, r = divmod(num, q - 1)
        if r:
            raise DomainError(f"candidate {eps} fails the integrality test at position {n}")
        yield d


@dataclass(frozen=True)
class RegroupBlock:
    """One regrouped block: new digit lam, new base mu + 1."""

    lam: int
    mu: int


@dataclass(frozen=True)
class Regrouping:
    """Blockwise summary of a regrouping.

    `mu` is the minimum of the block mu_k over the computed blocks and `lam`
    the digit of the first block achieving it.  `ratio_constant` states
    lam_k/mu_k is the same for every block (the regrouped series is then
    shift-constant from step 0); `proportional` states lam_k = (mu_k/mu)*lam
    exactly.  Given how lam is chosen the two conditions coincide; both are
    evaluated independently.
    """

    breakpoints: tuple[int, ...]
    blocks: tuple[RegroupBlock, ...]
    mu: int
    lam: int
    ratio_constant: bool
    proportional: bool


def regroup(
    x: Rational | DigitWord,
    Q: QSequence,
    breakpoints: Sequence[int] | Callable[[int], int],
    count: int | None = None,
) -> tuple[tuple[int, ...], DigitWord, Regrouping]:
    """Merge digit runs between breakpoints into a coarser Cantor series.

    With 0 = n_0 < n_1 < n_2 < ... the k-th block spans positions
    n_{k-1}+1 .. n_k and becomes one digit lam_k in base mu_k + 1 =
    q_{n_{k-1}+1} * ... * q_{n_k}; the new digits are the positional
    numerators of the old blocks, so the regrouped prefix plus the carried
    shift state reproduce x exactly.  Returns the explicit list of new
    bases, the new digit word, and the block report.
    """
    if callable(breakpoints):
        if count is None:
            raise DomainError("breakpoint rule needs an explicit block count")
        bps = tuple(breakpoints(k) for k in range(1, count + 1))
    else:
        bps = tuple(breakpoints)
        if count is None:
            count = len(bps)
    if count < 1:
        raise DomainError(f"block count must be positive, got {count}")
    if len(bps) < count:
        raise DomainError(f"need {count} breakpoints, got {len(bps)}")
    bps = bps[:count]
    prev = 0
    for nk in bps:
        if nk <= prev:
            raise DomainError(f"breakpoints must be strictly increasing positive integers, got {bps}")
        prev = nk

    if isinstance(x, DigitWord):
        x = evaluate_finite(x, Q)
    x = _unit_value(x)

    word, _ = expand(x, Q, bps[-1])
    new_bases = []
    blocks = []
    lams = []
    lo = 0
    for nk in bps:
        lam = 0
        prod = 1
        for pos in range(lo + 1, nk + 1):
            q = q_at(Q, pos)
            lam = lam * q + word.digits[pos - 1]
            prod *= q
        new_bases.append(prod)
        blocks.append(RegroupBlock(lam, prod - 1))
        lams.append(lam)
        lo = nk

    mu = min(b.mu for b in blocks)
    lam_star = next(b.lam for b in blocks if b.mu == mu)
    ratio_constant = len({Fraction(b.lam, b.mu) for b in blocks}) == 1
    proportional = all(b.lam * mu == b.mu * lam_star for b in blocks)
    report = Regrouping(bps, tuple(blocks), mu, lam_star, ratio_constant, proportional)
    return tuple(new_bases), DigitWord(tuple(lams)), report
