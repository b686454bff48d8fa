"""Rationality certificates from shift-state recurrence.

A value x in [0, 1) expanded over Q is rational exactly when two of its
shift values coincide: sigma^n(x) = sigma^{n+m}(x) for some n >= 0, m >= 1.
For reduced x = u/v every shift value is u_k/v with u_k in {0, ..., v-1},
so a recurrence must appear within v steps, and conversely a recurrence
pins x down in closed form.  This module finds, checks, and inverts such
certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .foundation import DomainError, QSequence, Rational, base_product, q_at
from .expansion import DigitWord, _unit_value, evaluate_finite, expand, shift_value, validate_digits


@dataclass(frozen=True)
class RationalityCertificate:
    """A recurrence sigma^n(x) = sigma^{n+m}(x) with its block product.

    block_product is P = q_{n+1} * ... * q_{n+m}; any x certified by (n, m)
    satisfies the divisibility v | q1...q_n * (P - 1) on its reduced
    denominator v, which is the cheap arithmetic witness checked alongside
    the recurrence itself.
    """

    n: int
    m: int
    sigma_value: Fraction
    block_product: int


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of re-deriving a certificate from scratch."""

    ok: bool
    reason: str | None
    recurrence_ok: bool
    divisibility_ok: bool

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BlockDescription:
    """Digits 1..n (preperiod) plus a recurring block at positions n+1..n+m.

    Describes the number whose shift value returns to itself after the
    block: the digits need not repeat position-wise (the bases differ), only
    the shift value recurs.  Any in-range block that is not all-maximal
    yields a consistent description: the reconstructed value re-expands to
    exactly these digits and returns to the same shift value after m steps.
    """

    preperiod: DigitWord
    block: DigitWord

    def __post_init__(self) -> None:
        if self.preperiod.start != 1:
            raise DomainError(f"preperiod must start at position 1, got {self.preperiod.start}")
        if len(self.block) < 1:
            raise DomainError("recurring block needs at least one digit")
        want = len(self.preperiod) + 1
        if self.block.start != want:
            raise DomainError(f"block must start at position {want}, got {self.block.start}")


def certify_rational(x: Rational | int, Q: QSequence) -> RationalityCertificate:
    """Earliest shift-state recurrence of x under Q.

    Scans sigma^0, sigma^1, ... recording the first step at which each exact
    value appears; stops at the first value seen twice.  On reduced x = u/v
    the states are the integers u_k = q_k * u_{k-1} mod v, at most v distinct
    ones, so the scan stops with n + m <= v.  The returned pair minimises
    n + m (the first collision happens at step n + m), which makes the
    output canonical even though any later recurrence would certify too.
    """
    x = _unit_value(x)
    u, v = x.numerator, x.denominator
    first_seen = {u: 0}
    step = 0
    while True:
        step += 1
        u = q_at(Q, step) * u % v
        n = first_seen.get(u)
        if n is not None:
            m = step - n
            return RationalityCertificate(n, m, Fraction(u, v), base_product(Q, n + 1, n + m))
        first_seen[u] = step


def verify_certificate(x: Rational | int, Q: QSequence, cert: RationalityCertificate) -> CertificateCheck:
    """Re-derive a certificate's claims by direct exact recomputation.

    Total: never raises.  Checks, in order, that the fields are in range,
    that x lies in [0, 1), that sigma^n(x) = sigma^{n+m}(x) recomputed from
    scratch, that the recorded shift value and block product match, and that
    the reduced denominator v divides q1...q_n * (P - 1).  Non-minimal
    certificates pass: any valid recurrence certifies.
    """
    if cert.n < 0 or cert.m < 1:
        return CertificateCheck(False, "invalid_fields", False, False)
    try:
        x = _unit_value(x)
    except (DomainError, ValueError, TypeError, ZeroDivisionError):
        return CertificateCheck(False, "value_out_of_range", False, False)
    sigma_n = shift_value(x, Q, cert.n)
    sigma_nm = shift_value(x, Q, cert.n + cert.m)
    product = base_product(Q, cert.n + 1, cert.n + cert.m)
    recurrence_ok = sigma_n == sigma_nm
    divisibility_ok = base_product(Q, 1, cert.n) * (product - 1) % x.denominator == 0
    if not recurrence_ok:
        return CertificateCheck(False, "recurrence_mismatch", False, divisibility_ok)
    if cert.sigma_value != sigma_n:
        return CertificateCheck(False, "sigma_mismatch", True, divisibility_ok)
    if cert.block_product != product:
        return CertificateCheck(False, "block_product_mismatch", True, divisibility_ok)
    if not divisibility_ok:
        return CertificateCheck(False, "divisibility_failed", True, False)
    return CertificateCheck(True, None, True, True)


def block_description(x: Rational | int, Q: QSequence) -> BlockDescription:
    """Eventually-recurring digit description of x: certify, then expand."""
    cert = certify_rational(x, Q)
    word, _ = expand(x, Q, cert.n + cert.m)
    return BlockDescription(
        DigitWord(word.digits[: cert.n]),
        DigitWord(word.digits[cert.n :], start=cert.n + 1),
    )


def reconstruct(desc: BlockDescription, Q: QSequence) -> Rational:
    """Exact value described by preperiod digits plus a recurring block.

    With P the block's base product and N its positional numerator
    (e_{n+1}*q_{n+2}...q_{n+m} + ... + e_{n+m}), the recurring tail sums to
    sigma^n = N/(P - 1); the preperiod then places it:
    x = value(preperiod) + sigma^n/(q1...q_n).
    """
    validate_digits(desc.preperiod, Q)
    validate_digits(desc.block, Q)
    num = 0
    product = 1
    all_max = True
    for off, d in enumerate(desc.block.digits):
        q = q_at(Q, desc.block.start + off)
        num = num * q + d
        product *= q
        all_max = all_max and d == q - 1
    if all_max:
        raise DomainError("all-maximal block describes the excluded endpoint value 1")
    sigma_n = Fraction(num, product - 1)
    head = evaluate_finite(desc.preperiod, Q)
    return head + sigma_n / base_product(Q, 1, len(desc.preperiod))


def tails_equal(x: Rational | int, Q: QSequence, n: int, m: int) -> bool:
    """Whether the shifted tails at depths n and n+m carry the same value.

    Equivalent statements: sigma^n(x) = sigma^{n+m}(x), or the tail of the
    series after position n equals q_{n+1}...q_{n+m} times the tail after
    position n+m once both are rescaled to position-1 weight.
    """
    x = _unit_value(x)
    if n < 0:
        raise DomainError(f"tail depth must be >= 0, got {n}")
    if m < 1:
        raise DomainError(f"tail gap must be >= 1, got {m}")
    u, v = x.numerator, x.denominator
    for k in range(1, n + 1):
        u = q_at(Q, k) * u % v
    u_n = u
    for k in range(n + 1, n + m + 1):
        u = q_at(Q, k) * u % v
    return u_n == u
