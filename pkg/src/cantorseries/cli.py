"""Command-line front end.

Every verb takes a base sequence via --q (grammar: const:<q> |
periodic:<q1,q2,...> | prefix:<a1,...;p1,...> | rule:odd) and, where a
number is needed, --x in one of the forms

    rat:<num>/<den>        exact fraction
    digits:<d1,d2,...>     finite digit word (terminating expansion)
    block:<p1,...|b1,...>  preperiod digits | recurring block digits
    cofinite:<h1,...>      head digits, maximal tail implied

Output goes to stdout, plain lines by default or one JSON object with
--json; both modes carry the same numeric content and are byte-stable for
identical inputs.  Exit codes: 0 success, 1 usage or parse error, 2 domain
error, 3 undecided outcome.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .foundation import DomainError, ParseError, QSequence, base_product, parse_qseq
from .expansion import DigitWord, enclosure, evaluate_finite, expand, shift_value
from .rationality import (
    BlockDescription,
    RationalityCertificate,
    block_description,
    certify_rational,
    reconstruct,
    verify_certificate,
)
from .structure import (
    CofiniteExpansion,
    cofinite_value,
    convert_dual,
    dual_representation,
    fixed_points,
    fold_cofinite,
    regroup,
    shift_constant_check,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_UNDECIDED = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the documented contract is 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_digit_list(text: str, what: str) -> tuple[int, ...]:
    if text == "":
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"bad integer in {what} list: {text!r}") from None


def parse_number_spec(text: str) -> tuple[str, Any]:
    """Split a number spec into (form, payload); payload types vary by form."""
    s = "".join(text.split())
    head, sep, rest = s.partition(":")
    if not sep:
        raise ParseError(f"expected <form>:<spec> for a number, got {text!r}")
    if head == "rat":
        num_text, slash, den_text = rest.partition("/")
        if not slash:
            raise ParseError(f"rational form is rat:<num>/<den>, got {text!r}")
        try:
            num, den = int(num_text), int(den_text)
        except ValueError:
            raise ParseError(f"bad integer in rational {text!r}") from None
        if den <= 0:
            raise ParseError(f"rational denominator must be positive, got {den}")
        return "rat", Fraction(num, den)
    if head == "digits":
        return "digits", DigitWord(_parse_digit_list(rest, "digit"))
    if head == "block":
        pre_text, bar, block_text = rest.partition("|")
        if not bar:
            raise ParseError(f"block form is block:<pre|block>, got {text!r}")
        pre = _parse_digit_list(pre_text, "preperiod")
        blk = _parse_digit_list(block_text, "block")
        if not blk:
            raise ParseError("block form needs at least one block digit")
        return "block", BlockDescription(DigitWord(pre), DigitWord(blk, start=len(pre) + 1))
    if head == "cofinite":
        head_digits = _parse_digit_list(rest, "cofinite head")
        if not head_digits:
            raise ParseError("cofinite form needs at least one head digit")
        return "cofinite", head_digits
    raise ParseError(f"unknown number form {head!r}")


def _value_of(form: str, payload: Any, Q: QSequence) -> Fraction:
    if form == "rat":
        return payload
    if form == "digits":
        return evaluate_finite(payload, Q)
    if form == "block":
        return reconstruct(payload, Q)
    if form == "cofinite":
        return cofinite_value(fold_cofinite(payload, Q), Q)
    raise AssertionError(form)


def _cert_report(x: Fraction, Q: QSequence, cert: RationalityCertificate) -> dict[str, Any]:
    return {
        "n": cert.n,
        "m": cert.m,
        "sigma": _frac(cert.sigma_value),
        "block_product": cert.block_product,
        "witness_ok": bool(verify_certificate(x, Q, cert)),
    }


def _cmd_expand(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    x = _value_of(*parse_number_spec(args.x), Q)
    word, state = expand(x, Q, args.count)
    return {"x": _frac(x), "digits": list(word.digits), "sigma": _frac(state.value), "step": state.step}, EXIT_OK


def _cmd_eval(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    form, payload = parse_number_spec(args.x)
    value = _value_of(form, payload, Q)
    report: dict[str, Any] = {"form": form, "value": _frac(value)}
    if form == "digits":
        box = enclosure(payload, Q)
        report["low"] = _frac(box.low)
        report["high"] = _frac(box.high)
    return report, EXIT_OK


def _cmd_certify(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    x = _value_of(*parse_number_spec(args.x), Q)
    return _cert_report(x, Q, certify_rational(x, Q)), EXIT_OK


def _cmd_verify(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    x = _value_of(*parse_number_spec(args.x), Q)
    n, m = args.n, args.m
    if n >= 0 and m >= 1 and 0 <= x < 1:
        cert = RationalityCertificate(n, m, shift_value(x, Q, n), base_product(Q, n + 1, n + m))
    else:
        # degenerate pair: let the total checker report the reason
        cert = RationalityCertificate(n, m, Fraction(0), 1)
    check = verify_certificate(x, Q, cert)
    return {
        "ok": check.ok,
        "reason": check.reason,
        "recurrence_ok": check.recurrence_ok,
        "divisibility_ok": check.divisibility_ok,
    }, EXIT_OK


def _cmd_reconstruct(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    form, payload = parse_number_spec(args.x)
    if form != "block":
        raise DomainError("reconstruct expects --x in block:<pre|block> form")
    value = reconstruct(payload, Q)
    return {
        "value": _frac(value),
        "n": len(payload.preperiod),
        "m": len(payload.block),
    }, EXIT_OK


def _cmd_dual(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    x = _value_of(*parse_number_spec(args.x), Q)
    report = dual_representation(x, Q, bound=args.bound)
    out: dict[str, Any] = {"x": _frac(x), "decision": report.decision}
    if report.decision == "yes":
        assert report.finite_form is not None and report.cofinite_form is not None
        out["n0"] = report.n0
        out["finite"] = list(report.finite_form.digits)
        out["cofinite_head"] = list(report.cofinite_form.head.digits)
        out["tail_start"] = report.cofinite_form.tail_start
        return out, EXIT_OK
    if report.decision == "undecided":
        out["bound"] = report.bound
        return out, EXIT_UNDECIDED
    return out, EXIT_OK


def _cmd_convert(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    form, payload = parse_number_spec(args.x)
    if form == "digits":
        cof = convert_dual(payload, Q)
        assert isinstance(cof, CofiniteExpansion)
        return {
            "form": "cofinite",
            "head": list(cof.head.digits),
            "tail_start": cof.tail_start,
            "value": _frac(cofinite_value(cof, Q)),
        }, EXIT_OK
    if form == "cofinite":
        word = convert_dual(fold_cofinite(payload, Q), Q)
        assert isinstance(word, DigitWord)
        return {
            "form": "finite",
            "digits": list(word.digits),
            "value": _frac(evaluate_finite(word, Q)),
        }, EXIT_OK
    raise DomainError("convert expects --x in digits:<...> or cofinite:<...> form")


def _cmd_shift_const(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    form, payload = parse_number_spec(args.x)
    x = payload if form == "block" else _value_of(form, payload, Q)
    report = shift_constant_check(x, Q, n0=args.n0, horizon=args.horizon)
    return {
        "holds": report.holds,
        "after": report.after,
        "constant": None if report.constant is None else _frac(report.constant),
        "conclusive": report.conclusive,
        "witnesses": [list(w) for w in report.ratio_witnesses],
    }, EXIT_OK


def _cmd_fixed_points(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    report = fixed_points(Q)
    return {
        "q": report.q,
        "candidates": [
            {
                "eps": c.eps,
                "value": _frac(c.value),
                "member": c.member,
                "endpoint": c.endpoint,
                "failing_position": c.failing_position,
            }
            for c in report.candidates
        ],
    }, EXIT_OK


def _cmd_regroup(args: argparse.Namespace, Q: QSequence) -> tuple[dict[str, Any], int]:
    form, payload = parse_number_spec(args.x)
    x = payload if form == "digits" else _value_of(form, payload, Q)
    try:
        bps = tuple(int(tok) for tok in args.breakpoints.split(","))
    except ValueError:
        raise ParseError(f"bad breakpoint list {args.breakpoints!r}") from None
    new_bases, word, report = regroup(x, Q, bps, count=args.blocks)
    return {
        "bases": list(new_bases),
        "digits": list(word.digits),
        "blocks": [[b.lam, b.mu] for b in report.blocks],
        "mu": report.mu,
        "lambda": report.lam,
        "ratio_constant": report.ratio_constant,
        "proportional": report.proportional,
    }, EXIT_OK


_COMMANDS = {
    "expand": _cmd_expand,
    "eval": _cmd_eval,
    "certify": _cmd_certify,
    "verify": _cmd_verify,
    "reconstruct": _cmd_reconstruct,
    "dual": _cmd_dual,
    "convert": _cmd_convert,
    "shift-const": _cmd_shift_const,
    "fixed-points": _cmd_fixed_points,
    "regroup": _cmd_regroup,
}


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--q", required=True, metavar="QSPEC", help="base sequence, e.g. periodic:2,3 or rule:odd")
    common.add_argument("--json", action="store_true", help="emit one JSON object instead of plain lines")

    parser = _Parser(prog="cantorseries", description="Exact Cantor-series arithmetic over arbitrary base sequences.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", parents=[common], help="digits of x by the shift operator")
    p.add_argument("--x", required=True, metavar="NUMSPEC")
    p.add_argument("--count", required=True, type=int, metavar="N")

    p = sub.add_parser("eval", parents=[common], help="exact value of a number description")
    p.add_argument("--x", required=True, metavar="NUMSPEC")

    p = sub.add_parser("certify", parents=[common], help="earliest shift-state recurrence of a rational")
    p.add_argument("--x", required=True, metavar="NUMSPEC")

    p = sub.add_parser("verify", parents=[common], help="re-check a recurrence pair (n, m)")
    p.add_argument("--x", required=True, metavar="NUMSPEC")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)

    p = sub.add_parser("reconstruct", parents=[common], help="value of a preperiod plus recurring block")
    p.add_argument("--x", required=True, metavar="NUMSPEC")

    p = sub.add_parser("dual", parents=[common], help="decide the trailing-maximum twin representation")
    p.add_argument("--x", required=True, metavar="NUMSPEC")
    p.add_argument("--bound", type=int, default=10000, help="search cap for rule sequences (default 10000)")

    p = sub.add_parser("convert", parents=[common], help="switch between finite and trailing-maximum forms")
    p.add_argument("--x", required=True, metavar="NUMSPEC")

    p = sub.add_parser("shift-const", parents=[common], help="check digit ratios for shift-value constancy")
    p.add_argument("--x", required=True, metavar="NUMSPEC")
    p.add_argument("--n0", type=int, default=0)
    p.add_argument("--horizon", type=int, default=50)

    sub.add_parser("fixed-points", parents=[common], help="values fixed by every shift")

    p = sub.add_parser("regroup", parents=[common], help="merge digit blocks between breakpoints")
    p.add_argument("--x", required=True, metavar="NUMSPEC")
    p.add_argument("--breakpoints", required=True, metavar="N1,N2,...")
    p.add_argument("--blocks", type=int, default=None, help="number of blocks (default: all breakpoints)")

    return parser


def _render_plain(report: dict[str, Any]) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                lines.append("  " + " ".join(f"{k}={_plain_scalar(v)}" for k, v in item.items()))
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{key}: " + " ".join("(" + ",".join(map(str, item)) + ")" for item in value))
        elif isinstance(value, list):
            lines.append(f"{key}: " + ",".join(map(str, value)))
        else:
            lines.append(f"{key}: {_plain_scalar(value)}")
    return "\n".join(lines)


def _plain_scalar(value: Any) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "null"
    return str(value)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        Q = parse_qseq(args.q)
        report, code = _COMMANDS[args.verb](args, Q)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(json.dumps(report) if args.json else _render_plain(report))
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
