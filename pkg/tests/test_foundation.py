from fractions import Fraction

import pytest

from cantorseries import (
    Constant,
    DomainError,
    ParseError,
    Periodic,
    PrefixPeriodic,
    Rule,
    bases,
    base_product,
    format_qseq,
    parse_qseq,
    q_at,
    tail_min,
)


def test_q_at_constant():
    assert q_at(Constant(10), 7) == 10


def test_q_at_rule_odd_gives_odd_numbers():
    Q = Rule("odd")
    assert [q_at(Q, k) for k in range(1, 6)] == [3, 5, 7, 9, 11]
    assert q_at(Q, 3) == 7


def test_q_at_periodic_wraps():
    Q = Periodic((2, 3))
    assert [q_at(Q, k) for k in range(1, 7)] == [2, 3, 2, 3, 2, 3]


def test_q_at_prefix_periodic_lists_prefix_then_cycle():
    Q = PrefixPeriodic((5,), (2, 3))
    assert [q_at(Q, k) for k in range(1, 8)] == [5, 2, 3, 2, 3, 2, 3]


def test_q_at_rejects_nonpositive_position():
    with pytest.raises(DomainError):
        q_at(Constant(2), 0)


def test_bases_and_product_helpers():
    Q = Periodic((2, 3))
    assert bases(Q, 5) == (2, 3, 2, 3, 2)
    assert bases(Q, 3, start=2) == (3, 2, 3)
    assert base_product(Q, 1, 4) == 36
    assert base_product(Q, 5, 4) == 1


@pytest.mark.parametrize(
    "bad",
    [
        lambda: Constant(1),
        lambda: Periodic((1, 3)),
        lambda: Periodic(()),
        lambda: PrefixPeriodic((), (2,)),
        lambda: PrefixPeriodic((2,), ()),
        lambda: PrefixPeriodic((2,), (3, 1)),
        lambda: Rule("squares"),
    ],
)
def test_constructors_reject_invalid_sequences(bad):
    with pytest.raises(ValueError):
        bad()


@pytest.mark.parametrize(
    "text,expected",
    [
        ("const:10", Constant(10)),
        ("periodic:2,3", Periodic((2, 3))),
        ("prefix:5;2,3", PrefixPeriodic((5,), (2, 3))),
        ("prefix:5,4;2,3", PrefixPeriodic((5, 4), (2, 3))),
        ("rule:odd", Rule("odd")),
        (" periodic: 2 , 3 ", Periodic((2, 3))),
    ],
)
def test_parse_qseq(text, expected):
    assert parse_qseq(text) == expected


@pytest.mark.parametrize(
    "text",
    [
        "periodic:1,3",
        "rule:squares",
        "const:",
        "const:2,3",
        "periodic:",
        "prefix:5",
        "prefix:;2",
        "nonsense",
        "weird:2",
        "periodic:2,x",
    ],
)
def test_parse_qseq_rejects(text):
    with pytest.raises(ParseError):
        parse_qseq(text)


@pytest.mark.parametrize(
    "Q",
    [Constant(10), Periodic((2, 3)), PrefixPeriodic((5,), (2, 3)), Rule("odd")],
)
def test_format_parse_round_trip(Q):
    assert parse_qseq(format_qseq(Q)) == Q


def test_tail_min_periodic():
    tm = tail_min(Periodic((3, 5)), 0)
    assert (tm.value, tm.decidable, tm.after) == (3, True, 0)


def test_tail_min_rule_odd_is_next_entry():
    assert tail_min(Rule("odd"), 0).value == 3
    assert tail_min(Rule("odd"), 4).value == 11


def test_tail_min_prefix_periodic_skips_consumed_prefix():
    tm = tail_min(PrefixPeriodic((2,), (7, 9)), 1)
    assert (tm.value, tm.decidable) == (7, True)


def test_tail_min_matches_enumeration():
    # Direct enumeration over one period length beyond the probe point.
    for Q in [Periodic((6, 2, 9)), PrefixPeriodic((4, 11), (5, 3)), Constant(7)]:
        for n0 in range(6):
            got = tail_min(Q, n0).value
            want = min(q_at(Q, k) for k in range(n0 + 1, n0 + 40))
            assert got == want


def test_tail_min_rejects_negative_start():
    with pytest.raises(DomainError):
        tail_min(Constant(2), -1)


def test_rational_values_reduce_on_construction():
    assert Fraction(10, 20) == Fraction(1, 2)
    assert Fraction(10, 20).denominator == 2
