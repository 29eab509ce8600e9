# coding=utf-8
from fractions import Fraction

import pytest

from mps.errors import OutOfRange
from mps.models import ComplexMatrix, IntegerMps, Verdict, VerdictStatus
from mps.realsearch.conditions import necessary_conditions
from mps.realsearch.search import candidate_grid


@pytest.mark.parametrize(
    "n, d, status, rule",
    [
        (3, Fraction(1, 2), VerdictStatus.EXISTS, "full-j"),
        (4, 0, VerdictStatus.IMPOSSIBLE, "small-n"),
        (5, Fraction(1, 2), VerdictStatus.IMPOSSIBLE, "small-n"),
        (6, 3, VerdictStatus.IMPOSSIBLE, "range-of-r"),
        (6, 1, VerdictStatus.IMPOSSIBLE, "real-parity"),
        (7, Fraction(3, 2), VerdictStatus.IMPOSSIBLE, "real-parity"),
        (8, Fraction(1, 2), VerdictStatus.IMPOSSIBLE, "real-parity"),
        (26, 4, VerdictStatus.IMPOSSIBLE, "design-gap"),
        (14, 3, VerdictStatus.IMPOSSIBLE, "real-parity"),
        (14, 4, VerdictStatus.EXISTS, "upper-interval"),
        (18, 4, VerdictStatus.IMPOSSIBLE, "design-nonexistence"),
        (62, 14, VerdictStatus.EXISTS, "hadamard-bridge"),
        (6, 0, VerdictStatus.EXISTS, "upper-interval"),
        (6, 2, VerdictStatus.EXISTS, "full-j"),
        (16, 1, VerdictStatus.EXISTS, "sylvester"),
        (14, 0, VerdictStatus.EXISTS, "paley-conference"),
        (12, 1, VerdictStatus.EXISTS, "conference-block"),
        (14, 2, VerdictStatus.EXISTS, "hadamard-bridge"),
        (22, 4, VerdictStatus.EXISTS, "design"),
        (26, 6, VerdictStatus.EXISTS, "design"),
    ],
)
def test_verdicts(n, d, status, rule):
    verdict = necessary_conditions(n, d)
    assert verdict.status is status
    assert verdict.rule == rule


def test_design_gap_is_not_a_parity_case():
    """(26, 4)：n ≡ 2 (mod 4)、d 为偶数、n/2 + d 为奇数"""
    assert 26 % 4 == 2 and 4 % 2 == 0 and (13 + 4) % 2 == 1
    assert necessary_conditions(26, 4).rule == "design-gap"


def test_degenerate_design_note():
    verdict = necessary_conditions(10, 2)
    assert verdict.status is VerdictStatus.EXISTS
    assert "degenerate-design" in verdict.notes


def test_n2_complex_witness():
    verdict = necessary_conditions(2, Fraction(1, 3))
    assert verdict.status is VerdictStatus.EXISTS
    assert isinstance(verdict.witness, ComplexMatrix)
    assert isinstance(necessary_conditions(2, 3).witness, IntegerMps)


def test_open_case():
    """(62, 16) 需要 (31, 10, 3) 设计，没有构造"""
    verdict = necessary_conditions(62, 16)
    assert verdict.status is VerdictStatus.OPEN


def test_rejects_bad_input():
    with pytest.raises(OutOfRange):
        necessary_conditions(1, 0)
    with pytest.raises(OutOfRange):
        necessary_conditions(4, Fraction(-1, 2))


def test_impossible_verdict_requires_known_rule():
    with pytest.raises(ValueError):
        Verdict(n=4, d=Fraction(0), status=VerdictStatus.IMPOSSIBLE, rule="undecided")


@pytest.mark.parametrize("n", range(2, 41))
def test_witnesses_match_parameters(n):
    """凡给出证据的判定，证据的 (n, d) 与输入一致"""
    for d in candidate_grid(n):
        verdict = necessary_conditions(n, d)
        if verdict.status is not VerdictStatus.EXISTS:
            continue
        witness = verdict.witness
        assert isinstance(witness, IntegerMps)
        assert witness.n == n
        assert witness.d == d
