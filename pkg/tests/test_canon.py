# coding=utf-8
from fractions import Fraction

import pytest

from mps.constructions import full_j_matrix, upper_interval
from mps.designs import sylvester_hadamard
from mps.errors import TooLarge
from mps.models import EquivalenceWitness, IntegerMps
from mps.realsearch.canon import are_equivalent, canonical_form, canonical_witness
from mps.realsearch.exact import apply_equivalence, negate, to_integer_mps


def full_j_exact(n):
    return to_integer_mps(full_j_matrix(n), Fraction(n, 2) - 1)


def samples():
    return [
        full_j_exact(6),
        full_j_exact(7),
        to_integer_mps(upper_interval(6, 2), 2),
        to_integer_mps(upper_interval(6, 0), 0),
        to_integer_mps(upper_interval(8, 1), 1),
        IntegerMps(d=1, q2=2 * sylvester_hadamard(8).H),
    ]


def scramble(M, rng):
    n = M.n
    witness = EquivalenceWitness(
        P=tuple(int(x) + 1 for x in rng.permutation(n)),
        signs=tuple(int(x) for x in rng.choice([1, -1], size=n)),
        global_sign=int(rng.choice([1, -1])),
    )
    return apply_equivalence(M, witness)


@pytest.mark.parametrize("index", range(6))
def test_canonical_form_is_idempotent(index):
    C = canonical_form(samples()[index])
    assert canonical_form(C) == C


@pytest.mark.parametrize("index", range(6))
def test_canonical_form_ignores_relabelling(index, rng):
    """置换、符号对与整体取负都不改变典范形"""
    M = samples()[index]
    C = canonical_form(M)
    for _ in range(5):
        assert canonical_form(scramble(M, rng)) == C


def test_witness_produces_canonical_form():
    for M in samples():
        C, witness = canonical_witness(M)
        assert apply_equivalence(M, witness) == C
        assert sorted(witness.P) == list(range(1, M.n + 1))


def test_equivalence_witness(rng):
    for M in samples():
        other = scramble(M, rng)
        witness = are_equivalent(M, other)
        assert witness is not None
        assert apply_equivalence(M, witness) == other


def test_self_and_negation():
    for M in samples():
        assert apply_equivalence(M, are_equivalent(M, M)) == M
        witness = are_equivalent(M, negate(M))
        assert apply_equivalence(M, witness) == negate(M)


def test_different_p_is_inequivalent():
    """全 J 构造 p = 6，上区间构造 p = 3"""
    assert are_equivalent(full_j_exact(6), to_integer_mps(upper_interval(6, 2), 2)) is None


def test_mismatched_parameters():
    assert are_equivalent(full_j_exact(6), full_j_exact(4)) is None
    assert are_equivalent(full_j_exact(6), to_integer_mps(upper_interval(6, 0), 0)) is None


def test_too_large():
    with pytest.raises(TooLarge):
        canonical_form(full_j_exact(10))
    C = canonical_form(full_j_exact(10), max_order=10)
    assert C.n == 10
