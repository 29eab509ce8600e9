"""(n, d) 的判定：依次检查不可能规则，再尝试已知构造给出证据。"""
import logging
from fractions import Fraction

from mps.constructions import (
    conference_block_family,
    full_j_matrix,
    n2_matrix,
    real_from_design_exact,
    upper_interval,
)
from mps.designs import (
    design_params_for,
    known_design,
    paley_conference,
    sylvester_hadamard,
)
from mps.errors import BadOrder, OutOfRange
from mps.models import IntegerMps, Verdict, VerdictStatus
from mps.realsearch.exact import to_integer_mps
from mps.realsearch.structure import hadamard_to_mps

logger = logging.getLogger(__name__)


def _power_of_two(N):
    return N >= 1 and N & (N - 1) == 0


def _impossible_rule(n, d):
    top = Fraction(n, 2) - 1
    if n > 2 and d > top:
        return "range-of-r"
    if n in (3, 4, 5) and d != top:
        return "small-n"
    if d < top and (n % 2 or d.denominator != 1 or (n // 2 + int(d)) % 2 == 0):
        return "real-parity"
    if Fraction(n, 6) - 1 < d < Fraction(n, 4) - Fraction(3, 2):
        return "design-gap"
    if Fraction(n, 4) - Fraction(3, 2) <= d < top and design_params_for(n, d) is None:
        return "design-nonexistence"
    return None


def _paley(N):
    try:
        return paley_conference(N)
    except BadOrder:
        return None


def _witness(n, d):
    """按固定顺序尝试构造，返回 (规则名, 证据) 或 None"""
    if d == Fraction(n, 2) - 1:
        return "full-j", to_integer_mps(full_j_matrix(n), d)
    if n == 2:
        if (2 * d).denominator == 1:
            return "n2", to_integer_mps(n2_matrix(d), d)
        return "n2", n2_matrix(d)
    if n % 2 == 0 and d == Fraction(n, 2) - 3 and d >= 0:
        return "upper-interval", to_integer_mps(upper_interval(n, int(d)), d)
    if d == 1 and n >= 4 and _power_of_two(n):
        H = sylvester_hadamard(n)
        return "sylvester", IntegerMps(d=d, q2=2 * H.H)
    if d == 0:
        C = _paley(n)
        if C is not None:
            return "paley-conference", IntegerMps(d=d, q2=2 * C.C)
    if d == 1 and n % 2 == 0:
        C = _paley(n // 2)
        if C is not None:
            return "conference-block", to_integer_mps(conference_block_family(n, 1, C), d)
    if n >= 6 and d == Fraction(n, 4) - Fraction(3, 2) and _power_of_two(n // 2 + 1):
        return "hadamard-bridge", hadamard_to_mps(sylvester_hadamard(n // 2 + 1))
    params = design_params_for(n, d)
    if params is not None:
        design = known_design(n // 2, params.k, params.lam)
        if design is not None:
            return "design", real_from_design_exact(n, int(d), design)
    return None


def necessary_conditions(n, d):
    d = Fraction(d)
    if n < 2 or d < 0:
        raise OutOfRange(f"需要 n ≥ 2 且 d ≥ 0，得到 n = {n}, d = {d}")
    rule = _impossible_rule(n, d)
    if rule is not None:
        logger.debug("(%d, %s) 不可能: %s", n, d, rule)
        return Verdict(n=n, d=d, status=VerdictStatus.IMPOSSIBLE, rule=rule)
    found = _witness(n, d)
    if found is None:
        return Verdict(n=n, d=d, status=VerdictStatus.OPEN, rule="undecided")
    rule, witness = found
    params = design_params_for(n, d)
    notes = ("degenerate-design",) if params is not None and params.degenerate else ()
    return Verdict(
        n=n, d=d, status=VerdictStatus.EXISTS, rule=rule, witness=witness, notes=notes
    )
