"""d > n/6 − 1 时的分块结构、设计提取与 Hadamard 桥。"""
import itertools
import logging
from fractions import Fraction

import numpy as np

from mps.designs import (
    design_params_for,
    make_design,
    normalize_to_standard,
    verify_hadamard,
)
from mps.errors import (
    DesignInvalid,
    NonConstantRowSum,
    NotHadamard,
    NotInRange,
    StructureViolation,
    WrongRatio,
)
from mps.models import HadamardMatrix, IntegerMps, StructureReport
from mps.realsearch.exact import assemble_great_d
from mps.realsearch.standard import to_standard_form

logger = logging.getLogger(__name__)


def _target_block(d, half):
    return 2 * ((int(d) + 1) * np.eye(half, dtype=np.int64) - np.ones((half, half), dtype=np.int64))


def _zero_ratio_form(M):
    """d = 0：逐个尝试含下标 0 的半划分，块 I 内全 −1、块 IV 内全 +1"""
    n = M.n
    half = n // 2
    E = M.q2 // 2
    for rest in itertools.combinations(range(1, n), half - 1):
        first = [0, *rest]
        second = [i for i in range(n) if i not in set(first)]
        signs = np.ones(n, dtype=np.int64)
        for a in rest:
            signs[a] = -E[0, a]
        for b in second[1:]:
            signs[b] = E[second[0], b]
        order = first + second
        q2 = signs[:, None] * M.q2 * signs[None, :]
        q2 = q2[np.ix_(order, order)]
        block = _target_block(0, half)
        if np.array_equal(q2[:half, :half], block) and np.array_equal(q2[half:, half:], -block):
            return IntegerMps(d=M.d, q2=q2)
    raise StructureViolation("找不到 d = 0 的分块形式")


def great_d_form(M):
    """化为 [[(d+1)I − J, G], [Gᵀ, −(d+1)I + J]]，p = n/2"""
    n = M.n
    if n % 2:
        raise StructureViolation(f"n = {n} 为奇数")
    half = n // 2
    if M.d == 0:
        return _zero_ratio_form(M)
    sf = to_standard_form(M)
    block = _target_block(M.d, half)
    first, _, _, last = sf.blocks
    if sf.p != half or not np.array_equal(first, block) or not np.array_equal(last, -block):
        raise StructureViolation(f"标准形 p = {sf.p} 不具有分块结构")
    return sf.base


def structure_check(M):
    n, d = M.n, M.d
    if not Fraction(n, 6) - 1 < d < Fraction(n, 2) - 1:
        raise NotInRange(f"d = {d} 不在 (n/6 − 1, n/2 − 1) 内")
    half = n // 2
    if d.denominator != 1:
        raise StructureViolation(f"d = {d} 不是整数")
    form = great_d_form(M)
    G = form.q2[:half, half:] // 2
    J = np.ones((half, half), dtype=np.int64)
    d = int(d)
    gram = (n - 2 * d - 2) * np.eye(half, dtype=np.int64) + (2 * d + 2 - half) * J
    report = StructureReport(
        G=G,
        normal=bool(np.array_equal(G @ G.T, G.T @ G)),
        commutes_with_j=bool(np.array_equal(G @ J, J @ G)),
        gram_identity=bool(np.array_equal(G @ G.T, gram)),
    )
    if not report.passed:
        raise StructureViolation("G 不满足分块恒等式", report)
    return report


def _constant_row_sum(G):
    sums = G.sum(axis=1)
    if not np.all(sums == sums[0]):
        raise NonConstantRowSum(f"G 的行和不恒定: {sums.tolist()}")
    return int(sums[0])


def extract_design(M):
    """A = (G + J)/2，必要时先把 G 翻成 −G 使行和为 −q"""
    n, d = M.n, M.d
    if not Fraction(n, 4) - Fraction(3, 2) <= d < Fraction(n, 2) - 1:
        raise NotInRange(f"d = {d} 不在 [n/4 − 3/2, n/2 − 1) 内")
    params = design_params_for(n, d)
    if params is None:
        raise StructureViolation(f"(n, d) = ({n}, {d}) 没有设计参数")
    half = n // 2
    G = great_d_form(M).q2[:half, half:] // 2
    mu = _constant_row_sum(G)
    if mu == params.q and params.q:
        G = -G
    elif mu != -params.q:
        raise StructureViolation(f"行和 {mu} 不等于 ±{params.q}")
    A = (G + 1) // 2
    try:
        return make_design(A, half, params.k, params.lam, allow_degenerate=True)
    except DesignInvalid as exc:
        raise StructureViolation(str(exc)) from exc


def hadamard_bridge(M):
    """H = [[−μ, 1ᵀ], [1, G]]，阶数 n/2 + 1"""
    n, d = M.n, M.d
    if n < 6 or d != Fraction(n, 4) - Fraction(3, 2):
        raise WrongRatio(f"需要 d = n/4 − 3/2，得到 n = {n}, d = {d}")
    half = n // 2
    G = great_d_form(M).q2[:half, half:] // 2
    mu = _constant_row_sum(G)
    H = np.ones((half + 1, half + 1), dtype=np.int64)
    H[0, 0] = -mu
    H[1:, 1:] = G
    matrix = HadamardMatrix(order=half + 1, H=H, kind="real")
    if not verify_hadamard(matrix):
        raise NotHadamard("加边后不是 Hadamard 矩阵")
    return matrix


def hadamard_to_mps(matrix):
    if matrix.kind != "real" or not verify_hadamard(matrix):
        raise NotHadamard("需要实 Hadamard 矩阵")
    N = matrix.order
    if N < 4:
        raise WrongRatio(f"阶数 {N} 对应的 d 为负")
    _, core = normalize_to_standard(matrix)
    d = (N - 4) // 2
    logger.debug("hadamard_to_mps: N=%d → n=%d, d=%d", N, 2 * (N - 1), d)
    return assemble_great_d(d, core)
