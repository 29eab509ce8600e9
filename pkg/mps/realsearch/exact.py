"""实情形的精确表示：整数矩阵 2Q 的拼装、舍入校验与等价作用。"""
import math
from fractions import Fraction

import numpy as np

from mps.errors import NotMps
from mps.models import DEFAULT_TOLERANCE, EquivalenceWitness, IntegerMps


def assemble_great_d(d, G):
    """Q = [[(d+1)I − J, G], [Gᵀ, −(d+1)I + J]]，返回 IntegerMps"""
    G = np.asarray(G, dtype=np.int64)
    half = G.shape[0]
    block = (int(d) + 1) * np.eye(half, dtype=np.int64) - np.ones((half, half), dtype=np.int64)
    Q = np.block([[block, G], [G.T, -block]])
    return IntegerMps(d=Fraction(d), q2=2 * Q)


def to_integer_mps(S, d, tol=DEFAULT_TOLERANCE):
    """实矩阵 S 乘以 √(d²+n−1) 后舍入为 2Q，并做精确校验"""
    d = Fraction(d)
    if (2 * d).denominator != 1:
        raise NotMps(f"d = {d} 不是半整数")
    if not S.is_real(tol):
        raise NotMps("矩阵含虚部")
    scale = 2 * math.sqrt(float(d * d) + S.n - 1)
    scaled = S.entries.real * scale
    q2 = np.rint(scaled).astype(np.int64)
    if float(np.max(np.abs(scaled - q2))) > 1e-6:
        raise NotMps("缩放后的元素不是半整数")
    return IntegerMps(d=d, q2=q2)


def apply_equivalence(M, witness):
    idx = np.asarray(witness.P, dtype=int) - 1
    s = np.asarray(witness.signs, dtype=np.int64)
    q2 = witness.global_sign * (s[:, None] * M.q2[np.ix_(idx, idx)] * s[None, :])
    return IntegerMps(d=M.d, q2=q2)


def negate(M):
    return apply_equivalence(M, EquivalenceWitness(tuple(range(1, M.n + 1)), (1,) * M.n, -1))
