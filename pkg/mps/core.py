"""矩阵基础：Hermite/酉判定、MPS 参数测量、全局必要条件与散射概率。"""
import math
from fractions import Fraction

import numpy as np

from mps.errors import IndexOutOfRange, NotHermitianUnitary, NotMps
from mps.models import (
    DEFAULT_TOLERANCE,
    ComplexMatrix,
    MpClass,
    MpsProfile,
    ScatteringSummary,
)


def _as_matrix(M):
    return M if isinstance(M, ComplexMatrix) else ComplexMatrix(M)


def is_hermitian(M, tol=DEFAULT_TOLERANCE):
    A = _as_matrix(M).entries
    return float(np.max(np.abs(A - A.conj().T))) <= tol.eps


def is_unitary(M, tol=DEFAULT_TOLERANCE):
    M = _as_matrix(M)
    A = M.entries
    residual = np.linalg.norm(A @ A.conj().T - np.eye(M.n), "fro")
    return float(residual) <= tol.eps * M.n


def require_hermitian_unitary(M, tol=DEFAULT_TOLERANCE):
    M = _as_matrix(M)
    if not is_hermitian(M, tol):
        raise NotHermitianUnitary("矩阵不是 Hermite 的")
    if not is_unitary(M, tol):
        raise NotHermitianUnitary("矩阵不是酉的")
    return M


def mps_profile(M, tol=DEFAULT_TOLERANCE):
    """测量 n, r, t, d, 对角符号, p, m"""
    M = require_hermitian_unitary(M, tol)
    A, n = M.entries, M.n
    diag = A.diagonal().real
    diag_mod = np.abs(diag)
    if float(diag_mod.max() - diag_mod.min()) > tol.eps:
        raise NotMps("对角元模不恒定")
    if n == 1:
        raise NotMps("1 阶矩阵没有非对角元")
    off_mod = np.abs(A[~np.eye(n, dtype=bool)])
    t = float(off_mod.mean())
    if float(off_mod.max() - off_mod.min()) > tol.eps or t <= tol.eps:
        raise NotMps("非对角元模不恒定或为零")
    r = float(diag_mod.mean())
    if r <= tol.eps:
        # d = 0：对角元符号无意义，统一记为非负
        r = 0.0
        signs = ("+",) * n
    else:
        signs = tuple("+" if x >= 0 else "-" for x in diag)

    half_m = (n + float(np.trace(A).real)) / 2
    m = int(round(half_m))
    if abs(half_m - m) > tol.eps * n:
        raise NotHermitianUnitary("迹与谱 {−1, 1} 不符")
    return MpsProfile(
        n=n, r=r, t=t, d=r / t, diag_signs=signs, p=signs.count("+"), m=m
    )


def check_d_bound(n, d, tol=DEFAULT_TOLERANCE):
    """d ≤ n/2 − 1（n > 2）；浮点 d 允许 eps 的误差"""
    if n <= 2:
        return True
    if isinstance(d, float):
        return d <= n / 2 - 1 + tol.eps
    return d <= Fraction(n, 2) - 1


def check_trace_identity(profile, tol=DEFAULT_TOLERANCE):
    n, d = profile.n, float(profile.d)
    lhs = 2 * profile.m - n
    rhs = (2 * profile.p - n) * d / math.sqrt(d * d + n - 1)
    return abs(lhs - rhs) <= tol.eps


def d_from_mp(n, m, p):
    if 2 * p == n and 2 * m == n:
        return MpClass.BALANCED
    if p < m < n / 2 or p > m > n / 2:
        return abs(m - n / 2) * math.sqrt((n - 1) / ((p - m) * (p + m - n)))
    return MpClass.IMPOSSIBLE


def admissible_mp(n, d, tol=DEFAULT_TOLERANCE):
    """与给定 d 相容的全部 (m, p)"""
    pairs = []
    for m in range(n + 1):
        for p in range(n + 1):
            value = d_from_mp(n, m, p)
            if value is MpClass.BALANCED:
                ok = True
            elif value is MpClass.IMPOSSIBLE:
                ok = False
            else:
                ok = abs(value - float(d)) <= tol.eps
            if ok:
                pairs.append((m, p))
    return pairs


def reflection_probability(n, d):
    d = float(d)
    return d * d / (d * d + n - 1)


def scattering_probabilities(S, j, tol=DEFAULT_TOLERANCE):
    """第 j 条边入射时各边的散射概率 |S_ij|²（j 从 1 开始）"""
    S = require_hermitian_unitary(S, tol)
    if not 1 <= j <= S.n:
        raise IndexOutOfRange(f"边序号 {j} 超出 1..{S.n}")
    return np.abs(S.entries[:, j - 1]) ** 2


def scattering_summary(S, j, tol=DEFAULT_TOLERANCE):
    probs = scattering_probabilities(S, j, tol)
    reflection = float(probs[j - 1])
    others = np.delete(probs, j - 1)
    transmission = float(others.mean()) if others.size else 0.0
    ratio = reflection / transmission if transmission > tol.eps else math.inf
    return ScatteringSummary(
        edge=j,
        probabilities=probs,
        reflection=reflection,
        transmission=transmission,
        ratio=ratio,
    )


def apply_phase_equivalence(M, perm, phases, global_sign=1):
    """±D P M P⁻¹ D⁻¹：perm 为从 1 开始的像列表，phases 为单位模数"""
    M = _as_matrix(M)
    idx = np.asarray(perm, dtype=int) - 1
    D = np.asarray(phases, dtype=np.complex128)
    A = M.entries[np.ix_(idx, idx)]
    return ComplexMatrix(global_sign * (D[:, None] * A * D.conj()[None, :]))
