"""对称 (v,k,λ) 设计、Hadamard 矩阵与会议矩阵：校验、标准构造、标准化与核提取。"""
import logging
import math

import numpy as np
from sympy import isprime
from sympy.ntheory import legendre_symbol

from mps.errors import BadOrder, DesignInvalid, NotHadamard, NotNormalizable
from mps.models import (
    DEFAULT_TOLERANCE,
    ConferenceMatrix,
    DesignParams,
    HadamardMatrix,
    SymmetricDesign,
)

logger = logging.getLogger(__name__)

# 已知的循环差集 (v, k, λ) → 基块
KNOWN_DIFFERENCE_SETS = {
    (7, 3, 1): (1, 2, 4),
    (11, 5, 2): (1, 3, 4, 5, 9),
    (13, 4, 1): (0, 1, 3, 9),
    (19, 9, 4): (1, 4, 5, 6, 7, 9, 11, 16, 17),
    (21, 5, 1): (3, 6, 7, 12, 14),
}


def verify_design(A, v, k, lam, allow_degenerate=False):
    """精确整数校验 AAᵀ = (k−λ)I + λJ 与 AJ = kJ"""
    A = np.asarray(A)
    if A.shape != (v, v) or not np.all((A == 0) | (A == 1)):
        return False
    floor = 0 if allow_degenerate else 1
    if not (v > k > lam >= floor or (allow_degenerate and k == lam == 0 and v > 0)):
        return False
    A = A.astype(np.int64)
    expected = (k - lam) * np.eye(v, dtype=np.int64) + lam * np.ones((v, v), dtype=np.int64)
    if not np.array_equal(A @ A.T, expected):
        return False
    return bool(np.all(A.sum(axis=1) == k))


def make_design(A, v, k, lam, allow_degenerate=False):
    if not verify_design(A, v, k, lam, allow_degenerate):
        raise DesignInvalid(f"不是 ({v},{k},{lam}) 设计")
    return SymmetricDesign(v=v, k=k, lam=lam, incidence=A)


def cyclic_design(v, base, allow_degenerate=False):
    """由循环差集生成：A[i, j] = 1 当且仅当 (j − i) mod v 属于基块"""
    base = {b % v for b in base}
    A = np.array([[1 if (j - i) % v in base else 0 for j in range(v)] for i in range(v)])
    k = len(base)
    lam = k * (k - 1) // (v - 1) if v > 1 else 0
    return make_design(A, v, k, lam, allow_degenerate)


def fano_design():
    return cyclic_design(7, KNOWN_DIFFERENCE_SETS[(7, 3, 1)])


def identity_design(v):
    """退化设计 (v, 1, 0)"""
    return make_design(np.eye(v, dtype=np.int64), v, 1, 0, allow_degenerate=True)


def _is_power_of_two(N):
    return N >= 1 and N & (N - 1) == 0


def sylvester_hadamard(N):
    if not _is_power_of_two(N):
        raise BadOrder(f"Sylvester 构造要求 N 为 2 的幂，得到 {N}")
    H = np.array([[1]], dtype=np.int64)
    while H.shape[0] < N:
        H = np.block([[H, H], [H, -H]])
    return HadamardMatrix(order=N, H=H, kind="real")


def paley_conference(N):
    q = N - 1
    if q < 5 or not isprime(q) or q % 4 != 1:
        raise BadOrder(f"Paley 会议矩阵要求 N − 1 为模 4 余 1 的素数，得到 N = {N}")
    C = np.zeros((N, N), dtype=np.int64)
    C[0, 1:] = 1
    C[1:, 0] = 1
    for a in range(q):
        for b in range(q):
            if a != b:
                C[a + 1, b + 1] = legendre_symbol((b - a) % q, q)
    return ConferenceMatrix(order=N, C=C, kind="real")


def fourier_complex_hadamard(N):
    if N < 1:
        raise BadOrder("N 必须为正")
    jk = np.outer(np.arange(N), np.arange(N))
    return HadamardMatrix(order=N, H=np.exp(2j * np.pi * jk / N), kind="complex")


def verify_hadamard(matrix, tol=DEFAULT_TOLERANCE):
    H, N = matrix.H, matrix.order
    if H.shape != (N, N):
        return False
    if matrix.kind == "real":
        return bool(np.all(np.abs(H) == 1)) and np.array_equal(
            H @ H.T, N * np.eye(N, dtype=np.int64)
        )
    return bool(np.all(np.abs(np.abs(H) - 1) <= tol.eps)) and bool(
        np.linalg.norm(H @ H.conj().T - N * np.eye(N)) <= tol.eps * N
    )


def verify_conference(matrix, tol=DEFAULT_TOLERANCE, hermitian=False):
    C, N = matrix.C, matrix.order
    if C.shape != (N, N) or N < 2:
        return False
    off = ~np.eye(N, dtype=bool)
    if matrix.kind == "real":
        ok = (
            bool(np.all(np.diag(C) == 0))
            and bool(np.all(np.abs(C[off]) == 1))
            and np.array_equal(C @ C.T, (N - 1) * np.eye(N, dtype=np.int64))
        )
        return ok and (not hermitian or np.array_equal(C, C.T))
    ok = (
        bool(np.all(np.abs(np.diag(C)) <= tol.eps))
        and bool(np.all(np.abs(np.abs(C[off]) - 1) <= tol.eps))
        and bool(np.linalg.norm(C @ C.conj().T - (N - 1) * np.eye(N)) <= tol.eps * N)
    )
    return ok and (not hermitian or bool(np.max(np.abs(C - C.conj().T)) <= tol.eps))


def _normalize_hadamard(matrix):
    H = np.array(matrix.H)
    if matrix.kind == "real":
        H = H * H[:, :1]
        H = H * H[:1, :]
    else:
        H = H / H[:, :1]
        H = H / H[:1, :]
    std = HadamardMatrix(order=matrix.order, H=H, kind=matrix.kind)
    return std, std.H[1:, 1:]


def _normalize_conference(matrix, tol):
    C = np.array(matrix.C)
    N = matrix.order
    zeros = np.abs(C) <= tol.eps
    if not np.array_equal(zeros.sum(axis=0), np.ones(N)) or not np.array_equal(
        zeros.sum(axis=1), np.ones(N)
    ):
        raise NotNormalizable("零元不构成置换模式")
    # 列置换使每行的零落在对角线上
    cols = np.argmax(zeros, axis=1)
    C = C[:, cols]
    if matrix.kind == "real":
        signs = np.sign(C[:, 0])
        signs[0] = 1
        C = C * signs[:, None]
        signs = np.sign(C[0, :])
        signs[0] = 1
        C = C * signs[None, :]
    else:
        phases = np.ones(N, dtype=np.complex128)
        phases[1:] = C[1:, 0]
        C = C / phases[:, None]
        phases = np.ones(N, dtype=np.complex128)
        phases[1:] = C[0, 1:]
        C = C / phases[None, :]
    std = ConferenceMatrix(order=N, C=C, kind=matrix.kind)
    if not verify_conference(std, tol):
        raise NotNormalizable("标准化后不再是会议矩阵")
    return std, std.C[1:, 1:]


def normalize_to_standard(matrix, tol=DEFAULT_TOLERANCE):
    """化为首行首列全 1（会议矩阵对角为 0）的标准形，返回 (标准形, 核)"""
    if isinstance(matrix, HadamardMatrix):
        if not verify_hadamard(matrix, tol):
            raise NotHadamard("输入不是 Hadamard 矩阵")
        return _normalize_hadamard(matrix)
    return _normalize_conference(matrix, tol)


def design_params_for(n, d):
    """q² = n/2 + (n/2−1)(2d+2−n/2)；k = n/4 − q/2，λ = (d−q+1)/2"""
    if n % 2 or n < 6 or d != int(d) or d < 0:
        return None
    d = int(d)
    half = n // 2
    q_sq = half + (half - 1) * (2 * d + 2 - half)
    if q_sq < 0:
        return None
    q = math.isqrt(q_sq)
    if q * q != q_sq or (n - 2 * q) % 4 or (d - q + 1) % 2:
        return None
    k, lam = (n - 2 * q) // 4, (d - q + 1) // 2
    if not (half > k >= 1 and k > lam >= 0):
        return None
    assert d == 2 * lam + q - 1 and n == 4 * k + 2 * q
    return DesignParams(q=q, k=k, lam=lam)


def hadamard_to_design(matrix):
    """实 Hadamard 矩阵 → (N−1, N/2−1, N/4−1) 设计，取标准化核中 +1 的位置"""
    N = matrix.order
    if matrix.kind != "real" or N < 4 or N % 4:
        raise BadOrder(f"需要阶数 N ≡ 0 (mod 4) 的实 Hadamard 矩阵，得到 N = {N}")
    _, core = normalize_to_standard(matrix)
    A = (np.ones_like(core) + core) // 2
    return make_design(A, N - 1, N // 2 - 1, N // 4 - 1, allow_degenerate=True)


def design_to_hadamard(design):
    v, k, lam = design.v, design.k, design.lam
    t = (v + 1) // 4
    if (v + 1) % 4 or k != 2 * t - 1 or lam != t - 1:
        raise BadOrder(f"({v},{k},{lam}) 不是 Hadamard 型设计")
    K = 2 * design.incidence - 1
    H = np.ones((v + 1, v + 1), dtype=np.int64)
    H[1:, 1:] = K
    matrix = HadamardMatrix(order=v + 1, H=H, kind="real")
    if not verify_hadamard(matrix):
        raise NotHadamard("由设计拼出的矩阵不是 Hadamard 矩阵")
    return matrix


def known_design(v, k, lam):
    """按顺序尝试：单位阵退化设计、Sylvester 导出设计、已知差集"""
    if k == 1 and lam == 0:
        return identity_design(v)
    N = v + 1
    if _is_power_of_two(N) and N >= 4 and (k, lam) == (N // 2 - 1, N // 4 - 1):
        return hadamard_to_design(sylvester_hadamard(N))
    base = KNOWN_DIFFERENCE_SETS.get((v, k, lam))
    if base is not None:
        return cyclic_design(v, base)
    logger.debug("没有 (%d,%d,%d) 设计的提供者", v, k, lam)
    return None
