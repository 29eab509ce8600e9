"""酉矩阵参数化：Hermite 酉 (m, T, P)，一般酉 (m, T, S_h, P)，以及 H² = aI + bH 的解。"""
import logging

import numpy as np
import scipy.linalg

from mps.core import is_unitary, require_hermitian_unitary
from mps.errors import DecompositionResidual, NotHermitianUnitary, TrivialMatrix
from mps.models import (
    DEFAULT_TOLERANCE,
    ComplexMatrix,
    HermitianUnitaryParam,
    UnitaryParam,
)

logger = logging.getLogger(__name__)

PIVOT_TOLERANCE = 1e-9


def permutation_matrix(P):
    """P e_j = e_{P(j)}，P 为从 1 开始的像列表"""
    n = len(P)
    Pm = np.zeros((n, n))
    Pm[np.asarray(P) - 1, np.arange(n)] = 1.0
    return Pm


def _upper(T, m):
    # [I; T*]，n×m
    return np.vstack([np.eye(m), T.conj().T])


def build_hermitian_unitary(param):
    m, T = param.m, param.T
    X = _upper(T, m)
    inner = np.linalg.inv(np.eye(m) + T @ T.conj().T)
    S0 = -np.eye(param.n) + 2 * X @ inner @ X.conj().T
    Pm = permutation_matrix(param.P)
    return ComplexMatrix(Pm @ S0 @ Pm.T)


def eigenbasis_from_param(param):
    m, T = param.m, param.T
    Pm = permutation_matrix(param.P)
    plus = Pm @ _upper(T, m)
    minus = Pm @ np.vstack([T, -np.eye(param.n - m)])
    return plus, minus


def _regular_order(B, m, pivot_tol):
    """选取使 P⁻¹BP 前 m×m 块可逆的下标顺序（从 0 开始）"""
    n = B.shape[0]
    if m == n:
        return list(range(n))
    smallest = np.linalg.svd(B[:m, :m], compute_uv=False)[-1]
    if smallest >= pivot_tol:
        return list(range(n))
    # B 的行空间由 B* 的主元列给出
    _, _, piv = scipy.linalg.qr(B.conj().T, pivoting=True, mode="economic")
    chosen = sorted(int(i) for i in piv[:m])
    rest = [i for i in range(n) if i not in set(chosen)]
    logger.debug("前 m 块奇异，选用行 %s", chosen)
    return chosen + rest


def _rank(B, pivot_tol):
    R = scipy.linalg.qr(B, pivoting=True, mode="r")[0]
    diag = np.abs(np.diag(R))
    return int(np.count_nonzero(diag > pivot_tol))


def decompose_hermitian_unitary(S, tol=DEFAULT_TOLERANCE, pivot_tol=PIVOT_TOLERANCE):
    S = require_hermitian_unitary(S, tol)
    n, A = S.n, S.entries
    eye = np.eye(n)
    if np.linalg.norm(A - eye) <= tol.eps * n or np.linalg.norm(A + eye) <= tol.eps * n:
        raise TrivialMatrix("S = ±I 没有参数表示")
    m = int(round((n + float(np.trace(A).real)) / 2))
    B = A + eye
    order = _regular_order(B, m, pivot_tol)
    B0 = B[np.ix_(order, order)]
    T = np.linalg.solve(B0[:m, :m], B0[:m, m:])
    P = tuple(i + 1 for i in order)
    return HermitianUnitaryParam(n=n, m=m, T=T, P=P)


def build_unitary(param):
    n, m = param.n, param.m
    if m == n:
        core = -np.eye(n) + 2 * np.linalg.inv(np.eye(n) + 1j * param.S_h)
        Pm = permutation_matrix(param.P)
        return ComplexMatrix(Pm @ core @ Pm.T)
    T = param.T
    X = _upper(T, m)
    inner = np.linalg.inv(np.eye(m) + T @ T.conj().T + 1j * param.S_h)
    U0 = -np.eye(n) + 2 * X @ inner @ X.conj().T
    Pm = permutation_matrix(param.P)
    return ComplexMatrix(Pm @ U0 @ Pm.T)


def decompose_unitary(U, tol=DEFAULT_TOLERANCE, pivot_tol=PIVOT_TOLERANCE):
    U = U if isinstance(U, ComplexMatrix) else ComplexMatrix(U)
    if not is_unitary(U, tol):
        raise NotHermitianUnitary("矩阵不是酉的")
    n = U.n
    B = U.entries + np.eye(n)
    if np.linalg.norm(B) <= tol.eps * n:
        raise TrivialMatrix("U = −I 没有参数表示")
    m = _rank(B, pivot_tol)
    order = _regular_order(B, m, pivot_tol)
    B0 = B[np.ix_(order, order)]
    M = B0[:m, :m]
    if m == n:
        T = None
        TT = np.zeros((m, m))
    else:
        T = np.linalg.solve(M, B0[:m, m:])
        TT = T @ T.conj().T
    Y = 2 * np.linalg.inv(M) - np.eye(m) - TT
    herm_part = (Y + Y.conj().T) / 2
    scale = max(1.0, float(np.linalg.norm(Y)))
    if float(np.linalg.norm(herm_part)) > tol.eps * n * scale:
        raise DecompositionResidual("2M⁻¹ − I − TT* 的 Hermite 部分不为零")
    S_h = ((Y - Y.conj().T) / 2) / 1j
    S_h = (S_h + S_h.conj().T) / 2
    P = tuple(i + 1 for i in order)
    return UnitaryParam(n=n, m=m, S_h=S_h, T=T, P=P)


def build_quadratic_solution(spec, param):
    """H = (b − √(4a+b²))/2·I + √(4a+b²)·P[I;T*](I+TT*)⁻¹[I T]P⁻¹"""
    root = spec.root
    m, T = param.m, param.T
    X = _upper(T, m)
    projector = X @ np.linalg.inv(np.eye(m) + T @ T.conj().T) @ X.conj().T
    Pm = permutation_matrix(param.P)
    H = (spec.b - root) / 2 * np.eye(param.n) + root * (Pm @ projector @ Pm.T)
    return ComplexMatrix(H)


def decompose_quadratic_solution(spec, H, tol=DEFAULT_TOLERANCE, pivot_tol=PIVOT_TOLERANCE):
    H = H if isinstance(H, ComplexMatrix) else ComplexMatrix(H)
    S = (2 * H.entries - spec.b * np.eye(H.n)) / spec.root
    return decompose_hermitian_unitary(ComplexMatrix(S), tol, pivot_tol)
