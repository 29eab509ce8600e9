"""ℳₙ(d) 的显式构造族，每个构造都在返回前做校验。"""
import logging
import math
from fractions import Fraction

import numpy as np

from mps.core import mps_profile
from mps.designs import (
    KNOWN_DIFFERENCE_SETS,
    design_params_for,
    fourier_complex_hadamard,
    identity_design,
    known_design,
    normalize_to_standard,
    paley_conference,
    sylvester_hadamard,
    verify_conference,
    verify_design,
    verify_hadamard,
)
from mps.errors import (
    DesignInvalid,
    NoRealRoot,
    NotConference,
    NotHadamard,
    NotHermitianConference,
    NotMps,
    OutOfRange,
    ParameterMismatch,
)
from mps.models import (
    DEFAULT_TOLERANCE,
    ComplexMatrix,
    ConferenceMatrix,
    Family,
    HadamardMatrix,
)
from mps.realsearch.exact import assemble_great_d

logger = logging.getLogger(__name__)


def _verified(entries, d, tol):
    S = ComplexMatrix(entries)
    profile = mps_profile(S, tol)
    if abs(profile.d - float(d)) > tol.eps * max(1.0, float(d)):
        raise NotMps(f"测得 d = {profile.d}，期望 {float(d)}")
    return S


def _fg_entries(d, G):
    """(1/√(d²+n−1))·[[(d+1)I − J, G], [G*, −(d+1)I + J]]"""
    half = G.shape[0]
    n = 2 * half
    block = (d + 1) * np.eye(half) - np.ones((half, half))
    Q = np.block([[block, G], [G.conj().T, -block]])
    return Q / math.sqrt(d * d + n - 1)


def _require_even(n, minimum):
    if n % 2 or n < minimum:
        raise OutOfRange(f"n 必须为不小于 {minimum} 的偶数，得到 {n}")


def _require_interval(d, low, high):
    if d < 0 or not low <= d <= high:
        raise OutOfRange(f"d = {d} 不在 [{low}, {high}] 内")


def full_j_matrix(n, tol=DEFAULT_TOLERANCE):
    if n < 2:
        raise OutOfRange("n 必须不小于 2")
    return _verified(np.eye(n) - (2 / n) * np.ones((n, n)), Fraction(n, 2) - 1, tol)


def n2_matrix(d, tol=DEFAULT_TOLERANCE):
    d = float(d)
    if d < 0:
        raise OutOfRange("d 必须非负")
    return _verified(np.array([[d, 1.0], [1.0, -d]]) / math.sqrt(d * d + 1), d, tol)


def upper_interval(n, d, tol=DEFAULT_TOLERANCE):
    _require_even(n, 4)
    _require_interval(d, n / 2 - 3, n / 2 - 1)
    d = float(d)
    alpha = math.acos(min(1.0, max(-1.0, d + 2 - n / 2)))
    logger.debug("upper_interval: n=%d d=%s α=%s", n, d, alpha)
    half = n // 2
    eye, J = np.eye(half), np.ones((half, half))
    G = (np.exp(1j * alpha) - 1) * eye + J
    return _verified(_fg_entries(d, G), d, tol)


def _as_hadamard(H):
    if isinstance(H, HadamardMatrix):
        return H
    H = np.asarray(H)
    kind = "real" if np.isrealobj(H) else "complex"
    return HadamardMatrix(order=H.shape[0], H=H, kind=kind)


def _as_conference(C):
    if isinstance(C, ConferenceMatrix):
        return C
    C = np.asarray(C)
    kind = "real" if np.isrealobj(C) else "complex"
    return ConferenceMatrix(order=C.shape[0], C=C, kind=kind)


def hadamard_core_family(n, d, H, tol=DEFAULT_TOLERANCE):
    _require_even(n, 4)
    H = _as_hadamard(H)
    if H.kind != "real" or H.order != n // 2 + 1 or not verify_hadamard(H):
        raise NotHadamard(f"需要 {n // 2 + 1} 阶实 Hadamard 矩阵")
    _require_interval(d, n / 4 - 1.5, n / 2 - 1)
    d = float(d)
    cos_sq = min(1.0, max(0.0, 4 * (d + 2) / (n + 2) - 1))
    alpha = math.acos(math.sqrt(cos_sq))
    logger.debug("hadamard_core: n=%d d=%s α=%s", n, d, alpha)
    _, core = normalize_to_standard(H)
    return _verified(_fg_entries(d, np.exp(1j * alpha * core)), d, tol)


def _conference_cos(n, d):
    """((n−2)/4)x² + x + (n−6)/4 − d = 0 在 [−1, 1] 中的较大根"""
    a, c = (n - 2) / 4, (n - 6) / 4 - d
    disc = 1 - 4 * a * c
    if disc < 0:
        if disc < -1e-12:
            raise NoRealRoot(f"判别式 {disc} < 0")
        disc = 0.0
    q = -(1 + math.sqrt(disc)) / 2
    roots = sorted({q / a, c / q}, reverse=True)
    for x in roots:
        if -1 - 1e-12 <= x <= 1 + 1e-12:
            return min(1.0, max(-1.0, x))
    raise NoRealRoot(f"根 {roots} 都不在 [−1, 1] 内")


def conference_core_family(n, d, C, tol=DEFAULT_TOLERANCE):
    _require_even(n, 4)
    C = _as_conference(C)
    if (
        C.kind != "real"
        or C.order != n // 2 + 1
        or not verify_conference(C, tol, hermitian=True)
    ):
        raise NotConference(f"需要 {n // 2 + 1} 阶实对称会议矩阵")
    _require_interval(d, n / 4 - 1.5 - 1 / (n - 2), n / 2 - 1)
    d = float(d)
    alpha = math.acos(_conference_cos(n, d))
    logger.debug("conference_core: n=%d d=%s α=%s", n, d, alpha)
    _, core = normalize_to_standard(C)
    return _verified(_fg_entries(d, np.exp(1j * alpha * core)), d, tol)


def complex_core_matrix(n, tol=DEFAULT_TOLERANCE):
    _require_even(n, 6)
    _, core = normalize_to_standard(fourier_complex_hadamard(n // 2 + 1))
    d = n / 4 - 1.5
    return _verified(_fg_entries(d, core), d, tol)


def conference_block_family(n, d, C, tol=DEFAULT_TOLERANCE):
    _require_even(n, 4)
    C = _as_conference(C)
    if C.order != n // 2 or not verify_conference(C, tol, hermitian=True):
        raise NotHermitianConference(f"需要 {n // 2} 阶 Hermite 会议矩阵")
    _require_interval(d, 0, 1)
    d = float(d)
    alpha = math.acos(d)
    half = n // 2
    eye = np.eye(half)
    Cm = C.C.astype(np.complex128)
    top = d * eye + Cm
    Q = np.block(
        [
            [top, Cm - np.exp(1j * alpha) * eye],
            [Cm - np.exp(-1j * alpha) * eye, -top],
        ]
    )
    return _verified(Q / math.sqrt(d * d + n - 1), d, tol)


def _require_design(n, design):
    if n != 2 * design.v:
        raise DesignInvalid(f"n = {n} 与 v = {design.v} 不匹配")
    if not verify_design(
        design.incidence, design.v, design.k, design.lam, allow_degenerate=True
    ):
        raise DesignInvalid(f"不是 ({design.v},{design.k},{design.lam}) 设计")


def design_family(n, design, alpha, tol=DEFAULT_TOLERANCE):
    """G = e^{iαK}，d = −1 + n/2 − (k−λ)(1 − cos 2α)

    K 取 ±1 形式 2A − J 而非 0/1 关联矩阵 A；K 与 J 可交换，分块矩阵因此是酉的。
    """
    _require_design(n, design)
    d = -1 + n / 2 - (design.k - design.lam) * (1 - math.cos(2 * alpha))
    K = 2 * design.incidence - 1
    return _verified(_fg_entries(d, np.exp(1j * alpha * K)), d, tol)


def real_from_design_exact(n, d, design):
    _require_design(n, design)
    if n % 2 or Fraction(d).denominator != 1:
        raise ParameterMismatch("需要偶数 n 与整数 d")
    params = design_params_for(n, int(d))
    if params is None or (params.k, params.lam) != (design.k, design.lam):
        raise ParameterMismatch(
            f"({design.v},{design.k},{design.lam}) 与 (n, d) = ({n}, {d}) 不匹配"
        )
    logger.debug("real_from_design: n=%d d=%s q=%d", n, d, params.q)
    return assemble_great_d(int(d), 2 * design.incidence - 1)


def real_from_design(n, d, design, tol=DEFAULT_TOLERANCE):
    exact = real_from_design_exact(n, d, design)
    return _verified(exact.to_complex().entries, d, tol)


def default_design(v):
    for (cv, k, lam), base in KNOWN_DIFFERENCE_SETS.items():
        if cv == v:
            return known_design(v, k, lam)
    N = v + 1
    if N >= 8 and N & (N - 1) == 0:
        return known_design(v, N // 2 - 1, N // 4 - 1)
    return identity_design(v)


def construct(spec, tol=DEFAULT_TOLERANCE):
    """按 FamilySpec 分派；未给出的辅助矩阵由 designs 模块补齐"""
    family, n, d, aux = Family(spec.family), spec.n, spec.d, spec.auxiliary
    if family is Family.FULL_J:
        return full_j_matrix(n, tol)
    if family is Family.N2:
        return n2_matrix(d, tol)
    if family is Family.UPPER_INTERVAL:
        return upper_interval(n, d, tol)
    if family is Family.HADAMARD_CORE:
        H = sylvester_hadamard(n // 2 + 1) if aux is None else aux
        return hadamard_core_family(n, d, H, tol)
    if family is Family.CONFERENCE_CORE:
        C = paley_conference(n // 2 + 1) if aux is None else aux
        return conference_core_family(n, d, C, tol)
    if family is Family.COMPLEX_CORE:
        return complex_core_matrix(n, tol)
    if family is Family.CONFERENCE_BLOCK:
        C = paley_conference(n // 2) if aux is None else aux
        return conference_block_family(n, d, C, tol)
    if family is Family.DESIGN_COMPLEX:
        if spec.alpha is None:
            raise OutOfRange("design_complex 需要 alpha")
        design = default_design(n // 2) if aux is None else aux
        return design_family(n, design, spec.alpha, tol)
    # design_real
    if aux is None:
        params = design_params_for(n, d)
        if params is not None:
            aux = known_design(n // 2, params.k, params.lam)
        if aux is None:
            raise ParameterMismatch(f"(n, d) = ({n}, {d}) 没有可用的设计")
    return real_from_design(n, d, aux, tol)
