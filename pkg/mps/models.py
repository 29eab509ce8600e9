from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from mps.errors import DegenerateSpec, FormatError, NotMps


def _frozen_array(values, dtype):
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


def _check_permutation(perm, n):
    if perm is None:
        return tuple(range(1, n + 1))
    perm = tuple(int(x) for x in perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise FormatError(f"P 不是 1..{n} 的置换: {perm}")
    return perm


@dataclass(frozen=True)
class Tolerance:
    eps: float = 1e-9

    def __post_init__(self):
        if not self.eps > 0:
            raise FormatError("容差 eps 必须为正")


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """稠密复方阵，构造后只读"""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise FormatError(f"需要方阵，得到形状 {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise FormatError("矩阵含非有限元素")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self):
        return self.entries.shape[0]

    def is_real(self, tol=DEFAULT_TOLERANCE):
        return float(np.max(np.abs(self.entries.imag))) <= tol.eps


@dataclass(frozen=True)
class MpsProfile:
    n: int
    r: float
    t: float
    d: float
    diag_signs: tuple
    p: int
    m: int

    def to_dict(self):
        return {
            "n": self.n,
            "r": self.r,
            "t": self.t,
            "d": self.d,
            "diag_signs": "".join(self.diag_signs),
            "p": self.p,
            "m": self.m,
        }


class MpClass(str, Enum):
    BALANCED = "balanced"
    IMPOSSIBLE = "impossible"


@dataclass(frozen=True)
class ScatteringSummary:
    edge: int
    probabilities: np.ndarray
    reflection: float
    transmission: float
    ratio: float

    def to_dict(self):
        return {
            "edge": self.edge,
            "probabilities": [float(x) for x in self.probabilities],
            "reflection": self.reflection,
            "transmission": self.transmission,
            "ratio": self.ratio,
        }


@dataclass(frozen=True, eq=False)
class HermitianUnitaryParam:
    n: int
    m: int
    T: np.ndarray
    P: tuple = None

    def __post_init__(self):
        if not 1 <= self.m <= self.n - 1:
            raise FormatError(f"m 必须在 1..{self.n - 1} 之间，得到 {self.m}")
        T = np.array(self.T, dtype=np.complex128).reshape(self.m, self.n - self.m)
        T.setflags(write=False)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "P", _check_permutation(self.P, self.n))


@dataclass(frozen=True, eq=False)
class UnitaryParam:
    n: int
    m: int
    S_h: np.ndarray
    T: np.ndarray = None
    P: tuple = None

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise FormatError(f"m 必须在 1..{self.n} 之间，得到 {self.m}")
        S = np.array(self.S_h, dtype=np.complex128).reshape(self.m, self.m)
        if not np.array_equal(S, S.conj().T):
            raise FormatError("S_h 必须严格 Hermite")
        S.setflags(write=False)
        object.__setattr__(self, "S_h", S)
        if self.m == self.n:
            T = None
        else:
            if self.T is None:
                raise FormatError("m < n 时必须给出 T")
            T = _frozen_array(self.T, np.complex128).reshape(self.m, self.n - self.m)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "P", _check_permutation(self.P, self.n))


@dataclass(frozen=True)
class QuadraticSpec:
    """H² = aI + bH 的系数"""

    a: float
    b: float

    def __post_init__(self):
        if 4 * self.a + self.b**2 <= 0:
            raise DegenerateSpec(f"4a + b² = {4 * self.a + self.b ** 2} ≤ 0")

    @property
    def root(self):
        return float(np.sqrt(4 * self.a + self.b**2))


class Family(str, Enum):
    FULL_J = "full_j"
    N2 = "n2"
    UPPER_INTERVAL = "upper_interval"
    HADAMARD_CORE = "hadamard_core"
    CONFERENCE_CORE = "conference_core"
    COMPLEX_CORE = "complex_core"
    CONFERENCE_BLOCK = "conference_block"
    DESIGN_COMPLEX = "design_complex"
    DESIGN_REAL = "design_real"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int = None
    d: object = None
    auxiliary: object = None
    alpha: float = None


@dataclass(frozen=True, eq=False)
class SymmetricDesign:
    v: int
    k: int
    lam: int
    incidence: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "incidence", _frozen_array(self.incidence, np.int64))

    @property
    def degenerate(self):
        return self.lam == 0

    def to_dict(self):
        return {
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "incidence": self.incidence.tolist(),
            "degenerate": self.degenerate,
        }


class DesignParams(NamedTuple):
    q: int
    k: int
    lam: int

    @property
    def degenerate(self):
        return self.lam == 0


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    order: int
    H: np.ndarray
    kind: str = "real"

    def __post_init__(self):
        dtype = np.int64 if self.kind == "real" else np.complex128
        object.__setattr__(self, "H", _frozen_array(self.H, dtype))


@dataclass(frozen=True, eq=False)
class ConferenceMatrix:
    order: int
    C: np.ndarray
    kind: str = "real"

    def __post_init__(self):
        dtype = np.int64 if self.kind == "real" else np.complex128
        object.__setattr__(self, "C", _frozen_array(self.C, dtype))


# 编码：+d → 0, +1 → 1, −1 → 2, −d → 3
def entry_code(value, diagonal):
    if diagonal:
        return 0 if value >= 0 else 3
    return 1 if value > 0 else 2


@dataclass(frozen=True, eq=False)
class IntegerMps:
    """实 MPS 的精确表示：存 q2 = 2Q，Q = √(d²+n−1)·S"""

    d: Fraction
    q2: np.ndarray

    def __post_init__(self):
        d = Fraction(self.d)
        q2 = _frozen_array(self.q2, np.int64)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "q2", q2)
        if q2.ndim != 2 or q2.shape[0] != q2.shape[1] or q2.shape[0] < 1:
            raise NotMps(f"需要方阵，得到形状 {q2.shape}")
        if d < 0 or (2 * d).denominator != 1:
            raise NotMps(f"d = {d} 的分母必须整除 2")
        n = q2.shape[0]
        d2 = int(2 * d)
        if not np.array_equal(q2, q2.T):
            raise NotMps("Q 不对称")
        if not np.all(np.abs(np.diag(q2)) == d2):
            raise NotMps(f"对角元模不等于 d = {d}")
        off = q2[~np.eye(n, dtype=bool)]
        if not np.all(np.abs(off) == 2):
            raise NotMps("非对角元模不等于 1")
        if not np.array_equal(q2 @ q2.T, self.norm4 * np.eye(n, dtype=np.int64)):
            raise NotMps("QQᵀ ≠ (d²+n−1)I")

    @property
    def n(self):
        return self.q2.shape[0]

    @property
    def d2(self):
        return int(2 * self.d)

    @property
    def norm4(self):
        """4(d²+n−1)，即 (2Q)(2Q)ᵀ 的对角值"""
        return int(4 * self.d**2) + 4 * (self.n - 1)

    @property
    def q(self):
        return [[Fraction(int(x), 2) for x in row] for row in self.q2]

    @property
    def diag_signs(self):
        return tuple("+" if x >= 0 else "-" for x in np.diag(self.q2))

    @property
    def p(self):
        return sum(1 for s in self.diag_signs if s == "+")

    def code(self):
        n = self.n
        return tuple(
            entry_code(int(self.q2[i, j]), i == j) for i in range(n) for j in range(n)
        )

    def to_complex(self):
        scale = 2.0 * np.sqrt(float(self.d**2) + self.n - 1)
        return ComplexMatrix(self.q2 / scale)

    def __eq__(self, other):
        if not isinstance(other, IntegerMps):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.q2, other.q2)

    def __hash__(self):
        return hash((self.d, self.q2.tobytes()))


@dataclass(frozen=True, eq=False)
class StandardForm:
    base: IntegerMps
    p: int

    @property
    def blocks(self):
        q2, p = self.base.q2, self.p
        return q2[:p, :p], q2[:p, p:], q2[p:, :p], q2[p:, p:]


@dataclass(frozen=True)
class LemmaCounts:
    j: int
    k: int
    branch: str
    ells: tuple
    congruence: int
    congruence_ok: bool
    bound_ok: bool

    def to_dict(self):
        return {
            "j": self.j,
            "k": self.k,
            "branch": self.branch,
            "ell": list(self.ells),
            "congruence_residue": self.congruence,
            "congruence_ok": self.congruence_ok,
            "bound_ok": self.bound_ok,
        }


@dataclass(frozen=True, eq=False)
class StructureReport:
    G: np.ndarray
    normal: bool
    commutes_with_j: bool
    gram_identity: bool

    @property
    def passed(self):
        return self.normal and self.commutes_with_j and self.gram_identity

    def to_dict(self):
        return {
            "G": self.G.tolist(),
            "normal": self.normal,
            "commutes_with_j": self.commutes_with_j,
            "gram_identity": self.gram_identity,
            "passed": self.passed,
        }


class VerdictStatus(str, Enum):
    EXISTS = "exists_with_witness"
    IMPOSSIBLE = "impossible"
    OPEN = "open"


IMPOSSIBLE_RULES = (
    "range-of-r",
    "small-n",
    "real-parity",
    "design-gap",
    "design-nonexistence",
)


@dataclass(frozen=True)
class Verdict:
    n: int
    d: Fraction
    status: VerdictStatus
    rule: str
    witness: object = None
    notes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.status == VerdictStatus.IMPOSSIBLE and self.rule not in IMPOSSIBLE_RULES:
            raise ValueError(f"impossible 判定的规则未知: {self.rule}")


@dataclass(frozen=True)
class EquivalenceWitness:
    """作用方式：M'[i, j] = global · signs[i] · signs[j] · M[P[i]−1, P[j]−1]"""

    P: tuple
    signs: tuple
    global_sign: int = 1

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)), (1,) * n, 1)

    def to_dict(self):
        return {"P": list(self.P), "signs": list(self.signs), "global": self.global_sign}
