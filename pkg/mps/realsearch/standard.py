import numpy as np

from mps.errors import BlockTooSmall, StructureViolation
from mps.models import IntegerMps, LemmaCounts, StandardForm


def to_standard_form(M):
    """整体取负使 p ≥ n/2，稳定排序对角符号，再用首行把块 I、块 IV 归一"""
    n = M.n
    q2 = np.array(M.q2)
    if 2 * M.p < n:
        q2 = -q2
    diag = np.diag(q2)
    order = sorted(range(n), key=lambda i: diag[i] < 0)
    q2 = q2[np.ix_(order, order)]
    p = int(np.count_nonzero(np.diag(q2) >= 0))

    signs = np.ones(n, dtype=np.int64)
    for j in range(1, p):
        if q2[0, j] > 0:
            signs[j] = -1
    for j in range(p + 1, n):
        if q2[p, j] < 0:
            signs[j] = -1
    q2 = signs[:, None] * q2 * signs[None, :]
    return StandardForm(base=IntegerMps(d=M.d, q2=q2), p=p)


def lemma_counts(sf, j, k):
    """块 I 中第 1、j、k 行（从 1 开始）的列分类计数 ℓ₁..ℓ₄"""
    p, n, d2 = sf.p, sf.base.n, sf.base.d2
    if p < 3:
        raise BlockTooSmall(f"块 I 只有 {p} 行")
    if not 2 <= j < k <= p:
        raise BlockTooSmall(f"需要 2 ≤ j < k ≤ {p}，得到 j={j}, k={k}")
    rows = np.array(sf.base.q2[:p, :])
    # 块 II 的首行归一为 −1
    for c in range(p, n):
        if rows[0, c] > 0:
            rows[:, c] = -rows[:, c]
    rj, rk = j - 1, k - 1
    others = [c for c in range(n) if c not in (0, rj, rk)]
    if not np.all(rows[0, others] < 0):
        raise StructureViolation("首行不是标准形")
    x, y = rows[rj, others] > 0, rows[rk, others] > 0
    ells = (
        int(np.count_nonzero(x & y)),
        int(np.count_nonzero(x & ~y)),
        int(np.count_nonzero(~x & y)),
        int(np.count_nonzero(~x & ~y)),
    )
    assert sum(ells) == n - 3

    if sf.base.q2[rj, rk] > 0:
        branch, residue = "i", (n + d2 - 2) % 4
        expected = (n - 6 - 3 * d2, n - 2 + d2)
        bound_ok = n - 3 * d2 - 6 >= 0
    else:
        branch, residue = "ii", (n - d2 - 2) % 4
        expected = (n - 2 - d2, n - 6 + 3 * d2)
        bound_ok = True
    if (4 * ells[0], 4 * ells[3]) != expected:
        raise StructureViolation(f"计数 {ells} 与行正交性不符")
    return LemmaCounts(
        j=j,
        k=k,
        branch=branch,
        ells=ells,
        congruence=residue,
        congruence_ok=residue == 0 and bound_ok,
        bound_ok=bound_ok,
    )
