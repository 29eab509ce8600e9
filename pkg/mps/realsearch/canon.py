"""实 MPS 在置换 × 符号对 × 整体取负下的典范形。"""
import numpy as np

from mps.errors import TooLarge
from mps.models import EquivalenceWitness, IntegerMps, entry_code
from mps.realsearch.exact import apply_equivalence

CANON_MAX_ORDER = 8


class _Node:
    __slots__ = ("W", "g", "signs", "placed", "cells")

    def __init__(self, W, g, signs, placed, cells):
        self.W = W
        self.g = g
        self.signs = signs
        self.placed = placed
        self.cells = cells


def _switched(q2, g, v0):
    """选符号使第 v0 行非对角全为 +1"""
    s = np.where(q2[v0] >= 0, g, -g).astype(np.int64)
    s[v0] = 1
    W = g * (s[:, None] * q2 * s[None, :])
    return W.tolist(), s.tolist()


def _roots(M):
    q2, n = M.q2, M.n
    starts = []
    for g in (1, -1):
        for v0 in range(n):
            starts.append((entry_code(g * int(q2[v0, v0]), True), g, v0))
    best = min(code for code, _, _ in starts)
    nodes = []
    for code, g, v0 in starts:
        if code == best:
            W, s = _switched(q2, g, v0)
            rest = [v for v in range(n) if v != v0]
            nodes.append(_Node(W, g, s, [v0], [rest] if rest else []))
    return nodes


def _twins(W, u, w):
    if W[u][u] != W[w][w]:
        return False
    return all(W[u][x] == W[w][x] for x in range(len(W)) if x not in (u, w))


def _candidates(W, cell):
    kept = []
    for u in cell:
        if not any(_twins(W, u, w) for w in kept):
            kept.append(u)
    return kept


def _extend(node, u):
    W = node.W
    code = [entry_code(W[u][x], False) for x in node.placed]
    code.append(entry_code(W[u][u], True))
    first = [x for x in node.cells[0] if x != u]
    cells = []
    for cell in [first, *node.cells[1:]]:
        plus = [x for x in cell if W[u][x] > 0]
        minus = [x for x in cell if W[u][x] < 0]
        code.extend([1] * len(plus) + [2] * len(minus))
        cells.extend(c for c in (plus, minus) if c)
    return tuple(code), _Node(W, node.g, node.signs, [*node.placed, u], cells)


def _search(M):
    nodes = _roots(M)
    for _ in range(1, M.n):
        best, level = None, []
        for node in nodes:
            for u in _candidates(node.W, node.cells[0]):
                code, child = _extend(node, u)
                if best is None or code < best:
                    best, level = code, [child]
                elif code == best:
                    level.append(child)
        nodes = level
    return nodes[0]


def canonical_witness(M, max_order=CANON_MAX_ORDER):
    """返回 (典范形, 见证)，见证作用于 M 得到典范形"""
    if M.n > max_order:
        raise TooLarge(f"n = {M.n} 超过典范化上限 {max_order}")
    node = _search(M)
    witness = EquivalenceWitness(
        P=tuple(v + 1 for v in node.placed),
        signs=tuple(node.signs[v] for v in node.placed),
        global_sign=node.g,
    )
    return apply_equivalence(M, witness), witness


def canonical_form(M, max_order=CANON_MAX_ORDER):
    return canonical_witness(M, max_order)[0]


def are_equivalent(M1, M2, max_order=CANON_MAX_ORDER):
    """等价时返回把 M1 变为 M2 的见证，否则返回 None"""
    if M1.n != M2.n or M1.d != M2.d:
        return None
    C1, w1 = canonical_witness(M1, max_order)
    C2, w2 = canonical_witness(M2, max_order)
    if C1 != C2:
        return None
    n = M1.n
    inverse = [0] * n
    for i, v in enumerate(w2.P):
        inverse[v - 1] = i
    witness = EquivalenceWitness(
        P=tuple(w1.P[inverse[a]] for a in range(n)),
        signs=tuple(w1.signs[inverse[a]] * w2.signs[inverse[a]] for a in range(n)),
        global_sign=w1.global_sign * w2.global_sign,
    )
    if apply_equivalence(M1, witness) != M2:
        raise AssertionError("等价见证复核失败")
    return witness
