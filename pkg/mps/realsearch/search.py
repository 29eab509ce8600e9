"""ℳₙᴿ(d) 的穷举回溯搜索，按行填充并用行内积剪枝。"""
import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from fractions import Fraction

import numpy as np

from mps.errors import BudgetExceeded, OutOfRange, TooLarge
from mps.models import IntegerMps
from mps.realsearch.canon import CANON_MAX_ORDER, canonical_form

logger = logging.getLogger(__name__)

SEARCH_MAX_ORDER = 8


class SearchMode(str, Enum):
    ALL = "all"
    UP_TO_EQUIVALENCE = "up_to_equivalence"


class _Deadline(Exception):
    pass


def candidate_grid(n):
    """0, 1/2, …, n/2 − 1"""
    return [Fraction(j, 2) for j in range(n - 1)]


def _diagonals(n, d2, mode):
    if d2 == 0:
        return [(0,) * n]
    if mode is SearchMode.ALL:
        return [tuple(s * d2 for s in signs) for signs in itertools.product((1, -1), repeat=n)]
    return [
        (d2,) * p + (-d2,) * (n - p) for p in range(n, math.ceil(n / 2) - 1, -1)
    ]


def _fixed_entries(n, diag, mode):
    """标准形约定：块 I 首行为 −1，块 IV 首行为 +1"""
    if mode is SearchMode.ALL:
        return {}
    p = sum(1 for x in diag if x >= 0)
    fixed = {(0, j): -2 for j in range(1, p)}
    fixed.update({(p, j): 2 for j in range(p + 1, n)})
    return fixed


def work_items(n, d2, mode):
    """(对角, 首行) 工作项，顺序固定"""
    items = []
    for diag in _diagonals(n, d2, mode):
        fixed = _fixed_entries(n, diag, mode)
        free = [j for j in range(1, n) if (0, j) not in fixed]
        for values in itertools.product((2, -2), repeat=len(free)):
            row = dict(zip(free, values))
            row.update({j: v for (i, j), v in fixed.items() if i == 0})
            items.append((diag, tuple(row[j] for j in range(1, n))))
    return items


class _RowFiller:
    """固定对角与首行后逐行填充；on_hit 返回 True 时停止"""

    def __init__(self, n, item, fixed, deadline, on_hit):
        self.n = n
        self.fixed = fixed
        self.deadline = deadline
        self.on_hit = on_hit
        diag, first = item
        self.q = np.zeros((n, n), dtype=np.int64)
        self.q[np.diag_indices(n)] = diag
        self.q[0, 1:] = first
        self.q[1:, 0] = first
        self.stopped = False
        self.steps = 0

    def run(self):
        self._row(1)

    def _tick(self):
        self.steps += 1
        if self.deadline is not None and self.steps % 1024 == 0 and time.monotonic() > self.deadline:
            raise _Deadline

    def _row(self, i):
        n, q = self.n, self.q
        free = n - 1 - i
        partial = [int(q[i, : i + 1] @ q[r, : i + 1]) for r in range(i)]
        if any(abs(s) > 4 * free or (s + 4 * free) % 8 for s in partial):
            return
        self._column(i, i + 1, partial)

    def _column(self, i, k, partial):
        n, q = self.n, self.q
        if self.stopped:
            return
        self._tick()
        if k == n:
            if i == n - 1:
                self.stopped = self.on_hit(q.copy())
            else:
                self._row(i + 1)
            return
        remaining = n - 1 - k
        forced = self.fixed.get((i, k))
        for x in ((2, -2) if forced is None else (forced,)):
            updated = [s + x * int(q[r, k]) for r, s in enumerate(partial)]
            if any(abs(s) > 4 * remaining for s in updated):
                continue
            q[i, k] = q[k, i] = x
            self._column(i, k + 1, updated)
        q[i, k] = q[k, i] = 0


class _Collector:
    def __init__(self, d, mode, limit, canon_max_order):
        self.d = d
        self.mode = mode
        self.limit = limit
        self.canon_max_order = canon_max_order
        self.found = []
        self.seen = set()

    @property
    def full(self):
        return self.limit is not None and len(self.found) >= self.limit

    def __call__(self, q2):
        M = IntegerMps(d=self.d, q2=q2)
        if self.mode is SearchMode.UP_TO_EQUIVALENCE:
            M = canonical_form(M, self.canon_max_order)
            if M in self.seen:
                return False
            self.seen.add(M)
        self.found.append(M)
        return self.full


def _run_batch(n, d, items, mode, deadline, limit, canon_max_order):
    """在一批工作项上搜索；返回 (命中, 是否超时)"""
    collect = _Collector(d, mode, limit, canon_max_order)
    for item in items:
        if collect.full:
            break
        if deadline is not None and time.monotonic() > deadline:
            return collect.found, True
        filler = _RowFiller(n, item, _fixed_entries(n, item[0], mode), deadline, collect)
        try:
            filler.run()
        except _Deadline:
            return collect.found, True
    return collect.found, False


def _batches(items, threads):
    size = max(1, math.ceil(len(items) / (threads * 4)))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _merge(found, seen, hits, mode, limit):
    for M in hits:
        if limit is not None and len(found) >= limit:
            return
        if mode is SearchMode.UP_TO_EQUIVALENCE:
            if M in seen:
                continue
            seen.add(M)
        found.append(M)


def exhaustive_search(
    n,
    d,
    mode=SearchMode.ALL,
    budget=None,
    max_results=None,
    threads=1,
    max_order=SEARCH_MAX_ORDER,
    canon_max_order=CANON_MAX_ORDER,
):
    mode = SearchMode(mode)
    d = Fraction(d)
    if n > max_order:
        raise TooLarge(f"n = {n} 超过搜索上限 {max_order}")
    if n < 2 or d < 0 or (2 * d).denominator != 1:
        raise OutOfRange(f"需要 n ≥ 2 与非负半整数 d，得到 n = {n}, d = {d}")
    items = work_items(n, int(2 * d), mode)
    deadline = None if budget is None else time.monotonic() + budget
    logger.info("search n=%d d=%s mode=%s: %d 个工作项", n, d, mode.value, len(items))

    found, seen, timed_out = [], set(), False
    if threads <= 1:
        hits, timed_out = _run_batch(n, d, items, mode, deadline, max_results, canon_max_order)
        _merge(found, seen, hits, mode, max_results)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_run_batch, n, d, batch, mode, deadline, max_results, canon_max_order)
                for batch in _batches(items, threads)
            ]
            for future in futures:
                hits, batch_timed_out = future.result()
                _merge(found, seen, hits, mode, max_results)
                full = max_results is not None and len(found) >= max_results
                if batch_timed_out or full:
                    timed_out = batch_timed_out and not full
                    for rest in futures:
                        rest.cancel()
                    break

    found.sort(key=IntegerMps.code)
    if timed_out:
        logger.warning("search n=%d d=%s 超出时间预算，已找到 %d 个", n, d, len(found))
        raise BudgetExceeded(f"超出 {budget} 秒预算", partial=found)
    logger.info("search n=%d d=%s 完成: %d 个结果", n, d, len(found))
    return found


def naive_enumeration(n, d):
    """不剪枝的全枚举，仅作对照"""
    d = Fraction(d)
    d2 = int(2 * d)
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    diagonals = [(0,) * n] if d2 == 0 else [
        tuple(s * d2 for s in signs) for signs in itertools.product((1, -1), repeat=n)
    ]
    target = (d2 * d2 + 4 * (n - 1)) * np.eye(n, dtype=np.int64)
    hits = []
    for diag in diagonals:
        for values in itertools.product((2, -2), repeat=len(upper)):
            q = np.diag(np.array(diag, dtype=np.int64))
            for (i, j), x in zip(upper, values):
                q[i, j] = q[j, i] = x
            if np.array_equal(q @ q.T, target):
                hits.append(IntegerMps(d=d, q2=q))
    hits.sort(key=IntegerMps.code)
    return hits
