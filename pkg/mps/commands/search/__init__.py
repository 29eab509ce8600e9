import click
from flask import current_app

from mps.commands.options import emit, handle_errors, output_options
from mps.commands.search.equivalence import register_equivalence_commands
from mps.commands.search.structure import register_structure_commands
from mps.errors import BudgetExceeded
from mps.models import VerdictStatus
from mps.realsearch.conditions import necessary_conditions
from mps.realsearch.search import SearchMode, candidate_grid, exhaustive_search
from mps.serialization import matrix_to_json, parse_rational, rational_text, verdict_to_json

VERDICT_EXIT = {
    VerdictStatus.EXISTS: 0,
    VerdictStatus.IMPOSSIBLE: 1,
    VerdictStatus.OPEN: 2,
}


@click.option("--n", "n", type=int, required=True)
@click.option("--d", "d", default=None, help="缺省时遍历 0, 1/2, …, n/2 − 1")
@click.option("--canonical", is_flag=True, help="只输出典范代表")
@click.option("--max-results", type=int, default=None)
@click.option("--budget", type=float, default=None, help="时间预算（秒）")
@click.option("--threads", type=int, default=None, help="工作进程数")
@output_options
@handle_errors
def search(n, d, canonical, max_results, budget, threads, fmt, out):
    """穷举 ℳₙᴿ(d)"""
    config = current_app.config
    mode = SearchMode.UP_TO_EQUIVALENCE if canonical else SearchMode.ALL
    grid = candidate_grid(n) if d is None else [parse_rational(d)]
    threads = config["MPS_SEARCH_THREADS"] if threads is None else threads
    results, partial = [], False
    for value in grid:
        try:
            found = exhaustive_search(
                n,
                value,
                mode=mode,
                budget=budget,
                max_results=max_results,
                threads=threads,
                max_order=config["MPS_SEARCH_MAX_ORDER"],
                canon_max_order=config["MPS_CANON_MAX_ORDER"],
            )
        except BudgetExceeded as exc:
            found, partial = exc.partial, True
        results.extend(found)
        if partial:
            break
    doc = {
        "n": n,
        "d": [rational_text(x) for x in grid],
        "mode": mode.value,
        "partial": partial,
        "results": [matrix_to_json(M) for M in results],
    }
    emit(doc, fmt, out, name="search")
    if partial:
        click.get_current_context().exit(BudgetExceeded.exit_code)


@click.option("--n", "n", type=int, required=True)
@click.option("--d", "d", required=True, help="有理数，如 3/2")
@output_options
@handle_errors
def classify(n, d, fmt, out):
    """按必要条件与已知构造判定 (n, d)"""
    verdict = necessary_conditions(n, parse_rational(d))
    current_app.logger.info("classify n=%d d=%s: %s", n, d, verdict.status.value)
    emit(verdict_to_json(verdict), fmt, out, name="classify")
    click.get_current_context().exit(VERDICT_EXIT[verdict.status])


def register_search_commands(bp):
    """注册实情形相关命令到蓝图"""
    bp.cli.command("search")(search)
    bp.cli.command("classify")(classify)
    register_equivalence_commands(bp)
    register_structure_commands(bp)
