import click
from flask import Blueprint, current_app

from mps.commands.construct import register_construct_commands
from mps.commands.options import (
    current_tolerance,
    emit,
    handle_errors,
    output_options,
    read_document,
    tolerance_option,
)
from mps.commands.search import register_search_commands
from mps.core import (
    check_d_bound,
    check_trace_identity,
    is_hermitian,
    is_unitary,
    mps_profile,
    scattering_summary,
)
from mps.errors import MpsError
from mps.serialization import as_complex, matrix_from_json

bp = Blueprint("main", __name__, cli_group=None)


def verify_matrix(S, tol):
    """逐项检查，MPS 检查失败时其余依赖 d 的检查记为 False"""
    checks = {"hermitian": is_hermitian(S, tol), "unitary": is_unitary(S, tol)}
    profile = None
    try:
        profile = mps_profile(S, tol)
    except MpsError:
        checks["mps"] = False
    else:
        checks["mps"] = True
    checks["d_bound"] = profile is not None and check_d_bound(profile.n, profile.d, tol)
    checks["trace_identity"] = profile is not None and check_trace_identity(profile, tol)
    return {
        "profile": profile.to_dict() if profile else None,
        "checks": checks,
        "passed": all(checks.values()),
    }


@bp.cli.command("verify")
@click.argument("path")
@tolerance_option
@output_options
@handle_errors
def verify(path, tol, fmt, out):
    """检查 Hermite、酉、MPS、d 上界与迹恒等式"""
    S = as_complex(matrix_from_json(read_document(path)))
    report = verify_matrix(S, current_tolerance(tol))
    current_app.logger.info("verify %s: passed=%s", path, report["passed"])
    emit(report, fmt, out, name="verify")
    if not report["passed"]:
        click.get_current_context().exit(1)


@bp.cli.command("scatter")
@click.argument("path")
@click.option("--edge", "edge", type=int, required=True, help="入射边序号，从 1 开始")
@tolerance_option
@output_options
@handle_errors
def scatter(path, edge, tol, fmt, out):
    """第 J 条边入射时的散射概率与反射/透射比"""
    tol = current_tolerance(tol)
    S = as_complex(matrix_from_json(read_document(path)))
    summary = scattering_summary(S, edge, tol)
    doc = summary.to_dict()
    doc["d_squared"] = float(mps_profile(S, tol).d) ** 2
    emit(doc, fmt, out, name="scatter")


register_construct_commands(bp)
register_search_commands(bp)
