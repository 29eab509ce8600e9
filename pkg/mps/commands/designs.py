import click
from flask import Blueprint

from mps.commands.options import emit, handle_errors, output_options, read_document
from mps.designs import (
    design_to_hadamard,
    fourier_complex_hadamard,
    hadamard_to_design,
    known_design,
    paley_conference,
    sylvester_hadamard,
    verify_design,
)
from mps.errors import DesignInvalid, FormatError
from mps.models import HadamardMatrix
from mps.serialization import (
    design_from_json,
    design_to_json,
    hadamard_to_json,
    matrix_from_json,
    matrix_to_json,
)

designs = Blueprint("designs", __name__, cli_group="designs")


PROVIDERS = {
    "hadamard": sylvester_hadamard,
    "conference": paley_conference,
    "fourier": fourier_complex_hadamard,
}


@designs.cli.command("make")
@click.option("--hadamard", "hadamard", type=int, default=None, help="N 阶 Sylvester Hadamard 矩阵")
@click.option("--conference", "conference", type=int, default=None, help="N 阶 Paley 会议矩阵")
@click.option("--fourier", "fourier", type=int, default=None, help="N 阶 Fourier 复 Hadamard 矩阵")
@click.option("--v", "v", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@click.option("--lambda", "lam", type=int, default=None)
@output_options
@handle_errors
def make(hadamard, conference, fourier, v, k, lam, fmt, out):
    """取一个已知构造：--hadamard / --conference / --fourier N，或 (v,k,λ) 设计"""
    orders = {"hadamard": hadamard, "conference": conference, "fourier": fourier}
    chosen = [name for name, N in orders.items() if N is not None]
    triple = (v, k, lam)
    has_design = any(x is not None for x in triple)
    if len(chosen) + has_design != 1:
        raise click.UsageError("需要且只能给出 --hadamard、--conference、--fourier 或 --v --k --lambda 之一")
    if chosen:
        name = chosen[0]
        emit(matrix_to_json(PROVIDERS[name](orders[name])), fmt, out, name=name)
        return
    if None in triple:
        raise click.UsageError("--v、--k 与 --lambda 必须同时给出")
    design = known_design(v, k, lam)
    if design is None:
        raise DesignInvalid(f"没有 ({v},{k},{lam}) 设计的构造")
    emit(design_to_json(design), fmt, out, name="design")


@designs.cli.command("verify")
@click.argument("path")
@click.option("--degenerate-ok", is_flag=True, help="允许 λ = 0")
@output_options
@handle_errors
def verify(path, degenerate_ok, fmt, out):
    """精确校验设计 JSON"""
    design = design_from_json(read_document(path))
    valid = verify_design(design.incidence, design.v, design.k, design.lam, degenerate_ok)
    emit({"valid": valid, "degenerate": design.degenerate}, fmt, out, name="design-verify")
    if not valid:
        click.get_current_context().exit(1)


@designs.cli.command("from-hadamard")
@click.argument("path")
@output_options
@handle_errors
def from_hadamard(path, fmt, out):
    """实 Hadamard 矩阵 → (N−1, N/2−1, N/4−1) 设计"""
    H = matrix_from_json(read_document(path))
    if not hasattr(H, "dtype") or H.dtype.kind != "i":
        raise FormatError("需要不带 d 的整数矩阵")
    matrix = HadamardMatrix(order=H.shape[0], H=H, kind="real")
    emit(design_to_json(hadamard_to_design(matrix)), fmt, out, name="design")


@designs.cli.command("to-hadamard")
@click.argument("path")
@output_options
@handle_errors
def to_hadamard(path, fmt, out):
    """(4t−1, 2t−1, t−1) 设计 → 实 Hadamard 矩阵"""
    design = design_from_json(read_document(path))
    emit(hadamard_to_json(design_to_hadamard(design)), fmt, out, name="hadamard")
