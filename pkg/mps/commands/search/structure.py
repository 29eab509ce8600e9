import click

from mps.commands.options import (
    emit,
    handle_errors,
    output_options,
    read_document,
    read_integer_mps,
)
from mps.errors import FormatError
from mps.models import HadamardMatrix, IntegerMps
from mps.realsearch.standard import lemma_counts, to_standard_form
from mps.realsearch.structure import (
    extract_design,
    hadamard_bridge,
    hadamard_to_mps,
    structure_check,
)
from mps.serialization import design_to_json, hadamard_to_json, matrix_from_json, matrix_to_json


@click.argument("path")
@output_options
@handle_errors
def extract_design_command(path, fmt, out):
    """从 d ≥ n/4 − 3/2 的实 MPS 中取出对称设计"""
    emit(design_to_json(extract_design(read_integer_mps(path))), fmt, out, name="design")


@click.argument("path")
@output_options
@handle_errors
def bridge(path, fmt, out):
    """d = n/4 − 3/2 的实 MPS ↔ n/2 + 1 阶 Hadamard 矩阵，方向由输入决定"""
    M = matrix_from_json(read_document(path))
    if isinstance(M, IntegerMps):
        doc = hadamard_to_json(hadamard_bridge(M))
    elif hasattr(M, "dtype") and M.dtype.kind == "i":
        doc = matrix_to_json(hadamard_to_mps(HadamardMatrix(order=M.shape[0], H=M, kind="real")))
    else:
        raise FormatError("bridge 需要精确实矩阵")
    emit(doc, fmt, out, name="bridge")


@click.argument("path")
@output_options
@handle_errors
def structure(path, fmt, out):
    """n/6 − 1 < d < n/2 − 1 时 G 的三条恒等式"""
    emit(structure_check(read_integer_mps(path)).to_dict(), fmt, out, name="structure")


@click.argument("path")
@click.option("--j", "j", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@output_options
@handle_errors
def lemma(path, j, k, fmt, out):
    """标准形块 I 中第 1、j、k 行的列计数与同余条件"""
    sf = to_standard_form(read_integer_mps(path))
    emit(lemma_counts(sf, j, k).to_dict(), fmt, out, name="lemma")


def register_structure_commands(bp):
    bp.cli.command("extract-design")(extract_design_command)
    bp.cli.command("bridge")(bridge)
    bp.cli.command("structure")(structure)
    bp.cli.command("lemma")(lemma)
