from fractions import Fraction

import click
from flask import current_app

from mps.commands.options import (
    current_tolerance,
    emit,
    handle_errors,
    output_options,
    read_document,
    tolerance_option,
)
from mps.constructions import construct
from mps.errors import FormatError, MpsError
from mps.models import (
    ComplexMatrix,
    ConferenceMatrix,
    Family,
    FamilySpec,
    HadamardMatrix,
    IntegerMps,
)
from mps.realsearch.exact import to_integer_mps
from mps.serialization import (
    design_from_json,
    matrix_from_json,
    matrix_to_json,
    parse_rational,
)

CONFERENCE_FAMILIES = (Family.CONFERENCE_CORE, Family.CONFERENCE_BLOCK)


def load_auxiliary(family, path):
    """--aux 文件：设计 JSON，或不带 d 的整数矩阵（Hadamard / 会议矩阵）"""
    doc = read_document(path)
    if isinstance(doc, dict) and "incidence" in doc:
        return design_from_json(doc)
    A = matrix_from_json(doc)
    if isinstance(A, IntegerMps):
        raise FormatError("辅助矩阵不应带 d")
    if isinstance(A, ComplexMatrix):
        A = A.entries
    kind = "real" if A.dtype.kind == "i" else "complex"
    if family in CONFERENCE_FAMILIES:
        return ConferenceMatrix(order=A.shape[0], C=A, kind=kind)
    return HadamardMatrix(order=A.shape[0], H=A, kind=kind)


def exact_d(spec):
    """能精确确定的 d；无法确定时返回 None"""
    if spec.family is Family.FULL_J:
        return Fraction(spec.n, 2) - 1
    if spec.family is Family.COMPLEX_CORE:
        return Fraction(spec.n, 4) - Fraction(3, 2)
    if spec.family is Family.DESIGN_COMPLEX or spec.d is None:
        return None
    return Fraction(spec.d)


def as_output(S, spec, tol):
    """实矩阵且 d 为半整数时输出精确形式"""
    d = exact_d(spec)
    if d is not None and (2 * d).denominator == 1 and S.is_real(tol):
        try:
            return to_integer_mps(S, d, tol)
        except MpsError:
            current_app.logger.debug("construct: 无法化为精确实矩阵，按复矩阵输出")
    return S


@click.option("--family", type=click.Choice([f.value for f in Family]), required=True)
@click.option("--n", "n", type=int, default=None)
@click.option("--d", "d", default=None, help="有理数，如 3/2")
@click.option("--alpha", type=float, default=None)
@click.option("--aux", default=None, help="辅助矩阵或设计的 JSON 文件")
@tolerance_option
@output_options
@handle_errors
def construct_command(family, n, d, alpha, aux, tol, fmt, out):
    """按族构造 ℳₙ(d) 中的矩阵"""
    family = Family(family)
    if n is None and family is not Family.N2:
        raise click.UsageError("--n 是必需的")
    tol = current_tolerance(tol)
    spec = FamilySpec(
        family=family,
        n=2 if family is Family.N2 else n,
        d=None if d is None else parse_rational(d),
        auxiliary=None if aux is None else load_auxiliary(family, aux),
        alpha=alpha,
    )
    current_app.logger.info("construct %s n=%s d=%s", family.value, spec.n, spec.d)
    S = construct(spec, tol)
    emit(matrix_to_json(as_output(S, spec, tol)), fmt, out, name="construct")


def register_construct_commands(bp):
    """注册 construct 命令到蓝图"""
    bp.cli.command("construct")(construct_command)
