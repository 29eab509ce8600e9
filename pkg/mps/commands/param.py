import click
from flask import Blueprint, current_app

from mps.commands.options import (
    current_tolerance,
    emit,
    handle_errors,
    output_options,
    read_document,
    tolerance_option,
)
from mps.models import QuadraticSpec, UnitaryParam
from mps.param import (
    build_hermitian_unitary,
    build_quadratic_solution,
    build_unitary,
    decompose_hermitian_unitary,
    decompose_quadratic_solution,
    decompose_unitary,
)
from mps.serialization import (
    as_complex,
    matrix_from_json,
    matrix_to_json,
    param_from_json,
    param_to_json,
)

param = Blueprint("param", __name__, cli_group="param")


def quadratic_spec(a, b):
    if (a is None) != (b is None):
        raise click.UsageError("--a 与 --b 必须同时给出")
    return None if a is None else QuadraticSpec(a=a, b=b)


def quadratic_options(f):
    f = click.option("--b", "b", type=float, default=None, help="H² = aI + bH 中的 b")(f)
    return click.option("--a", "a", type=float, default=None, help="H² = aI + bH 中的 a")(f)


@param.cli.command("encode")
@click.argument("path")
@quadratic_options
@output_options
@handle_errors
def encode(path, a, b, fmt, out):
    """由参数 (m, T, [S_h], P) 构造矩阵；给出 --a --b 时构造 H² = aI + bH 的解"""
    spec = quadratic_spec(a, b)
    p = param_from_json(read_document(path))
    if isinstance(p, UnitaryParam):
        if spec is not None:
            raise click.UsageError("二次方程的解只接受 Hermite 参数")
        matrix = build_unitary(p)
    elif spec is not None:
        matrix = build_quadratic_solution(spec, p)
    else:
        matrix = build_hermitian_unitary(p)
    emit(matrix_to_json(matrix), fmt, out, name="param-encode")


@param.cli.command("decode")
@click.argument("path")
@click.option("--general", is_flag=True, help="按一般酉矩阵分解")
@quadratic_options
@tolerance_option
@output_options
@handle_errors
def decode(path, general, a, b, tol, fmt, out):
    """把矩阵分解为参数"""
    tol = current_tolerance(tol)
    pivot_tol = current_app.config["MPS_PIVOT_TOLERANCE"]
    spec = quadratic_spec(a, b)
    M = as_complex(matrix_from_json(read_document(path)))
    if general:
        result = decompose_unitary(M, tol, pivot_tol)
    elif spec is not None:
        result = decompose_quadratic_solution(spec, M, tol, pivot_tol)
    else:
        result = decompose_hermitian_unitary(M, tol, pivot_tol)
    emit(param_to_json(result), fmt, out, name="param-decode")
