"""命令共用的选项、输入输出与错误映射。"""
import os
from functools import wraps

import click
from flask import current_app

from mps.errors import FormatError, MpsError
from mps.models import IntegerMps, Tolerance
from mps.serialization import dump_document, load_document, matrix_from_json, to_frame

EX_IOERR = 74


def output_options(f):
    """装饰器：--format 与 --out"""
    f = click.option("--out", "out", type=click.Path(dir_okay=False), default=None, help="输出文件")(f)
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv", "xlsx"]),
        default=None,
        help="输出格式，默认取 MPS_OUTPUT_FORMAT",
    )(f)
    return f


def tolerance_option(f):
    return click.option("--tol", type=float, default=None, help="数值容差 eps")(f)


def current_tolerance(tol):
    return Tolerance(current_app.config["MPS_TOLERANCE"] if tol is None else tol)


def handle_errors(f):
    """装饰器：领域错误写到 stderr 并按 exit_code 退出"""

    @wraps(f)
    def decorated_function(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return f(*args, **kwargs)
        except MpsError as exc:
            current_app.logger.info("%s: %s", type(exc).__name__, exc)
            error = {"error": type(exc).__name__, "message": str(exc)}
            click.echo(dump_document(error), err=True)
            ctx.exit(exc.exit_code)
        except OSError as exc:
            click.echo(dump_document({"error": "IOError", "message": str(exc)}), err=True)
            ctx.exit(EX_IOERR)

    return decorated_function


def read_text(path):
    if path == "-":
        return click.get_text_stream("stdin").read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_document(path):
    return load_document(read_text(path))


def read_integer_mps(path):
    M = matrix_from_json(read_document(path))
    if not isinstance(M, IntegerMps):
        raise FormatError(f"{path} 不是带 d 的精确实矩阵")
    return M


def emit(doc, fmt=None, out=None, name="result"):
    """按格式写出文档；xlsx 未指定 --out 时写到 OUTPUT_FOLDER"""
    fmt = fmt or current_app.config["MPS_OUTPUT_FORMAT"]
    if fmt == "xlsx":
        if out is None:
            folder = current_app.config["OUTPUT_FOLDER"]
            os.makedirs(folder, exist_ok=True)
            out = os.path.join(folder, f"{name}.xlsx")
        to_frame(doc).to_excel(out, index=False, engine="openpyxl")
        click.echo(out)
        return
    text = dump_document(doc) if fmt == "json" else to_frame(doc).to_csv(index=False)
    if out is None:
        click.echo(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
