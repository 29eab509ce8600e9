import click
from flask import current_app

from mps.commands.options import emit, handle_errors, output_options, read_integer_mps
from mps.realsearch.canon import are_equivalent, canonical_witness
from mps.serialization import matrix_to_json


@click.argument("path")
@output_options
@handle_errors
def canon(path, fmt, out):
    """典范形及把输入变为典范形的见证"""
    M = read_integer_mps(path)
    C, witness = canonical_witness(M, current_app.config["MPS_CANON_MAX_ORDER"])
    doc = matrix_to_json(C)
    doc["witness"] = witness.to_dict()
    emit(doc, fmt, out, name="canon")


@click.argument("first")
@click.argument("second")
@output_options
@handle_errors
def equiv(first, second, fmt, out):
    """判断两个实 MPS 是否等价；等价时给出见证"""
    M1, M2 = read_integer_mps(first), read_integer_mps(second)
    witness = are_equivalent(M1, M2, current_app.config["MPS_CANON_MAX_ORDER"])
    doc = {"equivalent": witness is not None}
    if witness is not None:
        doc["witness"] = witness.to_dict()
    emit(doc, fmt, out, name="equiv")
    click.get_current_context().exit(0 if witness is not None else 1)


def register_equivalence_commands(bp):
    bp.cli.command("canon")(canon)
    bp.cli.command("equiv")(equiv)
