"""JSON 与表格格式：复矩阵、精确实矩阵、设计、参数与判定结果。"""
import json
import re
from fractions import Fraction

import numpy as np
import pandas as pd

from mps.errors import FormatError
from mps.models import (
    ComplexMatrix,
    ConferenceMatrix,
    HadamardMatrix,
    HermitianUnitaryParam,
    IntegerMps,
    SymmetricDesign,
    UnitaryParam,
    Verdict,
)

COMPLEX = "complex"
REAL_EXACT = "real-exact"

_NUMBER = r"[\d.]+(?:[eE][+-]?\d+)?"
_COMPLEX_TEXT = re.compile(rf"^\s*([+-]?{_NUMBER})([+-]{_NUMBER})i\s*$")


def rational_text(value):
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"无法解析有理数 {text!r}") from exc


def complex_text(z):
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}i"


def parse_complex_text(text):
    match = _COMPLEX_TEXT.match(text)
    if not match:
        raise FormatError(f"无法解析复数 {text!r}")
    try:
        return complex(float(match.group(1)), float(match.group(2)))
    except ValueError as exc:
        raise FormatError(f"无法解析复数 {text!r}") from exc


def complex_to_json(M):
    return {
        "n": M.n,
        "kind": COMPLEX,
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in M.entries],
    }


def integer_mps_to_json(M):
    return {
        "n": M.n,
        "kind": REAL_EXACT,
        "d": rational_text(M.d),
        "q_entries": [[rational_text(Fraction(int(x), 2)) for x in row] for row in M.q2],
    }


def integer_matrix_to_json(A):
    A = np.asarray(A)
    return {
        "n": A.shape[0],
        "kind": REAL_EXACT,
        "q_entries": [[rational_text(int(x)) for x in row] for row in A],
    }


def hadamard_to_json(H):
    if H.kind == "real":
        return integer_matrix_to_json(H.H)
    return complex_to_json(ComplexMatrix(H.H))


def conference_to_json(C):
    if C.kind == "real":
        return integer_matrix_to_json(C.C)
    return complex_to_json(ComplexMatrix(C.C))


def matrix_to_json(M):
    if isinstance(M, IntegerMps):
        return integer_mps_to_json(M)
    if isinstance(M, HadamardMatrix):
        return hadamard_to_json(M)
    if isinstance(M, ConferenceMatrix):
        return conference_to_json(M)
    return complex_to_json(M)


def _square(rows, n):
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(row, list) or len(row) != n for row in rows
    ):
        raise FormatError(f"需要 {n}×{n} 的矩阵")
    return rows


def matrix_from_json(obj):
    """complex → ComplexMatrix；real-exact 带 d → IntegerMps，不带 d → 整数 ndarray"""
    if not isinstance(obj, dict) or "kind" not in obj or "n" not in obj:
        raise FormatError("矩阵 JSON 需要 n 与 kind")
    n, kind = obj["n"], obj["kind"]
    if kind == COMPLEX:
        rows = _square(obj.get("entries"), n)
        try:
            values = [[complex(re_, im) for re_, im in row] for row in rows]
        except (TypeError, ValueError) as exc:
            raise FormatError("复元素必须是 [re, im]") from exc
        return ComplexMatrix(np.array(values, dtype=np.complex128))
    if kind == REAL_EXACT:
        rows = _square(obj.get("q_entries"), n)
        values = [[parse_rational(x) for x in row] for row in rows]
        if "d" not in obj:
            if any(x.denominator != 1 for row in values for x in row):
                raise FormatError("不带 d 的实矩阵必须为整数矩阵")
            return np.array([[int(x) for x in row] for row in values], dtype=np.int64)
        if any((2 * x).denominator != 1 for row in values for x in row):
            raise FormatError("Q 的元素分母必须整除 2")
        q2 = np.array([[int(2 * x) for x in row] for row in values], dtype=np.int64)
        return IntegerMps(d=parse_rational(obj["d"]), q2=q2)
    raise FormatError(f"未知的矩阵类型 {kind!r}")


def as_complex(M):
    if isinstance(M, IntegerMps):
        return M.to_complex()
    if isinstance(M, np.ndarray):
        return ComplexMatrix(M)
    return M


def design_to_json(design):
    return design.to_dict()


def design_from_json(obj):
    try:
        return SymmetricDesign(
            v=int(obj["v"]),
            k=int(obj["k"]),
            lam=int(obj["lambda"]),
            incidence=np.array(obj["incidence"], dtype=np.int64),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("设计 JSON 需要 v, k, lambda, incidence") from exc


def _pairs(A):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.atleast_2d(A)]


def _unpairs(rows):
    try:
        return np.array([[complex(re_, im) for re_, im in row] for row in rows])
    except (TypeError, ValueError) as exc:
        raise FormatError("复元素必须是 [re, im]") from exc


def param_to_json(param):
    doc = {"n": param.n, "m": param.m, "P": list(param.P)}
    if param.T is not None:
        doc["T"] = _pairs(param.T)
    if isinstance(param, UnitaryParam):
        doc["S_h"] = _pairs(param.S_h)
    return doc


def param_from_json(obj):
    try:
        n, m, P = int(obj["n"]), int(obj["m"]), obj.get("P")
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError("参数 JSON 需要 n 与 m") from exc
    T = _unpairs(obj["T"]) if "T" in obj else None
    if "S_h" in obj:
        return UnitaryParam(n=n, m=m, S_h=_unpairs(obj["S_h"]), T=T, P=P)
    if T is None:
        raise FormatError("Hermite 参数需要 T")
    return HermitianUnitaryParam(n=n, m=m, T=T, P=P)


def verdict_to_json(verdict: Verdict):
    doc = {
        "n": verdict.n,
        "d": rational_text(verdict.d),
        "status": verdict.status.value,
        "rule": verdict.rule,
    }
    if verdict.witness is not None:
        doc["witness"] = matrix_to_json(verdict.witness)
    if verdict.notes:
        doc["notes"] = list(verdict.notes)
    return doc


def load_document(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"JSON 解析失败: {exc.msg}") from exc


def dump_document(doc):
    return json.dumps(doc, ensure_ascii=False, indent=2)


def _matrix_frame(doc):
    if doc.get("kind") == COMPLEX:
        rows = [[complex_text(complex(re_, im)) for re_, im in row] for row in doc["entries"]]
    else:
        rows = doc["q_entries"]
    return pd.DataFrame(rows, columns=[f"c{j + 1}" for j in range(len(rows))])


def _is_matrix(doc):
    return isinstance(doc, dict) and doc.get("kind") in (COMPLEX, REAL_EXACT)


def to_frame(doc):
    """把输出文档摊平成表格：矩阵按行，矩阵列表加 index 列，其余取一行"""
    if _is_matrix(doc):
        return _matrix_frame(doc)
    if isinstance(doc, list) and all(_is_matrix(x) for x in doc):
        frames = [_matrix_frame(x).assign(index=i, d=x.get("d")) for i, x in enumerate(doc)]
        if not frames:
            return pd.DataFrame(columns=["index", "d"])
        return pd.concat(frames, ignore_index=True)
    if isinstance(doc, list):
        return pd.DataFrame(doc)
    if isinstance(doc.get("results"), list):
        return to_frame(doc["results"])
    flat = {
        key: dump_document(value) if isinstance(value, (list, dict)) else value
        for key, value in doc.items()
    }
    return pd.DataFrame([flat])
