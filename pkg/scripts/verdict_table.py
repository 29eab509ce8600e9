#!/usr/bin/env python
"""为 n ≤ N 的全部 (n, d) 生成判定表，写入 CSV"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pandas as pd

from mps import create_app
from mps.realsearch.conditions import necessary_conditions
from mps.realsearch.search import candidate_grid
from mps.serialization import rational_text


def build_table(max_n):
    rows = []
    for n in range(2, max_n + 1):
        for d in candidate_grid(n):
            verdict = necessary_conditions(n, d)
            rows.append(
                {
                    "n": n,
                    "d": rational_text(d),
                    "status": verdict.status.value,
                    "rule": verdict.rule,
                    "notes": ";".join(verdict.notes),
                }
            )
    return pd.DataFrame(rows)


def write_verdict_table(max_n=40):
    app = create_app()
    with app.app_context():
        folder = app.config["OUTPUT_FOLDER"]
        os.makedirs(folder, exist_ok=True)
        path = os.path.join(folder, f"verdicts_n{max_n}.csv")
        table = build_table(max_n)
        table.to_csv(path, index=False)
        print(f"Wrote {len(table)} verdicts to {path}")
        print(table["status"].value_counts().to_string())


if __name__ == "__main__":
    write_verdict_table(int(sys.argv[1]) if len(sys.argv) > 1 else 40)
