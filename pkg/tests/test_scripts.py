# coding=utf-8
import importlib.util
import os

import pandas as pd
import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SCRIPT = os.path.join(ROOT, "scripts", "verdict_table.py")


@pytest.fixture(scope="module")
def verdict_table():
    spec = importlib.util.spec_from_file_location("verdict_table", SCRIPT)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def test_build_table(verdict_table):
    """n ≤ 8 共 1 + 2 + … + 7 行，每个 (n, d) 一行"""
    table = verdict_table.build_table(8)
    assert list(table.columns) == ["n", "d", "status", "rule", "notes"]
    assert len(table) == 28
    assert set(table["status"]) <= {"impossible", "exists_with_witness", "open"}
    assert not table.duplicated(["n", "d"]).any()

    rows = table.set_index(["n", "d"])
    assert tuple(rows.loc[(6, "2/1"), ["status", "rule"]]) == ("exists_with_witness", "full-j")
    assert tuple(rows.loc[(6, "0/1"), ["status", "rule"]]) == ("exists_with_witness", "upper-interval")
    assert tuple(rows.loc[(4, "0/1"), ["status", "rule"]]) == ("impossible", "small-n")
    assert tuple(rows.loc[(8, "1/2"), ["status", "rule"]]) == ("impossible", "real-parity")


def test_small_orders_are_decided(verdict_table):
    table = verdict_table.build_table(7)
    assert "open" not in set(table["status"])


def test_write_verdict_table(verdict_table, app, monkeypatch):
    monkeypatch.setattr(verdict_table, "create_app", lambda: app)
    verdict_table.write_verdict_table(6)
    path = os.path.join(app.config["OUTPUT_FOLDER"], "verdicts_n6.csv")
    table = pd.read_csv(path, dtype={"d": str})
    assert len(table) == 1 + 2 + 3 + 4 + 5
    assert table.loc[0, "n"] == 2
