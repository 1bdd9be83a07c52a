import csv
import math

import pytest

from helpers import log_abs_exact, rel_close
from tridet import Algorithm, Family, closed_form_det
from tridet.bench import BenchRecord, emit_csv, run_bench


def test_single_cell_contract():
    records = run_bench([(Family.EX32, 50, Algorithm.HYBRID)], trials=3, warmup=1)
    assert len(records) == 1
    r = records[0]
    assert r.trials == 3
    assert r.median_seconds >= 0.0
    assert r.result_sign == 1
    assert rel_close(r.result_logmag, math.log(51), 1e-9)


def test_signs_match_across_algorithms():
    plan = [(Family.EX32, 40, alg) for alg in (
        Algorithm.DETGTRI, Algorithm.THREE_TERM, Algorithm.HYBRID, Algorithm.HYBRID_SCALED,
    )]
    records = run_bench(plan, trials=3, warmup=1)
    signs = {r.result_sign for r in records}
    assert signs == {1}
    logs = [r.result_logmag for r in records]
    assert max(logs) - min(logs) <= 1e-9 * max(1.0, abs(logs[0]))


def test_correctness_under_benchmark():
    plan = [(Family.EX33, n, Algorithm.HYBRID) for n in (10, 11, 12, 13)]
    for r in run_bench(plan, trials=3, warmup=1):
        want = closed_form_det(Family.EX33, r.n)
        assert r.result_sign == (0 if want == 0 else (1 if want > 0 else -1))
        if want != 0:
            assert abs(r.result_logmag - log_abs_exact(want)) <= 1e-9


def test_plain_overflow_falls_back_to_scaled(capsys):
    records = run_bench([(Family.EX34, 401, Algorithm.THREE_TERM)], trials=3, warmup=1)
    assert records[0].algorithm is Algorithm.HYBRID_SCALED
    assert "falling back" in capsys.readouterr().err
    want = closed_form_det(Family.EX34, 401)
    assert records[0].result_sign == (1 if want > 0 else -1)
    assert rel_close(records[0].result_logmag, log_abs_exact(want), 1e-9)


def test_trials_floor():
    with pytest.raises(ValueError):
        run_bench([(Family.EX32, 5, Algorithm.HYBRID)], trials=2)


def test_emit_csv_single_record(tmp_path):
    records = run_bench([(Family.EX32, 10, Algorithm.HYBRID)], trials=3, warmup=0)
    path = tmp_path / "out.csv"
    emit_csv(records, path)
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 2
    assert lines[0] == "family,n,algorithm,trials,median_seconds,result_sign,result_logmag"


def test_emit_csv_empty_errors(tmp_path):
    with pytest.raises(ValueError):
        emit_csv([], tmp_path / "out.csv")


def test_emit_csv_table_plan(tmp_path):
    algs = (Algorithm.HYBRID, Algorithm.THREE_TERM, Algorithm.DETGTRI)
    plan = [(Family.EX33, n, alg) for n in (8, 9, 10) for alg in algs]
    records = run_bench(plan, trials=3, warmup=0)
    path = tmp_path / "table.csv"
    emit_csv(records, path)
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 9
    keys = [(r["family"], int(r["n"]), r["algorithm"]) for r in rows]
    assert keys == sorted(keys)
    for r in rows:
        want = closed_form_det(Family.EX33, int(r["n"]))
        assert int(r["result_sign"]) == (0 if want == 0 else (1 if want > 0 else -1))
