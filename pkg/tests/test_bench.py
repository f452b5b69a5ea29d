import json

import pytest

from vedarith import backend, bench
from vedarith.bench import BenchConfig, BenchRecord, CSV_HEADER


def small_config(**kw):
    defaults = dict(widths=(8, 16), iterations=3, seed=7, operations=("mul", "div"))
    defaults.update(kw)
    return BenchConfig(**defaults)


def test_config_validation():
    with pytest.raises(ValueError, match="multiple of 4"):
        BenchConfig(widths=(10,))
    with pytest.raises(ValueError, match="multiple of 4"):
        BenchConfig(widths=(0,))
    with pytest.raises(ValueError, match="iterations"):
        BenchConfig(iterations=0)
    with pytest.raises(ValueError, match="operation"):
        BenchConfig(operations=("fft",))
    with pytest.raises(ValueError, match="algorithm"):
        BenchConfig(algorithms=("magic",))


def test_config_from_json_file(tmp_path):
    path = tmp_path / "bench.json"
    path.write_text(json.dumps({"widths": [8], "iterations": 2, "seed": 5}))
    config = BenchConfig.from_json_file(path)
    assert config.widths == (8,) and config.iterations == 2 and config.seed == 5
    path.write_text(json.dumps({"wids": [8]}))
    with pytest.raises(ValueError, match="unknown config keys"):
        BenchConfig.from_json_file(path)


def test_record_arithmetic_and_rows():
    rec = BenchRecord("mul", "vedic", 16, 4, 4000, 1000.0, "ab")
    assert rec.ns_per_op == rec.total_ns / rec.iterations
    assert rec.csv_row() == "mul,vedic,16,4,4000,1000.0,ab"
    assert rec.csv_row(with_backend=True).endswith(",None")


def test_suite_produces_paired_records():
    records = bench.bench_suite(small_config())
    # 2 mul algorithms + 3 div algorithms, for each of 2 widths
    assert len(records) == (2 + 3) * 2
    by_cell = {}
    for rec in records:
        assert rec.iterations == 3
        assert rec.total_ns > 0
        assert rec.ns_per_op == pytest.approx(rec.total_ns / rec.iterations)
        by_cell.setdefault((rec.operation, rec.operand_bits), set()).add(
            rec.operand_checksum
        )
    # every algorithm of a cell consumed the identical operand stream
    assert all(len(sums) == 1 for sums in by_cell.values())


def test_suite_is_seed_deterministic_in_operands():
    a = bench.bench_suite(small_config())
    b = bench.bench_suite(small_config())
    assert [r.operand_checksum for r in a] == [r.operand_checksum for r in b]
    c = bench.bench_suite(small_config(seed=8))
    assert [r.operand_checksum for r in c] != [r.operand_checksum for r in a]


def test_all_operations_run():
    config = small_config(
        widths=(8,), operations=("mul", "div", "modpow", "rsa_encrypt")
    )
    records = bench.bench_suite(config)
    assert {r.operation for r in records} == {"mul", "div", "modpow", "rsa_encrypt"}
    assert {r.algorithm for r in records if r.operation == "modpow"} == {
        "vedic",
        "restoring",
        "nonrestoring",
    }


def test_algorithm_subset_filter():
    records = bench.bench_suite(small_config(algorithms=("vedic",)))
    assert {r.algorithm for r in records} == {"vedic"}


def test_csv_lines_shape():
    records, sink = bench.run_suite(small_config(widths=(8,)))
    lines = list(bench.csv_lines(records))
    assert lines[0] == CSV_HEADER
    assert len(lines) == len(records) + 1
    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == 7
        int(fields[2]), int(fields[3]), int(fields[4])
        float(fields[5])
    assert len(sink) == 16


def test_compare_backends_mode():
    if "compiled" not in backend.available():
        pytest.skip("compiled kernels not built")
    config = small_config(widths=(8,), operations=("mul",), compare_backends=True)
    records = bench.bench_suite(config)
    assert {r.backend for r in records} == {"pure", "compiled"}
    lines = list(bench.csv_lines(records, compare_backends=True))
    assert lines[0] == CSV_HEADER + ",backend"
    # same operands regardless of backend
    assert len({r.operand_checksum for r in records}) == 1
