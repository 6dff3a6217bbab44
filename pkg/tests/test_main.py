"""Tests for the command line."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import pytest

from entity import TimeWindow
from instance_file import dumps_instance, load_instance, save_instance
from main import EXIT_INVALID, EXIT_OK, EXIT_USAGE, run_cli
from procgen import generate_instance

DATA = Path(__file__).parent / "data"


@pytest.fixture
def quick_config(tmp_path):
    """A GA config file small enough for command line tests."""
    path = tmp_path / "ga.json"
    path.write_text(json.dumps({
        "population_size": 20, "max_generations": 30, "stall_generations": 10,
    }), encoding="utf-8")
    return str(path)


@pytest.fixture
def saved(tmp_path):
    """Save an instance under tmp_path and return its file name."""
    def save(instance, name):
        path = tmp_path / f"{name}.json"
        save_instance(instance, path)
        return str(path)
    return save


def test_solve_single_customer(make_instance, saved, capsys):
    path = saved(make_instance([(3.0, 4.0)]), "one")
    assert run_cli(["solve", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("one")
    assert out.rstrip().endswith("0 - 1")


def test_solve_is_reproducible(saved, quick_config, capsys):
    path = saved(generate_instance(1, 10), "shop")
    args = ["solve", path, "--seed", "42", "--config", quick_config]
    assert run_cli(args) == EXIT_OK
    first = capsys.readouterr().out
    assert run_cli(args) == EXIT_OK
    assert capsys.readouterr().out == first


def test_solve_json(corner_instance, saved, capsys):
    path = saved(corner_instance, "corner")
    assert run_cli(["solve", path, "--format", "json"]) == EXIT_OK
    (row,) = json.loads(capsys.readouterr().out)
    assert row["route"] == "0 - 1 - 2"
    assert row["min_C"] == pytest.approx(17.0)


def test_baseline_and_oracle(corner_instance, saved, capsys):
    path = saved(corner_instance, "corner")
    assert run_cli(["baseline", path]) == EXIT_OK
    assert capsys.readouterr().out.rstrip().endswith("0 - 1 - 2 - 0")
    assert run_cli(["oracle", path]) == EXIT_OK
    assert capsys.readouterr().out.rstrip().endswith("0 - 1 - 2")


def test_compare_csv_is_consistent(saved, quick_config, capsys):
    paths = [saved(generate_instance(s, 8), f"s{s}") for s in (2, 1)]
    code = run_cli(["compare", *paths, "--config", quick_config,
                    "--format", "csv"])
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [row["instance"] for row in rows] == ["s1", "s2"]
    for row in rows:
        base, ga = float(row["baseline_Z"]), float(row["ga_Z"])
        assert float(row["impr_Z_pct"]) == pytest.approx(
            (base - ga) / base * 100, abs=1e-6)
        base, ga = float(row["baseline_dist"]), float(row["ga_dist"])
        assert float(row["impr_dist_pct"]) == pytest.approx(
            (base - ga) / base * 100, abs=1e-6)


def test_oracle_refuses_large_instances(saved, capsys):
    path = saved(generate_instance(0, 9), "nine")
    assert run_cli(["oracle", path]) == EXIT_INVALID
    assert "capped at 8 customers" in capsys.readouterr().err


def test_invalid_instance_lists_violations(corner_instance, saved, capsys):
    path = saved(corner_instance, "corner")
    with open(path, encoding="utf-8") as f:
        document = json.load(f)
    document["orders"][0]["quantity"] = 0
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f)
    assert run_cli(["solve", path]) == EXIT_INVALID
    err = capsys.readouterr().err
    assert "order q1: quantity ≥ 1 violated" in err
    assert "instance is invalid" in err


def test_usage_errors(capsys):
    assert run_cli(["solve"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err
    assert run_cli(["fly"]) == EXIT_USAGE
    assert run_cli(["solve", "nowhere.json"]) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert run_cli(["--help"]) == EXIT_OK
    assert "solve" in capsys.readouterr().out


def test_gen_writes_a_loadable_instance(tmp_path, capsys):
    path = tmp_path / "gen.json"
    args = ["gen", "--seed", "4", "--customers", "6", "--out", str(path)]
    assert run_cli(args) == EXIT_OK
    assert load_instance(path).n_customers == 6
    assert run_cli(["gen", "--seed", "4", "--customers", "6"]) == EXIT_OK
    assert capsys.readouterr().out == path.read_text(encoding="utf-8")


def test_batch_writes_one_file_per_batch(saved, tmp_path, capsys):
    path = saved(generate_instance(6, 12), "day")
    out_dir = tmp_path / "batches"
    args = ["batch", path, "--out-dir", str(out_dir), "--format", "csv"]
    assert run_cli(args) == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert sum(int(row["orders"]) for row in rows) == 12
    for row in rows:
        assert load_instance(row["file"]).n_customers == int(row["orders"])


def test_plot(corner_instance, saved, tmp_path, capsys):
    path = saved(corner_instance, "corner")
    svg = tmp_path / "corner.svg"
    args = ["plot", path, "--out", str(svg), "--solver", "baseline"]
    assert run_cli(args) == EXIT_OK
    assert svg.read_text(encoding="utf-8").count("<polyline") == 1
    assert "route map written" in capsys.readouterr().err


def test_batch_reports_rejected_orders_once(make_instance, saved, capsys):
    instance = make_instance([(1, 0), (2, 0)], placed_at=[695, 1140])
    path = saved(instance, "late")
    assert run_cli(["batch", path]) == EXIT_OK
    captured = capsys.readouterr()
    assert "m1@11:30" in captured.out
    assert captured.err.count("order q2 rejected") == 1
    assert "(x" not in captured.err


def test_plot_honours_the_oracle_cap(make_instance, saved, tmp_path, capsys):
    path = saved(make_instance([(1, 0), (2, 0), (3, 0)]), "three")
    svg = tmp_path / "three.svg"
    args = ["plot", path, "--out", str(svg), "--solver", "oracle"]
    assert run_cli([*args, "--max-customers", "2"]) == EXIT_INVALID
    assert "capped at 2 customers" in capsys.readouterr().err
    assert not svg.exists()
    assert run_cli([*args, "--max-customers", "3"]) == EXIT_OK
    assert svg.read_text(encoding="utf-8").count("<polyline") == 1


def test_solve_json_stays_standard_for_very_late_customers(
    make_instance, saved, capsys,
):
    instance = make_instance(
        [(1000.0, 0.0)], windows=[TimeWindow(0.0, 10.0, 20.0)])
    path = saved(instance, "far")

    def reject(constant):
        msg = f"non-standard JSON constant {constant}"
        raise ValueError(msg)

    for command in ("solve", "baseline", "oracle"):
        assert run_cli([command, path, "--format", "json"]) == EXIT_OK
        (row,) = json.loads(capsys.readouterr().out, parse_constant=reject)
        assert row["min_C"] > 0


def test_solution_csv_matches_the_golden_file(capsys):
    rows = []
    for command, name in (
        ("oracle", "line"), ("baseline", "line"), ("solve", "line"),
        ("oracle", "split"),
    ):
        path = DATA / f"{name}.json"
        assert run_cli([command, str(path), "--format", "csv"]) == EXIT_OK
        header, row = capsys.readouterr().out.splitlines()
        rows.append(row)
    expected = (DATA / "solutions.csv").read_text(encoding="utf-8")
    assert "\n".join([header, *rows]) + "\n" == expected


def test_instance_file_matches_the_golden_layout():
    for name in ("line", "split"):
        path = DATA / f"{name}.json"
        assert dumps_instance(load_instance(path)) == \
            path.read_text(encoding="utf-8")
