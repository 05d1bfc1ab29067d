"""The command-line workbench: output contracts and exit codes."""

from __future__ import annotations

import sys

import pytest

from flexq import (
    gen_example1,
    gen_fig1,
    gen_fig2,
    parse_instance,
    parse_set_cover,
    reduce_set_cover,
    serialize_instance,
)
from flexq.cli import cli, main


@pytest.fixture()
def fig1_h(tmp_path):
    _, h = gen_fig1()
    path = tmp_path / "fig1H.smfq"
    path.write_text(serialize_instance(h))
    return str(path)


@pytest.fixture()
def fig1_g(tmp_path):
    g, _ = gen_fig1()
    path = tmp_path / "fig1G.hr"
    path.write_text(serialize_instance(g))
    return str(path)


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# solving


def test_solve_minsum_exact(capsys, fig1_h):
    code, out, _ = run(capsys, "solve", "minsum", "--method", "exact", fig1_h)
    assert code == 0
    assert "# objective=7" in out
    assert "# method=minsum-exact" in out
    assert "# certified=true" in out
    assert out.splitlines()[0] == "a1 -> p1"


def test_solve_minmax(capsys, fig1_h):
    code, out, _ = run(capsys, "solve", "minmax", fig1_h)
    assert code == 0
    assert "# objective=4" in out
    assert "# method=minmax" in out


def test_solve_heuristics(capsys, tmp_path):
    path = tmp_path / "ex1.smfq"
    path.write_text(serialize_instance(gen_example1(5, 100)))
    code, out, _ = run(capsys, "solve", "minsum", "--method", "promote", str(path))
    assert code == 0 and "# objective=104" in out and "# certified=false" in out
    code, out, _ = run(capsys, "solve", "minsum", "--method", "restrict", str(path))
    assert code == 0 and "# objective=500" in out
    code, out, _ = run(capsys, "solve", "minsum", "--method", "minmax", str(path))
    assert code == 0 and "# method=via-minmax" in out


def test_solve_output_passes_its_own_audit(capsys, fig1_h, tmp_path):
    _, out, _ = run(capsys, "solve", "minsum", "--method", "exact", fig1_h)
    mfile = tmp_path / "m.txt"
    mfile.write_text(out)
    code, out, _ = run(capsys, "check", fig1_h, "--matching", str(mfile))
    assert code == 0
    assert out == "a_perfect=true\nenvy_free=true\ntotal_cost=7\nmax_cost=4\n"


def test_check_flags_envy(capsys, fig1_h, tmp_path):
    mfile = tmp_path / "m.txt"
    mfile.write_text("a1 -> -\na2 -> p1\na3 -> p2\na4 -> -\na5 -> -\n")
    code, out, _ = run(capsys, "check", fig1_h, "--matching", str(mfile))
    assert code == 0
    assert "a_perfect=false" in out
    assert "envy_free=false" in out


# ---------------------------------------------------------------------------
# oracle and budgets


def test_oracle_subcommand(capsys, fig1_h):
    code, out, _ = run(capsys, "oracle", "minsum", fig1_h)
    assert code == 0 and "# objective=7" in out and "# method=oracle-minsum" in out
    code, out, _ = run(capsys, "oracle", "minmax", fig1_h)
    assert code == 0 and "# objective=4" in out


def test_budget_exit_code(capsys, fig1_h):
    code, _, err = run(capsys, "oracle", "minsum", "--budget", "3", fig1_h)
    assert code == 3
    assert "budget" in err
    code, out, _ = run(capsys, "oracle", "minsum", "--budget", "3", "--force", fig1_h)
    assert code == 0 and "# objective=7" in out


# ---------------------------------------------------------------------------
# the two-round pipeline


def test_extend_deviation(capsys, fig1_g):
    code, out, _ = run(capsys, "extend", fig1_g, "--objective", "deviation")
    assert code == 0
    assert "a3 -> p1" in out and "a5 -> p2" in out
    assert "# objective=1" in out
    assert "# method=extend-deviation" in out


def test_extend_cost_uses_instance_prices_by_default(capsys, fig1_g):
    code, out, _ = run(capsys, "extend", fig1_g, "--objective", "cost")
    assert code == 0 and "# objective=3" in out


def test_extend_cost_with_a_price_file(capsys, fig1_g, tmp_path):
    prices = tmp_path / "round2.costs"
    prices.write_text("p1 5\np2 1\n")
    code, out, _ = run(capsys, "extend", fig1_g, "--objective", "cost",
                       "--costs", str(prices))
    assert code == 0
    assert "# objective=2" in out
    assert "a3 -> p2" in out


def test_extend_requires_a_quota_instance(capsys, fig1_h):
    code, _, err = run(capsys, "extend", fig1_h, "--objective", "deviation")
    assert code == 2
    assert "hr 1" in err


# ---------------------------------------------------------------------------
# generation


def test_gen_writes_parsable_instances(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "fig2", "--n", "4")
    assert code == 0
    assert parse_instance(out) == gen_fig2(4)
    code, out, _ = run(capsys, "gen", "fig1")
    assert parse_instance(out) == gen_fig1()[1]
    code, out, _ = run(capsys, "gen", "fig1", "--variant", "hr")
    assert parse_instance(out) == gen_fig1()[0]


def test_gen_random_is_deterministic(capsys):
    args = ("gen", "random", "--agents", "5", "--programs", "4",
            "--list-len", "3", "--cost-max", "6", "--seed", "42")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert parse_instance(first).agents == [f"a{i}" for i in range(1, 6)]


def test_gen_reductions_from_input_files(capsys, tmp_path):
    scfile = tmp_path / "cover.txt"
    scfile.write_text("elements 2\nset s1: e1\nset s2: e1 e2\nset s3: e2\n")
    code, out, _ = run(capsys, "gen", "setcover", str(scfile))
    assert code == 0
    expected = reduce_set_cover(parse_set_cover(scfile.read_text()))
    assert parse_instance(out) == expected

    gfile = tmp_path / "graph.txt"
    gfile.write_text("edge u v\n")
    code, out, _ = run(capsys, "gen", "vertexcover", str(gfile))
    assert code == 0
    assert "p_u cost=3" in out


def test_gen_parameter_errors_exit_2(capsys):
    code, _, err = run(capsys, "gen", "fig2", "--n", "1")
    assert code == 2 and err


# ---------------------------------------------------------------------------
# bench


def test_bench_reports_zero_violations(capsys):
    code, out, _ = run(capsys, "bench", "--suite", "small", "--seeds", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# seed")
    assert lines[-1] == "# violations=0"
    assert len(lines) == 8  # header + 6 rows + trailer
    _, again, _ = run(capsys, "bench", "--suite", "small", "--seeds", "6")
    assert out == again


# ---------------------------------------------------------------------------
# exit codes and entry point


def test_parse_and_usage_failures_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.smfq"
    bad.write_text("smfq 1\n[agents]\noops\n")
    assert run(capsys, "solve", "minmax", str(bad))[0] == 2
    assert run(capsys, "solve", "minmax", str(tmp_path / "absent.smfq"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_internal_invariant_violations_exit_4(capsys, fig1_h, monkeypatch):
    def boom(instance):
        raise AssertionError("synthetic failure")
    monkeypatch.setattr("flexq.cli.solve_minmax", boom)
    code, _, err = run(capsys, "solve", "minmax", fig1_h)
    assert code == 4
    assert "invariant" in err


def test_console_entry_point(capsys, fig1_h, monkeypatch):
    monkeypatch.setattr(sys, "argv", ["flexq", "solve", "minmax", fig1_h])
    with pytest.raises(SystemExit) as exc:
        main()
    assert exc.value.code == 0
    assert "# objective=4" in capsys.readouterr().out
