"""Command-line surface: output text, report files, and exit codes."""

import json

import pytest

from wfamax.cli import EXIT_BUDGET, EXIT_OK, EXIT_PARSE, EXIT_USAGE, main
from wfamax.core import make_wfa, validate
from wfamax.serialize import document_to_wfa, dumps, loads, wfa_to_document


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def paren_file(tmp_path, capsys):
    path = tmp_path / "paren.json"
    assert main(["casestudy", "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    return str(path)


@pytest.fixture
def doubling_file(tmp_path):
    wfa = make_wfa(("a",), [1], [1], {"a": [[2]]})
    path = tmp_path / "doubling.json"
    path.write_text(dumps(wfa_to_document(wfa)))
    return str(path)


@pytest.fixture
def tripling_file(tmp_path):
    wfa = make_wfa(("a",), [1], [1], {"a": [[3]]})
    path = tmp_path / "tripling.json"
    path.write_text(dumps(wfa_to_document(wfa)))
    return str(path)


@pytest.fixture
def cycle_graph_file(tmp_path):
    path = tmp_path / "cycle.graph"
    path.write_text("3\n0 1\n1 2\n2 0\n")
    return str(path)


def test_eval_prints_rational_and_decimal(capsys, paren_file):
    code, out, _ = run(capsys, "eval", paren_file, "(1)(2)")
    assert code == EXIT_OK
    assert out == "1/2 (0.5000)\n"


def test_eval_empty_word(capsys, paren_file):
    code, out, _ = run(capsys, "eval", paren_file, "")
    assert code == EXIT_OK
    assert out == "-1/2 (-0.5000)\n"


def test_eval_places_flag(capsys, paren_file):
    code, out, _ = run(capsys, "eval", paren_file, "((1))(2)", "--places", "2")
    assert code == EXIT_OK
    assert out == "3/4 (0.75)\n"


def test_eval_unknown_symbol_exits_two(capsys, paren_file):
    code, _, err = run(capsys, "eval", paren_file, "(1)[")
    assert code == EXIT_PARSE
    assert "[" in err


def test_eval_corrupt_document_exits_two(capsys, tmp_path, paren_file):
    doc = loads(open(paren_file).read())
    doc["initial"] = list(doc["initial"])
    doc["initial"][0] = "3/0"
    bad = tmp_path / "bad.json"
    bad.write_text(dumps(doc))
    code, _, err = run(capsys, "eval", str(bad), "()")
    assert code == EXIT_PARSE
    assert "initial[0]" in err


def test_eval_missing_file_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "eval", str(tmp_path / "absent.json"), "()")
    assert code == EXIT_PARSE
    assert err


def test_usage_errors_exit_one(capsys):
    assert run(capsys, )[0] == EXIT_USAGE
    assert run(capsys, "eval")[0] == EXIT_USAGE
    assert run(capsys, "--bogus")[0] == EXIT_USAGE


def test_gen_is_deterministic_and_well_formed(capsys, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    for path in (a, b):
        code, _, _ = run(capsys, "gen", "--states", "4", "--alphabet", "2",
                         "--seed", "5", "--out", path)
        assert code == EXIT_OK
    assert open(a, "rb").read() == open(b, "rb").read()
    assert validate(document_to_wfa(loads(open(a).read()))) == []


def test_gen_no_normalize(capsys, tmp_path):
    path = str(tmp_path / "raw.json")
    code, _, _ = run(capsys, "gen", "--states", "3", "--alphabet", "2",
                     "--no-normalize", "--out", path)
    assert code == EXIT_OK
    assert validate(document_to_wfa(loads(open(path).read()))) == []


def test_maximize_deterministic_report(capsys, tmp_path, doubling_file):
    out = str(tmp_path / "report.json")
    code, _, _ = run(capsys, "maximize", doubling_file, "--k", "5",
                     "--pop", "20", "--gens", "30", "--seed", "0",
                     "--out", out)
    assert code == EXIT_OK
    rep = json.loads(open(out).read())
    assert rep["best"]["word"] == "aaaaa"
    assert rep["best"]["weight"] == "32"
    assert rep["wall_time"] is None and rep["evals_per_second"] is None
    assert rep["config"]["k"] == 5
    assert rep["generations"] == 30


def test_maximize_repeats_are_byte_identical_across_jobs(capsys, tmp_path,
                                                         doubling_file):
    files = [str(tmp_path / f"r{i}.json") for i in range(2)]
    for out, jobs in zip(files, ("1", "4")):
        code, _, _ = run(capsys, "maximize", doubling_file, "--k", "5",
                         "--pop", "15", "--gens", "10", "--seed", "7",
                         "--repeats", "3", "--jobs", jobs, "--out", out)
        assert code == EXIT_OK
    assert open(files[0], "rb").read() == open(files[1], "rb").read()
    payload = json.loads(open(files[0]).read())
    assert len(payload["runs"]) == 3
    assert payload["aggregate"]["runs"] == 3
    assert payload["aggregate"]["max_of_max"] == "32"
    seeds = [r["seed"] for r in payload["runs"]]
    assert seeds == [7, 8, 9]


def test_jobs_default_comes_from_the_environment(capsys, tmp_path,
                                                 doubling_file, monkeypatch):
    monkeypatch.setenv("WFAMAX_JOBS", "3")
    out = str(tmp_path / "env.json")
    code, _, _ = run(capsys, "maximize", doubling_file, "--k", "4",
                     "--pop", "10", "--gens", "5", "--repeats", "2",
                     "--out", out)
    assert code == EXIT_OK
    assert len(json.loads(open(out).read())["runs"]) == 2

    monkeypatch.setenv("WFAMAX_JOBS", "many")
    code, _, err = run(capsys, "maximize", doubling_file, "--k", "4",
                       "--pop", "10", "--gens", "5", "--repeats", "2")
    assert code == EXIT_USAGE
    assert "WFAMAX_JOBS" in err


def test_maximize_locate_reports_the_rank(capsys, tmp_path, doubling_file):
    out = str(tmp_path / "loc.json")
    code, _, _ = run(capsys, "maximize", doubling_file, "--k", "5",
                     "--pop", "20", "--gens", "30", "--locate", "--out", out)
    assert code == EXIT_OK
    rep = json.loads(open(out).read())
    assert rep["position"] == 1


def test_maximize_histogram_file(capsys, tmp_path, doubling_file):
    out = str(tmp_path / "rep.json")
    hist = str(tmp_path / "weights.csv")
    code, _, _ = run(capsys, "maximize", doubling_file, "--k", "3",
                     "--pop", "10", "--gens", "5", "--out", out,
                     "--hist", hist)
    assert code == EXIT_OK
    lines = open(hist).read().splitlines()
    assert lines  # nonempty, no header
    values = []
    for line in lines:
        rational, decimal = line.split(",")
        values.append(float(decimal))
        assert "." in decimal
    assert values == sorted(values)
    assert "2,2.0000" in lines


def test_maximize_invalid_config_exits_one(capsys, doubling_file):
    code, _, err = run(capsys, "maximize", doubling_file, "--pop", "1",
                       "--gens", "1")
    assert code == EXIT_USAGE
    assert "population" in err


def test_maximize_nbest_init(capsys, tmp_path, doubling_file):
    out = str(tmp_path / "nbest.json")
    code, _, _ = run(capsys, "maximize", doubling_file, "--k", "5",
                     "--pop", "10", "--gens", "1", "--init", "nbest",
                     "--out", out)
    assert code == EXIT_OK
    assert json.loads(open(out).read())["best"]["weight"] == "32"


def test_random_search_deterministic_report(capsys, tmp_path, doubling_file):
    outs = [str(tmp_path / f"rs{i}.json") for i in range(2)]
    for out in outs:
        code, _, _ = run(capsys, "random-search", doubling_file, "--k", "5",
                         "--max-evals", "3000", "--seed", "1", "--out", out)
        assert code == EXIT_OK
    assert open(outs[0], "rb").read() == open(outs[1], "rb").read()
    rep = json.loads(open(outs[0]).read())
    assert rep["best"]["weight"] == "32"
    assert rep["wall_time"] is None


def test_random_search_needs_a_stopping_rule(capsys, doubling_file):
    code, _, err = run(capsys, "random-search", doubling_file)
    assert code == EXIT_USAGE
    assert "max_evaluations or timeout" in err


def test_exhaustive_table(capsys, doubling_file):
    code, out, _ = run(capsys, "exhaustive", doubling_file, "--k", "3",
                       "--top", "3")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "1\taaa\t8\t8.0000",
        "2\taa\t4\t4.0000",
        "3\ta\t2\t2.0000",
    ]


def test_exhaustive_locate_prints_position(capsys, doubling_file):
    code, out, _ = run(capsys, "exhaustive", doubling_file, "--k", "3",
                       "--locate", "aa")
    assert code == EXIT_OK
    assert out == "position 2\n"


def test_exhaustive_budget_exit_code(capsys, paren_file):
    code, _, err = run(capsys, "exhaustive", paren_file, "--k", "10",
                       "--budget", "1000")
    assert code == EXIT_BUDGET
    assert "budget" in err


def test_distance_exact(capsys, tmp_path, doubling_file, tripling_file):
    out = str(tmp_path / "dist.json")
    code, _, _ = run(capsys, "distance", doubling_file, tripling_file,
                     "--exact", "--k", "3", "--out", out)
    assert code == EXIT_OK
    rep = json.loads(open(out).read())
    assert rep["value"] == "19"
    assert rep["witness"] == "aaa"
    assert rep["value_decimal"] == "19.0000"


def test_distance_estimate(capsys, tmp_path, doubling_file, tripling_file):
    out = str(tmp_path / "est.json")
    code, _, _ = run(capsys, "distance", doubling_file, tripling_file,
                     "--k", "3", "--pop", "20", "--gens", "10", "--out", out)
    assert code == EXIT_OK
    rep = json.loads(open(out).read())
    assert rep["estimate"] == "19"
    assert rep["max_ba"] == "19"
    assert rep["witnesses_ba"][0]["word"] == "aaa"


def test_distance_to_self_is_zero(capsys, tmp_path, doubling_file):
    out = str(tmp_path / "self.json")
    code, _, _ = run(capsys, "distance", doubling_file, doubling_file,
                     "--exact", "--k", "4", "--out", out)
    assert code == EXIT_OK
    assert json.loads(open(out).read())["value"] == "0"


def test_reduce_writes_document_and_sidecar(capsys, tmp_path, cycle_graph_file):
    out = str(tmp_path / "inst.json")
    code, _, _ = run(capsys, "reduce", cycle_graph_file, "--out", out)
    assert code == EXIT_OK
    meta = json.loads(open(out + ".meta.json").read())
    assert meta == {"k": 3, "target": "30", "mode": "equality"}
    code, text, _ = run(capsys, "eval", out, "0>1 1>2 2>0")
    assert code == EXIT_OK
    assert text == "30 (30.0000)\n"


def test_reduce_custom_meta_path(capsys, tmp_path, cycle_graph_file):
    out = str(tmp_path / "inst.json")
    meta = str(tmp_path / "inst.meta")
    code, _, _ = run(capsys, "reduce", cycle_graph_file, "--out", out,
                     "--meta", meta)
    assert code == EXIT_OK
    assert json.loads(open(meta).read())["target"] == "30"


def test_reduce_threshold_and_two_symbol_variants(capsys, tmp_path,
                                                  cycle_graph_file):
    out = str(tmp_path / "thr.json")
    code, _, _ = run(capsys, "reduce", cycle_graph_file, "--to-threshold",
                     "--out", out)
    assert code == EXIT_OK
    assert json.loads(open(out + ".meta.json").read()) == \
        {"k": 3, "target": "1", "mode": "threshold"}

    out2 = str(tmp_path / "two.json")
    code, _, _ = run(capsys, "reduce", cycle_graph_file, "--two-symbols",
                     "--out", out2)
    assert code == EXIT_OK
    meta = json.loads(open(out2 + ".meta.json").read())
    assert meta == {"k": 6, "target": "30", "mode": "equality"}
    doc = loads(open(out2).read())
    assert doc["alphabet"] == ["a", "b"]
    code, text, _ = run(capsys, "eval", out2, "aaabba")
    assert text == "30 (30.0000)\n"


def test_reduce_to_stdout(capsys, cycle_graph_file):
    code, out, _ = run(capsys, "reduce", cycle_graph_file)
    assert code == EXIT_OK
    assert '"format_version"' in out
    assert '"mode": "equality"' in out


def test_reduce_rejects_malformed_graphs(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("2\n0 7\n")
    code, _, err = run(capsys, "reduce", str(bad))
    assert code == EXIT_PARSE
    assert "out of range" in err
