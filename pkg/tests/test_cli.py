import pytest
from hypothesis import given, settings, strategies as st

from rainbowlab.cli import format_coloring, main, parse_coloring
from rainbowlab.colorings import Coloring, canonicalize
from rainbowlab.construct import construct_k2n, monochrome
from rainbowlab.errors import StructuralError
from rainbowlab.graphs import GraphSpec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--k2n", "3")
    assert code == 0 and out.strip() == "colors: 5"
    path = tmp_path / "k24.txt"
    code, out, _ = run(capsys, "construct", "--k2n", "4", "-o", str(path))
    assert code == 0 and out.strip() == "colors: 6"
    assert parse_coloring(path.read_text()) == construct_k2n(4)
    assert path.read_text().splitlines()[:2] == ["graph bipartite2 4", "u 0 0"]


def test_construct_bad_n(capsys):
    code, _, err = run(capsys, "construct", "--k2n", "1")
    assert code == 1 and "error" in err


def test_verify_monochrome_k5(capsys, tmp_path):
    path = tmp_path / "mono.txt"
    path.write_text(format_coloring(monochrome(GraphSpec.complete(5))))
    code, out, _ = run(capsys, "verify", "--coloring", str(path), "--constraint", "c59")
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "fail c59"
    assert len(lines[1].split()[1:]) == 10
    assert "observed: 1" in out and "required: 9" in out


def test_verify_pass_and_stats(capsys, tmp_path):
    path = tmp_path / "k2n.txt"
    path.write_text(format_coloring(construct_k2n(10)))
    code, out, _ = run(capsys, "verify", "--coloring", str(path), "--constraint", "b235",
                       "--stats")
    assert code == 0
    assert out.splitlines() == ["shared: 5 symdiff: 10 union: 15 eq1: true eq2: true",
                                "pass b235"]


def test_verify_parse_errors(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("graph complete 3\n0 1 0\n0 1 1\n1 2 0\n")
    assert run(capsys, "verify", "--coloring", str(path), "--constraint", "pc3")[0] == 1
    code, _, err = run(capsys, "verify", "--coloring", str(tmp_path / "nope"),
                       "--constraint", "pc3")
    assert code == 1 and "cannot read" in err
    path.write_text("graph complete 3\n0 1 0\n1 2 0\n")
    assert run(capsys, "verify", "--coloring", str(path), "--constraint", "c59x")[0] == 1


def test_search(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--graph", "bipartite2:4", "--constraint", "b235",
                       "--engine", "exhaustive")
    assert code == 0 and out.splitlines()[0] == "min_colors: 6 proven: true"
    path = tmp_path / "opt.txt"
    code, out, _ = run(capsys, "search", "--graph", "complete:5", "--constraint", "c59",
                       "--threads", "1", "-o", str(path))
    assert code == 0 and out.startswith("min_colors: 9 proven: true")
    assert parse_coloring(path.read_text()).num_colors == 9


def test_search_budget_exit(capsys):
    code, out, _ = run(capsys, "search", "--graph", "complete:7", "--constraint", "c59",
                       "--max-nodes", "100", "--threads", "1")
    assert code == 3 and "proven: false" in out


def test_threads_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("RAINBOWLAB_THREADS", "2")
    code, out, _ = run(capsys, "search", "--graph", "complete:6", "--constraint", "c59")
    assert code == 0 and out.startswith("min_colors: 12 proven: true")
    monkeypatch.setenv("RAINBOWLAB_THREADS", "many")
    assert run(capsys, "search", "--graph", "complete:5", "--constraint", "c59")[0] == 1


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["search", "--graph", "complete:5"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    assert run(capsys, "search", "--graph", "star:5", "--constraint", "c59")[0] == 1
    assert run(capsys, "search", "--graph", "complete:5", "--constraint", "b235")[0] == 1


def test_census_table_and_csv(capsys):
    code, out, _ = run(capsys, "census", "--graph", "bipartite2:3", "--constraints", "b235,pc3")
    assert code == 0
    assert "partitions: 203" in out and "counterexample pc3 !=> b235" in out
    code, out, _ = run(capsys, "census", "--graph", "bipartite2:3", "--constraints", "b235,pc3",
                       "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "a,b,pass_a,pass_b,total,a_subset_b,counterexample"
    rows = {(r[0], r[1]): r for r in (line.split(",") for line in lines[1:])}
    assert rows[("b235", "pc3")][5] == "1" and rows[("b235", "pc3")][6] == ""
    assert rows[("pc3", "b235")][5] == "0" and rows[("pc3", "b235")][6]
    assert all(len(r) == 7 for r in rows.values())


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--graph", "complete:5", "--from", "c59", "--to", "pc3")
    assert code == 0 and out.strip() == "implication holds"
    code, out, _ = run(capsys, "scan", "--graph", "bipartite2:4", "--from", "b235", "--to", "b247")
    assert code == 2
    cex = parse_coloring(out)
    assert cex.spec == GraphSpec.bipartite2(4)


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--from", "5", "--to", "10", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    assert lines[0].startswith("n,claimed,claimed_ceil,eq3_root,eq3_ceil")
    assert lines[1].split(",")[:3] == ["5", "8/1", "8"]
    assert lines[6].split(",")[1:5] == ["87/4", "22", "15.000000000", "15"]
    assert lines[6].split(",")[-1] == "1"
    code, out, _ = run(capsys, "bounds", "--from", "5", "--to", "6")
    assert code == 0 and "43/4" in out
    assert run(capsys, "bounds", "--from", "6", "--to", "5")[0] == 1


def test_output_is_deterministic(capsys):
    first = run(capsys, "census", "--graph", "bipartite2:3", "--constraints", "b235,pc3,sfe3")
    second = run(capsys, "census", "--graph", "bipartite2:3", "--constraints", "b235,pc3,sfe3")
    assert first == second


def test_parse_is_order_insensitive_and_ignores_comments():
    text = "# a comment\n\ngraph bipartite2 2\nv 1 0  # tail\n0 u 1\nu 1 2\n\nv 0 3\n"
    c = parse_coloring(text)
    assert c.colors == (1, 2, 3, 0)
    with pytest.raises(StructuralError):
        parse_coloring("graph bipartite2 2\nu 0 1\n")
    with pytest.raises(StructuralError):
        parse_coloring("graph wheel 2\n")
    with pytest.raises(StructuralError):
        parse_coloring("")


@settings(max_examples=200)
@given(st.sampled_from([GraphSpec.complete(5), GraphSpec.complete(6), GraphSpec.bipartite2(4)]),
       st.data())
def test_roundtrip(spec, data):
    colors = data.draw(st.lists(st.integers(0, 9), min_size=spec.edge_count,
                                max_size=spec.edge_count))
    c = canonicalize(Coloring(spec, colors))
    assert parse_coloring(format_coloring(c)) == c
