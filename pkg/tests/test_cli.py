import json

import pytest

from bitrans import BiInstance, Hypergraph, UnsatisfiableError, main
from bitrans.cli import (
    format_hypergraph,
    format_instance,
    load_any,
    load_hypergraph,
    load_instance,
)
from bitrans.core import ParseError
from conftest import RUNNING_EXAMPLE_TEXT, RUNNING_FORMULA, make_running_example

PLAIN_TEXT = """\
# same shape as the red hypergraph of the running example
vertices: a b c d
edge: a d
edge: a b
edge: b c d
"""


class TestLoaders:
    def test_load_instance(self):
        assert load_instance(RUNNING_EXAMPLE_TEXT) == make_running_example()

    def test_load_hypergraph(self):
        h = load_hypergraph(PLAIN_TEXT)
        assert h.vertex_count == 4
        assert [e.members for e in h.edges] == [(0, 3), (0, 1), (1, 2, 3)]
        assert h.labels == ("a", "b", "c", "d")

    def test_load_any_dispatch(self):
        assert isinstance(load_any(RUNNING_EXAMPLE_TEXT), BiInstance)
        assert isinstance(load_any(PLAIN_TEXT), Hypergraph)

    def test_round_trip(self):
        inst = load_instance(RUNNING_EXAMPLE_TEXT)
        assert load_instance(format_instance(inst)) == inst
        h = load_hypergraph(PLAIN_TEXT)
        assert load_hypergraph(format_hypergraph(h)) == h
        assert format_instance(inst) == RUNNING_EXAMPLE_TEXT

    def test_unlabelled_instances_get_default_labels(self):
        inst = BiInstance.from_edges(2, [[0, 1]], [[0]])
        assert "vertices: v0 v1" in format_instance(inst)

    def test_empty_blue_edge_round_trips(self):
        text = "vertices: a b\nred: a\nblue:\n"
        inst = load_instance(text)
        assert inst.blue.has_empty_edge()
        assert format_instance(inst) == text

    @pytest.mark.parametrize(
        "text,error",
        [
            ("vertices: a a\n", ParseError),
            ("vertices: a\nedge: a a\n", ParseError),
            ("vertices: a\nedge: b\n", ParseError),
            ("vertices: a\nfoo: a\n", ParseError),
            ("just junk\n", ParseError),
            ("vertices: a\nred: a\nedge: a\n", ParseError),
            ("vertices: a\nred:\n", UnsatisfiableError),
            ("vertices: a\nedge:\n", UnsatisfiableError),
        ],
    )
    def test_rejects_malformed(self, text, error):
        with pytest.raises(error):
            if "edge" in text and "red" not in text:
                load_hypergraph(text)
            else:
                load_any(text)


@pytest.fixture
def running_example_file(tmp_path):
    p = tmp_path / "running_example.txt"
    p.write_text(RUNNING_EXAMPLE_TEXT)
    return str(p)


@pytest.fixture
def plain_file(tmp_path):
    p = tmp_path / "plain.txt"
    p.write_text(PLAIN_TEXT)
    return str(p)


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestCommands:
    def test_dualize_text(self, capsys, plain_file):
        code, out = run(capsys, "dualize", plain_file)
        assert code == 0
        assert out == "a b\na c\na d\nb d\n"

    def test_dualize_json_oracle(self, capsys, plain_file):
        code, out = run(capsys, "dualize", plain_file, "--json", "--oracle")
        assert code == 0
        assert json.loads(out) == [["a", "b"], ["a", "c"], ["a", "d"], ["b", "d"]]

    def test_btr_text(self, capsys, running_example_file):
        code, out = run(capsys, "btr", running_example_file)
        assert code == 0
        assert out == "u w | B1\n"

    def test_btr_json(self, capsys, running_example_file):
        code, out = run(capsys, "btr", running_example_file, "--format", "json")
        assert code == 0
        assert json.loads(out) == [{"s": ["u", "w"], "b": ["B1"]}]

    def test_bsets(self, capsys, running_example_file):
        code, out = run(capsys, "bsets", running_example_file, "--oracle")
        assert code == 0
        assert out == "B1\n"

    def test_to_formula(self, capsys, running_example_file):
        code, out = run(capsys, "to-formula", running_example_file)
        assert code == 0
        assert out.strip() == RUNNING_FORMULA

    def test_from_formula(self, capsys, tmp_path):
        p = tmp_path / "phi.txt"
        p.write_text(RUNNING_FORMULA + "\n")
        code, out = run(capsys, "from-formula", str(p))
        assert code == 0
        assert out.startswith("vertices: v0 v1 v2 v3 v4 v5 v6\n")
        assert out.count("red:") == 3 and out.count("blue:") == 3

    def test_check_instance(self, capsys, running_example_file):
        code, out = run(capsys, "check", running_example_file)
        assert code == 0
        assert out.count("ok:") == 3

    def test_check_hypergraph(self, capsys, plain_file):
        code, out = run(capsys, "check", plain_file)
        assert code == 0
        assert out.count("ok:") == 1

    def test_gen_writes_instance_and_solutions(self, capsys, tmp_path):
        cnf = tmp_path / "seed.cnf"
        cnf.write_text("p cnf 2 2\n1 0\n2 0\n")
        base = tmp_path / "out" / "g"
        code, out = run(capsys, "gen", str(cnf), "--variant", "dim2", "--output", str(base))
        assert code == 0
        inst_text = (tmp_path / "out" / "g.instance.txt").read_text()
        sols_text = (tmp_path / "out" / "g.solutions.txt").read_text()
        assert inst_text.startswith("vertices: x1 x2 nx1 nx2 y1 y2\n")
        assert sols_text == "y1 | B1 B3\ny2 | B2 B4\n"
        # the generated instance is loadable and passes its own check
        code, _ = run(capsys, "check", str(tmp_path / "out" / "g.instance.txt"))
        assert code == 0

    def test_gen_deg3(self, capsys, tmp_path):
        cnf = tmp_path / "seed.cnf"
        cnf.write_text("p cnf 2 3\n1 0\n-1 0\n2 0\n")
        base = tmp_path / "g3"
        code, _ = run(capsys, "gen", str(cnf), "--variant", "deg3", "--output", str(base))
        assert code == 0
        assert (tmp_path / "g3.instance.txt").exists()

    def test_bench_writes_csv_and_png(self, capsys, tmp_path):
        out_dir = tmp_path / "report"
        code, out = run(
            capsys,
            "bench",
            "--sizes", "5,6",
            "--edges", "4",
            "--per-size", "1",
            "--seed", "0",
            "--out-dir", str(out_dir),
        )
        assert code == 0
        assert out.splitlines()[0] == "n,edges,instances,berge_ms,brute_ms,solutions"
        assert len(out.splitlines()) == 3
        assert (out_dir / "bench.csv").exists()
        assert (out_dir / "bench.png").stat().st_size > 0

    def test_output_is_deterministic(self, capsys, running_example_file):
        _, first = run(capsys, "btr", running_example_file, "--json")
        _, second = run(capsys, "btr", running_example_file, "--json")
        assert first == second


class TestExitCodes:
    def test_usage_error(self, capsys):
        assert main([]) == 1
        assert main(["frobnicate"]) == 1
        assert main(["dualize"]) == 1

    def test_missing_file(self, capsys):
        assert main(["btr", "/nonexistent/path.txt"]) == 1

    def test_parse_error(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("vertices: a\nred: zz\n")
        assert main(["btr", str(p)]) == 1

    def test_unsatisfiable(self, capsys, tmp_path):
        p = tmp_path / "unsat.txt"
        p.write_text("vertices: a b\nred:\nblue: a\n")
        assert main(["btr", str(p)]) == 2

    def test_resource_cap(self, capsys, tmp_path):
        p = tmp_path / "big.txt"
        labels = [f"v{i}" for i in range(16)]
        edges = ["edge: " + " ".join(labels[k : k + 4]) for k in range(0, 16, 4)]
        p.write_text("vertices: " + " ".join(labels) + "\n" + "\n".join(edges) + "\n")
        assert main(["dualize", str(p), "--max-partials", "2"]) == 3

    def test_oracle_mismatch(self, capsys, plain_file, monkeypatch):
        import bitrans.cli as cli
        from bitrans import SolutionSet

        monkeypatch.setattr(cli, "brute_force_dualize", lambda h: SolutionSet())
        assert main(["dualize", plain_file, "--oracle"]) == 4

    def test_stderr_carries_the_message(self, capsys, tmp_path):
        p = tmp_path / "unsat.txt"
        p.write_text("vertices: a\nred:\n")
        main(["btr", str(p)])
        assert "empty red edge" in capsys.readouterr().err
