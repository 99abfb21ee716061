import json
import subprocess
import sys

import pytest

from tolerances.cli import main
from tolerances.dot import lattice_hasse, quasiorder_hasse, tolerance_graph
from tolerances.fixtures import graph_t1, identity
from tolerances.lattice import boolean_lattice
from tolerances.relation import quasiorder_of
from tolerances.report import analyze

FILES = {
    "t1.txt": "universe: a b c d\nkind: tolerance\nedge: a b\nedge: a c\nedge: b c\nedge: c d\n",
    "t2.txt": "universe: a b c d\nkind: tolerance\nedge: a b\nedge: b c\nedge: c d\n",
    "t3.txt": "universe: a b c d e f g\nkind: covering\nset: a b d e\nset: b c d f\nset: d e f g\n",
    "q.txt": "universe: a b c\nkind: quasiorder\nedge: a b\nedge: b a\nedge: a c\nedge: b c\n",
    "l.txt": "universe: 0 x y 1\nkind: lattice\ncover: 0 x\ncover: 0 y\ncover: x 1\ncover: y 1\n",
    "bad_parse.txt": "universe: a b\nkind: nope\n",
    "bad_valid.txt": "universe: a b\nkind: tolerance\nedge: a z\n",
}


@pytest.fixture
def files(tmp_path):
    for name, text in FILES.items():
        (tmp_path / name).write_text(text, encoding="utf-8")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_t1(self, files, capsys):
        code, out, _ = run(capsys, "analyze", files / "t1.txt")
        assert code == 0
        rep = json.loads(out)
        assert rep["blocks"] == [["a", "b", "c"], ["c", "d"]]
        assert rep["quasiorder"]["minimal_elements"] == ["a", "b", "d"]
        assert rep["irredundant_covering"]["sets"] == [["a", "b", "c"], ["c", "d"]]
        assert rep["helly"]["helly2"] is True

    def test_t2(self, files, capsys):
        code, out, _ = run(capsys, "analyze", files / "t2.txt")
        rep = json.loads(out)
        assert code == 0
        assert rep["irredundant_covering"] is None
        assert rep["canonical_bases"] == [[["a", "b"], ["b", "c"], ["c", "d"]]]
        assert rep["theorems"]["main"] is None

    def test_t3_covering(self, files, capsys):
        code, out, _ = run(capsys, "analyze", files / "t3.txt", "--oracle")
        rep = json.loads(out)
        assert code == 0
        assert rep["covering"]["irredundant"] is True
        assert rep["covering"]["normal"] is False
        assert rep["covering"]["extra_blocks"] == [["b", "d", "e", "f"]]
        assert rep["helly"] == {"number": 3, "helly2": False, "by_triples": False}
        assert rep["oracle"]["normal_by_definition"] is False
        assert all(v for k, v in rep["oracle"].items() if k != "normal_by_definition")

    def test_key_order_is_fixed(self, files, capsys):
        _, out, _ = run(capsys, "analyze", files / "t1.txt")
        assert list(json.loads(out)) == [
            "universe",
            "neighborhoods",
            "blocks",
            "quasiorder",
            "covering",
            "irredundant_covering",
            "canonical_bases",
            "helly",
            "lattices",
            "theorems",
        ]

    def test_output_is_byte_identical(self, files, capsys):
        _, first, _ = run(capsys, "analyze", files / "t3.txt")
        _, second, _ = run(capsys, "analyze", files / "t3.txt")
        assert first == second

    def test_table(self, files, capsys):
        code, out, _ = run(capsys, "analyze", files / "t1.txt", "--report", "table")
        assert code == 0
        assert "blocks          {a,b,c} {c,d}" in out

    def test_parse_error_exit_2(self, files, capsys):
        code, _, err = run(capsys, "analyze", files / "bad_parse.txt")
        assert code == 2 and "parse error" in err

    def test_missing_file_exit_2(self, files, capsys):
        assert run(capsys, "analyze", files / "missing.txt")[0] == 2

    def test_validation_error_exit_3(self, files, capsys):
        assert run(capsys, "analyze", files / "bad_valid.txt")[0] == 3

    def test_wrong_kind_exit_3(self, files, capsys):
        assert run(capsys, "analyze", files / "q.txt")[0] == 3

    def test_block_cap_exit_4(self, files, capsys):
        code, out, err = run(capsys, "analyze", files / "t2.txt", "--block-cap", "2")
        assert code == 4 and out == "" and "resource limit" in err


class TestVerify:
    @pytest.mark.parametrize(
        "suite, n, count",
        [("characterization", 4, "n=4: 64"), ("helly", 4, "n=4: 355"), ("c1c2c3", 3, "n=3: 8")],
    )
    def test_examples(self, capsys, suite, n, count):
        code, out, _ = run(capsys, "verify", suite, "--n", n)
        assert code == 0
        assert "PASS" in out and count in out

    def test_random_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "blocks", "--n", 20, "--seed", 3)
        assert code == 0 and "PASS" in out

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "nonsense", "--n", 3)[0] == 3

    def test_bound_too_large(self, capsys):
        assert run(capsys, "verify", "helly", "--n", 9)[0] == 3


class TestExportDot:
    def test_identity_graph(self):
        dot = tolerance_graph(identity())
        assert dot.count("--") == 0
        assert '"a";' in dot and '"b";' in dot

    def test_t1_graph(self, files, capsys):
        code, out, _ = run(capsys, "export-dot", files / "t1.txt")
        assert code == 0
        assert out.count(" -- ") == 4
        assert out.count(";") == 8

    def test_t1_hasse(self):
        dot = quasiorder_hasse(quasiorder_of(graph_t1()))
        assert '"a" -> "b" [style=dashed, dir=none];' in dot
        for edge in ('"a" -> "c";', '"b" -> "c";', '"d" -> "c";'):
            assert edge in dot
        assert dot.count("->") == 4

    def test_quasiorder_file_hasse(self, files, capsys):
        code, out, _ = run(capsys, "export-dot", files / "q.txt", "--what", "hasse")
        assert code == 0 and "dashed" in out

    def test_lattice_file(self, files, capsys):
        code, out, _ = run(capsys, "export-dot", files / "l.txt", "--what", "lattice")
        assert code == 0 and out.count("->") == 4

    def test_definable_lattice_of_tolerance(self, files, capsys):
        code, out, _ = run(capsys, "export-dot", files / "t1.txt", "--what", "lattice")
        assert code == 0 and out.count("->") == 4

    def test_graph_of_lattice_rejected(self, files, capsys):
        assert run(capsys, "export-dot", files / "l.txt")[0] == 3

    def test_cube(self):
        assert lattice_hasse(boolean_lattice(3)).count("->") == 12


def test_analyze_is_pure():
    assert analyze(graph_t1()) == analyze(graph_t1())


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "tolerances", "analyze", str(files / "t1.txt"), "--report", "table"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "helly number    2" in proc.stdout
