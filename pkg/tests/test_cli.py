import json
import re

import pytest

from fraccover.cli import main, render, run_command
from fraccover.graph import complement, complete, conormal_product, cycle, find_isomorphism, kneser, petersen
from fraccover.graphspec import EdgeListError, GraphSpecError, parse_graph_spec, read_edge_list, write_edge_list

RATIONAL = re.compile(r"^-?\d+/[1-9]\d*$")


class TestGraphSpec:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("K6", complete(6)),
            ("C5", cycle(5)),
            ("petersen", petersen()),
            ("kneser:6:2", kneser(6, 2)),
            ("complement(C5)", complement(cycle(5))),
            ("conormal(C5, C5)", conormal_product(cycle(5), cycle(5))),
            (" conormal( K2 ,complement(K3) ) ", conormal_product(complete(2), complement(complete(3)))),
        ],
    )
    def test_expressions(self, text, expected):
        assert parse_graph_spec(text) == expected

    def test_petersen_is_kneser(self):
        assert find_isomorphism(parse_graph_spec("petersen"), parse_graph_spec("kneser:5:2")) is not None

    @pytest.mark.parametrize(
        "text,offset",
        [("X5", 0), ("K", 1), ("C5)", 2), ("conormal(C5 C5)", 12), ("kneser:5", 8), ("C2", 0), ("kneser:2:3", 0), ("", 0)],
    )
    def test_errors_carry_offset(self, text, offset):
        with pytest.raises(GraphSpecError) as info:
            parse_graph_spec(text)
        assert info.value.offset == offset

    def test_edge_list_round_trip(self, tmp_path):
        path = tmp_path / "g.txt"
        g = kneser(6, 2)
        write_edge_list(g, path)
        assert read_edge_list(path) == g
        assert parse_graph_spec(f"conormal(file:{path},K1)") == g

    def test_edge_list_comments(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("# triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n")
        assert read_edge_list(path) == complete(3)

    @pytest.mark.parametrize(
        "body",
        ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 3\n", "3 1\n1 1\n"],
        ids=["empty", "short-header", "count", "token", "range", "loop"],
    )
    def test_edge_list_errors(self, tmp_path, body):
        path = tmp_path / "bad.txt"
        path.write_text(body)
        with pytest.raises(EdgeListError):
            read_edge_list(path)

    def test_missing_file(self):
        with pytest.raises(GraphSpecError):
            parse_graph_spec("file:/nonexistent/graph.txt")


def _rationals(obj):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k in ("cover", "dual_value", "chi_f", "weight", "source_cover", "target_cover"):
                yield v
            else:
                yield from _rationals(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _rationals(v)


class TestCommands:
    def test_cover_complete(self):
        doc, code = run_command(["cover", "--graph", "K6", "--family", "cliquefree", "--k", "2"])
        assert code == 0 and doc["result"]["cover"] == "3/1"
        assert doc["result"]["dual_value"] == "3/1"

    def test_cover_members(self):
        doc, code = run_command(["cover", "--graph", "C5", "--family", "independent", "--members"])
        assert code == 0 and doc["result"]["cover"] == "5/2"
        assert len(doc["result"]["dual"]) == 5

    def test_sequence_c5c5_column(self):
        doc, code = run_command(["sequence", "--graph", "conormal(C5,C5)", "--strategy", "colgen"])
        assert code == 0
        assert doc["result"]["k_times_cover"] == ["25/4", "5/1", "75/14", "5/1", "5/1"]
        assert doc["result"]["classification"] == "NonMonotonic"
        assert "k*cover: 25/4, 5/1, 75/14, 5/1, 5/1" in render(doc)

    def test_sequence_colourable(self):
        doc, code = run_command(["sequence", "--graph", "C5", "--class", "C"])
        assert code == 0 and doc["result"]["cover"] == ["5/2", "5/4", "1/1"]
        assert doc["graph"]["chi"] == 3

    def test_beta(self):
        doc, code = run_command(["beta", "--graph", "kneser:6:2", "--k", "2", "--members"])
        assert code == 0 and doc["result"]["beta"] == 10 and len(doc["result"]["witness"]) == 10
        assert "beta: 10" in render(doc)

    def test_chi_f(self):
        doc, code = run_command(["chi-f", "--graph", "petersen"])
        assert code == 0 and doc["result"]["chi_f"] == "5/2"

    def test_hom(self):
        doc, code = run_command(["hom", "--graph", "C5", "--target", "kneser:5:2"])
        assert code == 0 and doc["checks"]["bound_holds"]
        doc, code = run_command(["hom", "--graph", "K4", "--target", "K3"])
        assert code == 0 and not doc["result"][0]["applicable"]

    @pytest.mark.parametrize(
        "argv,value",
        [
            (["--kind", "n-colorable", "--n", "5", "--k", "2"], "5/2"),
            (["--kind", "ab-colorable", "--a", "10", "--b", "2", "--k", "2"], "45/17"),
            (["--kind", "kneser-beta", "--a", "12", "--b", "3", "--k", "2"], "100"),
        ],
    )
    def test_bounds(self, argv, value):
        doc, code = run_command(["bounds", *argv])
        assert code == 0 and doc["result"]["value"] == value

    def test_rational_format(self):
        docs = [
            run_command(["cover", "--graph", "kneser:6:2", "--family", "colorable", "--k", "2", "--members"])[0],
            run_command(["sequence", "--graph", "C7"])[0],
            run_command(["hom", "--graph", "C4", "--target", "K2"])[0],
        ]
        values = [v for doc in docs for v in _rationals(doc)]
        values = [x for v in values for x in (v if isinstance(v, list) else [v])]
        assert values and all(RATIONAL.match(v) for v in values)

    def test_paper_check_fast(self, capsys):
        assert main(["paper-check", "--fast"]) == 0
        out = capsys.readouterr().out
        assert "[PASS]" in out and "MISMATCH" not in out


class TestOutputAndExitCodes:
    @pytest.mark.parametrize("as_json", [False, True])
    def test_deterministic(self, capsys, as_json):
        argv = ["cover", "--graph", "kneser:6:2", "--family", "cliquefree", "--k", "2", "--members"]
        argv += ["--json"] if as_json else []
        outputs = []
        for _ in range(2):
            assert main(argv) == 0
            outputs.append(capsys.readouterr().out.encode())
        assert outputs[0] == outputs[1]
        if as_json:
            assert json.loads(outputs[0])["result"]["cover"] == "3/2"

    def test_usage_error(self, capsys):
        assert main(["cover", "--graph", "C5"]) == 2
        assert main(["nonsense"]) == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["cover", "--graph", "Q5", "--family", "independent"],
            ["cover", "--graph", "C5", "--family", "cliquefree"],
            ["cover", "--graph", "C5", "--family", "colorable", "--k", "2", "--strategy", "colgen"],
            ["bounds", "--kind", "kneser-beta", "--a", "6", "--b", "2", "--k", "3"],
            ["bounds", "--kind", "ab-colorable", "--k", "2"],
        ],
    )
    def test_failure_exit_one(self, capsys, argv):
        assert main(argv) == 1
        captured = capsys.readouterr()
        assert captured.out == "" and "error:" in captured.err

    def test_module_entry(self):
        import subprocess
        import sys

        proc = subprocess.run([sys.executable, "-m", "fraccover", "chi-f", "--graph", "C5", "--json"], capture_output=True, text=True)
        assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["chi_f"] == "5/2"
