"""Command-line interface: exit codes, output formats, error paths."""

import json

import pytest

from kposet.cli import main

TWO_CHAIN = '{"k":2,"elements":[{"id":"b1","label":0},{"id":"b2","label":1}],"covers":[["b1","b2"]]}'
THREE_CHAIN = (
    '{"k":2,"elements":[{"id":"e1","label":0},{"id":"e2","label":1},{"id":"e3","label":0}],'
    '"covers":[["e1","e2"],["e2","e3"]]}'
)
EDGE_GRAPH = '{"vertices":["u","v"],"edges":[["u","v"]]}'
BOUNDED = (
    '{"k":3,"elements":[{"id":"pb","label":0},{"id":"x","label":1},{"id":"pt","label":2}],'
    '"covers":[["pb","x"],["x","pt"]]}'
)


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return {
        "two": write("two.json", TWO_CHAIN),
        "three": write("three.json", THREE_CHAIN),
        "edge": write("edge.json", EDGE_GRAPH),
        "bounded": write("bounded.json", BOUNDED),
        "bad": write("bad.json", "{nope"),
    }


class TestValidate:
    def test_prints_canonical_form(self, files, capsys):
        assert main(["validate", files["two"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["k"] == 2
        assert [e["id"] for e in data["elements"]] == ["b1", "b2"]

    def test_digraph_input(self, files, capsys):
        assert main(["validate", files["edge"]]) == 0
        assert json.loads(capsys.readouterr().out)["vertices"] == ["u", "v"]

    def test_parse_error(self, files, capsys):
        assert main(["validate", files["bad"]]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["validate", "no-such-file.json"]) == 2
        assert "error:" in capsys.readouterr().err


class TestHom:
    def test_yes(self, files, capsys):
        assert main(["hom", files["two"], files["three"]]) == 0
        assert capsys.readouterr().out == "yes\n"

    def test_no(self, files, capsys):
        assert main(["hom", files["three"], files["two"]]) == 1
        assert capsys.readouterr().out == "no\n"

    def test_witness(self, files, capsys):
        assert main(["hom", files["two"], files["three"], "--witness"]) == 0
        assert json.loads(capsys.readouterr().out) == {"b1": "e1", "b2": "e2"}

    def test_stdin_source(self, files, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(TWO_CHAIN))
        assert main(["hom", "-", files["three"]]) == 0


class TestCompareAndEquiv:
    def test_compare(self, files, capsys):
        assert main(["compare", files["two"], files["three"]]) == 0
        assert capsys.readouterr().out == "strictly-less\n"

    def test_equiv_yes(self, files, capsys):
        assert main(["equiv", files["two"], files["two"]]) == 0
        assert capsys.readouterr().out == "yes\n"

    def test_equiv_no(self, files, capsys):
        assert main(["equiv", files["two"], files["three"]]) == 1


class TestCore:
    def test_core_outputs_poset(self, files, capsys):
        assert main(["core", files["three"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["elements"]) == 3  # already a core

    def test_trace(self, files, capsys):
        assert main(["core", files["two"], "--trace"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["retractions"] == []
        assert data["core"]["k"] == 2

    def test_is_core(self, files, capsys):
        assert main(["is-core", files["three"]]) == 0
        assert capsys.readouterr().out == "yes\n"


class TestEncode:
    def test_poset_encoding(self, files, capsys):
        assert main(["encode", "--poset", files["edge"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["k"] == 2
        assert len(data["elements"]) == 6

    def test_lattice_encoding(self, files, capsys):
        assert main(["encode", "--lattice", files["edge"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["k"] == 3
        assert len(data["elements"]) == 8

    def test_dot_format(self, files, capsys):
        assert main(["encode", "--poset", files["edge"], "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("graph {")
        assert '"v:u:0" -- "v:u:1";' in out

    def test_requires_a_mode(self, files, capsys):
        with pytest.raises(SystemExit):
            main(["encode", files["edge"]])


class TestAlgebraCommands:
    def test_meet(self, files, capsys):
        assert main(["meet", files["two"], files["three"]]) == 0
        data = json.loads(capsys.readouterr().out)
        ids = [e["id"] for e in data["elements"]]
        assert "(b1,e1)" in ids

    def test_join(self, files, capsys):
        assert main(["join", files["two"], files["three"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["elements"]) == 5

    def test_meet_budget(self, files, capsys):
        assert main(["meet", files["two"], files["three"], "--budget", "1"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_budget_env_var(self, files, capsys, monkeypatch):
        monkeypatch.setenv("KPOSET_BUDGET", "1")
        assert main(["meet", files["two"], files["three"]]) == 2

    def test_glue(self, files, capsys):
        assert main(["glue", files["bounded"], files["bounded"], "--top-label", "2", "--bottom-label", "0"]) == 0
        data = json.loads(capsys.readouterr().out)
        ids = [e["id"] for e in data["elements"]]
        assert ids == ["0/x", "1/x", "bot", "top"]

    def test_glue_wrong_label(self, files, capsys):
        assert main(["glue", files["bounded"], files["bounded"], "--top-label", "1", "--bottom-label", "0"]) == 2

    def test_check_laws(self, files, capsys):
        assert main(["check-laws", files["two"], files["three"], files["two"]]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert all("PASS" in l for l in lines)
        assert lines[0] == "meet-below-left: PASS"


class TestChainCommands:
    def test_alt(self, files, capsys):
        assert main(["alt", files["three"]]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {"count": 3, "witness": ["e1", "e2", "e3"]}

    def test_two_lattice(self, files, capsys):
        assert main(["two-lattice", files["two"], files["three"]]) == 0
        assert capsys.readouterr().out == "yes\n"

    def test_two_lattice_rejects_non_lattice(self, files, tmp_path, capsys):
        anti = tmp_path / "anti.json"
        anti.write_text(
            '{"k":2,"elements":[{"id":"a","label":0},{"id":"b","label":1}],"covers":[]}'
        )
        assert main(["two-lattice", str(anti), files["two"]]) == 2

    def test_irreducible(self, files, capsys):
        assert main(["irreducible", files["three"]]) == 0
        assert capsys.readouterr().out == "yes\n"


class TestDot:
    def test_poset_file(self, files, capsys):
        assert main(["dot", files["two"]]) == 0
        assert '"b1" -- "b2";' in capsys.readouterr().out

    def test_digraph_file(self, files, capsys):
        assert main(["dot", files["edge"]]) == 0
        assert '"u" -> "v";' in capsys.readouterr().out
