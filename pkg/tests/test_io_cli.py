import json

import pytest

from mcgraph import cli
from mcgraph import io as gio
from mcgraph.families import NetworkSpec, cycle_graph, generate, path_graph
from mcgraph.mc import EdgeColoring
from mcgraph.products import ProductGraph


class TestGraphJson:
    @pytest.mark.parametrize(
        "fam,params",
        [("petersen", ()), ("grid", (3, 2)), ("hl", (4,)), ("path", (4,))],
    )
    def test_roundtrip_byte_identical(self, fam, params):
        built = generate(NetworkSpec(fam, params))
        text = gio.dumps(gio.graph_to_obj(built))
        again = gio.dumps(gio.graph_to_obj(gio.loads_graph(text)))
        assert text == again

    def test_product_metadata_survives(self):
        built = generate(NetworkSpec("grid", (3, 2)))
        loaded = gio.loads_graph(gio.dumps(gio.graph_to_obj(built)))
        assert isinstance(loaded, ProductGraph)
        assert loaded.kind.value == "cartesian"
        assert loaded.factor_sizes == (3, 2)

    def test_inconsistent_product_metadata_rejected(self):
        with pytest.raises(ValueError, match="inconsistent"):
            gio.graph_from_obj(
                {"n": 4, "edges": [[0, 1]], "product": {"kind": "cartesian", "factors": [3, 2]}}
            )

    def test_edge_list_format(self):
        g = gio.loads_graph("4 3\n0 1\n1 2\n2 3\n")
        assert g.edges == path_graph(4).edges

    def test_edge_list_bad_count(self):
        with pytest.raises(ValueError, match="expected 2"):
            gio.loads_graph("3 2\n0 1\n")


class TestColoringJson:
    def test_roundtrip(self):
        g = cycle_graph(4)
        c = EdgeColoring(g, (0, 0, 0, 1))
        obj = json.loads(gio.dumps(gio.coloring_to_obj(c)))
        again = gio.coloring_from_obj(g, obj)
        assert again.colors == c.colors

    def test_mismatched_edges_rejected(self):
        g = cycle_graph(4)
        with pytest.raises(ValueError, match="does not match"):
            gio.coloring_from_obj(g, {"edges": [[0, 1]], "colors": [0]})


@pytest.fixture()
def workdir(tmp_path):
    return tmp_path


def run_cli(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCli:
    def test_gen_petersen(self, workdir, capsys):
        out_path = workdir / "p.json"
        code, _, _ = run_cli(capsys, "gen", "petersen", "-o", str(out_path))
        assert code == 0
        obj = json.loads(out_path.read_text())
        assert obj["n"] == 10 and len(obj["edges"]) == 15

    def test_gen_grid_counts(self, workdir, capsys):
        code, out, _ = run_cli(capsys, "gen", "grid", "3", "2")
        assert code == 0
        obj = json.loads(out)
        assert obj["n"] == 6 and len(obj["edges"]) == 7

    def test_gen_torus_too_small(self, capsys):
        code, _, err = run_cli(capsys, "gen", "torus", "2", "3")
        assert code == 2
        assert "at least three" in err

    def test_product_lex_petersen(self, workdir, capsys):
        p2 = workdir / "p2.json"
        pet = workdir / "pet.json"
        run_cli(capsys, "gen", "path", "2", "-o", str(p2))
        run_cli(capsys, "gen", "petersen", "-o", str(pet))
        code, out, _ = run_cli(capsys, "product", "lex", str(p2), str(pet))
        assert code == 0
        obj = json.loads(out)
        assert obj["n"] == 20 and len(obj["edges"]) == 130

    def test_product_direct_flags_disconnected(self, workdir, capsys):
        p2 = workdir / "p2.json"
        run_cli(capsys, "gen", "path", "2", "-o", str(p2))
        code, out, _ = run_cli(capsys, "product", "direct", str(p2), str(p2))
        assert code == 0
        assert json.loads(out)["connected"] is False

    def test_mc_exact_c4_with_witness_checks(self, workdir, capsys):
        c4 = workdir / "c4.json"
        wit = workdir / "w.json"
        run_cli(capsys, "gen", "cycle", "4", "-o", str(c4))
        code, out, _ = run_cli(capsys, "mc", "exact", str(c4), "--witness", str(wit))
        assert code == 0
        assert json.loads(out)["value"] == 2
        code, out, _ = run_cli(capsys, "check", str(c4), str(wit))
        assert code == 0 and out.strip() == "VALID 2 colors"

    def test_check_invalid_pair(self, workdir, capsys):
        p3 = workdir / "p3.json"
        bad = workdir / "bad.json"
        run_cli(capsys, "gen", "path", "3", "-o", str(p3))
        bad.write_text(json.dumps({"edges": [[0, 1], [1, 2]], "colors": [0, 1]}))
        code, out, _ = run_cli(capsys, "check", str(p3), str(bad))
        assert code == 1
        assert out.strip() == "INVALID pair (0, 2)"

    def test_check_mismatch_is_usage_error(self, workdir, capsys):
        p3 = workdir / "p3.json"
        bad = workdir / "bad.json"
        run_cli(capsys, "gen", "path", "3", "-o", str(p3))
        bad.write_text(json.dumps({"edges": [[0, 1]], "colors": [0]}))
        code, _, err = run_cli(capsys, "check", str(p3), str(bad))
        assert code == 2 and "match" in err

    def test_mc_bounds_hl4(self, workdir, capsys):
        hl4 = workdir / "hl4.json"
        run_cli(capsys, "gen", "hl", "4", "-o", str(hl4))
        code, out, _ = run_cli(capsys, "mc", "bounds", str(hl4))
        assert code == 0
        obj = json.loads(out)
        assert (obj["lower"], obj["upper"]) == (112, 121)

    def test_mc_certify_petersen(self, workdir, capsys):
        pet = workdir / "pet.json"
        run_cli(capsys, "gen", "petersen", "-o", str(pet))
        code, out, _ = run_cli(capsys, "mc", "certify", str(pet))
        assert code == 0
        obj = json.loads(out)
        assert "b" in obj["conditions"] and obj["value"] == 7

    def test_mc_exact_budget_exhaustion(self, workdir, capsys, monkeypatch):
        hl4 = workdir / "hl4.json"
        run_cli(capsys, "gen", "hl", "4", "-o", str(hl4))
        monkeypatch.setenv("MCGRAPH_BUDGET", "10")
        code, out, _ = run_cli(capsys, "mc", "exact", str(hl4))
        assert code == 3
        obj = json.loads(out)
        assert obj["method"] == "bounds-only" and obj["value"] is None

    def test_mc_exact_disconnected_is_zero_exit_zero(self, workdir, capsys):
        path = workdir / "g.json"
        path.write_text('{"n":4,"edges":[[0,1],[2,3]]}')
        code, out, _ = run_cli(capsys, "mc", "exact", str(path))
        assert code == 0 and json.loads(out)["value"] == 0

    def test_report_csv_and_json(self, capsys):
        code, out, _ = run_cli(capsys, "report")
        assert code == 0
        assert out.splitlines()[0].startswith("family,params,proposition")
        code, out, _ = run_cli(capsys, "report", "--format", "json")
        rows = json.loads(out)
        assert code == 0 and all(row["agree"] for row in rows)

    def test_verify_propositions(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "propositions")
        assert code == 0
        assert "PASS propositions.proposition_agreement" in out

    def test_gen_roundtrip_reserialization(self, workdir, capsys):
        out_path = workdir / "g.json"
        run_cli(capsys, "gen", "grid", "3", "2", "-o", str(out_path))
        text = out_path.read_text()
        loaded = gio.loads_graph(text)
        assert gio.dumps(gio.graph_to_obj(loaded)) + "\n" == text

    def test_pretty_flag(self, capsys):
        code, out, _ = run_cli(capsys, "--pretty", "gen", "path", "3")
        assert code == 0 and out.startswith("{\n")
