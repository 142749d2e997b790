"""End-to-end tests of the command-line front end."""

import json

import pytest

from cli.main import EXIT_DATAERR, EXIT_NOINPUT, EXIT_USAGE, main
from src.ingestion.facet_io import read_facets


@pytest.fixture
def octahedron_file(tmp_path):
    path = tmp_path / "octahedron.txt"
    assert main(["generate", "--family", "cross", "--d", "2", "-o", str(path)]) == 0
    return path


class TestGenerate:

    def test_m3_boundary(self, tmp_path):
        path = tmp_path / "m3.txt"
        assert main(["-q", "generate", "--family", "M", "--d", "3", "-o", str(path)]) == 0
        X = read_facets(path)
        assert X.n_vertices == 29
        assert len(X) == 377

    def test_filling_to_stdout(self, capsys):
        assert main(["-q", "generate", "--family", "simplex", "--d", "2", "--part", "filling"]) == 0
        out = capsys.readouterr().out
        assert "0 1 2" in out
        assert out.startswith("# family=simplex")

    def test_bundle(self, tmp_path):
        path = tmp_path / "torus.txt"
        assert main(["-q", "generate", "--family", "bundle", "--d", "2", "--m", "7", "-o", str(path)]) == 0
        assert read_facets(path).n_vertices == 7

    def test_dimension_out_of_range(self):
        assert main(["-q", "generate", "--family", "M", "--d", "1"]) == EXIT_USAGE

    def test_inadmissible_bundle(self):
        args = ["-q", "generate", "--family", "bundle", "--d", "3", "--m", "9", "--sigma", "2,1,3,4"]
        assert main(args) == EXIT_USAGE

    def test_overlapping_bundle_is_a_usage_error(self):
        args = ["-q", "generate", "--family", "bundle", "--d", "3", "--m", "2"]
        assert main(args) == EXIT_USAGE

    def test_bundle_needs_m(self):
        assert main(["-q", "generate", "--family", "bundle", "--d", "2"]) == EXIT_USAGE

    def test_bad_argument_exits_with_usage_code(self):
        with pytest.raises(SystemExit) as info:
            main(["generate", "--family", "Q", "--d", "2"])
        assert info.value.code == EXIT_USAGE


class TestVerify:

    def test_octahedron_tight_is_inconclusive(self, octahedron_file, capsys):
        capsys.readouterr()
        assert main(["-q", "verify", str(octahedron_file), "--check", "tight"]) == 2
        data = json.loads(capsys.readouterr().out)
        assert data["verdict"] == "INCONCLUSIVE"
        assert data["subject"].startswith("sha256:")

    def test_json_output_file(self, octahedron_file, tmp_path):
        out = tmp_path / "cert.json"
        code = main(["-q", "verify", str(octahedron_file), "--check", "betti", "--expect-betti", "1,0,1",
                     "--json", str(out)])
        assert code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["checks"][0]["witness"]["betti"] == [1, 0, 1]

    def test_expectation_mismatch_fails(self, octahedron_file):
        args = ["-q", "verify", str(octahedron_file), "--check", "orientability", "--expect-orientable", "no"]
        assert main(args) == 1

    def test_row0_adds_link_order(self, tmp_path, capsys):
        path = tmp_path / "m2.txt"
        main(["-q", "generate", "--family", "M", "--d", "2", "-o", str(path)])
        capsys.readouterr()
        assert main(["-q", "verify", str(path), "--expect-row0", "M"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert [c["name"] for c in data["checks"]] == ["link-order"]

    def test_all_on_a_tight_surface(self, tmp_path, capsys):
        path = tmp_path / "m2.txt"
        main(["-q", "generate", "--family", "M", "--d", "2", "-o", str(path)])
        capsys.readouterr()
        assert main(["-q", "verify", str(path), "--all", "--n-cyclic", "19", "--samples", "50"]) == 0
        data = json.loads(capsys.readouterr().out)
        names = [c["name"] for c in data["checks"]]
        assert "tight-neighborly" not in names
        assert "tight" in names

    def test_nothing_to_verify(self, octahedron_file):
        assert main(["-q", "verify", str(octahedron_file)]) == EXIT_USAGE

    def test_parse_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 1 2\n0 1 x\n", encoding="utf-8")
        assert main(["-q", "verify", str(path), "--check", "betti"]) == EXIT_DATAERR

    def test_missing_file(self, tmp_path):
        assert main(["-q", "verify", str(tmp_path / "absent.txt"), "--check", "betti"]) == EXIT_NOINPUT


class TestTableAndReplay:

    def test_table_text(self, capsys):
        assert main(["-q", "table", "--dims", "3"]) == 0
        out = capsys.readouterr().out
        assert "N^3_29" in out
        assert "verified" in out

    def test_table_rejects_surfaces(self):
        assert main(["-q", "table", "--dims", "2"]) == EXIT_USAGE

    def test_replay_first_step(self, capsys):
        assert main(["-q", "replay", "--stop-after", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["parameters"]["stop_after"] == 1
