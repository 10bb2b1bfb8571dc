import json

import pytest

from epgc.cli import main
from epgc.groups import format_cayley_table, make_dihedral


class TestShow:
    def test_q8_summary(self, capsys):
        assert main(["show", "--group", "Q8"]) == 0
        out = capsys.readouterr().out
        assert "maximal cyclic subgroups: 3" in out
        assert "[4, 4, 4]" in out
        assert "{1, -1}" in out

    def test_json(self, capsys):
        assert main(["show", "--group", "Z2xZ6", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["maximal_cyclic_sizes"] == [6, 6, 6]

    def test_unknown_group_usage_error(self, capsys):
        assert main(["show", "--group", "XYZ"]) == 2
        assert "error" in capsys.readouterr().err


class TestBuild:
    def test_d8_reduced_dot(self, capsys):
        assert main(["build", "--group", "D8", "--graph", "reduced", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        # 7 non-isolated vertices (only the identity is isolated in D8)
        assert out.count("label=") == 7
        assert out.count(" -- ") == 18

    def test_complement_text(self, capsys):
        assert main(["build", "--group", "Q8", "--graph", "complement", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "8"

    def test_json_edges(self, capsys):
        assert main(["build", "--group", "Z2xZ2", "--graph", "epg", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["n"] == 4
        assert len(data["edges"]) == 3


class TestInvariants:
    def test_s3_text(self, capsys):
        assert main(["invariants", "--group", "S3"]) == 0
        out = capsys.readouterr().out
        assert "girth: 3" in out
        assert "chromatic_number: 4" in out

    def test_cyclic_json(self, capsys):
        assert main(["invariants", "--group", "Z9", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["complement"]["girth"] == "inf"
        assert data["reduced"]["vertices"] == 0


class TestClassify:
    def test_d8(self, capsys):
        assert main(["classify", "--group", "D8"]) == 0
        out = capsys.readouterr().out
        assert "projective: True" in out
        assert "toroidal: True" in out

    def test_json(self, capsys):
        assert main(["classify", "--group", "Z2xZ2", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["outerplanar"] is True
        assert data["genus_upper"] == 0


class TestVerify:
    def test_all_claims_exit_zero(self, capsys):
        assert main(["verify", "--max-order", "15", "--all"]) == 0
        out = capsys.readouterr().out
        assert "8 reports: 8 ok, 0 failed" in out

    def test_json_has_eight_reports(self, capsys):
        assert main(["verify", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data) == 8
        statuses = {r["claim_id"]: r["status"] for r in data}
        assert statuses["surface-classification"] == "PARTIAL"

    def test_single_claim(self, capsys):
        assert main(["verify", "--claim", "no-two-maximal"]) == 0
        out = capsys.readouterr().out
        assert "1 reports: 1 ok, 0 failed" in out

    def test_unknown_claim_usage_error(self, capsys):
        assert main(["verify", "--claim", "bogus"]) == 2

    def test_failing_claim_exits_one(self, capsys, monkeypatch):
        import epgc.verify as verify_mod

        fixtures = verify_mod.load_fixtures()
        fixtures["maximal_cyclic_table"]["expected"]["Q8"] = [8]
        monkeypatch.setattr(verify_mod, "load_fixtures", lambda: fixtures)
        assert main(["verify", "--claim", "maximal-cyclic-table"]) == 1
        out = capsys.readouterr().out
        assert "[FAIL] maximal-cyclic-table" in out


class TestList:
    def test_order_12_rows(self, capsys):
        assert main(["list", "--max-order", "12"]) == 0
        out = capsys.readouterr().out
        assert "Q12" in out and "A4" in out
        assert len([ln for ln in out.splitlines() if ln and not ln.startswith(("name", "note"))]) == 24


class TestIngest:
    def test_round_trip(self, tmp_path, capsys):
        path = tmp_path / "d8.txt"
        path.write_text(format_cayley_table(make_dihedral(4)), encoding="utf-8")
        assert main(["ingest", "--file", str(path)]) == 0
        out = capsys.readouterr().out
        assert "valid group of order 8" in out
        assert "isomorphic to catalog group D8" in out

    def test_rejects_non_group(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("2\n0 1\n1 1\n", encoding="utf-8")
        assert main(["ingest", "--file", str(path)]) == 2
        assert "repeats" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["ingest", "--file", "/nonexistent/x.txt"]) == 2

    def test_json_output(self, tmp_path, capsys):
        path = tmp_path / "z6.txt"
        from epgc.groups import make_cyclic

        path.write_text(format_cayley_table(make_cyclic(6)), encoding="utf-8")
        assert main(["ingest", "--file", str(path), "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["catalog_match"] == "Z6"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
