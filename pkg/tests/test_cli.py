import json

import pytest

from levicover import gen_levi, graph_hash, parse_graph, write_graph
from levicover.cli import main
from levicover.schemas import (validate_bounds_report, validate_family,
                               validate_run_report)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_writes_canonical_file(self, tmp_path, capsys):
        path = tmp_path / "fano.g"
        code, out, _ = run(capsys, "gen", "--q", "2", "--out", str(path))
        assert code == 0
        assert out.strip() == "14 21 7"
        text = path.read_text()
        assert text.startswith("14 21 7\n")
        assert parse_graph(text) == gen_levi(2)

    def test_q3_summary(self, tmp_path, capsys):
        path = tmp_path / "g3.g"
        code, out, _ = run(capsys, "gen", "--q", "3", "--out", str(path))
        assert code == 0 and out.strip() == "26 52 13"

    def test_non_prime_exits_2(self, capsys):
        code, _, err = run(capsys, "gen", "--q", "4")
        assert code == 2 and "prime" in err

    def test_stdout_when_no_outfile(self, capsys):
        code, out, err = run(capsys, "gen", "--q", "2")
        assert code == 0
        assert out.startswith("14 21 7\n")
        assert "14 21 7" in err


class TestVerify:
    def test_levi_props_and_c4free(self, capsys):
        code, out, _ = run(capsys, "verify", "--q", "2",
                           "--checks", "levi-props,c4free",
                           "--no-timestamp")
        assert code == 0
        doc = json.loads(out)
        validate_run_report(doc)
        assert doc["outcome"] == "pass"
        assert [c["name"] for c in doc["checks"]] == ["levi-props", "c4free"]

    def test_degeneracy_from_file(self, tmp_path, capsys):
        path = tmp_path / "fano.g"
        path.write_text(write_graph(gen_levi(2)))
        code, out, _ = run(capsys, "verify", "--in", str(path),
                           "--checks", "degeneracy", "--no-timestamp")
        assert code == 0
        doc = json.loads(out)
        validate_run_report(doc)
        chk = doc["checks"][0]
        assert chk["observed"] == 3 and chk["expected"] == 4

    def test_all_checks_pass_on_plane3(self, capsys):
        code, out, _ = run(capsys, "verify", "--q", "3", "--checks",
                           "levi-props,c4free,degeneracy,expansion,"
                           "product,balanced,coverbound",
                           "--samples", "200", "--no-timestamp")
        assert code == 0
        validate_run_report(json.loads(out))

    def test_unknown_check_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "--q", "2",
                           "--checks", "nosuch")
        assert code == 2 and "unknown check" in err

    def test_failed_check_exits_1(self, tmp_path, capsys):
        path = tmp_path / "square.g"
        path.write_text("4 4 2\n0 2\n0 3\n1 2\n1 3\n")
        code, out, _ = run(capsys, "verify", "--in", str(path),
                           "--checks", "c4free", "--no-timestamp")
        assert code == 1
        assert json.loads(out)["outcome"] == "fail"

    def test_timestamp_present_by_default(self, capsys):
        _, out, _ = run(capsys, "verify", "--q", "2", "--checks", "c4free")
        doc = json.loads(out)
        validate_run_report(doc)
        assert "timestamp" in doc and "duration_s" in doc


class TestBounds:
    def test_exact_fano(self, capsys):
        code, out, _ = run(capsys, "bounds", "--q", "2", "--k", "2",
                           "--exact")
        assert code == 0
        doc = json.loads(out)
        validate_bounds_report(doc)
        assert doc["measured_balanced_count"] == 28
        assert doc["measured_max_capacity"] == 4
        assert doc["exact_cover_lower_bound"] == 7
        assert doc["balanced_count_lower_bound"] == "49/16"

    def test_k_above_q_exits_2(self, capsys):
        code, _, err = run(capsys, "bounds", "--q", "2", "--k", "4")
        assert code == 2 and "at most q" in err

    def test_formula_only_large_q(self, capsys):
        code, out, _ = run(capsys, "bounds", "--q", "101", "--k", "4")
        assert code == 0
        doc = json.loads(out)
        validate_bounds_report(doc)
        assert doc["family_size_lower_bound"] == pytest.approx(
            20606 / 262144, rel=1e-9)
        assert doc["measured_balanced_count"] is None


class TestCover:
    @pytest.fixture()
    def fano_file(self, tmp_path):
        path = tmp_path / "fano.g"
        path.write_text(write_graph(gen_levi(2)))
        return str(path)

    def test_build_then_verify(self, fano_file, tmp_path, capsys):
        fam = str(tmp_path / "fam.json")
        code, _, err = run(capsys, "cover", "build", "--in", fano_file,
                           "--k", "2", "--delta", "0.001", "--seed", "42",
                           "--out", fam)
        assert code == 0 and "t=1020" in err
        validate_family(json.loads(open(fam).read()))
        code, out, _ = run(capsys, "cover", "verify", "--in", fano_file,
                           "--k", "2", "--family", fam, "--no-timestamp")
        assert code == 0
        doc = json.loads(out)
        validate_run_report(doc)
        assert doc["outcome"] == "pass"

    def test_greedy_size(self, fano_file, capsys):
        code, out, err = run(capsys, "cover", "greedy", "--in", fano_file,
                             "--k", "2")
        assert code == 0
        doc = json.loads(out)
        validate_family(doc)
        assert len(doc["sets"]) >= 7
        assert "sets" in err or "greedy" in err

    def test_hash_mismatch_exits_2(self, fano_file, tmp_path, capsys):
        other = tmp_path / "g3.g"
        other.write_text(write_graph(gen_levi(3)))
        fam = str(tmp_path / "fam.json")
        run(capsys, "cover", "build", "--in", str(other), "--k", "2",
            "--delta", "0.01", "--seed", "1", "--out", fam)
        code, _, err = run(capsys, "cover", "verify", "--in", fano_file,
                           "--k", "2", "--family", fam)
        assert code == 2 and "different graph" in err

    def test_budget_exceeded_exits_3(self, fano_file, tmp_path, capsys):
        fam = str(tmp_path / "fam.json")
        run(capsys, "cover", "build", "--in", fano_file, "--k", "2",
            "--delta", "0.01", "--seed", "1", "--out", fam)
        code, _, _ = run(capsys, "cover", "verify", "--in", fano_file,
                         "--k", "2", "--family", fam, "--budget", "3")
        assert code == 3

    def test_workers_do_not_change_bytes(self, fano_file, tmp_path, capsys):
        outs = []
        for w in ("1", "4"):
            fam = str(tmp_path / f"fam{w}.json")
            code, _, _ = run(capsys, "cover", "build", "--in", fano_file,
                             "--k", "2", "--delta", "0.001", "--seed", "5",
                             "--out", fam, "--workers", w)
            assert code == 0
            outs.append(open(fam, "rb").read())
        assert outs[0] == outs[1]


def test_family_hash_matches_library(tmp_path, capsys):
    g = gen_levi(2)
    path = tmp_path / "fano.g"
    path.write_text(write_graph(g))
    fam = tmp_path / "fam.json"
    run(capsys, "cover", "build", "--in", str(path), "--k", "1",
        "--delta", "0.1", "--seed", "0", "--out", str(fam))
    doc = json.loads(fam.read_text())
    assert doc["graph_hash"] == graph_hash(g)
