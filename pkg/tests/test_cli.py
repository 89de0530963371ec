import json

from fusionforge import corpus
from fusionforge.cli import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_verify_psl25(self, capsys):
        code, out, _ = run(capsys, "verify", "psl25")
        assert code == EXIT_OK
        assert "associativity: ok" in out

    def test_info_json(self, capsys):
        code, out, _ = run(capsys, "info", "--json", "f660")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["simple"] is True and payload["schur_holds"] is True

    def test_schur_ruled_out(self, capsys):
        code, out, _ = run(capsys, "schur", "r7-210-ruledout")
        assert code == EXIT_OK
        assert "-1.54761905" in out

    def test_schur_gate_exit(self, capsys):
        code, _, _ = run(capsys, "--gate", "schur", "r7-210-ruledout")
        assert code == EXIT_NEGATIVE
        code, _, _ = run(capsys, "--gate", "schur", "f210")
        assert code == EXIT_OK

    def test_chartable_csv(self, capsys):
        code, out, _ = run(capsys, "chartable", "--csv", "z4")
        assert code == EXIT_OK
        assert len(out.strip().splitlines()) == 4

    def test_subrings(self, capsys):
        code, out, _ = run(capsys, "subrings", "z4")
        assert code == EXIT_OK and "{1, 3}" in out

    def test_unknown_ring(self, capsys):
        code, _, err = run(capsys, "verify", "definitely-not-a-ring")
        assert code == EXIT_USAGE
        assert "error" in err

    def test_usage_error(self, capsys):
        code, _, _ = run(capsys, "no-such-command")
        assert code == EXIT_USAGE

    def test_file_input(self, capsys, tmp_path, psl25):
        p = tmp_path / "ring.frt"
        p.write_text(corpus.serialize_fusion_ring(psl25))
        code, out, _ = run(capsys, "verify", str(p))
        assert code == EXIT_OK


class TestSearchCommands:
    def test_classify_types(self, capsys):
        code, out, _ = run(
            capsys, "classify-types", "--fpdim", "60", "--rank", "5",
            "--perfect", "--frobenius",
        )
        assert code == EXIT_OK
        assert out.strip() == "[[1,1],[3,2],[4,1],[5,1]]  rank=5 fpdim=60"

    def test_classify_60(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--fpdim", "60", "--rank", "5", "--perfect",
            "--frobenius", "--min-d2", "3", "--gcd-one", "--exclude-ppp",
            "--growth-cap", "--simple", "--json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["complete"] is True
        assert sum(t["rings_found"] for t in payload["types"]) == 1

    def test_rank5_family_smoke(self, capsys):
        code, out, _ = run(capsys, "rank5-family", "--max-mult", "1")
        assert code == EXIT_OK
        assert "5 ring(s)" in out

    def test_bialg_rank3(self, capsys):
        code, out, _ = run(
            capsys, "--gate", "bialg-rank3", "--d2", "1000", "--d3", "500",
            "--a", "0.750001",
        )
        assert code == EXIT_NEGATIVE
        assert "holds=False" in out

    def test_ineq_suite(self, capsys):
        code, out, _ = run(capsys, "ineq-suite", "z5", "--samples", "20")
        assert code == EXIT_OK
        assert "theorem-backed violations: 0" in out


class TestCorpusCommands:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "corpus", "list")
        assert code == EXIT_OK
        assert "si60-1 (psl25)" in out

    def test_export_and_reload(self, capsys, tmp_path):
        code, _, err = run(capsys, "corpus", "export", "--outdir", str(tmp_path))
        assert code == EXIT_OK
        reloaded = corpus.load_fusion_ring(tmp_path / "si60-1.frt")
        assert reloaded == corpus.get("psl25").fd

    def test_determinism(self, capsys):
        _, out1, _ = run(capsys, "chartable", "f210")
        _, out2, _ = run(capsys, "chartable", "f210")
        assert out1 == out2
