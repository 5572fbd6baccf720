import json
from pathlib import Path

import pytest

from quivermotive import cli
from quivermotive.engine import PolynomialityError
from quivermotive.quiver import JORDAN

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *args):
    rc = cli.main(list(args))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestMotiveCommand:
    def test_jordan_human(self, capsys):
        rc, out, _ = run_cli(capsys, "motive", "--quiver", "jordan", "--v", "1", "--w", "1")
        assert rc == 0
        assert "class = L^2" in out
        assert "d = -1" in out

    def test_vertex_records(self, capsys):
        rc, out, _ = run_cli(
            capsys,
            "motive", "--quiver", "vertex", "--v", "1", "--w", "2", "--format", "records",
        )
        assert rc == 0
        record = json.loads(out.strip())
        assert record["command"] == "motive"
        assert record["coefficients"] == [0, 1, 1]
        assert record["d"] == -1
        assert record["class"] == "L^1 + L^2"
        assert record["betti"] == [[1, 1], [2, 1]]

    def test_missing_w_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "motive", "--quiver", "jordan", "--v", "1")
        assert rc == 2
        assert "framing vector" in err

    def test_missing_v_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "motive", "--quiver", "jordan", "--w", "1")
        assert rc == 2
        assert "dimension vector" in err

    def test_quiver_file(self, capsys, tmp_path):
        spec = tmp_path / "quiver.json"
        spec.write_text('{"vertices": 1, "edges": [[0, 0]], "w": [1], "v": [2]}')
        rc, out, _ = run_cli(capsys, "motive", "--quiver", str(spec))
        assert rc == 0
        assert "class = L^3 + L^4" in out

    def test_flag_overrides_file_vector(self, capsys, tmp_path):
        spec = tmp_path / "quiver.json"
        spec.write_text('{"vertices": 1, "edges": [[0, 0]], "w": [1], "v": [2]}')
        rc, out, _ = run_cli(capsys, "motive", "--quiver", str(spec), "--v", "1")
        assert rc == 0
        assert "class = L^2" in out

    def test_bad_file_exits_2(self, capsys, tmp_path):
        spec = tmp_path / "broken.json"
        spec.write_text('{"vertices": 2, "edges": [[0, 5]]}')
        rc, _, err = run_cli(capsys, "motive", "--quiver", str(spec), "--v", "1,1", "--w", "1,1")
        assert rc == 2
        assert "edges[0]" in err

    def test_missing_file_exits_2(self, capsys, tmp_path):
        rc, _, err = run_cli(
            capsys, "motive", "--quiver", str(tmp_path / "nope.json"), "--v", "1", "--w", "1"
        )
        assert rc == 2
        assert "not found" in err

    def test_bad_list_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "motive", "--quiver", "jordan", "--v", "one", "--w", "1")
        assert rc == 2
        assert "--v" in err

    def test_polynomiality_violation_exits_3(self, capsys, monkeypatch):
        def explode(*args, **kwargs):
            raise PolynomialityError("polynomiality violated for a test double")

        monkeypatch.setattr(cli, "motive_class", explode)
        rc, _, err = run_cli(capsys, "motive", "--quiver", "jordan", "--v", "1", "--w", "1")
        assert rc == 3
        assert "polynomiality" in err


class TestSeriesCommand:
    def test_row_count(self, capsys):
        rc, out, _ = run_cli(
            capsys, "series", "--quiver", "jordan", "--w", "1", "--max-degree", "2"
        )
        assert rc == 0
        rows = out.strip().splitlines()
        assert len(rows) == 3
        assert rows[0].endswith("class = 1")

    def test_degree_zero_single_row(self, capsys):
        rc, out, _ = run_cli(
            capsys, "series", "--quiver", "jordan", "--w", "1", "--max-degree", "0"
        )
        assert rc == 0
        rows = out.strip().splitlines()
        assert len(rows) == 1
        assert "class = 1" in rows[0]

    def test_second_point_class_pinned(self, capsys):
        # the length-two row, pinned against the fields where the point
        # count dictionary holds (q = 3, 5) and the dimension bound 4
        rc, out, _ = run_cli(
            capsys,
            "series", "--quiver", "jordan", "--w", "1", "--max-degree", "2",
            "--format", "records",
        )
        assert rc == 0
        records = [json.loads(line) for line in out.strip().splitlines()]
        row = next(r for r in records if r["v"] == [2])
        assert row["coefficients"] == [0, 0, 0, 1, 1]
        from quivermotive.fflab import quotient_count

        poly = row["coefficients"]
        for q in (3, 5):
            value = sum(c * q**k for k, c in enumerate(poly))
            assert value == quotient_count(JORDAN, (2,), (1,), q)
        assert len(poly) - 1 == 4

    def test_records_round_trip(self, capsys):
        rc, out, _ = run_cli(
            capsys,
            "series", "--quiver", "a2", "--w", "1,1", "--max-degree", "2",
            "--format", "records",
        )
        assert rc == 0
        for line in out.strip().splitlines():
            record = json.loads(line)
            assert json.dumps(record, sort_keys=True, separators=(",", ":")) == line
            assert set(record) == {"command", "v", "w", "d", "coefficients", "class"}

    def test_missing_degree_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "series", "--quiver", "jordan", "--w", "1")
        assert rc == 2
        assert "degree" in err

    @pytest.mark.parametrize(
        "golden_name,args",
        [
            (
                "jordan_w1_degree4.jsonl",
                ["series", "--quiver", "jordan", "--w", "1", "--max-degree", "4"],
            ),
            (
                "a2_w11_degree3.jsonl",
                ["series", "--quiver", "a2", "--w", "1,1", "--max-degree", "3"],
            ),
        ],
    )
    def test_golden_records(self, capsys, golden_name, args):
        # byte-exact: the record layout and the polynomial token convention
        # are frozen interfaces
        rc, out, _ = run_cli(capsys, *args, "--format", "records")
        assert rc == 0
        assert out == (GOLDEN / golden_name).read_text()

    def test_thread_count_does_not_change_output(self, capsys):
        args = ["series", "--quiver", "star3", "--w", "1,0,2", "--max-degree", "3",
                "--format", "records"]
        rc1, out1, _ = run_cli(capsys, *args, "--threads", "1")
        rc2, out2, _ = run_cli(capsys, *args, "--threads", "4")
        assert rc1 == rc2 == 0
        assert out1 == out2


class TestVerifyCommand:
    def test_centralizer_suite_passes(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "centralizer")
        assert rc == 0
        assert "FAIL" not in out
        assert out.count("PASS") == 19

    def test_harmonic_suite_passes(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "harmonic", "--q", "2,3")
        assert rc == 0
        assert "FAIL" not in out

    def test_ffcount_records_flag_small_characteristic(self, capsys):
        rc, out, _ = run_cli(
            capsys,
            "verify", "ffcount", "--quiver", "jordan", "--q", "2", "--format", "records",
        )
        assert rc == 0  # FLAG is reported but not fatal
        records = [json.loads(line) for line in out.strip().splitlines()]
        by_case = {r["case"]: r for r in records}
        assert by_case["jordan v=(1,) w=(1,) q=2"]["status"] == "PASS"
        flagged = by_case["jordan v=(2,) w=(1,) q=2"]
        assert flagged["status"] == "FLAG"
        assert "240" in flagged["detail"]

    def test_all_suites_smoke(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "all", "--q", "2")
        assert rc == 0
        assert "FAIL" not in out
        for suite in ("centralizer", "kappa", "harmonic", "ffcount"):
            assert f"{suite}:" in out

    def test_unknown_suite_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "nonsense"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestSelftestCommand:
    def test_fast_passes(self, capsys):
        rc, out, _ = run_cli(capsys, "selftest", "--fast")
        assert rc == 0
        assert "0 failed" in out

    def test_corrupted_pairing_is_caught(self, capsys, monkeypatch):
        from quivermotive import partitions

        original = partitions.pairing

        def wrong_pairing(lam, mu):
            return original(lam, mu) + (1 if (lam.parts, mu.parts) == ((2,), (1, 1)) else 0)

        monkeypatch.setattr(partitions, "pairing", wrong_pairing)
        rc, out, _ = run_cli(capsys, "selftest", "--fast")
        assert rc == 1
        assert "FAIL selftest: partition-pairing-invariants" in out
