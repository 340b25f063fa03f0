from pathlib import Path

import pytest

import wardtri.identities
from wardtri.cli import main
from wardtri.triangles import Kind, Strategy, value

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_gen_bfile(capsys):
    code, out = run(capsys, "gen", "--kind", "ward2", "--rows", "3",
                    "--strategy", "recurrence", "--format", "bfile")
    assert code == 0
    assert out.splitlines() == ["1 1", "2 1", "3 3", "4 1", "5 10", "6 15"]


def test_gen_bfile_offset(capsys):
    code, out = run(capsys, "gen", "--kind", "ward2", "--rows", "2",
                    "--format", "bfile", "--offset", "0")
    assert code == 0
    assert out.splitlines() == ["0 1", "1 1", "2 3"]


def test_gen_csv(capsys):
    code, out = run(capsys, "gen", "--kind", "ward1", "--rows", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["1", "0,1", "0,2,3"]


def test_gen_table_boundary_row(capsys):
    code, out = run(capsys, "gen", "--kind", "ward-lah", "--rows", "0",
                    "--strategy", "explicit", "--format", "table")
    assert code == 0
    assert out.strip() == "1"


def test_gen_kind_name_normalisation(capsys):
    code, out = run(capsys, "gen", "--kind", "WardLah", "--rows", "1",
                    "--strategy", "explicit")
    assert code == 0
    assert out.splitlines() == ["1", "0 2"]


def test_gen_unsupported_strategy_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["gen", "--kind", "ward1", "--rows", "3", "--strategy", "explicit"])
    assert err.value.code == 2


def test_gen_unknown_kind_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["gen", "--kind", "nonsense", "--rows", "3"])
    assert err.value.code == 2


def test_check_named_pair(capsys):
    code, out = run(capsys, "check", "--kind", "ward-lah", "--rows", "20",
                    "--strategies", "explicit,alternating-sum")
    assert code == 0
    assert "PASS" in out


def test_check_all_kinds(capsys):
    code, out = run(capsys, "check", "--kind", "all", "--rows", "8")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("PASS")]
    # every kind contributes C(#strategies, 2) comparisons: 1+1+6+3+3+6+3+3+6
    assert len(lines) == 32
    assert "FAIL" not in out


def test_check_detects_fault(monkeypatch, capsys):
    real = wardtri.identities.value

    def corrupted(kind, n, k, strategy=Strategy.RECURRENCE):
        v = real(kind, n, k, strategy)
        if (kind, n, k, strategy) == (Kind.WARD2, 4, 2, Strategy.PARTITION_TRANSFORM):
            return v + 1
        return v

    monkeypatch.setattr(wardtri.identities, "value", corrupted)
    code, out = run(capsys, "check", "--kind", "ward2", "--rows", "6")
    assert code == 1
    assert "FAIL" in out and "n=4 k=2" in out


def test_check_unsupported_strategy_single_kind():
    with pytest.raises(SystemExit) as err:
        main(["check", "--kind", "ward1", "--rows", "5",
              "--strategies", "explicit,recurrence"])
    assert err.value.code == 2


def test_check_skips_inapplicable_combinations(capsys):
    code, out = run(capsys, "check", "--kind", "all", "--rows", "6",
                    "--strategies", "explicit,alternating-sum")
    assert code == 0
    assert "note:" in out  # kinds without both routes are skipped
    assert "PASS equivalence-ward-lah-explicit~alternating-sum" in out


def test_identities_command(capsys):
    code, out = run(capsys, "identities", "--max-n", "8")
    assert code == 0
    assert "FAIL" not in out
    assert "horizontal-ward-lah" in out


def test_identities_machine_format(capsys):
    code, out = run(capsys, "identities", "--max-n", "6", "--machine")
    assert code == 0
    for line in out.splitlines():
        assert all("=" in token for token in line.split())
        assert "status=pass" in line


def test_identities_rejects_bad_range():
    with pytest.raises(SystemExit) as err:
        main(["identities", "--max-n", "0"])
    assert err.value.code == 2


@pytest.mark.parametrize("which", ["stirling1", "stirling2", "central-lah"])
def test_conjecture_reports(capsys, which):
    code, out = run(capsys, "conjecture", which, "--max-n", "10")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for l in lines if l.startswith("n=")) == 11
    assert lines[-1].endswith("all agree")


def test_conjecture_unknown_name():
    with pytest.raises(SystemExit) as err:
        main(["conjecture", "bell", "--max-n", "5"])
    assert err.value.code == 2


def test_bfile_compare_fixture(capsys):
    code, out = run(capsys, "bfile-compare", "--kind", "ward2",
                    "--file", str(FIXTURES / "b269939.txt"))
    assert code == 0
    assert "325 entries agree" in out


def test_bfile_compare_truncated_prefix(tmp_path, capsys):
    full = (FIXTURES / "b269939.txt").read_text().splitlines()
    short = tmp_path / "prefix.txt"
    short.write_text("\n".join(full[:12]) + "\n")  # 2 comments + 10 entries
    code, out = run(capsys, "bfile-compare", "--kind", "ward2", "--file", str(short))
    assert code == 0
    assert "10 entries agree" in out


def test_bfile_compare_off_by_one_offset(capsys):
    code, out = run(capsys, "bfile-compare", "--kind", "ward2",
                    "--file", str(FIXTURES / "b269939.txt"), "--offset", "2")
    assert code == 1
    assert "mismatch at index 1" in out


def test_bfile_compare_corrupted_value(tmp_path, capsys):
    lines = (FIXTURES / "b269939.txt").read_text().splitlines()
    lines[6] = "5 11"  # true value is 10 at (n=3, k=2)
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join(lines) + "\n")
    code, out = run(capsys, "bfile-compare", "--kind", "ward2", "--file", str(bad))
    assert code == 1
    assert "mismatch at index 5" in out
    assert "n=3, k=2" in out
    assert "expected 10, found 11" in out


def test_bfile_compare_parse_error(tmp_path):
    bad = tmp_path / "malformed.txt"
    bad.write_text("1 2\n3 4\n")  # non-contiguous indices
    with pytest.raises(SystemExit) as err:
        main(["bfile-compare", "--kind", "ward2", "--file", str(bad)])
    assert err.value.code == 2


def test_bfile_compare_missing_file():
    with pytest.raises(SystemExit) as err:
        main(["bfile-compare", "--kind", "ward2", "--file", "/nonexistent.txt"])
    assert err.value.code == 2


def test_bench_structure(capsys):
    code, out = run(capsys, "bench", "--kind", "ward-lah", "--rows", "40",
                    "--strategies", "recurrence,explicit")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["kind", "strategy", "rows", "entries", "max_bits", "seconds"]
    assert len(lines) == 3
    for line in lines[1:]:
        kind, strategy, rows, entries, max_bits, seconds = line.split()
        assert kind == "ward-lah"
        assert int(rows) == 40
        assert int(entries) == 41 * 42 // 2
        assert int(max_bits) > 0
        float(seconds)


def test_bench_transform_guard():
    with pytest.raises(SystemExit) as err:
        main(["bench", "--kind", "ward1", "--rows", "2000",
              "--strategies", "partition-transform"])
    assert err.value.code == 2


def test_gen_transform_guard_and_force(capsys):
    with pytest.raises(SystemExit) as err:
        main(["gen", "--kind", "ward1", "--rows", "41",
              "--strategy", "partition-transform", "--format", "table"])
    assert err.value.code == 2
    code, out = run(capsys, "gen", "--kind", "ward-lah", "--rows", "41",
                    "--strategy", "partition-transform", "--format", "table", "--force")
    assert code == 0
    assert len(out.splitlines()) == 42
    # spot-check the forced build against the explicit route
    row41 = [int(v) for v in out.splitlines()[41].split()]
    assert row41[1] == value(Kind.WARD_LAH, 41, 1, Strategy.EXPLICIT)


def test_bench_rejects_zero_rows():
    with pytest.raises(SystemExit) as err:
        main(["bench", "--kind", "ward1", "--rows", "0"])
    assert err.value.code == 2


def test_usage_error_no_command():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
