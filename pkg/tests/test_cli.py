import json
import subprocess
import sys

import pytest

from foldgray.cli import main, read_listing
from foldgray.common import GenConfig
from foldgray.recursive import listing_recursive


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_count_only(capsys):
    assert run(capsys, "generate", "--n", "4", "--kind", "stamp", "--algo", "recursive",
               "--count-only") == (0, "16\n", "")


def test_generate_verify_exit_zero(capsys):
    code, out, err = run(capsys, "generate", "--n", "5", "--kind", "semi", "--algo", "iterative",
                         "--verify")
    assert code == 0
    assert json.loads(err)["count"] == 24
    assert len(out.splitlines()) == 24


def test_generate_single(capsys):
    assert run(capsys, "generate", "--n", "1", "--kind", "semi") == (0, "1\n", "")


def test_generate_formats(capsys):
    _, plain, _ = run(capsys, "generate", "--n", "3", "--format", "plain")
    _, compact, _ = run(capsys, "generate", "--n", "3", "--format", "compact")
    _, doc, _ = run(capsys, "generate", "--n", "3", "--format", "json")
    assert plain.splitlines()[:2] == ["1 2 3", "2 3 1"]
    assert compact.splitlines()[:2] == ["123", "231"]
    doc = json.loads(doc)
    assert doc["n"] == 3 and doc["kind"] == "stamp" and doc["algorithm"] == "iterative"
    assert doc["listing"][0] == [1, 2, 3] and len(doc["listing"]) == 6


@pytest.mark.parametrize("argv", [
    ["generate", "--n", "10", "--format", "compact"],
    ["generate", "--n", "4", "--kind", "open"],
    ["generate", "--n", "0"],
    ["enumerate-brute", "--n", "11", "--kind", "stamp"],
    ["classify", "1 1 2"],
    ["classify", "abc"],
    ["bench", "--n-min", "5", "--n-max", "3"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_bad_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--n", "4", "--algo", "magic"])
    assert exc.value.code == 2


def test_enumerate_brute(capsys):
    code, out, _ = run(capsys, "enumerate-brute", "--n", "4", "--kind", "open", "--format", "compact")
    assert code == 0
    assert out.splitlines() == ["1234", "1432", "2341", "3214", "4123", "4321", "# count: 6"]
    _, out, _ = run(capsys, "enumerate-brute", "--n", "4", "--kind", "semi")
    assert out.splitlines()[-1] == "# count: 10"
    _, out, _ = run(capsys, "enumerate-brute", "--n", "2", "--kind", "stamp")
    assert out.splitlines() == ["1 2", "2 1", "# count: 2"]


def test_enumerate_brute_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("FOLDGRAY_ORACLE_MAX_N", "3")
    assert run(capsys, "enumerate-brute", "--n", "4")[0] == 2


@pytest.mark.parametrize("pile, expected", [
    ("1423", "stamp=false semi=false open=false"),
    ("2143", "stamp=true semi=false open=false"),
    ("1234", "stamp=true semi=true open=true"),
    ("2 1 4 3", "stamp=true semi=false open=false"),
])
def test_classify(capsys, pile, expected):
    assert run(capsys, "classify", pile) == (0, expected + "\n", "")


def test_verify_file_roundtrip(capsys, tmp_path):
    path = tmp_path / "listing.txt"
    _, out, _ = run(capsys, "generate", "--n", "6", "--kind", "semi", "--algo", "recursive")
    path.write_text(out)
    code, report, _ = run(capsys, "verify", "--kind", "semi", str(path))
    assert code == 0 and json.loads(report)["all_adjacent"]

    lines = out.splitlines(keepends=True)
    path.write_text("".join(lines[:5] + [lines[4]] + lines[5:]))
    assert run(capsys, "verify", "--kind", "semi", str(path))[0] == 1


def test_verify_json_listing_reads_kind(capsys, tmp_path):
    path = tmp_path / "listing.json"
    _, out, _ = run(capsys, "generate", "--n", "5", "--kind", "stamp", "--format", "json")
    path.write_text(out)
    assert run(capsys, "verify", str(path))[0] == 0


@pytest.mark.parametrize("content", ["1 2 x\n", "1 2 2\n", '{"listing": 3}', ""])
def test_verify_ill_formed_input(capsys, tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    assert run(capsys, "verify", "--kind", "stamp", str(path))[0] == 2


def test_verify_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", "--kind", "stamp", str(tmp_path / "nope"))[0] == 2


def test_plain_roundtrip_is_byte_identical(capsys):
    _, out, _ = run(capsys, "generate", "--n", "10", "--kind", "semi")
    piles, _ = read_listing(out)
    assert "".join(f"{p}\n" for p in piles) == out
    assert piles == listing_recursive(GenConfig(10, "semi"))


def test_filter_gives_semi_listing(capsys, tmp_path):
    path = tmp_path / "stamps.txt"
    _, out, _ = run(capsys, "generate", "--n", "6", "--kind", "stamp")
    path.write_text(out)
    _, filtered, _ = run(capsys, "filter", "--kind", "semi", str(path))
    _, semi, _ = run(capsys, "generate", "--n", "6", "--kind", "semi")
    assert filtered == semi
    _, opened, _ = run(capsys, "filter", "--kind", "open", "--format", "compact", str(path))
    assert len(opened.splitlines()) == 28


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--n-min", "8", "--n-max", "9", "--kind", "stamp",
                       "--algo", "both", "--repetitions", "1")
    rows = out.splitlines()
    assert code == 0
    assert rows[0] == "n,kind,algorithm,count,wall_ns,ns_per_string,rotations,scans,splices,nsm_calls"
    assert [r.split(",")[:4] for r in rows[1:]] == [
        ["8", "stamp", "recursive", "1392"], ["9", "stamp", "recursive", "4536"],
        ["8", "stamp", "iterative", "1392"], ["9", "stamp", "iterative", "4536"]]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "foldgray", "generate", "--n", "4", "--count-only"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "16\n"
