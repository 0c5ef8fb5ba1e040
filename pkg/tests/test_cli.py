import json
import os

import pytest

from demkit.cli import main

pytestmark = pytest.mark.usefixtures("isolated_cache")


@pytest.fixture
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("DEMKIT_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_char_graded_pretty(capsys):
    code, out, _ = run(capsys, "char", "--system", "A1", "--level", "1", "--weight", "2", "--graded", "--pretty")
    assert code == 0
    assert "dim 4" in out
    assert "graded dim 3 + 1·q" in out


def test_char_level1_fundamental(capsys):
    code, out, _ = run(capsys, "char", "--system", "A1", "--level", "1", "--weight", "1", "--pretty")
    assert code == 0
    assert "dim 2" in out
    lines = [ln for ln in out.splitlines() if "\t" in ln][1:]
    assert all(ln.split("\t")[1] == "0" for ln in lines)


def test_char_weyl_kind(capsys):
    code, out, _ = run(capsys, "char", "--system", "A2", "--weight", "1,1", "--kind", "weyl", "--pretty")
    assert code == 0
    assert "dim 8" in out


def test_char_jsonl_headers(capsys):
    code, out, _ = run(capsys, "char", "--system", "A1", "--level", "1", "--weight", "2", "--graded")
    assert code == 0
    header = json.loads(out.splitlines()[0])
    assert header == {"system": "A1", "kind": "graded"}
    code, out, _ = run(capsys, "char", "--system", "A1", "--level", "1", "--weight", "2")
    header = json.loads(out.splitlines()[0])
    assert header == {"system": "A1", "kind": "plain"}


def test_char_kr_kind(capsys):
    code, out, _ = run(capsys, "char", "--system", "A2", "--level", "2", "--kind", "kr", "--index", "1", "--pretty")
    assert code == 0
    assert "dim 6" in out


def test_char_rerun_and_cache_are_byte_identical(capsys, isolated_cache):
    args = ("char", "--system", "B2", "--level", "1", "--weight", "0,2", "--graded")
    _, first, _ = run(capsys, *args)
    assert not (isolated_cache / "nonexistent").exists()
    _, second, _ = run(capsys, *args)  # served from cache
    assert first == second
    _, third, _ = run(capsys, *args, "--no-cache")
    assert first == third


def test_cache_header_revalidation(capsys, isolated_cache):
    args = ("char", "--system", "A1", "--level", "1", "--weight", "2", "--graded")
    _, first, _ = run(capsys, *args)
    entries = os.listdir(isolated_cache)
    assert len(entries) == 1
    # corrupt the entry: stale header must be treated as a miss
    path = isolated_cache / entries[0]
    path.write_text('{"system":"A2","kind":"graded"}\n{"w":[0,0],"g":0,"m":"1"}\n')
    _, again, _ = run(capsys, *args)
    assert again == first


def test_cache_commands(capsys, isolated_cache):
    code, out, _ = run(capsys, "cache", "stats")
    assert code == 0 and json.loads(out) == {"entries": 0}
    run(capsys, "char", "--system", "A1", "--level", "1", "--weight", "1")
    code, out, _ = run(capsys, "cache", "stats")
    assert json.loads(out) == {"entries": 1}
    code, out, _ = run(capsys, "cache", "path")
    assert out.strip() == str(isolated_cache)
    code, out, _ = run(capsys, "cache", "clear")
    assert code == 0
    code, out, _ = run(capsys, "cache", "stats")
    assert json.loads(out) == {"entries": 0}


def test_cache_dir_flag_beats_environment(capsys, tmp_path):
    other = tmp_path / "elsewhere"
    code, out, _ = run(capsys, "cache", "path", "--cache-dir", str(other))
    assert out.strip() == str(other)


def test_presentation_json(capsys):
    code, out, _ = run(capsys, "presentation", "--system", "A1", "--level", "2", "--weight", "3")
    assert code == 0
    doc = json.loads(out)
    (rel,) = doc["relations"]
    assert rel["s"] == 2 and rel["m"] == 1
    assert rel["nilpotency_relation"] == {"power": 2, "t_exponent": 1}


def test_verify_demprop_roundtrip(capsys):
    code, out, _ = run(
        capsys, "verify", "demprop", "--system", "A1", "--level", "1",
        "--parts", "2", "--lambda", "1", "--no-timing",
    )
    assert code == 0
    cert = json.loads(out)
    assert cert["verdict"] == "verified"
    assert cert["details"]["lhs_dim"] == "8"


def test_verify_exit_codes(capsys):
    code, _, _ = run(capsys, "verify", "demprop", "--system", "A1", "--level", "1", "--parts", "2", "--lambda", "2")
    assert code == 3
    code, _, _ = run(capsys, "verify", "stabilization", "--system", "A1", "--level", "1", "--lambda", "0", "--max-grade", "2", "--n-max", "2")
    assert code == 4
    code, _, _ = run(capsys, "verify", "minuscule", "--system", "B3")
    assert code == 0


def test_verify_stabilization(capsys):
    code, out, _ = run(
        capsys, "verify", "stabilization", "--system", "A1", "--level", "1",
        "--lambda", "0", "--max-grade", "2", "--n-max", "4", "--no-timing",
    )
    assert code == 0
    cert = json.loads(out)
    assert cert["verdict"] == "verified" and cert["details"]["stable_from"] == 2


def test_verify_writes_to_file(capsys, tmp_path):
    out_file = tmp_path / "cert.json"
    code, out, _ = run(
        capsys, "verify", "ev0", "--system", "A1", "--level", "2", "--lambda", "2",
        "--no-timing", "--out", str(out_file),
    )
    assert code == 0 and out == ""
    assert json.loads(out_file.read_text())["verdict"] == "verified"


def test_verify_reruns_are_byte_identical(capsys):
    args = ("verify", "krdecom", "--system", "A2", "--level", "1", "--s-vector", "1,1", "--lambda", "0,0", "--no-timing")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_scan_summary_and_jobs_determinism(capsys):
    args = ("scan", "--system", "A1", "--height-bound", "2", "--no-timing")
    code, out1, _ = run(capsys, *args, "--jobs", "1")
    assert code == 0
    code, out2, _ = run(capsys, *args, "--jobs", "2")
    assert out1 == out2
    summary = json.loads(out1.splitlines()[-1])
    assert summary["refuted"] == 0 and summary["total"] == len(out1.splitlines()) - 1


def test_scan_out_directory(capsys, tmp_path):
    out_dir = tmp_path / "scans"
    code, out, _ = run(capsys, "scan", "--system", "A1", "--height-bound", "1", "--jobs", "1", "--no-timing", "--out", str(out_dir))
    assert code == 0
    summary = json.loads(out.splitlines()[-1])
    stream = (out_dir / "scan_A1_h1.jsonl").read_text().splitlines()
    assert len(stream) == summary["total"]


def test_invalid_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["char", "--system", "H9", "--weight", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["char", "--system", "A1", "--weight", "banana"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense", "--system", "A1"])
    assert exc.value.code == 2


def test_domain_errors_exit_3(capsys):
    code, _, err = run(capsys, "char", "--system", "A1", "--level", "0", "--weight", "2")
    assert code == 3 and "error" in err
    code, _, err = run(capsys, "char", "--system", "A1", "--level", "1", "--weight", "-1")
    assert code == 3
    code, _, err = run(capsys, "char", "--system", "A1", "--kind", "kr", "--level", "1")
    assert code == 3  # missing --index
