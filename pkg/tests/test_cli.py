import json
import subprocess
import sys

import pytest

from lattkit import io
from lattkit.cli import main
from lattkit.lattice import chain

SQUARE_WITH_TOP = {"labels": ["0", "a", "b", "c", "1"],
                   "covers": [["0", "a"], ["0", "b"], ["a", "c"], ["b", "c"], ["c", "1"]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_check_single_condition(capsys, write):
    code, out = run(capsys, "check", write("l.json", SQUARE_WITH_TOP), "--condition", "5", "--kappa", "one")
    assert code == 0
    assert out["holds"] is False and out["witness"] == {"U": ["a"]}
    assert "seconds" in out["timings"]


def test_check_dual_of_chain_is_stone(capsys, write):
    code, out = run(capsys, "check", write("c.json", chain(4).to_json()), "--condition", "1", "--dual")
    assert code == 0 and out["holds"]


def test_check_full_grid(capsys, write):
    code, out = run(capsys, "check", write("l.json", SQUARE_WITH_TOP))
    assert code == 0 and set(out["verdicts"]) >= {"(iv)", "(1)_one", "(5)_all"}


def test_transfer_reports_known_failure(capsys, write):
    lat = write("l.json", SQUARE_WITH_TOP)
    code, out = run(capsys, "transfer", lat, "--congruence", write("t.json", [["c", "1"]]))
    assert code == 1
    failed = {c["claim"] for c in out["checks"] if c["status"] == "fails" and c.get("asserted", True)}
    assert "c3_equivalent[one]" in failed


def test_commutator_commands_round_trip(capsys, write, tmp_path):
    lat = write("l.json", SQUARE_WITH_TOP)
    code, out = run(capsys, "comm-from-cong", lat, "--congruence", write("t.json", {"blocks": [["c", "1"]]}))
    assert code == 0
    cl = write("cl.json", out["commutator"])
    code, spec = run(capsys, "spectrum", cl)
    assert code == 0 and spec["spec"] == ["a", "b"]
    code, eq = run(capsys, "equiv", cl)
    assert code == 0 and ["c", "1"] in eq["blocks"]
    code, grid = run(capsys, "grid", cl, "--full")
    assert code == 1 and grid["hypotheses"]["zero_is_radical"]
    assert "all_checks" in grid


def test_ring_commands(capsys, write):
    ring = write("r.json", {"type": "Zn", "n": 12})
    code, out = run(capsys, "ring", ring)
    assert code == 0
    assert out["ideals"] == ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]
    assert out["prime_ideals"] == ["(3)", "(2)"]
    assert out["semiprime"] is False
    code, out = run(capsys, "ring", ring, "--condition", "1", "--kappa", "one", "--reticulation", "--bridge")
    assert code == 0 and out["holds"] is False
    assert len(out["reticulation"]["labels"]) == 4
    assert out["congruences"]["ideals"] == 6


def test_product_ring_file(capsys, write):
    ring = write("p.json", {"type": "product", "factors": [{"type": "Zn", "n": 2}, {"type": "Zn", "n": 3}]})
    code, out = run(capsys, "ring", ring, "--condition", "iv")
    assert code == 0 and out["holds"] is True


def test_enumerate_writes_report(capsys, tmp_path):
    dest = tmp_path / "report.json"
    code = main(["enumerate", "--suite", "davey", "--n", "5", "--jobs", "2", "--out", str(dest)])
    assert code == 0
    report = json.loads(dest.read_text())
    assert report["tested"] == 10 and report["failed"] == 0
    assert "tested=10" in capsys.readouterr().err


def test_enumerate_exit_code_reflects_failures(capsys):
    assert main(["enumerate", "--suite", "transfer", "--n", "5"]) == 1


def test_search_reports_exhaustion(capsys):
    code, out = run(capsys, "search", "--n", "3")
    assert code == 0 and out["found"] is False


@pytest.mark.parametrize("payload,needle", [
    ({"labels": ["0", "1"]}, "covers"),
    ({"labels": ["0", "a", "b"], "covers": [["0", "a"], ["0", "b"]]}, "greatest"),
])
def test_bad_lattice_files_exit_with_code_two(capsys, write, payload, needle):
    code = main(["check", write("bad.json", payload)])
    assert code == 2
    assert needle in capsys.readouterr().err


def test_incompatible_blocks_are_rejected(capsys, write):
    code = main(["transfer", write("l.json", SQUARE_WITH_TOP), "--congruence", write("t.json", [["a", "1"]])])
    assert code == 2
    assert "compatible" in capsys.readouterr().err


def test_loader_errors():
    L = io.load_lattice(SQUARE_WITH_TOP)
    with pytest.raises(io.FormatError):
        io.load_congruence(L, [["a", "b"], ["b", "c"]])
    with pytest.raises(io.FormatError):
        io.load_congruence(L, [["nope"]])
    with pytest.raises(io.FormatError):
        io.load_commutator({**SQUARE_WITH_TOP, "commutator": [["a", "b", "0"], ["b", "a", "c"]]})
    with pytest.raises(io.FormatError):
        io.load_commutator({**SQUARE_WITH_TOP, "commutator": [["1", "1", "c"]]}, dual=True)
    with pytest.raises(io.FormatError):
        io.load_ring({"type": "polynomial"})


def test_commutator_loader_accepts_indices():
    obj = {"labels": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]], "commutator": [[1, 1, 0]]}
    assert io.load_commutator(obj).comm == ((0, 0, 0), (0, 0, 1), (0, 1, 2))


def test_console_script_module_entry():
    r = subprocess.run([sys.executable, "-m", "lattkit.cli", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "verify-all" in r.stdout


def test_grid_command_alias_and_suite_alias(capsys, write):
    cl = write("cl.json", {"labels": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]], "commutator": [[1, 1, 0]]})
    code_new, new = run(capsys, "grid", cl)
    code_old, old = run(capsys, "ourdavey", cl)
    assert (code_new, new) == (code_old, old)
    assert main(["enumerate", "--suite", "commsofcgs", "--n", "3"]) == 0


def test_comm_from_cong_output_file_feeds_spectrum(capsys, write, tmp_path):
    dest = tmp_path / "cl.json"
    lat = write("l.json", SQUARE_WITH_TOP)
    assert main(["comm-from-cong", lat, "--congruence", write("t.json", [["c", "1"]]), "--out", str(dest)]) == 0
    code, spec = run(capsys, "spectrum", str(dest))
    assert code == 0 and spec["spec"] == ["a", "b"]
