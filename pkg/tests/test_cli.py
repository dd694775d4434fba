import json
import subprocess
import sys

import pytest

from taghopf.cli import main

BUBBLE = "g{2;(1,2)(1,2)}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coproduct_bubble(capsys):
    code, out, _ = run(capsys, "coproduct", BUBBLE)
    assert code == 0
    assert out == ("1 * g{2;(1,2)(1,2)} (x) g{0;} + 1 * g{0;} (x) g{2;(1,2)(1,2)}"
                   " + 2 * g{2;(1,2)} (x) g{1;(1,1)}\n")


def test_product(capsys):
    code, out, _ = run(capsys, "product", "g{2;(1,2)}", BUBBLE)
    assert (code, out) == (0, "g{4;(1,2)(3,4)(3,4)}\n")


def test_product_of_combinations(capsys):
    code, out, _ = run(capsys, "product", "2 * g{2;(1,2)}", "1/2 * g{1;(1,1)}")
    assert (code, out) == (0, "1 * g{3;(1,2)(3,3)}\n")


def test_noncommutativity_witness(capsys):
    _, eb, _ = run(capsys, "product", "g{2;(1,2)}", BUBBLE)
    _, be, _ = run(capsys, "product", BUBBLE, "g{2;(1,2)}")
    assert eb != be
    _, peb, _ = run(capsys, "project", eb.strip())
    _, pbe, _ = run(capsys, "project", be.strip())
    assert peb == pbe


def test_antipode(capsys):
    code, out, _ = run(capsys, "antipode", BUBBLE, "--recursion", "check")
    assert code == 0
    assert out == "-1 * g{2;(1,2)(1,2)} + 2 * g{3;(1,2)(3,3)}\n"


def test_reduced_counit_canon_msf(capsys):
    assert run(capsys, "reduced-coproduct", "g{2;(1,2)}")[1] == "0\n"
    assert run(capsys, "counit", "3 * g{0;} + 5 * g{2;(1,2)}")[1] == "3\n"
    assert run(capsys, "canon", "g{3;(2,3)(1,3)}")[1] == "g{3;(1,2)(1,3)}\n"
    assert run(capsys, "msf", "g{3;(1,2)(2,3)(1,3)}")[1] == "{1,2}\n"
    assert run(capsys, "msf", "g{1;(1,1)}")[1] == "{}\n"


def test_canon_roundtrip(capsys):
    _, once, _ = run(capsys, "canon", "g{4;(3,4)(1,3)(2,2)}")
    _, twice, _ = run(capsys, "canon", once.strip())
    assert once == twice


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-edges", "1")
    assert code == 0
    assert out.splitlines() == ["g{0;}", "g{1;(1,1)}", "g{2;(1,2)}"]


def test_file_operand(capsys, tmp_path):
    f = tmp_path / "bubble.txt"
    f.write_text(BUBBLE + "\n")
    assert run(capsys, "canon", f"@{f}")[1] == BUBBLE + "\n"
    code, _, err = run(capsys, "canon", f"@{tmp_path / 'missing.txt'}")
    assert code == 1 and "cannot read" in err


@pytest.mark.parametrize("argv, needle", [
    (["canon", "g{2;(1,2)"], "malformed"),
    (["canon", "g{2;(1,3)}"], "outside"),
    (["canon", "g{3;(1,2)}"], "isolated vertex"),
    (["--capacity", "1", "coproduct", BUBBLE], "edge limit 1"),
    (["frobnicate"], "invalid choice"),
    ([], "usage"),
])
def test_errors_exit_one(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert needle in err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-edges", "2", "--samples", "10", "--sample-max-edges", "3")
    assert code == 0
    assert out.startswith("# operations=reference")
    assert "FAIL" not in out


def test_verify_mutation_exits_two(capsys):
    code, out, _ = run(capsys, "verify", "--max-edges", "2", "--samples", "0",
                       "--mutation", "coproduct-drop-empty", "--format", "json")
    assert code == 2
    doc = json.loads(out)
    assert doc["passed"] is False
    failed = [a for a in doc["axioms"] if a["status"] == "fail"]
    assert failed and all(a["counterexample"] for a in failed)


def test_output_is_deterministic(capsys):
    argv = ["antipode", "g{3;(1,2)(2,3)(1,3)}"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "taghopf.cli", "product", "g{0;}", BUBBLE],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == BUBBLE + "\n"
