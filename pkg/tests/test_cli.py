import json
import subprocess
import sys

import pytest

from turkshead import cli
from turkshead.cli import EXIT_DISAGREE, EXIT_IO, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_det(capsys):
    assert run(capsys, "det", "--m", "3", "--n", "2")[:2] == (EXIT_OK, "5\n")
    code, out, _ = run(capsys, "det", "--m", "4", "--n", "3", "--json")
    data = json.loads(out)
    assert data["methods"] == {"minor": "75", "trees": "75", "trig": "75"}
    assert data["agree"]


def test_det_method_not_applicable(capsys):
    code, _, err = run(capsys, "det", "--m", "5", "--n", "2", "--method", "closed")
    assert code == EXIT_USAGE and "does not apply" in err


def test_det_disagreement_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli.determinant, "determinants",
                        lambda m, n, methods: {"minor": 5, "trees": 6})
    assert run(capsys, "det", "--m", "3", "--n", "2")[0] == EXIT_DISAGREE


def test_poly_and_seq(capsys):
    assert run(capsys, "poly", "--m", "5")[1] == "1 -7 13 -7 1\n"
    assert run(capsys, "poly", "--m", "5", "--power", "2")[1] == "1 -23 73 -23 1\n"
    assert run(capsys, "poly", "--m", "3", "--kind", "g")[1] == "1 -4 4 -1\n"
    assert run(capsys, "seq", "delannoy", "--row", "6")[1] == "1 11 41 63 41 11 1\n"
    assert run(capsys, "seq", "pell", "--upto", "5")[1] == "1 2 5 12 29\n"
    assert run(capsys, "seq", "lucas", "--k", "0")[1] == "2\n"
    assert run(capsys, "seq", "fib", "--k", "4", "--json")[1].split() == ['[', '"3"', ']']


def test_g(capsys):
    code, out, _ = run(capsys, "g", "--m", "5", "--n", "4", "--json")
    assert json.loads(out) == {"m": 5, "n": 4, "g": "3509", "cofactor": "29",
                               "square_witness": "11"}


def test_color_and_hk(capsys):
    code, out, _ = run(capsys, "color", "--m", "3", "--n", "2", "--p", "5", "--json")
    data = json.loads(out)
    assert data["nullspace_dimension"] == 2 and len(data["colorings"]) == 4
    code, out, _ = run(capsys, "hk", "--m", "5", "--n", "2", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["heterogeneous"] and data["p"] == 29
    code, out, _ = run(capsys, "hk", "--m", "3", "--n", "4")
    assert code == EXIT_OK and "not applicable" in out
    code, out, _ = run(capsys, "hk", "--m", "3", "--n", "4", "--p", "5")
    assert code == EXIT_OK
    assert run(capsys, "hk", "--m", "3", "--n", "2", "--p", "3")[0] == EXIT_USAGE


def test_hk_skips_large_prime(capsys):
    # P_29 is prime and far above the enumeration threshold
    code, out, _ = run(capsys, "hk", "--m", "29", "--n", "2", "--json")
    assert code == EXIT_OK and json.loads(out)["status"] == "skipped"


def test_graph_and_diagram(capsys):
    code, out, _ = run(capsys, "graph", "--m", "3", "--n", "4", "--trees", "--json")
    data = json.loads(out)
    assert data["vertices"] == 5 and data["spanning_trees"] == "45"
    code, out, _ = run(capsys, "graph", "--m", "3", "--n", "2", "--trees")
    assert "spanning trees: 5" in out
    code, out, _ = run(capsys, "diagram", "--m", "3", "--n", "2")
    assert json.loads(out)["crossings"] == [[0, 1, 2], [3, 0, 1], [2, 3, 0], [1, 2, 3]]


def test_prime(capsys):
    assert run(capsys, "prime", "5741")[1] == "prime\n"
    assert run(capsys, "prime", "169")[1] == "composite (factor 13)\n"
    code, out, _ = run(capsys, "prime", str(2**89 - 1))
    assert out.startswith("probable-prime")
    assert run(capsys, "prime", "abc")[0] == EXIT_USAGE
    assert run(capsys, "prime", "-3")[0] == EXIT_USAGE
    assert run(capsys, "pell-primes", "--max-m", "13")[1] == "2 3 5 11 13\n"


def test_verify_gdet(capsys):
    code, out, _ = run(capsys, "verify-gdet", "--max-m", "5", "--max-n", "4", "--json")
    rows = json.loads(out)
    assert code == EXIT_OK
    assert {(r["m"], r["n"]) for r in rows} == {(3, 2), (3, 4), (5, 2), (5, 3), (5, 4)}
    assert all(isinstance(r["det"], str) and r["agree"] for r in rows)


def test_survey_formats(capsys):
    code, csv_out, _ = run(capsys, "survey", "--max-m", "4", "--max-n", "3", "--format", "csv",
                           "--workers", "1")
    assert code == EXIT_OK
    assert csv_out.splitlines()[0] == "m,n,components,determinant,g_value,agree,det_prime,hk_status"
    assert csv_out.splitlines()[1] == "2,2,2,2,,,prime,not-applicable"  # Hopf link
    code, again, _ = run(capsys, "survey", "--max-m", "4", "--max-n", "3", "--format", "csv",
                         "--workers", "1")
    assert again == csv_out


@pytest.mark.parametrize("argv", [
    ["det", "--m", "1", "--n", "2"],
    ["det", "--m", "3"],
    ["det", "--m", "3", "--n", "2", "--bogus"],
    ["g", "--m", "4", "--n", "3"],
    ["seq", "delannoy"],
    ["seq", "pell"],
    ["nope"],
])
def test_usage_errors(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_USAGE


def test_io_error(monkeypatch):
    class Broken:
        def write(self, text):
            raise BrokenPipeError("closed")

        def flush(self):
            pass

    monkeypatch.setattr(sys, "stdout", Broken())
    assert main(["survey", "--max-m", "2", "--max-n", "2", "--workers", "1"]) == EXIT_IO


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "turkshead.cli", "det", "--m", "3", "--n", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "121\n"
    proc = subprocess.run([sys.executable, "-m", "turkshead.cli", "det", "--m", "0", "--n", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
