import json

import numpy as np
import pytest

from specrad import NonnegativeTensor
from specrad.cli import main
from specrad.errors import TensorFormatError
from specrad.tensorfile import parse_tensor, render_tensor

from fixtures import BLOCK_DIAG_3, STRICT_NOT_WEAKLY_IRRED, SYMMETRIC_REDUCIBLE


def _write(tmp_path, T, name="t.txt"):
    path = tmp_path / name
    path.write_text(render_tensor(T))
    return str(path)


def test_render_parse_round_trip():
    for T in (BLOCK_DIAG_3, SYMMETRIC_REDUCIBLE, NonnegativeTensor(4, 3)):
        back = parse_tensor(render_tensor(T))
        assert back.order == T.order and back.dim == T.dim
        assert back.entries == T.entries


def test_parse_comments_and_blanks():
    T = parse_tensor("# header comment\n\ntensor 3 2\n# entry\n1 2 2 1.5\n\n")
    assert T.entries == {(1, 2, 2): 1.5}


def test_parse_errors_carry_line_numbers():
    cases = [
        ("tensor 3\n", 1, "header"),
        ("tensor 3 2\n1 2 1.0\n", 2, "fields"),
        ("tensor 3 2\n1 2 3 1.0\n", 2, "out of range"),
        ("tensor 3 2\n1 2 2 -1.0\n", 2, "negative"),
        ("tensor 3 2\n1 2 2 1.0\n1 2 2 2.0\n", 3, "duplicate"),
        ("tensor 3 2\n1 x 2 1.0\n", 2, "non-integer"),
    ]
    for text, lineno, fragment in cases:
        with pytest.raises(TensorFormatError) as err:
            parse_tensor(text)
        assert err.value.line == lineno
        assert fragment in str(err.value)
    with pytest.raises(TensorFormatError):
        parse_tensor("# nothing here\n")


def test_cli_classify_table_and_machine(tmp_path, capsys):
    path = _write(tmp_path, STRICT_NOT_WEAKLY_IRRED)
    assert main(["classify", path]) == 0
    table = capsys.readouterr().out
    assert "strictly_nonnegative" in table and "True" in table
    assert main(["classify", path, "--format", "machine"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["profile"]["strictly_nonnegative"] is True
    assert report["profile"]["weakly_irreducible"] is False
    assert report["representation"] == [[0.0, 1.0], [0.0, 1.0]]


def test_cli_radius_machine(tmp_path, capsys):
    path = _write(tmp_path, BLOCK_DIAG_3)
    assert main(["radius", path, "--format", "machine"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["rho"] == pytest.approx(1.0 + np.sqrt(15.0), abs=1e-4)
    assert report["blocks"] == [[1, 2], [3]]
    assert report["assembled_vector"] == pytest.approx([0.4681, 0.5319, 0.0], abs=1e-3)
    assert "trace" not in report


def test_cli_radius_trace_table(tmp_path, capsys):
    path = _write(tmp_path, BLOCK_DIAG_3)
    assert main(["radius", path, "--trace"]) == 0
    out = capsys.readouterr().out
    assert "rho = 4.872983" in out
    assert "Blk  Ite" in out
    # per-iteration rows for both blocks are printed
    assert "  1    1" in out and "  2    1" in out


def test_cli_radius_deterministic(tmp_path, capsys):
    path = _write(tmp_path, BLOCK_DIAG_3)
    argv = ["radius", path, "--format", "machine", "--start", "random", "--seed", "9"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_cli_partition_modes(tmp_path, capsys):
    path = _write(tmp_path, SYMMETRIC_REDUCIBLE)
    assert main(["partition", path, "--format", "machine"]) == 0
    weak = json.loads(capsys.readouterr().out)
    assert weak["blocks"] == [[1, 2]]
    assert main(["partition", path, "--mode", "strong", "--format", "machine"]) == 0
    strong = json.loads(capsys.readouterr().out)
    assert strong["blocks"] == [[2], [1]]
    assert all(p["irreducible"] for p in strong["block_profiles"])


def test_cli_simulate_machine(capsys):
    argv = ["simulate", "--n", "3", "--density", "0.5", "--trials", "5", "--seed", "3",
            "--format", "machine"]
    assert main(argv) == 0
    row = json.loads(capsys.readouterr().out)
    assert row["n"] == 3 and row["trials"] == 5
    assert main(argv) == 0
    again = json.loads(capsys.readouterr().out)
    row.pop("wall_time"), again.pop("wall_time")
    assert row == again


def test_cli_oracle_with_grid(tmp_path, capsys):
    path = _write(tmp_path, SYMMETRIC_REDUCIBLE)
    assert main(["oracle", path, "--grid", "200", "--format", "machine"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["reducible"] is True
    assert report["reducible_witness"] == [1]
    assert report["weakly_reducible"] is False
    assert report["grid_lower_bound"] <= 1.0 + 8.0 * 2.0 ** (-1.0 / 3.0)


def test_cli_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("tensor 3 2\n1 2 2 oops\n")
    assert main(["classify", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err
    assert main(["classify", str(tmp_path / "missing.txt")]) == 2


def test_cli_nonconvergence_exit_code(tmp_path, capsys):
    path = _write(tmp_path, BLOCK_DIAG_3)
    assert main(["radius", path, "--max-iter", "1", "--tol", "1e-14"]) == 3
    err = capsys.readouterr().err
    assert "failing block [1, 2]" in err


def test_cli_oracle_guard_exit_code(tmp_path, capsys):
    T = NonnegativeTensor(3, 17, {(1, 2, 3): 1.0})
    path = _write(tmp_path, T)
    assert main(["oracle", path]) == 4
    assert "error" in capsys.readouterr().err
