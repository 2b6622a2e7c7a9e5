import json
import subprocess
import sys

import pytest

from susy8v.cli import main
from susy8v.exact import parse
from susy8v.lattice import from_json, load, to_json

SEED = "-2*z^2*(z-1)*(z+1)^2*(2*z+1)/(z+2)^2"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_seed(capsys):
    code, out, _ = run(capsys, "compute", "t", "-k", "0", "-1", "-1", "0")
    assert code == 0 and parse(out.strip()) == parse(SEED)


def test_compute_worked_example(capsys):
    code, out, _ = run(capsys, "compute", "T", "-n", "0", "-k", "-2", "1", "0", "0", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["m"] == 1 and "x1" in data["text"]


def test_compute_Y(capsys):
    code, out, _ = run(capsys, "compute", "Y", "-k", "2")
    assert (code, out.strip()) == (0, "6")


def test_compute_family(capsys):
    code, out, _ = run(capsys, "compute", "family", "p_n", "-n", "1")
    assert code == 0 and out.strip()


def test_output_is_byte_identical(capsys):
    argv = ("compute", "t", "-k", "1", "1", "0", "0", "--format", "json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "t", "-k", "1", "0", "0", "0"),  # odd |k|
        ("compute", "t", "-k", "1", "0"),
        ("compute", "family", "nope", "-n", "1"),
        ("num", "verify", "--suite", "tz", "--digits", "10"),
        ("num", "verify", "--suite", "tz", "--tau", "0", "-1"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "q"])
    assert exc.value.code == 2


def test_size_bound_exits_4(capsys):
    assert run(capsys, "compute", "T", "-n", "9", "-k", "0", "0", "0", "0")[0] == 4


def test_lattice_build_json_round_trips(capsys):
    code, out, _ = run(capsys, "lattice", "build", "--box", "1", "--format", "json")
    store = from_json(json.loads(out))
    assert code == 0 and len(store) == 41
    assert store.get((0, -1, -1, 0)) == parse(SEED)


def test_lattice_build_and_verify(capsys, tmp_path):
    path = tmp_path / "box1.json"
    code, out, _ = run(capsys, "lattice", "build", "--box", "1", "--out", str(path))
    assert code == 0 and "41" in out
    first = path.read_bytes()
    run(capsys, "lattice", "build", "--box", "1", "--out", str(path))
    assert path.read_bytes() == first
    assert run(capsys, "lattice", "verify", "--in", str(path))[0] == 0


def test_lattice_verify_detects_tampering(capsys, tmp_path):
    data = to_json(load_box1())
    entry = next(e for e in data["entries"] if e["k"] == [0, -1, -1, 0])
    entry["num"] = [str(-int(c)) for c in entry["num"]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    assert run(capsys, "lattice", "verify", "--in", str(path))[0] == 3


def test_lattice_wrong_version(capsys, tmp_path):
    data = to_json(load_box1())
    data["version"] = 0
    path = tmp_path / "old.json"
    path.write_text(json.dumps(data))
    assert run(capsys, "lattice", "verify", "--in", str(path))[0] == 2


def load_box1():
    from susy8v.lattice import build

    return build(1)


def test_pvi_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "pvi", "q", "-l", "0", "0", "0", "0")
    assert code == 0 and parse(out.strip()) == parse("z*(z+2)/(2*z+1)")
    assert run(capsys, "pvi", "verify-evi", "-l", "1", "0", "-1", "0")[0] == 0
    assert run(capsys, "pvi", "factor-match", "-l", "-1", "-2", "3", "-1")[0] == 0


def test_pvi_factor_match_with_lattice(capsys, tmp_path):
    path = tmp_path / "box4.json"
    assert run(capsys, "lattice", "build", "--box", "4", "--out", str(path))[0] == 0
    assert run(capsys, "pvi", "factor-match", "-l", "-1", "-2", "3", "-1", "--lattice", str(path))[0] == 0
    small = tmp_path / "box1.json"
    run(capsys, "lattice", "build", "--box", "1", "--out", str(small))
    # cells missing from the file are a contract failure
    assert run(capsys, "pvi", "factor-match", "-l", "-1", "-2", "3", "-1", "--lattice", str(small))[0] == 3


def test_num_verify(capsys):
    code, out, _ = run(capsys, "num", "verify", "--suite", "tz", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "susy8v.cli", "compute", "Y", "-k", "-1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
