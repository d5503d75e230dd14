import json

import pytest

from tensorclass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_tensor_json(capsys):
    code, out, _ = run(capsys, "classify", '{"order": 3, "entries": {"a": 1, "b": 2, "c": 4, "d": 8}}')
    assert code == 0
    assert out.strip() == "complex: Type 2, real: Type 2, signature: (2 classes, 1 zero)"


def test_classify_pde(capsys):
    code, out, _ = run(capsys, "classify", "U_xxxx + U_yyyy = Phi")
    assert code == 0
    assert out.strip() == "Type 3, canonical: ∂x⁴U+6μ∂x²∂y²U+∂y⁴U = Φ with μ=0"


@pytest.mark.parametrize("mode", ["exact", "float"])
def test_classify_json_output(capsys, mode):
    code, out, _ = run(capsys, "classify", "quartic:1,0,0,0,-1", "--mode", mode, "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["complexType"], data["realType"], data["method"]) == (3, 5, "spectral")
    assert data["signature"] == {"classes": 4, "zeros": 0, "degenerate": False}


def test_classify_file_input(capsys, tmp_path):
    path = tmp_path / "form.json"
    path.write_text('{"degree": 3, "coeffs": [1, 0, -3, 0]}')
    code, out, _ = run(capsys, "classify", str(path), "--mode", "exact")
    assert code == 0 and "real: Type 4" in out


def test_eigenpairs(capsys):
    code, out, _ = run(capsys, "eigenpairs", "cubic:9,18,18,9", "--mode", "exact")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "3 classes" and len(lines) == 4
    assert any(line.startswith("(27, (1, 1))") for line in lines)


def test_eigenpairs_infinite(capsys):
    assert run(capsys, "eigenpairs", "quartic:1,0,2,0,1")[1].strip() == "infinite (degenerate: Q ≡ 0)"
    assert run(capsys, "eigenpairs", "cubic:0,0,0,0")[1].strip() == "infinite"


def test_canonical(capsys):
    code, out, _ = run(capsys, "canonical", "--order", "4", "--domain", "real", "--type", "9")
    assert code == 0 and out.strip().splitlines()[1] == "coeffs: 1, 0, 2, 0, 1"
    code, out, _ = run(capsys, "canonical", "--order", "4", "--type", "3", "--mu", "1/2", "--json")
    assert json.loads(out)["coeffs"] == ["1", "0", "3", "0", "1"]


def test_transform(capsys):
    code, out, _ = run(capsys, "transform", "cubic:1,0,0,0", "--p", "[[1,1],[0,1]]", "--mode", "exact")
    assert code == 0 and out.strip().splitlines()[1] == "coeffs: 1, 3, 3, 1"
    code, out, _ = run(capsys, "transform", "U_xxx = Phi", "--p", "1,1,0,1", "--mode", "exact")
    assert out.strip() == "U_xxx + 3*U_xxy + 3*U_xyy + U_yyy = Phi"


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "{not json"],
        ["classify", "U_xxq = Phi"],
        ["classify", "cubic:1,2"],
        ["canonical", "--order", "3", "--type", "99"],
        ["canonical", "--order", "4", "--type", "3"],
        ["transform", "cubic:1,0,0,0", "--p", "1,2,2,4"],
        ["transform", "U_xxx", "--p", "1,i,0,1"],
        ["classify", "cubic:1,0,0,1", "--trials", "0"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error: ")


def test_ambiguity_exits_3(capsys):
    code, _, err = run(capsys, "classify", "quartic:1,0,2.00000001,0,1")
    assert code == 3 and "BoundaryAmbiguity" in err


def test_orbit_check_agrees(capsys):
    code, out, _ = run(capsys, "orbit-check", "cubic:1,0,-3,0", "--trials", "30")
    assert code == 0
    assert "real: 30/30 real Type 4" in out and out.strip().endswith("agreement: full")


def test_orbit_check_degenerate_fallback(capsys):
    code, out, _ = run(capsys, "orbit-check", "quartic:0,0,6,0,0", "--trials", "20", "--json")
    data = json.loads(out)
    assert code == 0 and data["agreement"]
    assert all(b["agree"] == 20 for b in data["batches"])


def test_orbit_check_disagreement_exits_4(capsys):
    code, out, _ = run(capsys, "orbit-check", "quartic:1,0,-1e-6,0,0", "--eps-root", "1e-4", "--trials", "30")
    assert code == 4
    assert "counterexample: batch=" in out and "P=[[" in out


def test_output_is_deterministic(capsys):
    argv = ["orbit-check", "quartic:1,0,0,0,1", "--trials", "10", "--seed", "5", "--json"]
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first
    other = run(capsys, *argv[:-3], "--seed", "6", "--json")
    assert other[0] == 0


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out.startswith("tensorclass ")
