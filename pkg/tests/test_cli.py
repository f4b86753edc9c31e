import json

import pytest

from weylcremona.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_verify_coxeter_b2(capsys):
    rc, out, _ = run(capsys, "verify", "coxeter", "--cartan", "B2", "--u", "0,-2;1,0")
    assert rc == 0 and "(s0 s1)^4 = 1" in out


def test_bad_orientation_is_a_config_error(capsys):
    rc, _, err = run(capsys, "verify", "coxeter", "--cartan", "A:2", "--u", "0,1;1,0")
    assert rc == 2 and "clause (2)" in err


def test_unvalidated_orientation_fails_with_counterexample(capsys):
    rc, out, _ = run(capsys, "verify", "coxeter", "--cartan", "A:2", "--u", "0,1;1,0", "--mode", "none")
    assert rc == 1 and "[FAIL]" in out and "counterexample generator" in out


def test_cartan_error_exit_code(capsys):
    rc, _, err = run(capsys, "verify", "coxeter", "--cartan", "2,1;-1,2")
    assert rc == 2 and "C2" in err


def test_explicit_cartan_matrix(capsys):
    rc, out, _ = run(capsys, "verify", "coxeter", "--cartan", "2,-1;-1,2", "--u", "0,1;-1,0", "--mode", "thmA")
    assert rc == 0 and "(s0 s1)^3 = 1" in out


def test_formula_cocycle_json(capsys):
    rc, out, _ = run(capsys, "--format", "json", "formula", "cocycle", "--word", "s0 s1", "--weight", "L1")
    assert rc == 0
    assert json.loads(out) == {"value": "f0*f1 + a0", "weight": [0, 1, 0], "word": "s0 s1"}


def test_formula_t1_l2(capsys):
    rc, out, _ = run(capsys, "formula", "T1", "--l", "2")
    assert rc == 0
    assert "T1(f1) = f2 - a0/f0" in out
    assert "(a2 + a0)/(f2 - a0/f0)" in out


def test_formula_g_latex(capsys):
    rc, out, _ = run(capsys, "formula", "g", "--l", "2", "--k", "2", "--r", "1", "--format", "latex")
    assert rc == 0 and "\\frac{\\alpha_{2} + \\alpha_{0}}" in out


def test_orbit_csv_is_deterministic(capsys, tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["orbit", "T1", "--steps", "3", "--out", str(p1)]) == 0
    assert main(["orbit", "T1", "--steps", "3", "--out", str(p2)]) == 0
    capsys.readouterr()
    text = p1.read_text()
    assert text == p2.read_text()
    assert text.splitlines()[0] == "step,mu1,mu2,a0,a1,a2,f0,f1,f2"
    assert text.splitlines()[2] == "1,1,0,5/4,-3/4,1/2,87/44,11/4,14/11"


def test_orbit_dp2(capsys):
    rc, out, _ = run(capsys, "orbit", "dp2", "--steps", "5")
    assert rc == 0 and "[FAIL]" not in out


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.toml"
    cfg.write_text(
        '[root]\ncartan = "G2"\nu = [[0, "-3/2"], [1, 0]]\nmode = "thmA"\n\n[verify]\nsuites = ["coxeter"]\n'
    )
    rc, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert rc == 0 and "(s0 s1)^6 = 1" in out


def test_command_line_overrides_config(capsys, tmp_path):
    cfg = tmp_path / "run.toml"
    cfg.write_text('[root]\ncartan = "G2"\nu = [[0, -3], [1, 0]]\n')
    rc, out, _ = run(capsys, "verify", "coxeter", "--config", str(cfg), "--cartan", "B2", "--u", "0,-2;1,0")
    assert rc == 0 and "(s0 s1)^4 = 1" in out


def test_missing_config_is_error(capsys, tmp_path):
    rc, _, _ = run(capsys, "verify", "coxeter", "--config", str(tmp_path / "nope.toml"))
    assert rc == 2


def test_verify_json_output(capsys):
    rc, out, _ = run(capsys, "--format", "json", "verify", "dal", "--l", "2")
    assert rc == 0
    data = json.loads(out)
    assert data


def test_flow_integrate_csv(capsys, tmp_path):
    out = tmp_path / "t.csv"
    rc = main(["flow", "integrate", "--family", "A_even", "--n", "1", "--initial", "0.4,0.6,0.8",
               "--x", "0", "0.01", "--step", "0.001", "--out", str(out)])
    capsys.readouterr()
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("x,f0,f1,f2") and len(lines) == 12


def test_flow_continuum(capsys):
    rc, out, _ = run(capsys, "flow", "continuum")
    assert rc == 0 and "error ratio" in out


def test_scan_small(capsys, tmp_path):
    out = tmp_path / "scan.csv"
    rc = main(["scan-conjecture", "--l", "2", "--max-len", "2", "--out", str(out)])
    capsys.readouterr()
    assert rc == 0
    rows = out.read_text().splitlines()
    assert rows[0].startswith("word,k") and len(rows) == 1 + 3 * 10


@pytest.mark.parametrize("suite", ["shift", "sublattice", "w-action", "dp2", "integrals", "conservation", "backlund"])
def test_verify_suites(capsys, suite):
    rc, out, _ = run(capsys, "verify", suite)
    assert rc == 0, out
