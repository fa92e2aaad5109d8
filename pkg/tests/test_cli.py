"""Command-line contract tests.

Most cases drive ``pauliq.cli.main`` in-process (fast, same contract); a
couple of end-to-end cases run the real interpreter to pin exit codes and
byte-level determinism.
"""

import json
import os
import subprocess
import sys

import pytest

from pauliq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_proc(*argv, backend="numpy"):
    env = dict(os.environ, PAULIQ_BACKEND=backend)
    return subprocess.run(
        [sys.executable, "-m", "pauliq", *argv],
        capture_output=True,
        text=True,
        env=env,
    )


# ---------------------------------------------------------------------------
# add

def test_add_collinear_both_laws_agree(capsys):
    code, out, _ = run_cli(
        capsys, "add", "--v", "0.5,0,0", "--u", "0.5,0,0", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    refl, einstein = payload["results"]
    assert refl["law"] == "refl" and einstein["law"] == "einstein"
    for res in (refl, einstein):
        assert abs(res["w"][0]["re"] - 0.8) <= 1e-15
        assert res["w"][1] == {"re": 0.0, "im": 0.0}
        assert abs(res["mag_sq"]["re"] - 0.64) <= 1e-15
    assert payload["magnitude_difference"] <= 1e-15


def test_add_perpendicular_has_imaginary_component(capsys):
    code, out, _ = run_cli(
        capsys, "add", "--v", "0.5,0,0", "--u", "0,1,0", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    refl, einstein = payload["results"]
    assert abs(refl["w"][2]["im"] - 0.5) <= 1e-15
    assert einstein["w"][2] == {"re": 0.0, "im": 0.0}
    assert abs(refl["mag_sq"]["re"] - 1.0) <= 1e-12
    assert abs(einstein["mag_sq"]["re"] - 1.0) <= 1e-12
    assert payload["magnitude_difference"] <= 1e-12


def test_add_single_law_table(capsys):
    code, out, _ = run_cli(capsys, "add", "--v", "0.5,0,0", "--u", "0.5,0,0", "--law", "refl")
    assert code == 0
    assert "einstein" not in out
    assert "0.8+0i" in out
    assert "magnitude difference" not in out


def test_add_csv_columns(capsys):
    code, out, _ = run_cli(
        capsys, "add", "--v", "0.5,0,0", "--u", "0,1,0", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "law,wx_re,wx_im,wy_re,wy_im,wz_re,wz_im,mag_sq_re,mag_sq_im"
    assert len(lines) == 3
    assert lines[1].startswith("refl,")


def test_add_superluminal_exit_2(capsys):
    code, _, err = run_cli(capsys, "add", "--v", "1.5,0,0", "--u", "0,0,0")
    assert code == 2
    assert "SuperluminalInput" in err


# ---------------------------------------------------------------------------
# boost

def test_boost_worked_example(capsys):
    code, out, _ = run_cli(
        capsys, "boost", "--v", "0.6,0,0", "--t", "0", "--x", "0,1,0",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["input"]["gamma"] == 1.25
    assert payload["input"]["interval"] == -1.0
    quat, le = payload["results"]
    assert quat["method"] == "quat"
    assert quat["t_prime"] == 0.0
    assert quat["x_prime"][1] == {"re": 1.25, "im": 0.0}
    assert quat["x_prime"][2] == {"re": 0.0, "im": -0.75}
    assert quat["interval"] == {"re": -1.0, "im": 0.0}
    assert le["x_prime"][1] == {"re": 1.0, "im": 0.0}
    assert le["interval"]["re"] == -1.0
    assert payload["spin_term"][2] == {"re": 0.0, "im": -0.75}


def test_boost_method_filter(capsys):
    code, out, _ = run_cli(
        capsys, "boost", "--v", "0.6,0,0", "--t", "1", "--x", "0,0,0",
        "--method", "le", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert [r["method"] for r in payload["results"]] == ["le"]


def test_boost_mismatched_speeds_guarded_by_shared_c(capsys):
    # the CLI builds rotor and event from one --c flag, so a superluminal
    # boost is the reachable failure mode
    code, _, err = run_cli(
        capsys, "boost", "--v", "2.5,0,0", "--t", "0", "--x", "0,1,0", "--c", "2"
    )
    assert code == 2
    assert "SuperluminalInput" in err


def test_boost_invalid_vector_exit_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["boost", "--v", "1,2", "--t", "0", "--x", "0,0,0"])
    assert excinfo.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# check

def test_check_pass_exit_0(capsys):
    code, out, _ = run_cli(
        capsys, "check", "reflsum", "--trials", "20", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert {r["suite"] for r in payload["results"]} == {"reflsum"}


def test_check_failure_exit_1(capsys):
    code, out, _ = run_cli(
        capsys, "check", "biquat", "--trials", "10",
        "--tolerance", "associativity=0",
    )
    assert code == 1
    assert "FAIL" in out


def test_check_unknown_tolerance_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "check", "biquat", "--tolerance", "wibble=1"
    )
    assert code == 2
    assert "wibble" in err and "associativity" in err


def test_check_suite_flag_and_positional_conflict(capsys):
    code, _, err = run_cli(capsys, "check", "biquat", "--suite", "lorentz")
    assert code == 2
    assert "conflicting" in err
    code, out, _ = run_cli(
        capsys, "check", "--suite", "matrix", "--trials", "10", "--format", "json"
    )
    assert code == 0
    assert {r["suite"] for r in json.loads(out)["results"]} == {"matrix"}


def test_check_seed_changes_output(capsys):
    _, out1, _ = run_cli(capsys, "check", "biquat", "--trials", "20", "--format", "csv")
    _, out2, _ = run_cli(
        capsys, "check", "biquat", "--trials", "20", "--seed", "7", "--format", "csv"
    )
    assert out1 != out2


def test_check_rejects_bad_trials(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["check", "--trials", "0"])
    assert excinfo.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# limit

def test_limit_deviations_fall_one_decade_per_decade(capsys):
    code, out, _ = run_cli(
        capsys, "limit", "--x", "1,0,0", "--v", "0,1,0", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert [k["kind"] for k in payload["kinds"]] == ["reflection", "lorentz_einstein"]
    for kind in payload["kinds"]:
        devs = [row["deviation"] for row in kind["rows"]]
        assert devs == sorted(devs, reverse=True)
        for ratio in kind["ratios"]:
            assert 8.0 <= ratio <= 12.0
    refl = payload["kinds"][0]
    assert refl["axis"] == [0.0, 0.0, -1.0]
    assert refl["cos_theta"] == 0.0


def test_limit_collinear_exit_2(capsys):
    code, _, err = run_cli(capsys, "limit", "--x", "1,0,0", "--v", "2,0,0")
    assert code == 2
    assert "CollinearInput" in err


def test_limit_custom_c_list(capsys):
    code, out, _ = run_cli(
        capsys, "limit", "--x", "1,0,0", "--v", "0,1,0", "--c", "0.5,0.05",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 2 * 2  # header + 2 kinds x 2 c values


# ---------------------------------------------------------------------------
# matrix

def test_matrix_known_element(capsys):
    code, out, _ = run_cli(
        capsys, "matrix", "--s", "1.25", "--v=-0.75,0,0", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"][0][0] == {"re": 1.25, "im": 0.0}
    assert payload["matrix"][0][1] == {"re": -0.75, "im": 0.0}
    assert payload["det"] == {"re": 1.0, "im": 0.0}
    assert payload["square_norm"] == {"re": 1.0, "im": 0.0}


def test_matrix_complex_components(capsys):
    code, out, _ = run_cli(
        capsys, "matrix", "--s", "0.5+0.5i", "--v", "0,1i,0", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    # vy = i contributes -i * i = +1 to m01 and i * i = -1 to m10
    assert payload["matrix"][0][1] == {"re": 1.0, "im": 0.0}
    assert payload["matrix"][1][0] == {"re": -1.0, "im": 0.0}


def test_matrix_table_shows_grid(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--s", "1", "--v", "0,0,0")
    assert code == 0
    assert out.count("[") == 2
    assert "det: 1+0i" in out


# ---------------------------------------------------------------------------
# end-to-end interpreter runs

def test_module_entrypoint_runs():
    proc = run_proc("check", "matrix", "--trials", "5", "--format", "csv")
    assert proc.returncode == 0
    assert proc.stdout.startswith("suite,property")


def test_console_script_runs():
    env = dict(os.environ, PAULIQ_BACKEND="numpy")
    proc = subprocess.run(
        ["pauliq", "check", "biquat", "--trials", "5", "--format", "csv"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("suite,property")


def test_json_output_byte_identical_across_runs():
    first = run_proc("check", "reflsum", "--trials", "10", "--format", "json")
    second = run_proc("check", "reflsum", "--trials", "10", "--format", "json")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    csv_first = run_proc("check", "reflsum", "--trials", "10", "--format", "csv")
    csv_second = run_proc("check", "reflsum", "--trials", "10", "--format", "csv")
    assert csv_first.stdout == csv_second.stdout
