"""Acceptance gate: twelve pinned criteria, one printed line each.

Each test prints ``[criterion NN] PASS/FAIL <label>: <detail>`` (visible
under ``pytest -s``) and then asserts.  Tolerances are literal here on
purpose — they are the acceptance contract, independent of the defaults
wired into the campaign registry.
"""

import subprocess
import sys

import numpy as np
import pytest

from pauliq.checks import RunConfig, run_suite
from pauliq.lorentz import (
    LIMIT_KINDS,
    Event,
    boost_event,
    einstein_add,
    interval_of,
    make_boost,
    rotational_limit,
)
from pauliq.reflsum import compose_velocities, mag_sq, reciprocal, refl_sum

TRIALS = 1000
SEED = 42


@pytest.fixture(scope="module")
def campaign():
    report = run_suite("all", RunConfig(trials=TRIALS, seed=SEED))
    return {r.name: r for r in report.results}


def _criterion(num: int, label: str, ok: bool, detail: str) -> None:
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} {label}: {detail}")
    assert ok, f"criterion {num} failed — {label}: {detail}"


def _dev(campaign, name):
    result = campaign[name]
    assert result.trials >= TRIALS
    return result.max_deviation


def test_criterion_01_product_associativity(campaign):
    dev = _dev(campaign, "associativity")
    _criterion(
        1,
        "product associativity over 1000 seeded complex triples",
        dev <= 1e-12,
        f"max deviation {dev:.3e} <= 1e-12",
    )


def test_criterion_02_conjugation_and_norm(campaign):
    dev_conj = _dev(campaign, "anti_homomorphism")
    dev_norm = _dev(campaign, "norm_multiplicativity")
    _criterion(
        2,
        "conjugation anti-homomorphism and square-norm multiplicativity",
        dev_conj <= 1e-12 and dev_norm <= 1e-12,
        f"conj(AB)-conj(B)conj(A) {dev_conj:.3e}, "
        f"N(AB)-N(A)N(B) {dev_norm:.3e}, both <= 1e-12",
    )


def test_criterion_03_reflection_sum_associativity(campaign):
    dev = _dev(campaign, "refl_associativity")
    _criterion(
        3,
        "reflection-symmetric sum associativity on the 0.9-ball",
        dev <= 1e-12,
        f"max deviation {dev:.3e} <= 1e-12",
    )


def test_criterion_04_symmetry_relation(campaign):
    dev = _dev(campaign, "symmetry_relation")

    # hand-verified configuration 1: everything collinear
    a1, b1, g1 = (0.5, 0.0, 0.0), (0.25, 0.0, 0.0), (1.0, 0.0, 0.0)
    lhs1 = refl_sum(reciprocal(a1, g1, "+"), reciprocal(b1, g1, "-")).value
    rhs1 = refl_sum(a1, b1).value
    exact1 = np.array_equal(lhs1, rhs1)

    # hand-verified configuration 2: a x-hat (+) b y-hat with probe x-hat + y-hat
    a2, b2, g2 = (0.5, 0.0, 0.0), (0.0, 0.25, 0.0), (1.0, 1.0, 0.0)
    lhs2 = refl_sum(reciprocal(a2, g2, "+"), reciprocal(b2, g2, "-")).value
    rhs2 = refl_sum(a2, b2).value
    expected2 = np.array([0.5, 0.25, 0.125j])
    exact2 = np.array_equal(lhs2, expected2) and np.array_equal(rhs2, expected2)

    _criterion(
        4,
        "reciprocal-pair symmetry relation",
        dev <= 1e-10 and exact1 and exact2,
        f"max deviation {dev:.3e} <= 1e-10; "
        f"collinear config exact: {exact1}; planar config exact: {exact2}",
    )


def test_criterion_05_unit_magnitude_closure(campaign):
    dev = _dev(campaign, "unit_magnitude_closure")
    _criterion(
        5,
        "composition with a unit vector keeps unconjugated magnitude 1",
        dev <= 1e-12,
        f"max |mag_sq - 1| = {dev:.3e} <= 1e-12",
    )


def test_criterion_06_einstein_magnitude_agreement(campaign):
    dev = _dev(campaign, "einstein_magnitude_agreement")
    _criterion(
        6,
        "composed magnitude matches the Einstein-addition oracle",
        dev <= 1e-12,
        f"max relative deviation {dev:.3e} <= 1e-12",
    )


def test_criterion_07_interval_invariance(campaign):
    dev = _dev(campaign, "interval_invariance")

    rotor = make_boost((0.6, 0.0, 0.0))
    moved = boost_event(rotor, Event(0.0, (0.0, 1.0, 0.0)))
    expected = np.array([0.0, 1.25, -0.75j])
    example_ok = (
        bool(np.all(moved.x_prime == expected))
        and moved.t_prime == 0.0
        and abs(interval_of(moved) - (-1.0)) <= 1e-12
    )

    _criterion(
        7,
        "boost preserves the interval",
        dev <= 1e-10 and example_ok,
        f"max relative deviation {dev:.3e} <= 1e-10; worked example "
        f"x' = (0, 1.25, -0.75i) with interval -1: {example_ok}",
    )


def test_criterion_08_collinear_composition():
    v = (0.5, 0.0, 0.0)
    w_refl = compose_velocities((-0.5, 0.0, 0.0), v)
    w_einstein = einstein_add(v, v)
    dev_refl = float(np.max(np.abs(w_refl - np.array([0.8, 0.0, 0.0]))))
    dev_einstein = float(np.max(np.abs(w_einstein - np.array([0.8, 0.0, 0.0]))))
    _criterion(
        8,
        "collinear composition 0.5 (+) 0.5 = 0.8 under both laws",
        dev_refl <= 1e-15 and dev_einstein <= 1e-15,
        f"reflection law off by {dev_refl:.3e}, "
        f"Einstein law off by {dev_einstein:.3e}, both <= 1e-15",
    )


def test_criterion_09_matrix_representation(campaign):
    dev_hom = _dev(campaign, "representation_homomorphism")
    dev_det = _dev(campaign, "det_matches_square_norm")
    dev_table = campaign["basis_product_table"].max_deviation
    _criterion(
        9,
        "2x2 matrix representation",
        dev_hom <= 1e-12 and dev_det <= 1e-12 and dev_table == 0.0,
        f"homomorphism {dev_hom:.3e} <= 1e-12, det-vs-norm {dev_det:.3e} "
        f"<= 1e-12, 16 basis products exact: {dev_table == 0.0}",
    )


def test_criterion_10_rotational_limit(campaign):
    ratios = []
    for kind in LIMIT_KINDS:
        devs = [
            rotational_limit(kind, (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), 1.0, c).deviation()
            for c in (1e-1, 1e-2, 1e-3)
        ]
        ratios.extend(devs[i] / devs[i + 1] for i in range(len(devs) - 1))
    in_window = all(8.0 <= r <= 12.0 for r in ratios)
    dev_mn = _dev(campaign, "mn_orthogonality")
    _criterion(
        10,
        "small-c products converge to their rotations at first order",
        in_window and dev_mn <= 1e-14,
        f"per-decade ratios {[f'{r:.2f}' for r in ratios]} all in [8, 12]; "
        f"axis orthogonality m.n {dev_mn:.3e} <= 1e-14",
    )


def test_criterion_11_reciprocals(campaign):
    dev_pair = _dev(campaign, "reciprocity")
    shortfall = campaign["reciprocal_limit_convergence"].max_deviation
    _criterion(
        11,
        "reciprocal vectors pair to 1 and are the large-scale sum limit",
        dev_pair <= 1e-13 and shortfall == 0.0,
        f"max |rec.a - 1| = {dev_pair:.3e} <= 1e-13; "
        f"O(1/scale) ratio-window shortfall over scales 1e3-1e5: {shortfall}",
    )


def test_criterion_12_cli_determinism():
    argv = [
        sys.executable, "-m", "pauliq",
        "check", "all", "--seed", "42", "--trials", "1000", "--format", "json",
    ]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    identical = first.stdout == second.stdout
    _criterion(
        12,
        "check all --seed 42 --trials 1000 --format json is deterministic",
        first.returncode == 0 and second.returncode == 0 and identical,
        f"exit codes ({first.returncode}, {second.returncode}), "
        f"stdout byte-identical across runs: {identical}",
    )
