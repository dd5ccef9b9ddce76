import logging

import numpy as np
import pytest

from cdprlqg.base import errors
from cdprlqg.graph import ChainGraph, ConditionalGain, solve_linear_chain
from cdprlqg.model import linearize_measurement
from cdprlqg.synthesis import (
    CdprPlant, GainSchedule, IlqrOptions, IlqrResult, KalmanStep, LinearPlant,
    LqgWeights, assemble_schedule, gravity_compensation,
    ilqr_nominal, ilqr_solve, linearize_nominal, load_schedule, save_schedule,
    schedule_digest, synthesize_kf, synthesize_lqr, synthesize_schedule
)
from cdprlqg.synthesis.io import HEADER, RECORD_SIZE
from cdprlqg.trajectory import load_trajectory, save_trajectory


def test_weights_are_squared_deviations():
    weights = LqgWeights()
    np.testing.assert_allclose(np.diag(weights.Sigma_meas)[:4], 0.0018**2)
    np.testing.assert_allclose(np.diag(weights.Sigma_torque), 0.059**2)
    assert weights.Sigma_0[0, 0] == pytest.approx(np.deg2rad(5.7)**2)
    np.testing.assert_array_equal(weights.Qf, weights.Q)


def test_weights_validation():
    with pytest.raises(errors.InvalidConfig) as info:
        LqgWeights(r_diag=(1.0, 1.0, 0.0, 1.0))
    assert info.value.key == "weights.r_diag"


def test_options_validation():
    with pytest.raises(errors.InvalidConfig) as info:
        IlqrOptions(line_search_shrink=1.5)
    assert info.value.key == "ilqr.line_search_shrink"
    with pytest.raises(errors.InvalidConfig) as info:
        IlqrOptions(substeps=0)
    assert info.value.key == "ilqr.substeps"


def test_hold_is_a_fixed_point(params, hold):
    nominal = ilqr_nominal(params, hold, LqgWeights())
    assert nominal.converged
    assert nominal.iterations <= 2
    assert nominal.final_cost < 1e-10
    assert nominal.tension_violations == 0

    expected = gravity_compensation(params, hold.poses[0])
    np.testing.assert_allclose(nominal.controls, np.tile(expected, (5, 1)), atol=1e-6)
    np.testing.assert_allclose(nominal.states, hold.states, atol=1e-9)


def test_cost_decreases_monotonically(params, short_move):
    nominal = ilqr_nominal(params, short_move, LqgWeights())
    history = np.array(nominal.cost_history)
    assert history.size >= 1
    assert np.all(np.diff(history) <= 0.0)
    assert nominal.converged
    assert nominal.states.shape == (len(short_move), 6)
    assert nominal.controls.shape == (len(short_move) - 1, 4)


def test_plant_substeps(params, center_pose):
    assert CdprPlant(params, 0.01).substeps == 5
    assert CdprPlant(params, 0.001).substeps == 1
    with pytest.raises(errors.InvalidParameter):
        CdprPlant(params, 0.01, substeps=0)

    state = np.concatenate([center_pose, np.zeros(3)])
    torques = gravity_compensation(params, center_pose)
    A, _, _ = CdprPlant(params, 0.01).linearize(state, torques)
    assert np.abs(np.linalg.eigvals(A)).max() < 1.01
    # A single RK4 step over the whole period is unstable.
    A, _, _ = CdprPlant(params, 0.01, substeps=1).linearize(state, torques)
    assert np.abs(np.linalg.eigvals(A)).max() > 1.5


def test_exported_nominal_reloads(tmp_path, params, short_move):
    nominal = ilqr_nominal(params, short_move, LqgWeights())
    path = str(tmp_path / "nominal.csv")
    save_trajectory(path, nominal.trajectory)
    loaded = load_trajectory(path)
    np.testing.assert_array_equal(loaded.controls[:-1], nominal.controls)
    np.testing.assert_array_equal(loaded.velocities, nominal.states[:, 3:])


def test_ilqr_is_exact_on_a_linear_plant(rng):
    n, m, N = 6, 4, 30
    A = np.eye(n) + 0.05*rng.standard_normal((n, n))
    B = 0.1*rng.standard_normal((n, m))
    c = 0.01*rng.standard_normal(n)
    Q = np.diag(rng.uniform(0.5, 2.0, n))
    R = np.diag(rng.uniform(0.5, 2.0, m))
    Qf = 2.0*Q
    x_ref = rng.standard_normal((N + 1, n))
    u_ref = rng.standard_normal((N, m))

    result = ilqr_solve(LinearPlant(A, B, c), x_ref, u_ref, np.zeros((N, m)), Q, R, Qf)
    assert result.converged
    assert result.iterations <= 3

    graph = ChainGraph.lqr_tracking(
        [A]*N, [B]*N, [Q]*N, list(x_ref[:-1]), [R]*N, list(u_ref), Qf,
        x_ref[-1], x_ref[0], c=[c]*N
    )
    states, controls = solve_linear_chain(graph)
    np.testing.assert_allclose(result.states, states, rtol=1e-8, atol=1e-8)
    np.testing.assert_allclose(result.controls, controls, rtol=1e-8, atol=1e-8)


def test_ilqr_rejects_empty_horizon():
    plant = LinearPlant(np.eye(2), np.eye(2))
    with pytest.raises(errors.InvalidParameter):
        ilqr_solve(
            plant, np.zeros((1, 2)), np.zeros((0, 2)), np.zeros((0, 2)),
            np.eye(2), np.eye(2), np.eye(2)
        )


def linear_nominal(rng, N=8):
    states = rng.standard_normal((N + 1, 6))
    controls = rng.standard_normal((N, 4))
    nominal = IlqrResult(
        states, controls, states.copy(), controls.copy(), 0.01, [0.0], 1, True
    )
    plant = LinearPlant(
        np.eye(6) + 0.1*rng.standard_normal((6, 6)), rng.standard_normal((6, 4))
    )
    return nominal, linearize_nominal(plant, states, controls)


def test_zero_state_weight_gives_zero_gains(rng):
    nominal, linearization = linear_nominal(rng)
    weights = LqgWeights(q_diag=np.zeros(6), qf_diag=np.zeros(6))
    gains = synthesize_lqr(nominal, weights, linearization, tracking=False)
    for gain in gains:
        np.testing.assert_array_equal(gain.K, np.zeros((4, 6)))


def test_non_stationary_nominal_warns(rng, caplog):
    nominal, linearization = linear_nominal(rng)
    # The rollout of the nominal does not match the plant, the gaps drive
    # non-zero feedforward terms.
    with caplog.at_level(logging.WARNING):
        gains = synthesize_lqr(nominal, LqgWeights(), linearization)
    assert max(np.linalg.norm(gain.k_ff) for gain in gains) > 1e-6
    assert "not stationary" in caplog.text


def fake_schedule_parts(rng, N, K=None, L=None):
    nominal, linearization = linear_nominal(rng, N)
    gaps = [0.01*rng.standard_normal(6) for _ in range(N)]
    linearization = linearization._replace(gaps=gaps)
    K = K if K is not None else [0.1*rng.standard_normal((4, 6)) for _ in range(N)]
    L = L if L is not None else [0.1*rng.standard_normal((6, 8)) for _ in range(N)]
    lqr_gains = [ConditionalGain(K[k], np.zeros(4), None, None) for k in range(N)]
    kf_steps = [
        KalmanStep(L[k], rng.standard_normal((8, 6)), rng.standard_normal(8), None, None)
        for k in range(N)
    ]
    return nominal, lqr_gains, kf_steps, linearization


def test_schedule_without_feedback_propagates_the_model(rng):
    N = 6
    zeros_K = [np.zeros((4, 6))]*N
    zeros_L = [np.zeros((6, 8))]*N
    parts = fake_schedule_parts(rng, N, zeros_K, zeros_L)
    schedule = assemble_schedule(*parts)
    linearization = parts[3]

    np.testing.assert_array_equal(schedule.P[0], np.eye(6))
    np.testing.assert_array_equal(schedule.c[0], np.zeros(6))
    for k in range(1, N):
        np.testing.assert_array_equal(schedule.P[k], linearization.A[k - 1])
        np.testing.assert_array_equal(schedule.c[k], linearization.gaps[k - 1])


def test_schedule_horizon_mismatch(rng):
    nominal, lqr_gains, kf_steps, linearization = fake_schedule_parts(rng, 5)
    with pytest.raises(errors.DimensionMismatch):
        assemble_schedule(nominal, lqr_gains[:4], kf_steps, linearization)


def test_schedule_lookup(rng):
    schedule = assemble_schedule(*fake_schedule_parts(rng, 10))
    assert schedule.duration == pytest.approx(0.1)

    lookup = schedule.at(0.0)
    assert (lookup.k, lookup.alpha, lookup.beyond_horizon) == (0, 0.0, False)

    # 0.03/0.01 is slightly below 3 in floating point.
    lookup = schedule.at(0.03)
    assert lookup.k == 3 and lookup.alpha == 0.0

    lookup = schedule.at(0.0345)
    assert lookup.k == 3 and lookup.alpha == pytest.approx(0.45)
    np.testing.assert_allclose(
        schedule.nominal_control(lookup),
        0.55*schedule.u_nom[3] + 0.45*schedule.u_nom[4]
    )

    lookup = schedule.at(0.095)
    assert lookup.k == 9 and lookup.alpha == 0.0 and not lookup.beyond_horizon

    lookup = schedule.at(0.2)
    assert lookup.k == 9 and lookup.beyond_horizon


def test_schedule_shape_check():
    with pytest.raises(errors.DimensionMismatch):
        GainSchedule(
            0.01, np.zeros((2, 6)), np.zeros((2, 4)), np.zeros((2, 8)),
            np.zeros((2, 4, 6)), np.zeros((2, 6, 8)), np.zeros((2, 6, 6)),
            np.zeros((3, 6))
        )


def test_hold_schedule(params, hold_schedule):
    schedule, nominal = hold_schedule
    assert schedule.horizon == 5
    assert schedule.dt == pytest.approx(0.01)
    np.testing.assert_allclose(schedule.x_nom, nominal.states[:5])
    H_0, _ = linearize_measurement(params, nominal.states[0])
    np.testing.assert_allclose(schedule.P[0], np.eye(6) - schedule.L[0] @ H_0, atol=1e-12)
    assert np.abs(schedule.K).max() > 0.0
    assert np.abs(schedule.L).max() > 0.0


def test_schedule_kalman_covariances(params, hold):
    nominal = ilqr_nominal(params, hold, LqgWeights())
    linearization = linearize_nominal(
        CdprPlant(params, hold.dt), nominal.states, nominal.controls
    )
    steps = synthesize_kf(params, nominal, LqgWeights(), linearization)
    assert len(steps) == nominal.horizon
    # The prior of step 0 is the initial covariance.
    np.testing.assert_allclose(
        steps[0].Sigma_prior, LqgWeights().Sigma_0 + 1e-12*np.eye(6), atol=1e-15
    )
    for step in steps:
        diff = step.Sigma_prior - step.Sigma_post
        assert np.linalg.eigvalsh(diff).min() > -1e-9


def test_schedule_file_round_trip(tmp_path, hold_schedule):
    schedule, _ = hold_schedule
    path = str(tmp_path / "hold.gs")
    save_schedule(path, schedule)
    assert (tmp_path / "hold.gs").stat().st_size == HEADER.size + 5*RECORD_SIZE
    assert load_schedule(path).equals(schedule)


def test_schedule_synthesis_is_deterministic(tmp_path, params, hold, hold_schedule):
    again, _ = synthesize_schedule(params, hold, LqgWeights())
    a, b = str(tmp_path / "a.gs"), str(tmp_path / "b.gs")
    save_schedule(a, hold_schedule[0])
    save_schedule(b, again)
    assert schedule_digest(a) == schedule_digest(b)


def corrupt(path, offset, data):
    raw = bytearray(open(path, "rb").read())
    raw[offset:offset + len(data)] = data
    with open(path, "wb") as file:
        file.write(bytes(raw))


def test_schedule_bad_magic(tmp_path, hold_schedule):
    path = str(tmp_path / "hold.gs")
    save_schedule(path, hold_schedule[0])
    corrupt(path, 0, b"XXXX")
    with pytest.raises(errors.FormatError) as info:
        load_schedule(path)
    assert info.value.offset == 0


def test_schedule_bad_version(tmp_path, hold_schedule):
    path = str(tmp_path / "hold.gs")
    save_schedule(path, hold_schedule[0])
    corrupt(path, 8, (99).to_bytes(4, "little"))
    with pytest.raises(errors.FormatError) as info:
        load_schedule(path)
    assert info.value.offset == 8


def test_schedule_truncated(tmp_path, hold_schedule):
    path = str(tmp_path / "hold.gs")
    save_schedule(path, hold_schedule[0])
    raw = open(path, "rb").read()
    with open(path, "wb") as file:
        file.write(raw[:-10])
    with pytest.raises(errors.FormatError) as info:
        load_schedule(path)
    assert info.value.offset == HEADER.size + 4*RECORD_SIZE


def test_schedule_trailing_bytes(tmp_path, hold_schedule):
    path = str(tmp_path / "hold.gs")
    save_schedule(path, hold_schedule[0])
    with open(path, "ab") as file:
        file.write(b"\0")
    with pytest.raises(errors.FormatError) as info:
        load_schedule(path)
    assert info.value.offset == HEADER.size + 5*RECORD_SIZE


def test_schedule_non_finite_value(tmp_path, hold_schedule):
    path = str(tmp_path / "hold.gs")
    save_schedule(path, hold_schedule[0])
    offset = HEADER.size + RECORD_SIZE + 8*7
    corrupt(path, offset, np.array([np.nan], dtype="<f8").tobytes())
    with pytest.raises(errors.FormatError) as info:
        load_schedule(path)
    assert info.value.offset == offset


def test_schedule_missing_file(tmp_path):
    with pytest.raises(errors.FileError) as info:
        load_schedule(str(tmp_path / "missing.gs"))
    assert info.value.exit_code == 1
