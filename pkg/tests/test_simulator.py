import numpy as np
import pytest

from cdprlqg.base import errors
from cdprlqg.controller import (
    BaselineController, BaselineGains, Controller, ControllerOutput,
    LqgController
)
from cdprlqg.simulator import (
    NoiseConfig, SimLog, load_log, reference_states, rmsd_metrics, save_log,
    simulate
)
from cdprlqg.synthesis import (
    LqgWeights, gravity_compensation, synthesize_schedule
)
from cdprlqg.trajectory import diamond_reference, hold_reference


def reference_log(reference, offset=None, dt=0.001):
    """
    A log, which replays *reference* at the control rate, shifted by
    *offset*.
    """
    ticks = int(round(reference.duration/dt))
    t = np.arange(ticks)*dt
    states = reference_states(reference, t)
    if offset is not None:
        states = states + offset
    log = SimLog.allocate(dt, ticks)
    log.t[:] = t
    log.states[:] = states
    return log


def noisy(seed):
    """
    Measurement and torque noise, but no initial perturbation.
    """
    return NoiseConfig(initial_std=np.zeros(6), seed=seed)


class ConstantController(Controller):

    name = "constant"

    def __init__(self, torques, fail_at=None):
        self.torques = np.asarray(torques, dtype=float)
        self.fail_at = fail_at
        self.ticks = 0

    def reset(self):
        self.ticks = 0

    def step(self, t, z):
        self.ticks += 1
        if self.fail_at is not None and self.ticks > self.fail_at:
            return ControllerOutput(np.full(4, np.nan), None, 0)
        return ControllerOutput(self.torques, None, 0)


def test_noise_validation():
    with pytest.raises(errors.InvalidConfig) as info:
        NoiseConfig(meas_std_len=-1.0)
    assert info.value.key == "noise.meas_std_len"

    with pytest.raises(errors.InvalidConfig):
        NoiseConfig(seed=-1)


def test_same_seed_same_log(params, hold):
    controller = BaselineController(params, BaselineGains(), hold, 0.001)
    a = simulate(params, controller, hold, noisy(7))
    b = simulate(params, controller, hold, noisy(7))
    c = simulate(params, controller, hold, noisy(8))
    assert len(a) == 50
    assert a.equals(b)
    assert not a.equals(c)


def test_log_layout(params, hold):
    controller = BaselineController(params, BaselineGains(), hold, 0.001)
    log = simulate(params, controller, hold, NoiseConfig.zero())
    np.testing.assert_allclose(log.t, np.arange(50)*0.001)
    np.testing.assert_array_equal(log.states[0], hold.states[0])
    # The baseline has no estimate.
    assert np.all(np.isnan(log.estimates))
    assert np.all(log.flags == 0)


def test_gravity_compensation_holds_the_pose(params, hold):
    torques = gravity_compensation(params, hold.poses[0])
    log = simulate(params, ConstantController(torques), hold, NoiseConfig.zero())
    assert np.abs(log.states - hold.states[0]).max() < 1e-9


def test_lqg_tracks_the_nominal_without_noise(params, hold, hold_schedule):
    schedule, _ = hold_schedule
    log = simulate(params, LqgController(schedule), hold, NoiseConfig.zero())
    assert np.abs(log.states[:, 1:3] - hold.poses[0, 1:]).max() < 1e-3
    assert np.all(np.isfinite(log.estimates))
    assert np.all(log.flags == 0)


def test_lqg_rejects_the_initial_perturbation(params, hold, hold_schedule):
    schedule, _ = hold_schedule
    noise = NoiseConfig.zero().replace(initial_std=[0, 0.001, 0.001, 0, 0, 0], seed=3)
    log = simulate(params, LqgController(schedule), hold, noise)
    assert np.all(np.isfinite(log.states))


def test_substeps_converge_with_fourth_order(params, hold):
    torques = gravity_compensation(params, hold.poses[0]) + [0.01, 0.0, 0.0, 0.0]
    controller = ConstantController(torques)
    states = [
        simulate(
            params, controller, hold, NoiseConfig.zero(), {"substeps": substeps}
        ).states
        for substeps in (10, 20, 40)
    ]
    coarse = np.abs(states[0] - states[1]).max()
    fine = np.abs(states[1] - states[2]).max()
    assert coarse < 1e-6
    assert 12.0 < coarse/fine < 20.0


def test_divergence_is_reported_with_the_partial_log(params, hold):
    torques = gravity_compensation(params, hold.poses[0])
    with pytest.raises(errors.SimulationDiverged) as info:
        simulate(params, ConstantController(torques, fail_at=3), hold, NoiseConfig.zero())
    assert info.value.tick == 3
    # The failing tick is logged.
    assert len(info.value.log) == 4
    assert np.all(np.isnan(info.value.log.torques[3]))
    assert np.all(np.isnan(info.value.log.tensions[3]))
    assert np.all(np.isfinite(info.value.log.tensions[:3]))
    assert info.value.exit_code == 4


def test_rmsd_of_the_reference_is_zero(short_move):
    metrics = rmsd_metrics(reference_log(short_move), short_move, skip_initial=0.0)
    np.testing.assert_allclose(metrics, 0.0, atol=1e-12)


def test_rmsd_of_a_constant_offset(short_move):
    log = reference_log(short_move, offset=[0.0, 0.0, 0.005, 0.0, 0.0, 0.0])
    metrics = rmsd_metrics(log, short_move, skip_initial=0.0)
    np.testing.assert_allclose(metrics, [0.0, 0.0, 5.0, 0.0, 0.0, 0.0], atol=1e-9)


def test_rmsd_units(short_move):
    offset = [np.deg2rad(1.0), 0.001, 0.0, 0.0, 0.002, 0.0]
    metrics = rmsd_metrics(reference_log(short_move, offset), short_move, 0.0)
    np.testing.assert_allclose(metrics, [1.0, 1.0, 0.0, 0.0, 2.0, 0.0], atol=1e-9)


def test_rmsd_matches_streaming_sum(short_move, rng):
    log = reference_log(short_move)
    log.states[:] += 0.01*rng.standard_normal(log.states.shape)
    metrics = rmsd_metrics(log, short_move, skip_initial=0.2)

    ref = reference_states(short_move, log.t)
    total = np.zeros(6)
    count = 0
    for t, state, expected in zip(log.t, log.states, ref):
        if t >= 0.2:
            total += (state - expected)**2
            count += 1
    scale = np.array([180.0/np.pi, 1e3, 1e3, 180.0/np.pi, 1e3, 1e3])
    np.testing.assert_allclose(metrics, np.sqrt(total/count)*scale, rtol=1e-12)


def test_rmsd_center_box(short_move):
    log = reference_log(short_move, offset=[0.0, 0.0, 0.005, 0.0, 0.0, 0.0])
    x0 = short_move.poses[0, 1]
    box = (x0 + 0.05, short_move.poses[0, 2], 0.02, 0.02)
    metrics = rmsd_metrics(log, short_move, 0.0, center_box=box)
    assert metrics[2] == pytest.approx(5.0)

    with pytest.raises(errors.InvalidParameter):
        rmsd_metrics(log, short_move, 0.0, center_box=(0.0, 0.0, 0.01, 0.01))


def test_rmsd_empty_window(short_move):
    with pytest.raises(errors.InvalidParameter):
        rmsd_metrics(reference_log(short_move), short_move, skip_initial=100.0)


def test_log_round_trip(tmp_path, params, hold, hold_schedule):
    log = simulate(params, LqgController(hold_schedule[0]), hold, noisy(1))
    path = str(tmp_path / "lqg.csv")
    save_log(path, log)
    assert load_log(path).equals(log)

    controller = BaselineController(params, BaselineGains(), hold, 0.001)
    log = simulate(params, controller, hold, noisy(1))
    save_log(path, log)
    loaded = load_log(path)
    assert loaded.equals(log)
    assert np.all(np.isnan(loaded.estimates))


def test_load_log_rejects_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("t,x,y\n0,1,1\n")
    with pytest.raises(errors.FormatError) as info:
        load_log(str(path))
    assert info.value.line == 1


def test_simulate_rejects_zero_duration(params):
    reference = hold_reference([0.0, 1.42, 1.12], 0.0, 0.01)
    with pytest.raises(errors.InvalidParameter):
        simulate(params, ConstantController(np.ones(4)), reference, NoiseConfig.zero())



@pytest.mark.slow
def test_lqg_beats_the_baseline_on_a_small_diamond(params, center_pose):
    reference = diamond_reference(center_pose[1:], 0.3, 0.3, 1)
    schedule, nominal = synthesize_schedule(params, reference, LqgWeights())
    assert nominal.converged

    medians = dict()
    for kind in ("lqg", "baseline"):
        metrics = list()
        for seed in range(3):
            if kind == "lqg":
                controller = LqgController(schedule)
            else:
                controller = BaselineController(
                    params, BaselineGains(), reference, 0.001
                )
            log = simulate(params, controller, reference, NoiseConfig(seed=seed))
            metrics.append(rmsd_metrics(log, reference, skip_initial=1.0))
        medians[kind] = np.median(metrics, axis=0)

    # x and y in mm
    assert medians["lqg"][1] < medians["baseline"][1]
    assert medians["lqg"][2] < medians["baseline"][2]
