import numpy as np
import pytest

from cdprlqg.controller import (
    FLAG_BEYOND_HORIZON, BaselineController, BaselineGains, CountingOpCounter,
    LqgController, baseline_step, initial_state, saturated_tension_distribution,
    tvlqg_step
)
from cdprlqg.graph import ConditionalGain
from cdprlqg.model import (
    cable_geometry, friction_torque, make_state, measurement_model
)
from cdprlqg.synthesis import (
    IlqrResult, KalmanStep, Linearization, assemble_schedule
)


class Parts(object):
    """
    A random schedule together with the matrices it was assembled from.
    """

    def __init__(self, rng, N=40, dt=0.01, zero_gaps=False, zero_K=False):
        self.N = N
        states = rng.standard_normal((N + 1, 6))
        controls = rng.standard_normal((N, 4))
        self.A = [0.9*np.eye(6) + 0.05*rng.standard_normal((6, 6)) for _ in range(N)]
        self.B = [0.1*rng.standard_normal((6, 4)) for _ in range(N)]
        self.gaps = [
            np.zeros(6) if zero_gaps else 0.01*rng.standard_normal(6)
            for _ in range(N)
        ]
        self.K = [
            np.zeros((4, 6)) if zero_K else 0.2*rng.standard_normal((4, 6))
            for _ in range(N)
        ]
        self.L = [0.05*rng.standard_normal((6, 8)) for _ in range(N)]
        self.H = [rng.standard_normal((8, 6)) for _ in range(N)]
        self.z_nom = [rng.standard_normal(8) for _ in range(N)]

        nominal = IlqrResult(states, controls, states, controls, dt, [0.0], 1, True)
        linearization = Linearization(self.A, self.B, [np.zeros(6)]*N, self.gaps)
        self.schedule = assemble_schedule(
            nominal,
            [ConditionalGain(K, np.zeros(4), None, None) for K in self.K],
            [
                KalmanStep(L, H, z, None, None)
                for L, H, z in zip(self.L, self.H, self.z_nom)
            ],
            linearization
        )
        return None

    def explicit(self, measurements, delta_xhat0):
        """
        Predict with the model, correct with the measurement, then apply
        the LQR feedback.
        """
        u_nom = self.schedule.u_nom
        estimate = delta_xhat0
        controls = list()
        for k, z in enumerate(measurements):
            if k == 0:
                prior = estimate
            else:
                du = -self.K[k - 1] @ estimate
                prior = self.A[k - 1] @ estimate + self.B[k - 1] @ du + self.gaps[k - 1]
            innovation = (z - self.z_nom[k]) - self.H[k] @ prior
            estimate = prior + self.L[k] @ innovation
            controls.append(u_nom[k] - self.K[k] @ estimate)
        return np.array(controls)


@pytest.mark.parametrize("seed", range(10))
def test_online_loop_matches_explicit_kalman_and_lqr(seed):
    rng = np.random.default_rng(seed)
    parts = Parts(rng)
    measurements = rng.standard_normal((parts.N, 8))
    delta_xhat0 = 0.1*rng.standard_normal(6)

    state = initial_state(delta_xhat0)
    controls = list()
    for k, z in enumerate(measurements):
        u, state = tvlqg_step(parts.schedule, state, z, k*parts.schedule.dt)
        controls.append(u)

    expected = parts.explicit(measurements, delta_xhat0)
    scale = np.abs(expected).max()
    np.testing.assert_allclose(controls, expected, rtol=1e-12, atol=1e-12*scale)


def test_operation_count(rng):
    parts = Parts(rng, N=5)
    ops = CountingOpCounter()
    state = initial_state()
    for k in range(parts.N):
        ops.reset()
        _, state = tvlqg_step(parts.schedule, state, rng.standard_normal(8), k*0.01, ops)
        assert (ops.matvecs, ops.adds) == (3, 3)

    # Between two records the measurement is summed up.
    ops.reset()
    _, state = tvlqg_step(parts.schedule, initial_state(), rng.standard_normal(8), 0.0)
    _, state = tvlqg_step(parts.schedule, state, rng.standard_normal(8), 0.005, ops)
    assert (ops.matvecs, ops.adds) == (1, 2)

    # The update after it adds the current measurement to the sum.
    ops.reset()
    _, state = tvlqg_step(parts.schedule, state, rng.standard_normal(8), 0.01, ops)
    assert (ops.matvecs, ops.adds) == (3, 4)


def test_estimate_is_held_between_records(rng):
    parts = Parts(rng, N=5)
    schedule = parts.schedule
    _, state = tvlqg_step(schedule, initial_state(), rng.standard_normal(8), 0.0)
    z = rng.standard_normal(8)
    u, held = tvlqg_step(schedule, state, z, 0.005)

    np.testing.assert_array_equal(held.delta_xhat, state.delta_xhat)
    np.testing.assert_array_equal(held.z_sum, z)
    assert held.count == 1
    expected = 0.5*(schedule.u_nom[0] + schedule.u_nom[1]) - schedule.K[0] @ state.delta_xhat
    np.testing.assert_allclose(u, expected, rtol=1e-12, atol=1e-12)


def test_update_averages_the_measurements_of_the_step(rng):
    # A constant deviation from the interpolated nominal measurement gives
    # the same estimate at the control rate and at the offline rate.
    parts = Parts(rng, N=5)
    schedule = parts.schedule
    error = 0.1*rng.standard_normal(8)

    slow = initial_state()
    for k in range(3):
        _, slow = tvlqg_step(schedule, slow, schedule.z_nom[k] + error, k*schedule.dt)

    fast = initial_state()
    for j in range(21):
        t = j*0.001
        z = schedule.nominal_measurement(schedule.at(t)) + error
        _, fast = tvlqg_step(schedule, fast, z, t)
    assert fast.k == slow.k == 2
    np.testing.assert_allclose(fast.delta_xhat, slow.delta_xhat, rtol=1e-10, atol=1e-12)


def test_averaging_reduces_the_estimate_noise(rng):
    parts = Parts(rng, N=5)
    schedule = parts.schedule
    spread = list()
    for ticks in (1, 10):
        estimates = list()
        for _ in range(200):
            state = initial_state()
            for j in range(ticks + 1):
                t = j*schedule.dt/ticks
                z = schedule.nominal_measurement(schedule.at(t))
                if j > 0:
                    z = z + rng.standard_normal(8)
                _, state = tvlqg_step(schedule, state, z, t)
            estimates.append(state.delta_xhat)
        spread.append(np.std(estimates, axis=0).sum())
    assert spread[1] < 0.5*spread[0]


def test_nominal_measurements_give_nominal_controls(rng):
    parts = Parts(rng, N=20, zero_gaps=True)
    schedule = parts.schedule
    state = initial_state()
    for k in range(parts.N):
        u, state = tvlqg_step(schedule, state, schedule.z_nom[k], k*schedule.dt)
        np.testing.assert_allclose(u, schedule.u_nom[k], atol=1e-12)


def test_zero_feedback_gain_ignores_measurements(rng):
    parts = Parts(rng, N=10, zero_K=True)
    schedule = parts.schedule
    state = initial_state()
    for t in np.arange(0.0, 0.095, 0.001):
        u, state = tvlqg_step(schedule, state, 10.0*rng.standard_normal(8), t)
        lookup = schedule.at(t)
        np.testing.assert_allclose(u, schedule.nominal_control(lookup), atol=1e-12)


def test_beyond_horizon_is_flagged(rng):
    parts = Parts(rng, N=5)
    controller = LqgController(parts.schedule)
    controller.reset()
    out = controller.step(0.0, parts.schedule.z_nom[0])
    assert out.flags == 0
    assert out.estimate.shape == (6,)

    out = controller.step(0.06, parts.schedule.z_nom[0])
    assert out.flags & FLAG_BEYOND_HORIZON
    np.testing.assert_array_equal(out.torques.shape, (4,))


def test_controller_reset(rng):
    parts = Parts(rng, N=5)
    controller = LqgController(parts.schedule)
    z = rng.standard_normal(8)
    first = controller.step(0.0, z).torques
    controller.step(0.01, rng.standard_normal(8))
    controller.reset()
    np.testing.assert_array_equal(controller.step(0.0, z).torques, first)


def test_baseline_is_pure_feedforward_on_the_reference(params, short_move):
    gains = BaselineGains()
    pose, velocity, accel = short_move.interpolate(0.2)
    z = measurement_model(params, make_state(pose, velocity))

    out = baseline_step(params, gains, z, (pose, velocity, accel), 0.001, np.zeros(4))
    np.testing.assert_allclose(out.integrator, 0.0, atol=1e-15)

    geometry = cable_geometry(params, pose)
    wrench = params.G @ accel - params.gravity_wrench
    tensions, _ = saturated_tension_distribution(
        geometry.W, wrench, params.tension_min, params.tension_max
    )
    r = params.winch_radius
    expected = r*tensions + friction_torque(params, -geometry.length_rates(velocity)/r)
    np.testing.assert_allclose(out.torques, expected, rtol=1e-9, atol=1e-12)
    assert not out.infeasible


@pytest.mark.parametrize("offset", [
    [0.0, 0.005, 0.0], [0.0, -0.005, 0.0], [0.0, 0.0, 0.005], [0.0, 0.003, -0.004]
])
def test_baseline_restores_the_pose(params, center_pose, offset):
    offset = np.array(offset)
    ref = (center_pose, np.zeros(3), np.zeros(3))
    z = measurement_model(params, make_state(center_pose + offset))
    gains = BaselineGains(Ki=0.0, Kd=0.0)

    displaced = baseline_step(params, gains, z, ref, 0.001, np.zeros(4))
    z_ref = measurement_model(params, make_state(center_pose))
    centered = baseline_step(params, gains, z_ref, ref, 0.001, np.zeros(4))

    assert (displaced.wrench - centered.wrench) @ offset < 0.0


def test_baseline_integrator_is_clamped(params, center_pose):
    gains = BaselineGains(integrator_limit=0.05)
    ref = (center_pose, np.zeros(3), np.zeros(3))
    z = measurement_model(params, make_state(center_pose))
    z[:4] -= [1.0, -1.0, 0.5, 0.0]

    out = baseline_step(params, gains, z, ref, 1.0, np.zeros(4))
    np.testing.assert_array_equal(out.integrator, [0.05, -0.05, 0.05, 0.0])


def test_baseline_controller_keeps_the_integrator(params, hold):
    controller = BaselineController(params, BaselineGains(), hold, 0.001)
    z = measurement_model(params, hold.states[0])
    z[:4] += 0.001
    controller.step(0.0, z)
    controller.step(0.001, z)
    np.testing.assert_allclose(controller.integrator, -2e-6)
    assert controller.step(0.002, z).estimate is None

    controller.reset()
    np.testing.assert_array_equal(controller.integrator, 0.0)
