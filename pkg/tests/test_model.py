from hypothesis import given, strategies as st
import numpy as np
import pytest

from cdprlqg.base import errors
from cdprlqg.model import (
    RobotParams, cable_geometry, forward_dynamics, friction_torque,
    linearize_dynamics, linearize_measurement, make_state, rk4_step,
    state_derivative, total_energy, winch_speeds
)
from cdprlqg.synthesis import gravity_compensation


def test_cable_length_at_known_pose(params):
    geometry = cable_geometry(params, np.array([0.0, 1.0, 1.0]))
    assert geometry.lengths[3] == pytest.approx(np.hypot(0.937, 0.940), abs=1e-12)
    assert geometry.lengths[3] == pytest.approx(1.3272, abs=1e-4)


def test_structure_matrix(params, center_pose):
    geometry = cable_geometry(params, center_pose)
    np.testing.assert_allclose(np.linalg.norm(geometry.W[1:], axis=0), 1.0)
    np.testing.assert_array_equal(geometry.J, -geometry.W.T)
    assert np.linalg.matrix_rank(geometry.W) == 3


@pytest.mark.parametrize("pose", [
    [0.0, 1.42, 1.12], [0.3, 1.0, 0.8], [-0.2, 2.0, 1.5]
])
def test_cable_jacobian_finite_differences(params, pose):
    pose = np.array(pose)
    J = cable_geometry(params, pose).J
    step = 1e-6
    for i in range(3):
        e = np.zeros(3)
        e[i] = step
        fd = (
            cable_geometry(params, pose + e).lengths
            - cable_geometry(params, pose - e).lengths
        )/(2.0*step)
        np.testing.assert_allclose(J[:, i], fd, rtol=1e-6, atol=1e-8)


def test_length_curvature_finite_differences(params, center_pose):
    # d/dt (J v) along a constant velocity motion.
    v = np.array([0.4, 0.3, -0.2])
    h = 1e-5
    rate = lambda s: cable_geometry(params, center_pose + s*v).length_rates(v)
    fd = (rate(h) - rate(-h))/(2.0*h)
    curvature = cable_geometry(params, center_pose).length_curvature(v)
    np.testing.assert_allclose(curvature, fd, rtol=1e-5, atol=1e-8)


def test_degenerate_cable(params):
    pose = np.array([0.0, 0.063, 0.060])
    with pytest.raises(errors.DegenerateCable) as info:
        cable_geometry(params, pose)
    assert info.value.cable == 3


def test_friction_value(params):
    expected = 0.002 + 0.12*np.tanh(0.19)
    assert friction_torque(params, 1.0) == pytest.approx(expected, rel=1e-12)
    assert friction_torque(params, 1.0) == pytest.approx(0.02453, abs=1e-5)


@given(st.floats(-100.0, 100.0), st.floats(-100.0, 100.0))
def test_friction_is_odd_and_monotone(a, b):
    params = RobotParams()
    assert friction_torque(params, -a) == pytest.approx(-friction_torque(params, a), abs=1e-15)
    lo, hi = min(a, b), max(a, b)
    assert friction_torque(params, lo) <= friction_torque(params, hi)


def test_gravity_compensation_equilibrium(params, center_pose):
    torques = gravity_compensation(params, center_pose)
    result = forward_dynamics(params, make_state(center_pose), torques)
    assert np.linalg.norm(result.accel) < 1e-9
    assert not result.tension_violation
    np.testing.assert_allclose(result.tensions, torques/params.winch_radius, atol=1e-9)


def test_tension_violation_is_reported(params, center_pose):
    result = forward_dynamics(params, make_state(center_pose), np.zeros(4))
    assert result.tension_violation


def test_power_balance(passive_params, params, rng):
    # The energy changes with the motor power tau . omega, if there is no
    # friction.
    frictionless = params.replace(viscous_friction=0.0, static_friction=0.0)
    for model in (passive_params, frictionless):
        for _ in range(10):
            pose = np.array([0.0, 1.42, 1.12]) + rng.uniform(-0.3, 0.3, 3)
            state = make_state(pose, rng.uniform(-0.5, 0.5, 3))
            torques = rng.uniform(0.1, 1.0, 4)

            xdot = state_derivative(model, state, torques)
            h = 1e-6
            dE = (
                total_energy(model, state + h*xdot)
                - total_energy(model, state - h*xdot)
            )/(2.0*h)
            omega = winch_speeds(model, cable_geometry(model, pose), state[3:])
            assert dE == pytest.approx(torques @ omega, rel=1e-4, abs=1e-8)


def test_passive_energy_conservation(passive_params, center_pose):
    state = make_state(center_pose, [0.2, 0.1, -0.05])
    energy = total_energy(passive_params, state)
    for _ in range(1000):
        state = rk4_step(passive_params, state, np.zeros(4), dt=1e-3, substeps=10)
    assert total_energy(passive_params, state) == pytest.approx(energy, rel=1e-6)


def test_disturbance_adds_to_the_torques(params, center_pose):
    state = make_state(center_pose, [0.0, 0.1, 0.0])
    torques = gravity_compensation(params, center_pose)
    d = np.array([0.01, -0.02, 0.03, 0.0])
    a = forward_dynamics(params, state, torques, d).accel
    b = forward_dynamics(params, state, torques + d).accel
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)


def test_linearization_at_zero_step(params, center_pose):
    A, B, c = linearize_dynamics(
        params, make_state(center_pose), gravity_compensation(params, center_pose), 0.0
    )
    np.testing.assert_array_equal(A, np.eye(6))
    np.testing.assert_array_equal(B, np.zeros((6, 4)))


def test_linearization_is_exact_at_the_nominal(params, center_pose):
    state = make_state(center_pose, [0.1, 0.2, -0.1])
    torques = gravity_compensation(params, center_pose)
    dt = 0.01
    A, B, c = linearize_dynamics(params, state, torques, dt, method="euler")
    euler = state + dt*state_derivative(params, state, torques)
    np.testing.assert_allclose(A @ state + B @ torques + c, euler, atol=1e-12)

    for substeps in (1, 5):
        A, B, c = linearize_dynamics(
            params, state, torques, dt, method="rk4", substeps=substeps
        )
        np.testing.assert_allclose(
            A @ state + B @ torques + c,
            rk4_step(params, state, torques, dt=dt, substeps=substeps),
            atol=1e-12
        )


def test_rk4_linearization_at_rest_matches_finite_differences(params, center_pose):
    state = make_state(center_pose)
    torques = gravity_compensation(params, center_pose)
    dt, substeps, h = 0.01, 5, 1e-6
    A, B, _ = linearize_dynamics(
        params, state, torques, dt, method="rk4", substeps=substeps
    )

    def step(x, u):
        return rk4_step(params, x, u, dt=dt, substeps=substeps)

    for i in range(6):
        e = np.zeros(6)
        e[i] = h
        column = (step(state + e, torques) - step(state - e, torques))/(2.0*h)
        np.testing.assert_allclose(A[:, i], column, rtol=1e-5, atol=1e-6)
    for i in range(4):
        e = np.zeros(4)
        e[i] = h
        column = (step(state, torques + e) - step(state, torques - e))/(2.0*h)
        np.testing.assert_allclose(B[:, i], column, rtol=1e-5, atol=1e-6)


def test_substepped_linearization_is_stable_at_rest(params, center_pose):
    state = make_state(center_pose)
    torques = gravity_compensation(params, center_pose)
    A, _, _ = linearize_dynamics(
        params, state, torques, 0.01, method="rk4", substeps=5
    )
    assert np.abs(np.linalg.eigvals(A)).max() < 1.01


def test_linearization_remainder_is_quadratic(params, center_pose):
    state = make_state(center_pose, [0.1, 0.2, -0.1])
    torques = gravity_compensation(params, center_pose)
    dt = 0.01
    A, B, c = linearize_dynamics(params, state, torques, dt)

    direction = np.array([0.2, 1.0, -1.0, 1.0, 2.0, -1.0])

    def remainder(delta):
        x = state + delta*direction
        euler = x + dt*state_derivative(params, x, torques)
        return np.linalg.norm(A @ x + B @ torques + c - euler)

    ratio = remainder(2e-4)/remainder(1e-4)
    assert ratio == pytest.approx(4.0, rel=0.2)


def test_linearization_rejects_negative_step(params, center_pose):
    with pytest.raises(errors.InvalidParameter):
        linearize_dynamics(params, make_state(center_pose), np.ones(4), -0.01)
    with pytest.raises(errors.InvalidParameter):
        linearize_dynamics(
            params, make_state(center_pose), np.ones(4), 0.01, method="rk4",
            substeps=0
        )


def test_measurement_jacobian(params, center_pose):
    state = make_state(center_pose, [0.1, 0.2, -0.1])
    H, z = linearize_measurement(params, state)
    H_exact, z_exact = linearize_measurement(params, state, exact=True)
    np.testing.assert_array_equal(z, z_exact)
    np.testing.assert_allclose(H[:4], H_exact[:4], rtol=1e-6, atol=1e-8)
    np.testing.assert_allclose(H[4:, 3:], H_exact[4:, 3:], rtol=1e-6, atol=1e-8)

    # The rates do not depend on the pose at rest.
    rest = make_state(center_pose)
    H, _ = linearize_measurement(params, rest)
    H_exact, _ = linearize_measurement(params, rest, exact=True)
    np.testing.assert_allclose(H, H_exact, rtol=1e-6, atol=1e-8)


def test_params_validation():
    with pytest.raises(errors.InvalidConfig) as info:
        RobotParams(tension_min=10.0, tension_max=5.0)
    assert info.value.key == "robot.tension_min"

    with pytest.raises(errors.InvalidConfig) as info:
        RobotParams(winch_radius=0.0)
    assert info.value.key == "robot.winch_radius"
