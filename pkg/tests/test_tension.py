from hypothesis import given, settings, strategies as st
import numpy as np
import pytest
import scipy.linalg

from cdprlqg.base import errors
from cdprlqg.controller import (
    saturated_tension_distribution, tension_distribution, tension_interval
)
from cdprlqg.model import cable_geometry


T_MIN, T_MAX = 1.0, 100.0


def brute_force(W, wrench, samples=100000):
    """
    Samples the line of solutions densely. Returns the smallest distance to
    the middle of the limits among the feasible samples, or ``None``.
    """
    particular = np.linalg.pinv(W) @ wrench
    null = scipy.linalg.null_space(W)[:, 0]
    lam = np.linspace(-400.0, 400.0, samples)
    t = particular + lam[:, None]*null
    feasible = np.all((t >= T_MIN - 1e-9) & (t <= T_MAX + 1e-9), axis=1)
    if not np.any(feasible):
        return None
    distance = np.linalg.norm(t[feasible] - 0.5*(T_MIN + T_MAX), axis=1)
    return float(distance.min())


def random_pose(rng):
    return np.array([
        rng.uniform(-0.3, 0.3), rng.uniform(0.8, 2.0), rng.uniform(0.6, 1.6)
    ])


def test_midpoint_is_exact(params, center_pose):
    W = cable_geometry(params, center_pose).W
    t_mid = np.full(4, 50.5)
    np.testing.assert_allclose(
        tension_distribution(W, W @ t_mid, T_MIN, T_MAX), t_mid, atol=1e-9
    )


def test_null_vector_orientation(params, center_pose):
    W = cable_geometry(params, center_pose).W
    interval = tension_interval(W, np.zeros(3), T_MIN, T_MAX)
    assert np.sum(interval.null_vector) > 0
    np.testing.assert_allclose(W @ interval.null_vector, 0.0, atol=1e-12)
    assert interval.feasible


@pytest.mark.parametrize("seed", range(4))
def test_feasible_wrenches_match_brute_force(params, seed):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        W = cable_geometry(params, random_pose(rng)).W
        wrench = W @ rng.uniform(T_MIN, T_MAX, 4)

        t = tension_distribution(W, wrench, T_MIN, T_MAX)
        np.testing.assert_allclose(W @ t, wrench, atol=1e-9*max(1.0, np.abs(wrench).max()))
        assert np.all(t >= T_MIN - 1e-9) and np.all(t <= T_MAX + 1e-9)

        best = brute_force(W, wrench)
        assert best is not None
        assert np.linalg.norm(t - 0.5*(T_MIN + T_MAX)) <= best + 1e-6


@pytest.mark.slow
def test_feasible_wrenches_match_brute_force_many(params):
    rng = np.random.default_rng(2024)
    for _ in range(10000):
        W = cable_geometry(params, random_pose(rng)).W
        wrench = W @ rng.uniform(T_MIN, T_MAX, 4)
        t = tension_distribution(W, wrench, T_MIN, T_MAX)
        np.testing.assert_allclose(W @ t, wrench, atol=1e-9*max(1.0, np.abs(wrench).max()))
        assert np.linalg.norm(t - 50.5) <= brute_force(W, wrench, 20000) + 1e-6


def test_pushing_wrench_is_infeasible(params):
    # A large +x force at the +x edge needs a pushing cable.
    W = cable_geometry(params, np.array([0.0, 2.6, 1.1])).W
    wrench = np.array([0.0, 500.0, 0.0])
    assert brute_force(W, wrench) is None

    with pytest.raises(errors.InfeasibleWrench):
        tension_distribution(W, wrench, T_MIN, T_MAX)

    t, infeasible = saturated_tension_distribution(W, wrench, T_MIN, T_MAX)
    assert infeasible
    np.testing.assert_allclose(W @ t, wrench, atol=1e-9*500.0)


@pytest.mark.parametrize("seed", range(3))
def test_infeasibility_agrees_with_brute_force(params, seed):
    rng = np.random.default_rng(100 + seed)
    for _ in range(100):
        W = cable_geometry(params, random_pose(rng)).W
        wrench = rng.uniform(-1.0, 1.0, 3)*[2.0, 300.0, 300.0]
        interval = tension_interval(W, wrench, T_MIN, T_MAX)
        best = brute_force(W, wrench)
        # Skip the instances within a sample spacing of the boundary.
        width = interval.lambda_hi - interval.lambda_lo
        if abs(width) < 0.05:
            continue
        assert interval.feasible == (best is not None)


def pinched_tensions(rng, n):
    """
    Returns tensions whose solution line touches the limits in a single
    point: one cable at the upper limit, another at the lower limit, both
    with a positive null vector component. The rest stay interior.
    """
    candidates = np.flatnonzero(n > 0.05)
    upper, lower = rng.choice(candidates, 2, replace=False)
    t = rng.uniform(T_MIN + 5.0, T_MAX - 5.0, 4)
    t[upper] = T_MAX
    t[lower] = T_MIN
    return t, upper, lower


@pytest.mark.slow
def test_infeasibility_near_the_boundary(params):
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 1000:
        W = cable_geometry(params, random_pose(rng)).W
        n = scipy.linalg.null_space(W)[:, 0]
        n = n if np.sum(n) > 0 else -n
        if np.count_nonzero(n > 0.05) < 2:
            continue
        t, upper, lower = pinched_tensions(rng, n)
        eps = 10.0**rng.uniform(-6.0, -1.0)
        inward = bool(rng.integers(2))
        cable = upper if rng.integers(2) else lower
        # Moving a pinned cable past its limit closes the interval.
        outward = 1.0 if cable == upper else -1.0
        t[cable] += -outward*eps if inward else outward*eps

        interval = tension_interval(W, W @ t, T_MIN, T_MAX)
        assert interval.feasible == inward, (eps, inward, cable == upper)
        if inward:
            assert interval.lambda_hi - interval.lambda_lo > 0.5*eps
        checked += 1


def test_saturated_distribution_of_feasible_wrench(params, center_pose):
    W = cable_geometry(params, center_pose).W
    wrench = W @ np.array([10.0, 20.0, 30.0, 40.0])
    t, infeasible = saturated_tension_distribution(W, wrench, T_MIN, T_MAX)
    assert not infeasible
    np.testing.assert_allclose(t, tension_distribution(W, wrench, T_MIN, T_MAX))


@settings(deadline=None, max_examples=50)
@given(
    st.floats(-0.3, 0.3), st.floats(0.8, 2.0), st.floats(0.6, 1.6),
    # Interior tensions, so that the feasible interval has a width.
    st.lists(st.floats(T_MIN + 1.0, T_MAX - 1.0), min_size=4, max_size=4)
)
def test_distribution_reproduces_feasible_wrenches(params, theta, x, y, tensions):
    W = cable_geometry(params, np.array([theta, x, y])).W
    wrench = W @ np.array(tensions)
    t = tension_distribution(W, wrench, T_MIN, T_MAX)
    np.testing.assert_allclose(W @ t, wrench, atol=1e-9*max(1.0, np.abs(wrench).max()))
    assert np.all(t >= T_MIN - 1e-9) and np.all(t <= T_MAX + 1e-9)
