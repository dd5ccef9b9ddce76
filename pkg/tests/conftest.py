import hypothesis
import numpy as np
import pytest

from cdprlqg.model import RobotParams
from cdprlqg.synthesis import LqgWeights, synthesize_schedule
from cdprlqg.trajectory import hold_reference, polyline_reference


np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=10)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)


#: A pose near the middle of the frame, where all tensions are feasible.
CENTER_POSE = np.array([0.0, 1.42, 1.12])


@pytest.fixture(scope="session")
def params():
    return RobotParams()


@pytest.fixture(scope="session")
def passive_params():
    """
    No gravity and no friction.
    """
    return RobotParams(
        viscous_friction=0.0, static_friction=0.0, gravity_enabled=False
    )


@pytest.fixture(scope="session")
def center_pose():
    return CENTER_POSE.copy()


@pytest.fixture(scope="session")
def hold():
    """
    Resting at the center for 50 ms, sampled at 100 Hz.
    """
    return hold_reference(CENTER_POSE, 0.05, 0.01)


@pytest.fixture(scope="session")
def short_move():
    """
    A 10 cm move to the right, sampled at 100 Hz.
    """
    start = CENTER_POSE[1:]
    return polyline_reference([start, start + [0.1, 0.0]], 0.5, 1.0, 0.01)


@pytest.fixture(scope="session")
def hold_schedule(params, hold):
    """
    ``(schedule, nominal)`` of the hold reference.
    """
    return synthesize_schedule(params, hold, LqgWeights())


@pytest.fixture
def rng():
    return np.random.default_rng(1653)
