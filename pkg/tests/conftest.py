import numpy as np
import pytest

from sfrepro.config import preset_paper_experiment
from sfrepro.evaluation import evaluate_frequency, make_eval_grid


@pytest.fixture
def rng():
    return np.random.default_rng(20260825)


@pytest.fixture(scope="session")
def preset_cfg():
    return preset_paper_experiment()


@pytest.fixture(scope="session")
def preset_scene(preset_cfg):
    return preset_cfg.scene()


@pytest.fixture(scope="session")
def preset_desired(preset_cfg):
    return preset_cfg.desired_field()


@pytest.fixture(scope="session")
def preset_result_450(preset_cfg, preset_scene, preset_desired):
    """Full preset evaluation at 450 Hz, shared by the slower checks."""
    grid = make_eval_grid(preset_scene.region, preset_cfg.eval_spacing)
    return evaluate_frequency(
        preset_scene, preset_desired, preset_cfg.methods, 450.0,
        preset_cfg.quadrature, grid,
    )


def helmholtz_residual(f, k, pt, h):
    """Discrete (laplacian + k^2) applied to the scalar field `f` at `pt`."""
    dim = pt.shape[0]
    val = f(pt)
    acc = -2.0 * dim * val
    for ax in range(dim):
        step = np.zeros(dim)
        step[ax] = h
        acc += f(pt + step) + f(pt - step)
    return acc / h**2 + k.k**2 * val


def helmholtz_ratio(f, k, pts, h):
    """Mean residual at step h over mean residual at h/2 (4 means O(h^2))."""
    coarse = np.mean([abs(helmholtz_residual(f, k, p, h)) for p in pts])
    fine = np.mean([abs(helmholtz_residual(f, k, p, h / 2)) for p in pts])
    return coarse / fine


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion test at the end of the run

_ACCEPTANCE_FILE = "test_acceptance.py"
_acceptance_outcomes = {}


def pytest_runtest_logreport(report):
    if _ACCEPTANCE_FILE not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance_outcomes[name] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        # setup errors/skips count as the test's outcome
        _acceptance_outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_outcomes.items():
        label = name.removeprefix("test_").replace("_", " ")
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}.get(
            outcome, outcome.upper()
        )
        terminalreporter.write_line(f"{status}  {label}")
