import numpy as np
import pytest

from biquat import Biquaternion, BqMatrix


def bq_close(a: Biquaternion, b: Biquaternion, tol: float = 1e-12) -> bool:
    return all(abs(x - y) <= tol for x, y in zip(a.components, b.components))


def mat_close(a: BqMatrix, b: BqMatrix, tol: float = 1e-10) -> bool:
    return a.shape == b.shape and bool(
        np.all(np.abs(a.components - b.components) <= tol)
    )


def penrose_residual(a: BqMatrix, x: BqMatrix) -> float:
    """Largest residual of the four Penrose equations, in the block norm."""
    return max(
        (a @ x @ a - a).norm(),
        (x @ a @ x - x).norm(),
        ((a @ x).hconj() - a @ x).norm(),
        ((x @ a).hconj() - x @ a).norm(),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
