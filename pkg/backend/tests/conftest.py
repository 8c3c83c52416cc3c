import numpy as np
import pytest
from fastapi.testclient import TestClient
from typer.testing import CliRunner

from app.models.group import ExtAffineElement, GroupContext
from app.services import weyl_core


@pytest.fixture
def ctx1() -> GroupContext:
    return GroupContext.symplectic(1)


@pytest.fixture
def ctx2() -> GroupContext:
    return GroupContext.symplectic(2)


@pytest.fixture
def ctx3() -> GroupContext:
    return GroupContext.symplectic(3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)


@pytest.fixture
def random_element(rng):
    """Draws s_{l_1} ... s_{l_k} tau^m with k <= 20 and m in 0..2"""
    def draw(ctx: GroupContext) -> ExtAffineElement:
        letters = [int(i) for i in rng.integers(0, ctx.simple_reflection_count, size=int(rng.integers(0, 21)))]
        omega = weyl_core.identity(ctx)
        for _ in range(int(rng.integers(0, 3))):
            omega = weyl_core.compose(omega, weyl_core.tau(ctx))
        return weyl_core.evaluate_word(ctx, letters, omega)

    return draw


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def client() -> TestClient:
    from app.main import app

    return TestClient(app)
