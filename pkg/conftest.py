import os
import random

import hypothesis
import pytest

hypothesis.settings.register_profile("default", max_examples=50, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: heavier oracle and automorphism checks")


@pytest.fixture
def rng():
    """Seeded from LATTOWER_SEED so sampled checks can be replayed"""
    return random.Random(int(os.environ.get("LATTOWER_SEED", "0")))


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Never read the user's ~/.lattower/config.yaml"""
    path = tmp_path / "config.yaml"
    monkeypatch.setenv("LATTOWER_CONFIG", str(path))
    return path
