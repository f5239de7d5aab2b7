import random
import sys

import pytest

import _seed

DEFAULT_SEED = 20240607


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for the randomized property tests")


def pytest_configure(config):
    _seed.SEED = config.getoption("--seed")


@pytest.fixture
def rng():
    return random.Random(_seed.SEED)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
