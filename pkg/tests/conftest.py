import random

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=20260826,
        help="base seed for the randomized test cases",
    )


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))
