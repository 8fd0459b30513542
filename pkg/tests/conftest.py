import pathlib

import pytest

from permclass import class_a, class_b

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def state_a60():
    """Class-A functional-equation state at order 60, shared across the
    suite (the iteration is deterministic)."""
    return class_a.iterate(60)


@pytest.fixture(scope="session")
def state_b60():
    """Class-B functional-equation state at order 60."""
    return class_b.iterate(60)


def golden_text(name: str) -> str:
    return (GOLDEN / name).read_text()
