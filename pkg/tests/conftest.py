import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from brandt_omega.families import AtomicFamily, SupportSet


@pytest.fixture
def fam013():
    return AtomicFamily(SupportSet((0, 1, 3)))


@pytest.fixture
def fam0():
    return AtomicFamily(SupportSet((0,)))


@pytest.fixture
def fam25():
    return AtomicFamily(SupportSet((2, 5)))


@pytest.fixture
def fam_tail():
    return AtomicFamily(SupportSet((0,), 4))
