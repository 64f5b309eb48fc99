import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from braidsurf.braid import parse  # noqa: E402
from braidsurf.diagram import gauss_from_braid  # noqa: E402


@pytest.fixture
def trefoil():
    return parse("1 1 1", 2)


@pytest.fixture
def trefoil_G(trefoil):
    return gauss_from_braid(trefoil)
