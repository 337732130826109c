# tests/conftest.py
import os

os.environ.setdefault("WIRT_ENVIRONMENT", "test")
os.environ.setdefault("WIRT_RECORD_TIMINGS", "false")

import pytest  # noqa: E402

from wirtinger.models.diagram import Diagram  # noqa: E402
from wirtinger.services.codec import diagram_from_text  # noqa: E402

TREFOIL = "[-1,3,-2,1,-3,2]"
FIGURE_EIGHT = "[1,-2,3,-4,2,-1,4,-3]"
KINK = "[1,-1]"
HOPF = "[1,-2];[-1,2]"
TORUS_LINK_2_4 = "[1,-2,3,-4];[-1,2,-3,4]"
TWISTED_UNKNOT = "[1,-2,2,-1]"


def torus_2n(n: int) -> str:
    """Standard (2, n) torus knot code for odd n."""
    first = [label if label % 2 == 0 else -label for label in range(1, n + 1)]
    return "[" + ",".join(str(v) for v in first + [-v for v in first]) + "]"


@pytest.fixture
def trefoil() -> Diagram:
    return diagram_from_text(TREFOIL)


@pytest.fixture
def figure_eight() -> Diagram:
    return diagram_from_text(FIGURE_EIGHT)


@pytest.fixture
def kink() -> Diagram:
    return diagram_from_text(KINK)


@pytest.fixture
def hopf() -> Diagram:
    return diagram_from_text(HOPF)


@pytest.fixture
def torus_link() -> Diagram:
    return diagram_from_text(TORUS_LINK_2_4)


@pytest.fixture
def twisted_unknot() -> Diagram:
    return diagram_from_text(TWISTED_UNKNOT)
