from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from artgallery import make_point, read_poly, validate_polygon
from artgallery.arrangement import face_at
from artgallery.pipeline import analyze

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# criterion number -> verdict line, filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])


def pt(x, y):
    return make_point(x, y)


def poly(*coords):
    return validate_polygon(coords)


L_COORDS = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]

# one interior point per named face of the L-shape
L_FACE_POINTS = {
    "A": ("5/3", "2/3"),
    "B": ("4/3", "1/3"),
    "C": ("1/2", "1/2"),
    "D": ("1/3", "4/3"),
    "E": ("2/3", "5/3"),
}


@pytest.fixture(scope="session")
def L():
    return validate_polygon(L_COORDS)


@pytest.fixture(scope="session")
def L_analysis(L):
    return analyze(L)


@pytest.fixture(scope="session")
def L_faces(L_analysis):
    """Face id for each of the names A..E."""
    d = L_analysis.decomposition
    return {name: face_at(d, pt(*xy)) for name, xy in L_FACE_POINTS.items()}


@pytest.fixture(scope="session")
def unit_square():
    return validate_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def comb3():
    return read_poly(DATA / "comb3.poly")
