"""
Test configuration and fixtures for the markedmcg test suite.
"""

import random
import sys
from pathlib import Path

import pytest

# Add src to Python path for testing
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from markedmcg.constants import DEFAULT_RNG_SEED  # noqa: E402
from markedmcg.surface import MarkedSurface  # noqa: E402
from markedmcg.triangulation import (  # noqa: E402
    once_punctured_torus,
    polygon_fan,
)


@pytest.fixture
def rng():
    """A freshly seeded random source."""
    return random.Random(DEFAULT_RNG_SEED)


@pytest.fixture(scope="session")
def stock_surfaces():
    """Named marked surfaces, one per surface class."""
    return {
        "sphere4": MarkedSurface.create(0, (), 4),
        "sphere5": MarkedSurface.create(0, (), 5),
        "sphere3": MarkedSurface.create(0, (), 3),
        "torus1": MarkedSurface.create(1, (), 1),
        "torus2": MarkedSurface.create(1, (), 2),
        "punctured_4gon": MarkedSurface.create(0, (4,), 1),
        "twice_punctured_digon": MarkedSurface.create(0, (2,), 2),
        "annulus22": MarkedSurface.create(0, (2, 2), 0),
        "annulus12": MarkedSurface.create(0, (1, 2), 0),
        "pentagon": MarkedSurface.create(0, (5,), 0),
        "genus0_mixed": MarkedSurface.create(0, (1, 1), 2),
    }


@pytest.fixture
def pentagon():
    return polygon_fan(5)


@pytest.fixture
def torus():
    return once_punctured_torus()


@pytest.fixture
def surface_file(tmp_path):
    """Write a surface description file and return its path."""

    def write(genus, boundary, punctures, name="surface.json"):
        path = tmp_path / name
        path.write_text(
            '{"genus": %d, "punctures": %d, "boundary": %s}'
            % (genus, punctures, list(boundary))
        )
        return str(path)

    return write
