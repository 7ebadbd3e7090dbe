import pytest

from app.apps.graph.entity.families import build_cycle
from app.apps.graph.entity.structure import automorphisms
from app.apps.search.entity.orbits import is_orbit_minimum, orbit_key, orbit_minimum


@pytest.mark.search
def test_orbit_minimum_of_path():
    group = [(0, 1, 2), (2, 1, 0)]
    assert orbit_minimum((2, 5, 1), group) == (1, 5, 2)
    assert is_orbit_minimum((1, 5, 2), group)
    assert not is_orbit_minimum((2, 5, 1), group)
    assert orbit_key(10, (2, 5, 1), group) == (10, (1, 5, 2))


@pytest.mark.search
def test_orbit_minimum_of_cycle():
    group = automorphisms(build_cycle(4).graph)
    assert orbit_minimum((3, 4, 1, 2), group) == (1, 2, 3, 4)
    assert orbit_minimum((4, 3, 2, 1), group) == (1, 2, 3, 4)


@pytest.mark.search
def test_orbit_minimum_without_group():
    assert orbit_minimum((3, 1, 2), []) == (3, 1, 2)
