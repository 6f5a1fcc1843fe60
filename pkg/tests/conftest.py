import pytest

from sobolev_mh.presets import SETUPS


@pytest.fixture(params=sorted(SETUPS))
def tabulated_setup(request):
    return SETUPS[request.param]


@pytest.fixture
def supercritical():
    return SETUPS["supercritical"]


@pytest.fixture
def subcritical():
    return SETUPS["subcritical"]


@pytest.fixture
def critical_small():
    return SETUPS["critical-small-mass"]


@pytest.fixture
def critical_big():
    return SETUPS["critical-big-mass"]
