import pytest

from inets.net import checking, checking_mode
from inets.scheduler import create_pool

POOL_SIZES = (1, 2, 4, 8)


def pytest_report_header(config):
    return f"inets default checking mode: {checking_mode()}"


@pytest.fixture(scope="session")
def pools():
    made = {k: create_pool(k) for k in POOL_SIZES}
    yield made
    for p in made.values():
        p.shutdown()


@pytest.fixture(params=POOL_SIZES, ids=lambda k: f"pool{k}")
def pool(request, pools):
    return pools[request.param]


@pytest.fixture(params=["static", "dynamic"])
def mode(request):
    with checking(request.param):
        yield request.param
