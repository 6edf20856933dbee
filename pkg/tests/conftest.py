import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("fcy", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("fcy")


@st.composite
def grid_partitions(draw, max_m=4, max_n=4, min_n=0):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(min_n, max_n))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=m, max_size=m)))
    return tuple(vals), m, n


@pytest.fixture
def runner():
    from click.testing import CliRunner
    return CliRunner()
