import pytest
from hypothesis import settings

from rif.core import make_family

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


@pytest.fixture
def fano():
    return make_family(7, 3, FANO_LINES)
