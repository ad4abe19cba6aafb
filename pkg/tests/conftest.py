import pytest

from mdzeta.cone import RealCone, UpperCone
from mdzeta.field import make_field, parse_element


@pytest.fixture(scope="session")
def q2():
    return make_field(2)


@pytest.fixture(scope="session")
def sqrt2_cone(q2):
    """N{2+sqrt2, 2-sqrt2}: generators are Galois conjugates of each other."""
    return RealCone(q2, parse_element(q2, "2+w"), parse_element(q2, "2-w"))


@pytest.fixture(scope="session")
def gaussian():
    return make_field(-1)


@pytest.fixture(scope="session")
def gaussian_cplus(gaussian):
    return UpperCone(gaussian)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("MDZETA_CACHE_DIR", str(tmp_path / "cache"))
