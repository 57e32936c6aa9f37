from __future__ import annotations

import pytest

from affine_singular.liealg import build_algebra


@pytest.fixture(scope="session")
def table_c2():
    return build_algebra("C", 2)


@pytest.fixture(scope="session")
def table_c3():
    return build_algebra("C", 3)


@pytest.fixture(scope="session")
def table_a2():
    return build_algebra("A", 2)


@pytest.fixture(scope="session")
def table_a3():
    return build_algebra("A", 3)


@pytest.fixture(scope="session")
def table_a4():
    return build_algebra("A", 4)
