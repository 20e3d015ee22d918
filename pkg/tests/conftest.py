import pytest

from fano21 import steiner, orient, embed, kirkman


@pytest.fixture(scope="session")
def b1():
    return steiner.fano_b1()


@pytest.fixture(scope="session")
def b2():
    return steiner.fano_b2()


@pytest.fixture(scope="session")
def qr():
    return orient.qr_orientation()


@pytest.fixture(scope="session")
def classical():
    return embed.classical_rotation()


@pytest.fixture(scope="session")
def all_planes():
    return steiner.all_fano_planes()


@pytest.fixture(scope="session")
def sts61():
    return kirkman.sts15_61()
