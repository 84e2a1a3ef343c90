import pytest

from tractlab.hyperfields import make_product, make_sign, tract_of
from tractlab.partial_fields import gf_tract
from tractlab.phase import make_p_prime


def sign_null(signs) -> bool:
    """Independent nullity test over S: empty, or both signs present."""
    signs = list(signs)
    return not signs or ({1, -1} <= set(signs))


def parse_pair(name: str) -> tuple:
    a, b = name.strip("()").split(",")
    return int(a), int(b)


def product_null(names) -> bool:
    """Independent nullity test over S x S: each component is a null sign sum."""
    pairs = [parse_pair(n) for n in names]
    return sign_null(p[0] for p in pairs) and sign_null(p[1] for p in pairs)


@pytest.fixture(scope="session")
def S():
    return tract_of(make_sign())


@pytest.fixture(scope="session")
def SS():
    return tract_of(make_product(make_sign(), make_sign()))


@pytest.fixture(scope="session")
def P():
    return make_p_prime()


@pytest.fixture(scope="session")
def GF2():
    return gf_tract(2)


@pytest.fixture(scope="session")
def GF3():
    return gf_tract(3)
