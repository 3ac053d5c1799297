import pytest

from superorbit import exceptional


@pytest.fixture(scope="session")
def d21():
    return exceptional.build_d21_cached("symbolic")


@pytest.fixture(scope="session")
def d21_sample():
    return exceptional.build_d21_cached(2)


@pytest.fixture(scope="session")
def g3():
    return exceptional.build_g3()


@pytest.fixture(scope="session")
def f4():
    return exceptional.build_f4()


def coord(alg, name):
    return list(alg.basis_names).index(name)


def named_vector(alg, *terms):
    """Vector from (coeff, basis_name) pairs; coeff may be int or scalar."""
    v = alg.zero_vector()
    for c, nm in terms:
        i = coord(alg, nm)
        v[i] = v[i] + (alg.field.of_int(c) if isinstance(c, int) else c)
    return v
