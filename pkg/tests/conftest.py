import pytest

from hypergroups.catalog import (build_chebyshev, build_conjugacy, build_product, build_su2_dual,
                                 build_su3_dual, generate_group, load_group_spec)

from _oracles import DATA, GROUPS


def conjugacy(name):
    return build_conjugacy(generate_group(load_group_spec(DATA / f'{name}.json')))


def catalog():
    """Every catalog family once, with a small working truncation for each."""
    out = {
        'su2dual': (build_su2_dual(), list(range(8))),
        'su3dual': (build_su3_dual(), [(p, k - p) for k in range(4) for p in range(k + 1)]),
        'chebyshev:1': (build_chebyshev(1), list(range(8))),
        'chebyshev:2': (build_chebyshev(2), build_chebyshev(2).box(3)),
        'chebyshev:3': (build_chebyshev(3), build_chebyshev(3).box(2)),
        'product': (build_product([build_su2_dual(), build_chebyshev(1)]),
                    [(a, b) for a in range(4) for b in range(4)]),
    }
    for g in GROUPS:
        H = conjugacy(g)
        out[f'conjugacy:{g}'] = (H, H.default_truncation())
    return out


@pytest.fixture(scope='session')
def cat():
    return catalog()


@pytest.fixture
def su2():
    return build_su2_dual()


@pytest.fixture
def su3():
    return build_su3_dual()


@pytest.fixture
def cheb1():
    return build_chebyshev(1)
