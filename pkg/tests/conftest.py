import pytest

from cdgl import (
    BUNDLED,
    Realization,
    build_perp_table,
    crossed_from_cdgl,
    load_bundled,
    two_type_reduce,
)


@pytest.fixture(scope="session")
def presentations():
    """Bundled presentations, with the degree-2 example replaced by its
    degree-{0,1} quotient so every entry feeds the group constructions."""
    out = {}
    for name in BUNDLED:
        p = load_bundled(name)
        if not p.degrees_present() <= {0, 1}:
            p, _ = two_type_reduce(p)
        out[name] = p
    return out


@pytest.fixture(scope="session")
def crossed_modules(presentations):
    out = {}
    for name, p in presentations.items():
        table = build_perp_table(p.bracket_bound())
        out[name] = crossed_from_cdgl(p, table, samples=10, seed=0)
    return out


@pytest.fixture(scope="session")
def realizations(crossed_modules):
    return {name: Realization(cm) for name, cm in crossed_modules.items()}


@pytest.fixture(scope="session")
def heis(presentations):
    return presentations["heisenberg-cone"]


@pytest.fixture(scope="session")
def heis_crossed(crossed_modules):
    return crossed_modules["heisenberg-cone"]


@pytest.fixture(scope="session")
def heis_realization(realizations):
    return realizations["heisenberg-cone"]
