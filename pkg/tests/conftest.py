import time

import pytest

from minuscule import orbits, poset


@pytest.fixture(scope="session")
def cm_poset():
    return poset.cayley_moufang()


@pytest.fixture(scope="session")
def pf_poset():
    return poset.freudenthal()


@pytest.fixture(scope="session")
def cm_table(cm_poset):
    # Built fresh, never from the shipped cache: reproduction is the point.
    return orbits.build_gapless_table(cm_poset)


@pytest.fixture(scope="session")
def freudenthal_builds(pf_poset):
    """One single-worker and one two-worker fresh build, both timed."""
    t0 = time.monotonic()
    single = orbits.build_gapless_table(pf_poset, workers=1)
    t1 = time.monotonic()
    dual = orbits.build_gapless_table(pf_poset, workers=2)
    t2 = time.monotonic()
    return {
        "single": single,
        "single_time": t1 - t0,
        "dual": dual,
        "dual_time": t2 - t1,
    }


@pytest.fixture(scope="session")
def pf_table(freudenthal_builds):
    return freudenthal_builds["single"]
