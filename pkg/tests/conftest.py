import numpy as np
import pytest

from hermitian_ipd.hermitian_ring import RingElement, hermitian_ring


def random_element(q: int, rng: np.random.Generator, max_x_deg: int = 5, density: float = 1.0) -> RingElement:
    ring = hermitian_ring(q)
    Q = ring.field.order
    comps = []
    for _ in range(q):
        c = rng.integers(0, Q, size=rng.integers(0, max_x_deg + 1))
        if density < 1.0:
            c[rng.random(c.size) > density] = 0
        comps.append(c.tolist())
    return ring.element(comps)


def random_nonzero(q: int, rng: np.random.Generator, **kw) -> RingElement:
    while True:
        a = random_element(q, rng, **kw)
        if not a.is_zero():
            return a


def corrupt(code, c: np.ndarray, positions, rng: np.random.Generator) -> np.ndarray:
    positions = np.asarray(list(positions), dtype=int)
    r = c.copy()
    r[positions] = code.field.add_table[c[positions], rng.integers(1, code.field.order, positions.size)]
    return r


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
