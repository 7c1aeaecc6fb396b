import numpy as np
import pytest

from planar_linsys import LinearSystem
from planar_linsys.tables import reference_low_c2, reference_minimal


def random_systems(count, seed, a_max=10, n_max=10, b_max=4, n_min=1):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        a = int(rng.integers(0, a_max + 1))
        mults = tuple(int(x) for x in rng.integers(0, b_max + 1, size=n))
        out.append(LinearSystem(a, mults))
    return out


def table_rows():
    return reference_minimal() + reference_low_c2()


@pytest.fixture(scope="session")
def rows():
    return table_rows()


# -- acceptance report -------------------------------------------------------

_ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


@pytest.fixture
def record():
    def _record(criterion, part, ok, detail=""):
        _ACCEPTANCE.setdefault(criterion, []).append((part, bool(ok), detail))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[criterion]
        verdict = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        tr.write_line(f"[{verdict}] criterion {criterion}")
        for part, ok, detail in parts:
            mark = "ok  " if ok else "FAIL"
            tr.write_line(f"    {mark} {part}" + (f": {detail}" if detail else ""))
