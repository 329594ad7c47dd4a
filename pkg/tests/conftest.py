import pytest
from hypothesis import HealthCheck, settings

from ydhopf.hopf import quasi_dual_build
from ydhopf.qta import preset, preset_params

settings.register_profile("ydhopf", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("ydhopf")

ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = {}


@pytest.fixture
def criterion(request):
    """record(n, part, ok, detail) collects one result line per part of criterion n."""
    results = request.config.stash[ACCEPTANCE]

    def record(n: int, part: str, ok: bool, detail: str = "") -> bool:
        results.setdefault(n, []).append((part, bool(ok), detail))
        print(f"criterion {n} [{part}]: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        return bool(ok)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        parts = results[n]
        bad = [(p, d) for p, ok, d in parts if not ok]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {n:2d}: {status}  ({len(parts) - len(bad)}/{len(parts)} parts)"
        if bad:
            line += "  failing: " + "; ".join(f"{p}" + (f" [{d}]" if d else "") for p, d in bad)
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def bline():
    return preset("bline")


@pytest.fixture(scope="session")
def z4q2():
    return preset("z4q2")


@pytest.fixture(scope="session")
def sym_line():
    return preset("sym-line")


@pytest.fixture(scope="session")
def two_gen():
    return preset("two-gen", verify=False)


@pytest.fixture(scope="session")
def twisted_pair():
    return preset("twisted-pair", verify=False)


@pytest.fixture(scope="session")
def bline_dual(bline):
    return quasi_dual_build(bline)


@pytest.fixture(scope="session")
def two_gen_dual(two_gen):
    return quasi_dual_build(two_gen, verify=False)


@pytest.fixture(scope="session")
def sym_line_dual(sym_line):
    return quasi_dual_build(sym_line)


@pytest.fixture(scope="session")
def params():
    return preset_params
