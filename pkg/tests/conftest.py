import pytest
from hypothesis import HealthCheck, settings

from augmental import catalog

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(params=catalog.names())
def catalog_entry(request):
    return catalog.entry(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, _, _ in CRITERIA:
        if num in RESULTS:
            ok, _, detail = RESULTS[num]
            terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
        else:
            terminalreporter.write_line(f"criterion {num:2d} NOT RUN  {title}")
