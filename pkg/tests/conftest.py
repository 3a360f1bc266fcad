import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zlat.quantale import named_fixtures  # noqa: E402
from zlat.verifier.corpus import corpus  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fixtures():
    return named_fixtures()


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(5)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        ok, detail = results[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
