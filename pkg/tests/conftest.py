import pytest

from galois_grm.grm import build_context

GRID = [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2), (2, 3, 1), (3, 2, 1), (5, 1, 2), (2, 2, 3)]

# criterion -> (description, [(case, ok, detail)]), filled by test_acceptance
ACCEPTANCE_RESULTS: dict[str, tuple[str, list]] = {}


@pytest.fixture(scope="session")
def ctx222():
    return build_context(2, 2, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k[1:])):
        text, cases = ACCEPTANCE_RESULTS[key]
        failed = [c for c in cases if not c[1]]
        status = "FAIL" if failed else "PASS"
        terminalreporter.write_line(f"{key} {status} {text} [{len(cases) - len(failed)}/{len(cases)} cases]")
        for case, _, detail in failed:
            terminalreporter.write_line(f"    {case}: {detail}")
