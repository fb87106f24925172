import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="also run tests marked slow (long exhaustive sweeps)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion, derived from the test outcomes."""
    rows = []
    for key, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "ERROR"), ("skipped", "SKIPPED")):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid or "test_criterion" not in nodeid:
                continue
            if key in ("passed", "failed") and getattr(rep, "when", "call") != "call":
                continue
            rows.append((nodeid.split("::")[-1], label))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, outcome in sorted(set(rows)):
            terminalreporter.write_line(f"{name}: {outcome}")
