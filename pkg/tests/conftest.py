import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one line per acceptance criterion, collected by tests/test_acceptance.py
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod else None
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in sorted(results):
        terminalreporter.write_line(line)
