from __future__ import annotations

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::test_ac" in getattr(rep, "nodeid", "") and rep.when == "call":
                rows.append((rep.nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL",
                             rep.duration))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict, secs in sorted(rows):
        terminalreporter.write_line(f"{verdict}  {name}  ({secs:.2f} s)")
