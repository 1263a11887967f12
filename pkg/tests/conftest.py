import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(RESULTS, key=lambda c: int(c[2:])):
        ok, detail = RESULTS[cid]
        terminalreporter.write_line(f"{cid:<5} {'PASS' if ok else 'FAIL'}  {detail}")
