import functools
import time

ACCEPTANCE = {}


def criterion(number, title):
    """Record a PASS/FAIL line for an acceptance test; the body returns a detail string."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs) or ""
            except BaseException as exc:
                ACCEPTANCE[number] = ("FAIL", title, f"{type(exc).__name__}: {exc}".splitlines()[0],
                                      time.perf_counter() - t0)
                raise
            ACCEPTANCE[number] = ("PASS", title, detail, time.perf_counter() - t0)

        return run

    return wrap


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title, detail, secs = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n} [{status}] {title} ({secs:.1f}s): {detail}")
