"""Collects the acceptance PASS/FAIL lines so they can be repeated in the terminal summary."""

LINES: list[str] = []


def report(n, ok, detail):
    line = f"[criterion {n:2d}] {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    LINES.append(line)
    assert ok, line
