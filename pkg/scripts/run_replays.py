#!/usr/bin/env python3
"""Run the three verification pipelines and print their reports."""

import sys

from wpline import run_replay


def main() -> int:
    ok = True
    for wt in ("244", "236", "333"):
        report = run_replay(wt)
        print(report.render_text())
        print()
        ok = ok and report.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
