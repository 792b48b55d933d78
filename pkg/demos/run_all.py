"""Run every suite and print a per-suite tally with timings."""

import sys
import time
from collections import Counter

from wimanedge.suites import SUITES, exit_status


def main():
    worst = 0
    for s in SUITES:
        t0 = time.perf_counter()
        entries = s.run()
        tally = Counter(str(e.verdict) for e in entries)
        print(f"{s.name:<11} {time.perf_counter() - t0:6.1f}s  " + ", ".join(f"{k} {v}" for k, v in sorted(tally.items())))
        for e in entries:
            if str(e.verdict) != "PASS":
                print(f"    {e.text()}")
        worst = max(worst, exit_status(entries))
    return worst


if __name__ == "__main__":
    sys.exit(main())
