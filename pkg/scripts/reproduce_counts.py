"""Run the exhaustive searches for d = 3, 4, 5 and compare with the expected classification counts.

    python scripts/reproduce_counts.py [--workers N] [--out DIR]
"""

import argparse
import time
from collections import Counter
from pathlib import Path

from ocasbox.search import run_search

# (d, nl bucket, lcs dim) -> number of S-boxes
EXPECTED = {
    (4, (4, 4), 3): 32,
    (5, (4, 4), 4): 768,
    (5, (8, 8), 4): 704,
    (5, (8, 8), 3): 64,
}
EXPECTED_PAIRS = {3: 6, 4: 120, 5: 32640}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", type=Path, help="directory for JSON/CSV reports")
    args = parser.parse_args()

    found = Counter()
    for d in (3, 4, 5):
        start = time.perf_counter()
        report = run_search(d, args.workers)
        elapsed = time.perf_counter() - start
        print(report.format_table(), end="")
        print(f"# {elapsed:.2f} s, expected {EXPECTED_PAIRS[d]} pairs\n")
        for r in report.records:
            found[(d, r.bucket, r.lcs_dim)] += 1
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"search_d{d}.json").write_text(report.to_json())
            (args.out / f"search_d{d}.csv").write_text(report.to_csv())

    print("row                   expected  found")
    ok = True
    for key in sorted(set(EXPECTED) | set(found)):
        d, bucket, dim = key
        match = EXPECTED.get(key) == found.get(key)
        ok &= match
        print(f"d={d} nl={bucket} dim={dim}  {EXPECTED.get(key, '-'):>9}  {found.get(key, 0):>5}  {'ok' if match else 'MISMATCH'}")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
