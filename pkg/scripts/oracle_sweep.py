"""Compare both engines on every pairwise-coprime triple up to a bound and
summarize how often the interior scan succeeds versus the plane fallback.

    python scripts/oracle_sweep.py --limit 30 --jobs 4
"""
import argparse
import collections
import time
from multiprocessing import Pool

from newtonjump.cli import sweep_row, sweep_triples


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=30)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    bounds = {k: range(2, args.limit + 1) for k in "pqr"}
    work = [(p, q, r, c, True) for p, q, r, c in sweep_triples(bounds, coprime_only=True)]
    start = time.perf_counter()
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            rows = pool.map(sweep_row, work)
    else:
        rows = [sweep_row(w) for w in work]

    disagreements = [row for row in rows if not row["agree"]]
    fallback = sum(row["lambda_nd"] == row["r"] - 1 for row in rows)
    hist = collections.Counter(row["lambda_nd"] for row in rows)
    print(f"{len(rows)} triples, {len(disagreements)} disagreements, {time.perf_counter() - start:.1f}s")
    print(f"plane fallback (jump r-1): {fallback}; interior witness: {len(rows) - fallback}")
    print("jump histogram:", dict(sorted(hist.items())))
    for row in disagreements:
        print("MISMATCH", row)


if __name__ == "__main__":
    main()
