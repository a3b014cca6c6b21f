"""Print the Euclid scan for x^p + y^q + z^r next to the exhaustive search.

    python scripts/worked_example.py 11 6 5
"""
import argparse

from newtonjump import Support
from newtonjump.fastpath import OneFaceTriple, lambda_nd_fastpath
from newtonjump.jump_engine import lambda_nd_bruteforce


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("p", type=int)
    ap.add_argument("q", type=int)
    ap.add_argument("r", type=int)
    args = ap.parse_args()
    p, q, r = args.p, args.q, args.r

    fast = lambda_nd_fastpath(OneFaceTriple(p, q, r))
    print(f"x^{p} + y^{q} + z^{r}: nu = {fast.nu_before}")
    for row in fast.trace:
        mark = "ok" if row["success"] else "--"
        print(f"  i0={row['i0']:<3d} {row['a']:>4d}*qr {row['b']:+5d}*pr {row['c']:+5d}*pq = {row['value']:<8d} {mark}")
    print(f"fastpath:   jump {fast.lambda_nd} at {fast.realizing_exponents[0]}")

    brute = lambda_nd_bruteforce(Support.of((p, 0, 0), (0, q, 0), (0, 0, r)))
    print(f"bruteforce: jump {brute.lambda_nd} at {', '.join(map(str, brute.realizing_exponents))}"
          f" ({brute.candidates_examined} candidates)")


if __name__ == "__main__":
    main()
