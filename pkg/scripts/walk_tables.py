"""Print axis-to-axis walk counts F_n(h, b) (gessel) or H_n(h, b) (gb) as CSV."""
import argparse
import csv
import sys

from ballotperm.walks import METHODS, STEPS, walk_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=tuple(STEPS), default="gessel")
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-h", type=int, default=5)
    ap.add_argument("--method", choices=METHODS, default="recurrence")
    args = ap.parse_args()
    table = walk_table(args.kind, args.max_n, args.max_h, args.method)
    out = csv.writer(sys.stdout)
    out.writerow(["n", "h", "b", "count"])
    for n in range(args.max_n + 1):
        for h in range(args.max_h + 1):
            for b in range(args.max_h + 1):
                if table[n, h, b]:
                    out.writerow([n, h, b, table[n, h, b]])


if __name__ == "__main__":
    main()
