"""Print the length-3 pattern table for ballot permutations, with reference rows."""
import argparse

from ballotperm.data import PATTERN_ROWS, WILF_PARTNER
from ballotperm.patterns import avoid_count

PATTERNS = [(1, 2, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (2, 1, 3), (3, 1, 2)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    for p in PATTERNS:
        name = "".join(map(str, p))
        got = [avoid_count("ballot", n, p) for n in range(1, args.max_n + 1)]
        ref = PATTERN_ROWS[WILF_PARTNER.get(p, p)]
        marks = ["" if n > len(ref) or ref[n - 1] == v else "*" for n, v in enumerate(got, start=1)]
        print(f"{name}: " + " ".join(f"{v}{m}" for v, m in zip(got, marks)))
    print("* differs from the reference row")


if __name__ == "__main__":
    main()
