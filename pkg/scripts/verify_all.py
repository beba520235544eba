"""Run every verification suite and write a JSON-lines report."""
import argparse
import json
import sys

from ballotperm.verify import SUITES, verify_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="verify_report.jsonl")
    args = ap.parse_args()
    ok = True
    with open(args.out, "w") as fh:
        for name, (_, guard) in SUITES.items():
            report = verify_suite(name, min(args.max_n, guard), args.seed)
            for c in report.checks:
                fh.write(json.dumps(c.as_dict(), default=str) + "\n")
            ok &= report.passed
            print(f"{name:12s} {len(report.checks) - len(report.failures):5d}/{len(report.checks):<5d}"
                  f" {report.elapsed:6.1f}s {'ok' if report.passed else 'FAILED'}")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
