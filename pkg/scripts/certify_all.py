"""Certify every fixture in every proof form and print a table.

    python3 scripts/certify_all.py --trials 100 --seed 0 [--json out.json]
"""
import argparse
import json
import sys

from incidence_proofs.certify import DEFAULT_RANGE, certify_proof_forms
from incidence_proofs.fixtures import FIXTURE_IDS, load


def main(argv=None):
    ap = argparse.ArgumentParser(description="certify all shipped fixtures")
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--range", type=int, default=DEFAULT_RANGE)
    ap.add_argument("--only", nargs="*", choices=FIXTURE_IDS)
    ap.add_argument("--json", dest="json_out")
    args = ap.parse_args(argv)

    rows = []
    print(f"{'fixture':18} {'passed':>9} {'redraws':>8} {'time':>7}  forms")
    for fid in args.only or FIXTURE_IDS:
        fx = load(fid)
        r = certify_proof_forms(fx.theorem, fx.forms, args.trials, args.seed, args.range)
        forms = " ".join(f"{k}={v}" for k, v in sorted(r.forms.items())) or "-"
        print(f"{fid:18} {r.passed:>4}/{r.requested:<4} {r.redraws:>8} {r.wall_time:>6.2f}s  {forms}")
        if r.failure:
            print(f"  failure: {r.failure}")
        rows.append({"fixture": fid, "requested": r.requested, "passed": r.passed, "resampled": r.resampled,
                     "failed": r.failed, "redraws": r.redraws, "seconds": round(r.wall_time, 3),
                     "forms": r.forms, "failure": r.failure})
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump({"trials": args.trials, "seed": args.seed, "range": args.range, "results": rows}, fh, indent=2)
    return 0 if all(r["failed"] == 0 and r["passed"] == r["requested"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
