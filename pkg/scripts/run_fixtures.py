"""Replay every manifest claim and print a table, optionally as JSON."""
import argparse
import json

from extdim import fixtures
from extdim.verify import run_manifest


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ids", nargs="*", help="manifest ids (default: all)")
    ap.add_argument("--field", default=None, help="override the base field, e.g. 'F 5'")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    results = []
    for fid in args.ids or fixtures.manifest_ids():
        results += run_manifest(fid, field_spec=args.field)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2, default=str))
    else:
        for r in results:
            mark = "ok  " if r.passed else "FAIL"
            print(f"{mark} {r.fixture:4} {r.claim:28} {r.op:22} {r.seconds:6.2f}s")
        bad = sum(not r.passed for r in results)
        print(f"{len(results) - bad}/{len(results)} claims hold")
    return 1 if any(not r.passed for r in results) else 0


if __name__ == "__main__":
    raise SystemExit(main())
