"""Exhaustive ed versus wrd over the F_2 micro-corpus.

By default the two slowest algebras skip the A+DA cross-check; --full runs it everywhere.
"""
import argparse

from extdim import fixtures
from extdim.dimensions import SearchBounds
from extdim.oracle import OracleConfig, run_corpus


def fmt(values):
    if values is None:
        return "-"
    return "inf" if None in values else str(max(values))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", help="subset of the micro-corpus (default: all)")
    ap.add_argument("--full", action="store_true", help="cross-check the slow algebras too")
    ap.add_argument("--no-cross-check", action="store_true")
    ap.add_argument("--filtration-max-dim", type=int, default=8)
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()
    unknown = set(args.names) - set(fixtures.MICRO_CORPUS)
    if unknown:
        ap.error(f"unknown algebras: {sorted(unknown)}")

    cfg = OracleConfig(filtration_bounds=SearchBounds(max_dim=args.filtration_max_dim),
                       max_n=args.max_n, cross_check=not args.no_cross_check)
    if args.full:
        cfg.skip_cross_check = frozenset()

    print(f"{'algebra':20} {'dim':>3} {'ind':>4} {'ed':>3} {'wrd':>3}  {'A+DA exh':14} {'approx':14} close   time")
    rows = run_corpus(cfg, args.names or None)
    for r in rows:
        print(f"{r.name:20} {r.dim:3} {r.indecomposables:4} {r.ed!s:>3} {r.wrd!s:>3}  "
              f"{fmt(r.wrd_A_DA):14} {fmt(r.approx_A_DA):14} {r.filtration_closes!s:6} {r.seconds:6.1f}s")
    bad = [r.name for r in rows if not r.passed]
    print("all rows agree" if not bad else f"disagreement: {', '.join(bad)}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
