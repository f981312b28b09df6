"""Knit the AR quiver of an algebra file or fixture and list the dimension vectors of its indecomposables."""
import argparse
from collections import defaultdict

from extdim.ar import Budget, knit
from extdim.cli import load_algebra_arg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("algebra", help="path to a .alg file or a packaged fixture name")
    ap.add_argument("--field", default=None)
    ap.add_argument("--max-dim", type=int, default=80)
    ap.add_argument("--dot", action="store_true", help="print graphviz instead")
    args = ap.parse_args()

    A = load_algebra_arg(args.algebra, args.field)
    ar = knit(A, Budget(max_dim=args.max_dim))
    if args.dot:
        print(ar.to_dot())
        return 0
    print(f"{len(ar.nodes)} indecomposables, complete={ar.complete}")
    for v in ar.dimvecs:
        print("  ", "".join(map(str, v)) if max(v) < 10 else v)
    return 0 if ar.complete else 3


if __name__ == "__main__":
    raise SystemExit(main())
