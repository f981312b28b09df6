"""Command-line front end: ``extdim {info,ar,dims,silting,torsion,ed,verify}``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .ar import Budget, is_representation_finite, knit
from .core.dsl import ParseError, parse_algebra
from .core.quiver import classify_graph

EXIT_OK, EXIT_CLAIM, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


# -- argument resolution --------------------------------------------------------------------
def load_algebra_arg(spec: str, field_spec=None):
    """A file path, a fixture stem (``ex1_A``), ``beilinson:N`` or ``micro:NAME``."""
    if spec.startswith("beilinson:"):
        return fixtures.beilinson(int(spec.split(":", 1)[1]), field_spec or "Q")
    if spec.startswith("micro:"):
        name = spec.split(":", 1)[1]
        if name not in fixtures.MICRO_CORPUS:
            raise InputError(f"unknown micro-corpus algebra {name!r}")
        text = fixtures.with_field(fixtures.micro_text(name), field_spec)
        return parse_algebra(text, name=name)
    p = Path(spec)
    if p.exists():
        text = p.read_text(encoding="utf-8")
        return parse_algebra(fixtures.with_field(text, field_spec), name=p.stem)
    cand = spec if spec.endswith(".alg") else spec + ".alg"
    if fixtures.fixture_path(cand).exists():
        return fixtures.algebra(cand, field_spec)
    raise InputError(f"no algebra file or fixture named {spec!r}")


def load_complex_arg(spec: str, field_spec=None):
    from .complexes import ProjComplex
    p = Path(spec)
    if not p.exists():
        cand = spec if spec.endswith(".json") else spec + ".json"
        if fixtures.fixture_path(cand).exists():
            return fixtures.complex_fixture(cand, field_spec)
        raise InputError(f"no complex file or fixture named {spec!r}")
    data = json.loads(p.read_text(encoding="utf-8"))
    alg = data["algebra"]
    local = p.parent / alg
    A = load_algebra_arg(str(local) if local.exists() else alg, field_spec)
    return ProjComplex.from_json(A, data)


def budget_of(args) -> Budget:
    b = Budget()
    if args.budget_dim is not None:
        b.max_dim = args.budget_dim
    if args.budget_steps is not None:
        b.max_steps = args.budget_steps
    return b


def emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


# -- commands -----------------------------------------------------------------------------------
def cmd_info(args):
    A = load_algebra_arg(args.algebra, args.field)
    comps = []
    for c in A.quiver.components():
        try:
            comps.append(str(classify_graph(c)))
        except ValueError as exc:
            comps.append(f"unclassified ({exc})")
    payload = {
        "name": A.name, "field": str(A.F), "vertices": list(A.vertices),
        "arrows": [f"{a.label}: {a.source} -> {a.target}" for a in A.quiver.arrows],
        "relations": len(A.relations), "dim": A.dim, "basis_size": A.dim,
        "loewy_length": A.loewy_length(), "components": comps,
    }
    text = "\n".join([
        f"algebra {A.name} over {A.F}",
        f"  vertices   {' '.join(A.vertices)}",
        f"  arrows     {len(A.quiver.arrows)}, relations {len(A.relations)}",
        f"  dimension  {A.dim}",
        f"  Loewy len  {A.loewy_length()}",
        f"  graph      {', '.join(comps)}",
    ])
    emit(args, payload, text)
    return EXIT_OK


def cmd_ar(args):
    A = load_algebra_arg(args.algebra, args.field)
    ar = knit(A, budget_of(args), args.seed)
    if args.dot:
        print(ar.to_dot())
    else:
        lines = [f"AR quiver of {A.name}: {ar.status}, {len(ar)} modules"
                 + (f" ({ar.reason})" if ar.reason else "")]
        for n in ar.nodes:
            tag = "P" if n.projective else ("I" if n.injective else " ")
            tau = f"  tau -> {n.tau}" if n.tau is not None else ""
            lines.append(f"  [{n.id:3d}] {tag} {n.module.dimvec}{tau}")
        emit(args, {**ar.to_json(), "seed": args.seed}, "\n".join(lines))
    return EXIT_OK if ar.complete else EXIT_BUDGET


def cmd_dims(args):
    from .dimensions import global_dim, inj_dim, proj_dim
    from .modules.rep import simple
    A = load_algebra_arg(args.algebra, args.field)
    rows = []
    for v in A.vertices:
        S = simple(A, v)
        rows.append({"vertex": v, "pd": proj_dim(S, args.cutoff).to_json(), "id": inj_dim(S, args.cutoff).to_json(),
                     "_pd": str(proj_dim(S, args.cutoff)), "_id": str(inj_dim(S, args.cutoff))})
    gd = global_dim(A, args.cutoff)
    text = [f"simple modules of {A.name}:"]
    text += [f"  S({r['vertex']}): pd {r['_pd']}, id {r['_id']}" for r in rows]
    text.append(f"global dimension {gd}")
    for r in rows:
        r.pop("_pd"), r.pop("_id")
    emit(args, {"simples": rows, "global_dim": gd.to_json()}, "\n".join(text))
    return EXIT_OK


def cmd_silting(args):
    from .complexes import complex_length, end_algebra, is_two_term_silting
    P = load_complex_arg(args.complex, args.field)
    r = is_two_term_silting(P, args.seed)
    payload = {"presilting": r.presilting, "silting": r.silting, "tilting": r.tilting,
               "summands": r.summands, "vertices": r.vertices, "criterion": r.criterion,
               "length": complex_length(P)}
    text = [f"presilting {r.presilting}, silting {r.silting}, tilting {r.tilting} "
            f"({r.summands} summands, {r.vertices} vertices)", f"length {payload['length']}"]
    if r.silting:
        pres = end_algebra(P, args.seed, P.names)
        arrows = [f"{l}: {s} -> {t}" for l, s, t, _ in pres.arrows]
        payload["end"] = {"vertices": pres.vertices, "arrows": arrows, "dim": pres.algebra.dim,
                          "relations": len(pres.algebra.relations),
                          "graph": [str(classify_graph(c)) for c in pres.quiver.components()]}
        text.append(f"End: vertices {' '.join(pres.vertices)}; arrows {', '.join(arrows)}; "
                    f"dim {pres.algebra.dim}; {', '.join(payload['end']['graph'])}")
    emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_torsion(args):
    from .complexes import induced_Q, torsion_pair
    P = load_complex_arg(args.complex, args.field)
    b = budget_of(args)
    tpA = torsion_pair(P, knit(P.A, b, args.seed))
    iq = induced_Q(P, args.seed)
    tpB = torsion_pair(iq.Q, knit(iq.presentation.algebra, b, args.seed))

    def side(tp):
        return {"T": [list(v) for v in tp.dimvecs("T")], "F": [list(v) for v in tp.dimvecs("F")],
                "neither": [list(tp.modules[i].dimvec) for i in tp.neither],
                "split": tp.split, "complete": tp.complete}

    payload = {"A": side(tpA), "Q": iq.Q.to_json(), "B": side(tpB)}
    text = []
    for name, tp in (("A", tpA), ("B", tpB)):
        s = side(tp)
        text.append(f"over {name} ({'complete' if tp.complete else 'partial'}): split {s['split']}")
        text.append(f"  T: {s['T']}")
        text.append(f"  F: {s['F']}")
        if s["neither"]:
            text.append(f"  neither: {s['neither']}")
    text.append(f"Q: {iq.Q!r}")
    emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_ed(args):
    from .dimensions import ed_bounds
    A = load_algebra_arg(args.algebra, args.field)
    b = ed_bounds(A, budget_of(args), args.seed)
    rf = is_representation_finite(A, budget_of(args), args.seed) if args.verbose else None
    text = [f"ed({A.name}) in {b}", f"  upper: {b.upper} via {b.upper_cert}", f"  lower: {b.lower} via {b.lower_cert}"]
    for k, v in b.candidates.items():
        text.append(f"  candidate {k}: {v}")
    if rf is not None:
        text.append(f"  representation-finite: {rf}")
    emit(args, b.to_json(), "\n".join(text))
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_manifest
    ids = fixtures.manifest_ids() if args.fixture == "all" else [args.fixture]
    budget = {"max_dim": args.budget_dim, "max_steps": args.budget_steps}
    results = []
    for fid in ids:
        results.extend(run_manifest(fid, args.field, args.seed, budget))
    failed = [r for r in results if not r.passed]
    text = []
    for r in results:
        text.append(f"{'PASS' if r.passed else 'FAIL'}  {r.fixture}:{r.claim:<24} {r.op:<20} {r.seconds:6.2f}s  \"{r.quote}\"")
    text.append(f"{len(results) - len(failed)}/{len(results)} claims passed")
    emit(args, {"results": [r.to_json() for r in results], "passed": len(results) - len(failed),
                "failed": len(failed)}, "\n".join(text))
    return EXIT_CLAIM if failed and args.strict else EXIT_OK


# -- parser -------------------------------------------------------------------------------------
def _globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--strict", action="store_true", default=d(False), help="exit 1 on a failed claim")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--budget-dim", type=int, default=d(None), help="total dimension budget for knitting")
    p.add_argument("--budget-steps", type=int, default=d(None), help="step budget for knitting")
    p.add_argument("--field", default=d(None), help="override the base field, e.g. 'Q' or 'F 5'")


def build_parser():
    ap = argparse.ArgumentParser(prog="extdim", description="Extension dimensions of bound quiver algebras.")
    _globals(ap, False)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _globals(p, True)
        p.set_defaults(func=fn)
        return p

    add("info", cmd_info, "dimension, Loewy length, graph class").add_argument("algebra")
    p = add("ar", cmd_ar, "knit the Auslander-Reiten quiver")
    p.add_argument("algebra")
    p.add_argument("--dot", action="store_true", help="graphviz output")
    p = add("dims", cmd_dims, "projective and injective dimensions of simples")
    p.add_argument("algebra")
    p.add_argument("--cutoff", type=int, default=12)
    add("silting", cmd_silting, "2-term silting test and endomorphism algebra").add_argument("complex")
    add("torsion", cmd_torsion, "induced torsion pairs over A and B").add_argument("complex")
    p = add("ed", cmd_ed, "extension dimension bounds")
    p.add_argument("algebra")
    p.add_argument("-v", "--verbose", action="store_true")
    add("verify", cmd_verify, "replay fixture claims").add_argument("fixture", help="fixture id or 'all'")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
