"""Command-line interface.

Exit codes: 0 on success or a passing verification, 1 on verification
failure, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .emit import (
    EmitSpec,
    emit,
    exangle_to_dict,
    ext_table,
    hom_table,
    quotient_to_dict,
)
from .exangles import realize
from .models import KINDS, MODULE, RELATIVE_F, make_model
from .quotients import injproj_ideal, projinj_ideal, quotient
from .rigidity import RigidSet, maximal_rigid, mutate
from .tuples import IndexTuple, build_quiver
from .verify import default_grid, parse_grid, run_theorem

THEOREMS = ("equiv", "f-exangles", "main2", "sanity", "correspondence")


def parse_tuple(text: str) -> IndexTuple:
    """Parse '246' or '2,4,6' into (2, 4, 6)."""
    text = text.strip()
    if "," in text:
        return tuple(int(p) for p in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse tuple {text!r}")
    return tuple(int(ch) for ch in text)


def parse_window(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return (int(lo), int(hi))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _add_model_args(sub):
    sub.add_argument("--model", choices=KINDS, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--window", type=parse_window, default=None,
                     help="LO:HI window of first entries (derived model only)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hicat",
                     description="Combinatorial higher cluster category toolkit")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("objects", help="list the objects of a model")
    _add_model_args(p)

    p = subs.add_parser("hom", help="hom dimension or full hom table")
    _add_model_args(p)
    p.add_argument("--from", dest="src", type=parse_tuple, default=None)
    p.add_argument("--to", dest="tgt", type=parse_tuple, default=None)

    p = subs.add_parser("ext", help="ext dimension or full ext table")
    _add_model_args(p)
    p.add_argument("--from", dest="src", type=parse_tuple, default=None)
    p.add_argument("--to", dest="tgt", type=parse_tuple, default=None)

    p = subs.add_parser("exangle", help="realize the exangle of an extension")
    _add_model_args(p)
    p.add_argument("--from", dest="src", type=parse_tuple, required=True,
                   help="the end the exangle terminates at")
    p.add_argument("--to", dest="tgt", type=parse_tuple, required=True,
                   help="the end the exangle starts from")
    p.add_argument("--out", default=None)

    p = subs.add_parser("quotient", help="ideal quotient of a model")
    _add_model_args(p)
    p.add_argument("--out", default=None)

    p = subs.add_parser("verify", help="run a theorem verifier over the grid")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--grid", type=parse_grid, default=None,
                   help="DMAX:NMAX:OBJMAX, default 3:4:200 or HICAT_GRID")

    p = subs.add_parser("rigid", help="list maximal rigid sets")
    _add_model_args(p)
    p.add_argument("--count", action="store_true", help="print only the number of sets")

    p = subs.add_parser("mutate", help="mutate a maximal rigid set at one summand")
    _add_model_args(p)
    p.add_argument("--summands", required=True,
                   help="semicolon-separated tuples, e.g. '13;14'")
    p.add_argument("--at", type=parse_tuple, required=True)

    p = subs.add_parser("emit", help="emit a diagram or report")
    p.add_argument("--content",
                   choices=("quiver", "category", "mutation-graph", "exangle", "report"),
                   required=True)
    p.add_argument("--format", choices=("dot", "tikz", "json"), default="dot")
    p.add_argument("--arrows", choices=("all-nonzero-homs", "irreducible-only"),
                   default="all-nonzero-homs")
    p.add_argument("--model", choices=KINDS, default=None)
    p.add_argument("--theorem", choices=("equiv", "f-exangles", "main2"), default=None)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=parse_window, default=None)
    p.add_argument("--from", dest="src", type=parse_tuple, default=None)
    p.add_argument("--to", dest="tgt", type=parse_tuple, default=None)
    p.add_argument("--out", default=None)

    p = subs.add_parser("count", help="count the objects of a model")
    _add_model_args(p)
    p.add_argument("--rigid", action="store_true",
                   help="count maximal rigid sets instead of objects")

    return parser


def _model(args):
    return make_model(args.model, args.d, args.n,
                      getattr(args, "window", None))


def _print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        return _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "objects":
        model = _model(args)
        _print(json.dumps([list(t) for t in model.objects]) + "\n", None)
        return 0

    if args.command in ("hom", "ext"):
        model = _model(args)
        if (args.src is None) != (args.tgt is None):
            raise ValueError("--from and --to must be given together")
        if args.src is not None:
            dim = (model.hom_dim(args.src, args.tgt) if args.command == "hom"
                   else model.ext_dim(args.src, args.tgt))
            print(dim)
        else:
            table = hom_table(model) if args.command == "hom" else ext_table(model)
            print(json.dumps(table, indent=2, sort_keys=True))
        return 0

    if args.command == "exangle":
        model = _model(args)
        e = realize(model, args.src, args.tgt)
        _print(json.dumps(exangle_to_dict(e), indent=2) + "\n", args.out)
        return 0

    if args.command == "quotient":
        model = _model(args)
        if model.kind == MODULE:
            q = quotient(model, projinj_ideal(model))
        elif model.kind == RELATIVE_F:
            q = quotient(model, injproj_ideal(model))
        else:
            raise ValueError(f"no ideal quotient is defined for the {model.kind} model")
        _print(json.dumps(quotient_to_dict(q), indent=2) + "\n", args.out)
        return 0

    if args.command == "verify":
        grid = args.grid or default_grid()
        reports = run_theorem(args.theorem, grid)
        for report in reports:
            print(report.summary())
        failed = [r for r in reports if not r.ok]
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
        return 1 if failed else 0

    if args.command == "rigid":
        model = _model(args)
        sets = maximal_rigid(model)
        if args.count:
            print(len(sets))
        else:
            print(json.dumps([[list(t) for t in s.summands] for s in sets]))
        return 0

    if args.command == "mutate":
        model = _model(args)
        summands = tuple(sorted(parse_tuple(p) for p in args.summands.split(";")))
        result = mutate(model, RigidSet(model.kind, summands), args.at)
        if result is None:
            print("null")
        else:
            payload = {"summands": [list(t) for t in result.summands],
                       "replaced_by": list(result.replaced_by),
                       "exchanges": [exangle_to_dict(e) for e in result.exchanges]}
            print(json.dumps(payload, indent=2))
        return 0

    if args.command == "count":
        model = _model(args)
        print(len(maximal_rigid(model)) if args.rigid else len(model.objects))
        return 0

    # emit
    spec = EmitSpec(fmt=args.format, content=args.content, arrows=args.arrows)
    if args.content == "quiver":
        obj = build_quiver(args.d, args.n)
    elif args.content == "exangle":
        if args.model is None or args.src is None or args.tgt is None:
            raise ValueError("exangle emission needs --model, --from and --to")
        obj = realize(_model(args), args.src, args.tgt)
    elif args.content == "report":
        if args.theorem is None:
            raise ValueError("report emission needs --theorem")
        from .verify import verify_equiv_module_ap, verify_f_exangles, verify_main2
        runner = {"equiv": verify_equiv_module_ap,
                  "f-exangles": verify_f_exangles,
                  "main2": verify_main2}[args.theorem]
        obj = runner(args.d, args.n)
    else:
        if args.model is None:
            raise ValueError(f"{args.content} emission needs --model")
        obj = _model(args)
    text = emit(obj, spec, args.out)
    if not args.out:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
