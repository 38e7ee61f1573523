"""Command-line interface.

Exit codes: 0 success / property holds, 1 property fails or the digraph lies
outside the class a command needs (witness printed), 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .campaigns import THEOREMS, Population, run_campaign
from .chordality import Peo, greedy_eliminate
from .classes import ClassLabel, classify_with_witnesses, weakly_quasi_transitive_witness
from .decomposition import decompose_wqt, tree_to_dict, tree_to_text
from .digraph import Digraph
from .errors import PreconditionError, UsageError
from .forbidden import CHARACTERIZATIONS
from .generators import GENERATORS, GenConfig, enumerate_digraphs
from .io import compact, read_digraph, to_dot, write_text

CLASS_FILTERS = {
    "semicomplete": ClassLabel.SEMICOMPLETE,
    "lsd": ClassLabel.LOCALLY_SEMICOMPLETE,
    "wqt": ClassLabel.WEAKLY_QUASI_TRANSITIVE,
    "qt": ClassLabel.QUASI_TRANSITIVE,
    "symmetric": ClassLabel.SYMMETRIC,
    "transitive-oriented": ClassLabel.TRANSITIVE_ORIENTED,
    "extended-semicomplete": ClassLabel.EXTENDED_SEMICOMPLETE,
}


def _emit(args, payload: dict, text: str, digraph: Digraph | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "dot" and digraph is not None:
        for line in text.splitlines():
            print(f"// {line}")
        print(to_dot(digraph), end="")
    else:
        print(text)


def _fmt_triple(t) -> str:
    return f"({t[0]}, {t[1]}, {t[2]})"


def cmd_classify(args) -> int:
    d = read_digraph(args.input)
    labels, failures = classify_with_witnesses(d)
    order = list(ClassLabel)
    held = [lab.value for lab in order if lab in labels]
    lines = ["classes: " + (", ".join(held) if held else "(none)")]
    for lab in order:
        if lab in failures:
            w = failures[lab]
            lines.append(f"not {lab.value}: {w.reason} at {list(w.vertices)}")
    payload = {
        "verdict": True,
        "class": held,
        "certificate": {lab.value: failures[lab].to_dict() for lab in order if lab in failures},
    }
    _emit(args, payload, "\n".join(lines), d)
    return 0


def cmd_chordal(args) -> int:
    d = read_digraph(args.input)
    cert = greedy_eliminate(d)
    if isinstance(cert, Peo):
        text = "chordal: yes\nperfect elimination ordering: " + " ".join(map(str, cert.order))
    else:
        lines = [
            "chordal: no",
            "stuck on residual set: " + " ".join(map(str, cert.residual)),
            "violating triples (u, v, w):",
        ]
        lines.extend("  " + _fmt_triple(t) for t in cert.triples)
        text = "\n".join(lines)
    chordal = isinstance(cert, Peo)
    _emit(args, {"verdict": chordal, "class": "chordal", "certificate": cert.to_dict()}, text, d)
    return 0 if chordal else 1


def cmd_characterize(args) -> int:
    d = read_digraph(args.input)
    try:
        verdict = CHARACTERIZATIONS[args.cls](d)
    except PreconditionError as exc:
        w = exc.witness
        text = f"precondition failed: {exc}"
        payload = {
            "verdict": None,
            "class": args.cls,
            "certificate": None,
            "precondition": w.to_dict() if w is not None else None,
        }
        _emit(args, payload, text, d)
        return 1
    if verdict.chordal:
        text = f"chordal: yes ({args.cls} characterization)"
    else:
        w = verdict.witness
        text = f"chordal: no ({args.cls} characterization)\nwitness: {w.kind.value} " + " ".join(
            map(str, w.vertices)
        )
    payload = {
        "verdict": verdict.chordal,
        "class": args.cls,
        "certificate": verdict.witness.to_dict() if verdict.witness else None,
        "precondition": None,
    }
    _emit(args, payload, text, d)
    return 0 if verdict.chordal else 1


def cmd_decompose(args) -> int:
    d = read_digraph(args.input)
    wit = weakly_quasi_transitive_witness(d)
    if wit is not None:
        text = f"not WeaklyQuasiTransitive: {wit.reason} at {list(wit.vertices)}"
        _emit(args, {"verdict": False, "class": "WeaklyQuasiTransitive", "certificate": wit.to_dict()}, text, d)
        return 1
    tree = decompose_wqt(d)
    _emit(
        args,
        {"verdict": True, "class": "WeaklyQuasiTransitive", "certificate": tree_to_dict(tree)},
        tree_to_text(tree),
        d,
    )
    return 0


def cmd_generate(args) -> int:
    cfg = GenConfig(n=args.n, seed=args.seed, p=args.p, depth=args.depth, strategy=args.strategy)
    d = GENERATORS[args.cls](cfg)
    if args.format == "json":
        payload = {"verdict": True, "class": args.cls, "certificate": {"n": d.n, "arcs": [list(a) for a in d.arcs()]}}
        print(json.dumps(payload, indent=2))
    elif args.format == "dot":
        print(to_dot(d), end="")
    else:
        print(write_text(d, comment=f"generate --class {args.cls} --n {args.n} --seed {args.seed}"), end="")
    return 0


def cmd_verify(args) -> int:
    if args.samples is None and args.max_n is None:
        raise UsageError("verify needs --max-n K or --samples M")
    if args.samples is not None:
        max_n = args.max_n if args.max_n is not None else THEOREMS[args.theorem].default_max_n
        pop = Population(max_n=max_n, samples=args.samples, seed=args.seed, min_n=args.min_n)
    else:
        pop = Population(max_n=args.max_n, min_n=args.min_n)
    report = run_campaign(args.theorem, pop, workers=args.workers)
    payload = report.to_dict()
    payload = {"verdict": report.ok, "class": args.theorem, "certificate": payload}
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def cmd_enumerate(args) -> int:
    label = CLASS_FILTERS.get(args.cls) if args.cls else None
    from .classes import WITNESS_FUNCS

    count = 0
    lines = []
    for d in enumerate_digraphs(args.n):
        if label is not None and WITNESS_FUNCS[label](d) is not None:
            continue
        count += 1
        if args.format != "json":
            print(compact(d))
        else:
            lines.append(compact(d))
    if args.format == "json":
        print(json.dumps({"verdict": True, "class": args.cls or "all", "certificate": {"count": count, "digraphs": lines}}))
    else:
        print(f"# {count} digraphs", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="digraph file in text format, '-' for stdin")
    common.add_argument("--format", "-f", choices=["text", "json", "dot"], default="text")

    parser = argparse.ArgumentParser(prog="dichordal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="list the classes the digraph belongs to")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("chordal", parents=[common], help="perfect elimination ordering or stuck certificate")
    p.set_defaults(func=cmd_chordal)

    p = sub.add_parser("characterize", parents=[common], help="forbidden-subdigraph verdict for a class")
    p.add_argument("--class", dest="cls", choices=sorted(CHARACTERIZATIONS), required=True)
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser("decompose", parents=[common], help="substitution tree of a weakly quasi-transitive digraph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("generate", parents=[common], help="random digraph of a class")
    p.add_argument("--class", dest="cls", choices=sorted(GENERATORS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--strategy", choices=["round", "rejection"], default="round")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    p.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="all labelled digraphs on n vertices, one per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=sorted(CLASS_FILTERS))
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
