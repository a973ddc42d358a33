"""Command line: JSON lines on stdout.

Exit status is 0 when the checked property holds, 1 when it fails (a JSON
witness is printed), and 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cantor, corpus
from .completion import complete
from .errors import DomainError, NotShellStar, PreconditionViolated, PrelamError, StructuralError
from .lamination import annotated_regions, from_json, to_json, validate
from .leafspace import build_leaf_space
from .planar import ISO_BOUND, PlanarPresentation, check_axioms, isomorphic
from .properties import classify
from .render import RenderStyle, render
from .universal import UniversalModel, embed, verify_embedding

OK, FAIL, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"error": "usage", "message": message}))
        raise SystemExit(USAGE)


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def _read(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _lamination(path):
    return from_json(_read(path))


def _presentation(path):
    """A presentation file, or a lamination whose leaf space is taken."""
    d = _read(path)
    if "leaves" in d:
        return build_leaf_space(from_json(d))
    try:
        return PlanarPresentation.from_json(d)
    except (KeyError, TypeError, ValueError) as e:
        raise StructuralError(f"malformed presentation JSON: {e}") from e


def _eps(args, al):
    if args.eps is not None:
        return args.eps
    if al.resolution is None:
        raise DomainError("no --eps given and the input carries no resolution")
    return al.resolution


# ---------------------------------------------------------------- commands

def cmd_validate(args):
    al = _lamination(args.input)
    validate(al)
    _emit({"valid": True, "leaves": len(al.leaves), "shells": len(al.shells),
           "stars": len(al.stars)})
    return OK


def cmd_regions(args):
    al = _lamination(args.input)
    validate(al)
    for r in annotated_regions(al, args.eps):
        _emit(r.to_json())
    return OK


def cmd_classify(args):
    al = _lamination(args.input)
    if args.budget is not None:
        al = al.with_(exceptions=args.budget)
    eps = _eps(args, al)
    delta = args.delta if args.delta is not None else eps
    rep = classify(al, eps, delta)
    _emit(rep.to_json())
    return OK if rep.passed else FAIL


def cmd_complete(args):
    al = _lamination(args.input)
    try:
        out = complete(al)
    except PreconditionViolated as e:
        _emit({"pass": False, "error": "PreconditionViolated", "message": str(e),
               "witness": e.witness})
        return FAIL
    _write(args, json.dumps(to_json(out), sort_keys=True))
    return OK


def cmd_leafspace(args):
    al = _lamination(args.input)
    try:
        p = build_leaf_space(al)
    except NotShellStar as e:
        _emit({"pass": False, "error": "NotShellStar", "message": str(e), "witness": e.witness})
        return FAIL
    _write(args, p.dumps())
    return OK


def cmd_check_axioms(args):
    rep = check_axioms(_presentation(args.input))
    _emit(rep.to_json())
    return OK if rep.passed else FAIL


def cmd_isomorphic(args):
    p1, p2 = _presentation(args.first), _presentation(args.second)
    iso = isomorphic(p1, p2, args.budget if args.budget is not None else ISO_BOUND)
    if iso is None:
        _emit({"isomorphic": False})
        return FAIL
    _emit({"isomorphic": True, "witness": iso.to_json()})
    return OK


def cmd_embed(args):
    p = _presentation(args.input)
    m = UniversalModel()
    emb = embed(p, m)
    v = verify_embedding(p, m, emb)
    _emit({"pass": v.passed, "verdict": v.to_json(), "map": emb.to_json(), "model": m.counts()})
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(m.dumps())
    return OK if v.passed else FAIL


def cmd_cantor_slice(args):
    lo, hi = args.window if args.window else (Fraction(-12), Fraction(12))
    for g in cantor.slice_gaps(args.r, (lo, hi), args.depth):
        _emit(g.to_json())
    return OK


def cmd_corpus(args):
    fam = args.family
    corpus.CorpusSpec(fam, args.seed, args.resolution, args.k, args.m)
    if fam == "prong":
        al = corpus.gen_prong(args.k, args.resolution, args.seed)
    elif fam == "shell-family":
        al = corpus.gen_shell_family(args.m, args.resolution, args.seed)
    elif fam == "trivial":
        al = corpus.gen_trivial(args.resolution, args.seed)
    elif fam == "regular":
        raw, first, second = corpus.gen_regular_two_completions(args.resolution)
        for x in (raw, first, second):
            _emit(to_json(x))
        return OK
    else:
        al, _ = corpus.gen_random(args.seed, args.resolution, raw=args.raw)
    _write(args, json.dumps(to_json(al), sort_keys=True))
    return OK


def cmd_render(args):
    al = _lamination(args.input)
    svg = render(al, RenderStyle(size=args.size))
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(svg)
        _emit({"written": args.out, "bytes": len(svg)})
    else:
        sys.stdout.buffer.write(svg)
    return OK


def _write(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        _emit({"written": args.out})
    else:
        print(text)


# ---------------------------------------------------------------- parser

def build_parser():
    top = _Parser(prog="prelam", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, fn, *inputs, help=None):
        p = sub.add_parser(name, help=help)
        for i in inputs:
            p.add_argument(i)
        p.set_defaults(fn=fn)
        return p

    def common(p, *flags):
        if "eps" in flags:
            p.add_argument("--eps", type=Fraction)
        if "delta" in flags:
            p.add_argument("--delta", type=Fraction)
        if "budget" in flags:
            p.add_argument("--budget", type=int)
        if "out" in flags:
            p.add_argument("--out")

    cmd("validate", cmd_validate, "input", help="structural validation")
    common(cmd("regions", cmd_regions, "input", help="complementary regions"), "eps")
    common(cmd("classify", cmd_classify, "input", help="property suite"),
           "eps", "delta", "budget")
    common(cmd("complete", cmd_complete, "input", help="complete a raw lamination"), "out")
    common(cmd("leafspace", cmd_leafspace, "input", help="leaf space presentation"), "out")
    cmd("check-axioms", cmd_check_axioms, "input", help="planar structure axioms")
    common(cmd("isomorphic", cmd_isomorphic, "first", "second", help="presentation isomorphism"),
           "budget")
    common(cmd("embed", cmd_embed, "input", help="embed into the universal model"), "out")

    p = cmd("cantor-slice", cmd_cantor_slice, help="gaps of one slice of the Cantor grid")
    p.add_argument("--r", type=Fraction, required=True)
    p.add_argument("--window", type=Fraction, nargs=2)
    p.add_argument("--depth", type=int, default=8)

    c = sub.add_parser("corpus", help="generators")
    csub = c.add_subparsers(dest="corpus_command", required=True, parser_class=_Parser)
    g = csub.add_parser("gen")
    g.add_argument("--family", choices=corpus.FAMILIES, required=True)
    g.add_argument("--k", type=int, default=3)
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--resolution", type=Fraction, default=Fraction(1, 16))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--raw", action="store_true", help="random family: emit a raw lamination")
    g.add_argument("--out")
    g.set_defaults(fn=cmd_corpus)

    p = cmd("render", cmd_render, "input", help="SVG drawing")
    p.add_argument("--out")
    p.add_argument("--size", type=int, default=512)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except PrelamError as e:
        _emit({"error": type(e).__name__, "message": str(e), "witness": e.witness})
        return USAGE
    except (OSError, json.JSONDecodeError) as e:
        _emit({"error": type(e).__name__, "message": str(e)})
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
