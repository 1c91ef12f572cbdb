"""Command-line interface.

Subcommands: braid-eq, braid-act, alexander, zed, dims, wheels, check.
Output is deterministic for a fixed (inputs, flags, seed); ``--machine``
switches to line-oriented key=value records.  Exit codes: 0 success,
1 check/equality failure, 2 usage or parse error.
"""

import argparse
import sys

from .freegroup import word_from_text, word_to_text, aut_apply
from .wbraid import braid_from_text, braid_equal, braid_action
from .gauss import pd_from_text, pd_to_gauss, gauss_from_text, self_linking
from .rings import series_log
from .alexander import alexander_matrix, alexander_fox
from .arrows import LONG, quotient
from .jacobi import wheel_monomial_basis
from .expansion import zed_knot, project_expansion, wheels_reduce
from . import checks

USAGE_ERROR, CHECK_FAILURE = 2, 1


def _read(path):
    with open(path) as fh:
        return "".join(ln for ln in fh if not ln.lstrip().startswith("#"))


def _emit(machine, key, human_fmt, value):
    if machine:
        print("%s=%s" % (key, value))
    else:
        print(human_fmt % (value,))


def _load_diagram(path):
    """A Gauss diagram from a .pd, .gauss, or .braid file."""
    text = _read(path)
    head = text.split(None, 1)[0] if text.split() else ""
    if head.startswith("X["):
        return pd_to_gauss(pd_from_text(text))
    if head.startswith("n="):
        from .gauss import braid_closure
        try:
            return gauss_from_text(text)
        except ValueError:
            return braid_closure(braid_from_text(text))
    raise ValueError("unrecognized diagram format in %s" % path)


def _mono_name(mono):
    return "*".join("a" if g == "a" else "w%d" % g[1] for g in mono) or "1"


def cmd_braid_eq(args):
    a = braid_from_text(_read(args.left))
    b = braid_from_text(_read(args.right))
    eq = braid_equal(a, b)
    if args.machine:
        print("equal=%s" % ("true" if eq else "false"))
    else:
        print("equal" if eq else "distinct")
    return 0


def cmd_braid_act(args):
    b = braid_from_text(_read(args.braid))
    act = braid_action(b)
    if args.word:
        w = word_from_text(args.word, n=b.n)
        _emit(args.machine, "image", "%s", word_to_text(aut_apply(act, w)))
    else:
        for i, img in enumerate(act.images, start=1):
            _emit(args.machine, "x%d" % i, "x%d -> %%s" % i,
                  word_to_text(img))
    return 0


def cmd_alexander(args):
    results = {}
    if args.method in ("matrix", "both"):
        g = _load_diagram(args.diagram)
        series, poly = alexander_matrix(g, d=args.degree)
        results["matrix"] = poly
        if args.series:
            _emit(args.machine, "series", "A(e^x) = %s", series)
            _emit(args.machine, "log_series", "log A(e^x) = %s",
                  series_log(series))
    if args.method in ("fox", "both"):
        results["fox"] = alexander_fox(pd_from_text(_read(args.diagram)))
    for method, poly in sorted(results.items()):
        _emit(args.machine, method, "%s: %%s" % method, poly)
    if len(results) == 2 and results["matrix"] != results["fox"]:
        _emit(args.machine, "agree", "methods agree: %s", "false")
        return CHECK_FAILURE
    return 0


def cmd_zed(args):
    g = _load_diagram(args.diagram)
    _emit(args.machine, "self_linking", "self-linking %s", self_linking(g))
    z = zed_knot(g, args.degree)
    if args.basis == "wheels":
        coords = wheels_reduce(z)
        for m, comp in enumerate(coords):
            key = lambda mo: tuple(("a", 1) if t == "a" else t for t in mo)
            vals = " ".join("%s:%s" % (_mono_name(mono), comp[mono])
                            for mono in sorted(comp, key=key))
            _emit(args.machine, "degree%d" % m, "degree %d: %%s" % m,
                  vals or "0")
    else:
        flags = {"RI"} if args.basis == "projected" else set()
        for m, comp in enumerate(project_expansion(z, flags=flags)):
            _emit(args.machine, "degree%d" % m, "degree %d: %%s" % m,
                  " ".join(str(c) for c in comp) or "0")
    if args.check_alexander:
        from .expansion import predicted_from_alexander
        if wheels_reduce(z) != predicted_from_alexander(g, args.degree):
            _emit(args.machine, "alexander_match",
                  "Alexander prediction: %s", "MISMATCH")
            return CHECK_FAILURE
        _emit(args.machine, "alexander_match",
              "Alexander prediction: %s", "match")
    return 0


def _parse_skeleton(text):
    if text == "long":
        return LONG
    if text.startswith("strands:"):
        return ("strands", int(text.split(":", 1)[1]))
    raise ValueError("skeleton must be 'long' or 'strands:<n>'")


def cmd_dims(args):
    skel = _parse_skeleton(args.skeleton)
    rels = {r.strip().upper() for r in args.relations.split(",") if r.strip()}
    for m in range(args.degree + 1):
        q = quotient(skel, m, rels)
        _emit(args.machine, "dim%d" % m, "degree %d: dim %%s" % m, q.dim)
    return 0


def cmd_wheels(args):
    flags = {f.strip().upper() for f in args.flags.split(",") if f.strip()}
    for m in range(args.degree + 1):
        monos = wheel_monomial_basis(m, flags)
        _emit(args.machine, "basis%d" % m, "degree %d: %%s" % m,
              " ".join(_mono_name(mo) for mo in monos) or "(empty)")
    return 0


def cmd_check(args):
    failed = 0
    for name, fn in checks.ALL_CHECKS:
        if args.suite != "all" and args.suite != name:
            continue
        kwargs = {}
        if name in ("word-problem", "basis-conjugating",
                    "expansion-move-invariance", "weight-systems"):
            kwargs["seed"] = args.seed
        ok, detail = fn(**kwargs)
        failed += 0 if ok else 1
        status = "ok" if ok else "FAIL"
        if args.machine:
            print("%s=%s" % (name, status))
            print("%s_detail=%s" % (name.replace("-", "_"), detail))
        else:
            print("%-28s %-4s (%s)" % (name, status, detail))
    return CHECK_FAILURE if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="wknots",
                                description="w-braid and w-knot toolkit")
    p.add_argument("--machine", action="store_true",
                   help="line-oriented key=value output")
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("braid-eq", help="decide equality of two braid words")
    q.add_argument("left")
    q.add_argument("right")
    q.set_defaults(fn=cmd_braid_eq)

    q = sub.add_parser("braid-act",
                       help="free-group automorphism of a braid word")
    q.add_argument("braid")
    q.add_argument("--word", help="apply to this free word instead")
    q.set_defaults(fn=cmd_braid_act)

    q = sub.add_parser("alexander", help="Alexander polynomial of a knot")
    q.add_argument("diagram")
    q.add_argument("--method", choices=("matrix", "fox", "both"),
                   default="both")
    q.add_argument("--degree", type=int, default=5,
                   help="series truncation degree")
    q.add_argument("--series", action="store_true",
                   help="also print A(e^x) and its log")
    q.set_defaults(fn=cmd_alexander)

    q = sub.add_parser("zed", help="truncated universal invariant of a knot")
    q.add_argument("diagram")
    q.add_argument("--degree", type=int, default=4)
    q.add_argument("--basis", choices=("wheels", "projected", "plain"),
                   default="wheels")
    q.add_argument("--check-alexander", action="store_true")
    q.set_defaults(fn=cmd_zed)

    q = sub.add_parser("dims", help="graded dimensions of diagram quotients")
    q.add_argument("--skeleton", default="long")
    q.add_argument("--degree", type=int, default=4)
    q.add_argument("--relations", default="tc,4t")
    q.set_defaults(fn=cmd_dims)

    q = sub.add_parser("wheels", help="wheel-monomial bases by degree")
    q.add_argument("--degree", type=int, default=5)
    q.add_argument("--flags", default="ri")
    q.set_defaults(fn=cmd_wheels)

    q = sub.add_parser("check", help="run the verification suites")
    q.add_argument("--suite", default="all",
                   help="one suite name, or 'all'")
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(fn=cmd_check)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code else 0
    try:
        return args.fn(args)
    except (ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
