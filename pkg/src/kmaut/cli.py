"""Command line front end: table generation, invariant computation,
conjugacy testing, realization, real forms and the self-verification suite.

All numeric payloads in the JSON formats are exact strings ("3/4"); nothing
is ever emitted as a float.
"""

from __future__ import annotations

import argparse
import json
import sys
from .autg import InvLabel, parse_label
from .errors import KmautError
from .loopaut import (
    FirstKindInvariant,
    SecondKindInvariant,
    StandardLoopAutomorphism,
    conjugacy_test,
    invariant_first_kind,
    invariant_second_kind,
)
from .pi0 import ComponentClass, pi0_row
from .realforms import invariant_conj_linear, real_form_basis
from .tables import (
    algebra_from_args,
    enumerate_first_kind,
    enumerate_second_kind,
    realize,
    valid_ks,
)


def _emit(args, payload, text_fn=None, latex_fn=None):
    mode = getattr(args, "emit", "json") or "json"
    if mode == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif mode == "latex" and latex_fn is not None:
        print(latex_fn())
    else:
        print(text_fn() if text_fn is not None else
              json.dumps(payload, indent=2, sort_keys=True))


def _row_latex(rows):
    lines = [r"\begin{tabular}{lll}"]
    for row in rows:
        for e in row.entries:
            from .tables import _entry_text
            lines.append("%s & %s & %s \\\\" % (row.label(), _entry_text(e),
                                                row.count))
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def cmd_tables(args):
    algebra = algebra_from_args(args.family, args.n)
    ks = [args.k] if args.k else list(valid_ks(algebra))
    kinds = [args.kind] if args.kind else [1, 2]
    rows = []
    for kind in kinds:
        for k in ks:
            if k not in valid_ks(algebra):
                raise KmautError("k = %d is not valid for %s"
                                 % (k, algebra.label()))
            rows.append(enumerate_first_kind(algebra, k) if kind == 1
                        else enumerate_second_kind(algebra, k))
    _emit(args, [r.to_json() for r in rows],
          text_fn=lambda: "\n".join(r.render() for r in rows),
          latex_fn=lambda: _row_latex(rows))
    return 0


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def cmd_invariant(args):
    phi = StandardLoopAutomorphism.from_json(_load(args.infile))
    if phi.phi0.conj:
        inv = invariant_conj_linear(phi)
    elif phi.epsilon == 1:
        inv = invariant_first_kind(phi)
    else:
        inv = invariant_second_kind(phi)
    _emit(args, inv.to_json())
    return 0


def cmd_conjugate(args):
    a = StandardLoopAutomorphism.from_json(_load(args.a))
    b = StandardLoopAutomorphism.from_json(_load(args.b))
    verdict = conjugacy_test(a, b)
    _emit(args, {"result": verdict})
    return 0


def _invariant_from_json(obj):
    algebra = algebra_from_args(obj["algebra"]["family"],
                                obj["algebra"].get("n"))
    if obj["kind"] == 1:
        rho = parse_label(algebra, obj["rho"]) if obj.get("rho") else InvLabel(0)
        beta = obj["beta"]
        row = pi0_row(algebra, rho if obj.get("p", 0) == 0 else InvLabel(0))
        entry = next(e for e in row.entries
                     if e.rep == (beta["rep"] if isinstance(beta, dict) else beta))
        cc = ComponentClass(row.rho_label, entry.rep, entry.k)
        return FirstKindInvariant(algebra, int(obj.get("q", 2)),
                                  int(obj.get("p", 0)), rho, cc)
    pair = tuple(parse_label(algebra, x) for x in obj["pair"])
    return SecondKindInvariant(algebra, int(obj.get("order", 2)), pair,
                               int(obj["k"]))


def cmd_realize(args):
    inv = _invariant_from_json(_load(args.infile))
    phi = realize(inv)
    _emit(args, phi.to_json())
    return 0


def cmd_realform(args):
    fam, rank = args.algebra
    algebra = algebra_from_args(fam, rank)
    labels = [s.strip() for s in args.pair.split(",")]
    if len(labels) != 2:
        raise KmautError("--pair wants two labels, e.g. 'mu,id'")
    pair = tuple(parse_label(algebra, s) for s in labels)
    basis = real_form_basis(algebra, pair,
                            N=args.window if args.window else None)
    payload = {
        "algebra": algebra.to_json(),
        "pair": [repr(x) for x in pair],
        "l": basis.l,
        "window": basis.window,
        "coefficient_dims": {str(k): v for k, v in
                             sorted(basis.coefficient_dims().items())},
        "bracket_closed": basis.closed_under_bracket(),
        "basis": [b.to_json() for b in basis.basis],
    }

    def latex_fn():
        lines = [r"\begin{tabular}{ll}"]
        for n, d in sorted(basis.coefficient_dims().items()):
            lines.append(r"$n = %d$ & $\dim = %d$ \\" % (n, d))
        lines.append(r"\end{tabular}")
        return "\n".join(lines)

    def text_fn():
        dims = ", ".join("%d: %d" % kv
                         for kv in sorted(basis.coefficient_dims().items()))
        return ("real form for pair [%s, %s] on %s\n"
                "conductor %d, window %d, bracket closed: %s\n"
                "coefficient dims: %s"
                % (repr(pair[0]), repr(pair[1]), algebra.label(), basis.l,
                   basis.window, basis.closed_under_bracket(), dims))

    _emit(args, payload, text_fn=text_fn, latex_fn=latex_fn)
    return 0


def cmd_selftest(args):
    from .selftest import run_all
    results = run_all(deep=args.deep, stream=sys.stdout)
    failed = [r for r in results if not r[1]]
    print("%d/%d criteria passed" % (len(results) - len(failed), len(results)))
    return 1 if failed else 0


def _algebra_spec(value):
    return value


def build_parser():
    p = argparse.ArgumentParser(
        prog="kmaut",
        description="Exact classification machinery for finite-order "
                    "automorphisms and real forms of twisted loop and "
                    "affine Kac-Moody algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    t = sub.add_parser("tables", help="emit classification table rows")
    t.add_argument("--family", required=True,
                   choices=["a", "b", "c", "d", "e6", "e7", "e8", "f4", "g2"])
    t.add_argument("--n", type=int)
    t.add_argument("--k", type=int, choices=[1, 2, 3])
    t.add_argument("--kind", type=int, choices=[1, 2])
    t.add_argument("--emit", choices=["json", "text", "latex"], default="json")
    t.set_defaults(fn=cmd_tables)

    i = sub.add_parser("invariant", help="invariant of a serialized automorphism")
    i.add_argument("--in", dest="infile", required=True)
    i.add_argument("--emit", choices=["json", "text"], default="json")
    i.set_defaults(fn=cmd_invariant)

    c = sub.add_parser("conjugate", help="decide conjugacy of two automorphisms")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--emit", choices=["json", "text"], default="json")
    c.set_defaults(fn=cmd_conjugate)

    r = sub.add_parser("realize", help="realize an invariant as an automorphism")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--emit", choices=["json", "text"], default="json")
    r.set_defaults(fn=cmd_realize)

    f = sub.add_parser("realform", help="window basis of a real form")
    f.add_argument("--pair", required=True)
    f.add_argument("--algebra", required=True,
                   help="algebra label like a1, d4, e6")
    f.add_argument("--window", type=int)
    f.add_argument("--emit", choices=["json", "text", "latex"], default="json")
    f.set_defaults(fn=cmd_realform)

    s = sub.add_parser("selftest", help="run the verification suite")
    s.add_argument("--deep", action="store_true")
    s.set_defaults(fn=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = int(exc.code or 0)
        if code != 0:
            print(json.dumps({"error": "argument parsing failed"}))
        return code
    if args.verb == "realform":
        label = args.algebra.strip().lower()
        fam = label.rstrip("0123456789")
        digits = label[len(fam):]
        args.algebra = (fam, int(digits) if digits and fam in "abcd" else None)
    try:
        return args.fn(args)
    except KmautError as exc:
        print(json.dumps({"error": str(exc)}))
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(json.dumps({"error": "%s: %s" % (type(exc).__name__, exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
