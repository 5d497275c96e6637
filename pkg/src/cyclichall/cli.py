"""Command-line front end: `hall <command> [flags]`.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 enumeration budget exceeded.
"""

import argparse
import json
import os
import sys

from . import __version__
from .canonical import (canonical_element, canonical_element_ic, latex_matrix,
                        latex_poly, monomial_expand, slice, slice_closed_form)
from .coeff import QPoly, eval_q
from .core import dim_vector, loewy_length, parse_matrix, periodicity
from .errors import BudgetExceeded, ValidationError
from .hallmult import mult_semisimple_q, mult_semisimple_twisted
from .hallpoly import all_triples, hall_polynomial
from .oracle import count_submodules
from .words import distinguished_word


class HallCache:
    """Append-only JSON-lines store of Hall polynomials."""

    def __init__(self, path):
        self.path = path
        self.data = {}
        if path and os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    k = rec["key"]
                    self.data[(k["n"], k["A"], k["B"], k["C"])] = QPoly.from_json(rec["value"])

    @staticmethod
    def key(A, B, C):
        return (A.n, A.to_text(), B.to_text(), C.to_text())

    def get(self, A, B, C):
        return self.data.get(self.key(A, B, C))

    def put(self, A, B, C, value):
        k = self.key(A, B, C)
        if k in self.data or not self.path:
            return
        self.data[k] = value
        rec = {"key": dict(zip(("n", "A", "B", "C"), k)), "value": value.to_json(),
               "engine": __version__}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec) + "\n")


def _alpha(text):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"bad --alpha {text!r}") from None
    if any(x < 0 for x in vals):
        raise ValidationError("--alpha entries must be nonnegative")
    return vals


def _matrix(text, n=None):
    A = parse_matrix(text)
    if n is not None and A.n != n:
        raise ValidationError(f"matrix {text!r} has n={A.n}, expected {n}")
    return A


def _vector_out(X, fmt):
    if fmt == "json":
        return json.dumps(X.to_json())
    sym = "u" if X.basis == "u" else "\\widetilde{u}"
    if fmt == "latex":
        return " + ".join(f"({latex_poly(c) if X.basis != 'u' else str(c)}) {sym}_{{{latex_matrix(A)}}}"
                          for A, c in X.items()) or "0"
    return "\n".join(f"{A.to_text()}\t{c}" for A, c in X.items())


def _element_out(ce, fmt):
    if fmt == "json":
        return json.dumps(ce.to_json())
    if fmt == "latex":
        return ce.to_latex()
    lines = [f"c[{ce.A.to_text()}] tight={str(ce.tight).lower()}"]
    lines += [f"  pbw  {B.to_text()}\t{c}" for B, c in sorted(ce.pbw.items(), key=lambda kv: kv[0].to_text())]
    lines += [f"  mono {B.to_text()}\t{c}" for B, c in sorted(ce.monomials.items(), key=lambda kv: kv[0].to_text())]
    return "\n".join(lines)


def cmd_dimvec(args):
    A = _matrix(args.matrix)
    d = dim_vector(A)
    if args.format == "json":
        return json.dumps({"matrix": A.to_text(), "dim": list(d),
                           "loewy_length": loewy_length(A), "periodicity": periodicity(A)})
    return ",".join(map(str, d))


def cmd_distword(args):
    w = distinguished_word(_matrix(args.matrix))
    if args.format == "json":
        return json.dumps({"n": w.n, "word": w.to_text()})
    return w.to_text()


def cmd_monomial(args):
    return _vector_out(monomial_expand(_matrix(args.matrix)), args.format)


def cmd_mult(args):
    A = _matrix(args.matrix)
    alpha = _alpha(args.alpha)
    if len(alpha) != A.n:
        raise ValidationError("--alpha length must equal n")
    f = mult_semisimple_q if args.untwisted else mult_semisimple_twisted
    return _vector_out(f(alpha, A), args.format)


def cmd_hallpoly(args):
    A, B, C = (_matrix(x, args.n) for x in (args.A, args.B, args.C))
    cache = HallCache(args.cache)
    val = cache.get(A, B, C)
    if val is None:
        val = hall_polynomial(A, B, C)
        cache.put(A, B, C, val)
    if args.format == "json":
        return json.dumps(val.to_json())
    if args.format == "latex":
        return str(val).replace("*", "")
    return str(val)


def cmd_canonical(args):
    A = _matrix(args.matrix)
    ce = canonical_element_ic(A) if args.route == "ic" else canonical_element(A)
    return _element_out(ce, args.format)


def cmd_slice(args):
    out = []
    for ce in slice(args.l, args.p, args.bound):
        cf = slice_closed_form(ce.A)
        agree = None if not cf else (cf.pbw == ce.pbw and cf.monomials == ce.monomials)
        out.append((ce, agree))
    if args.format == "json":
        return json.dumps([dict(ce.to_json(), closed_form_agrees=a) for ce, a in out])
    if args.format == "latex":
        return "\n".join(ce.to_latex() for ce, _ in out)
    return "\n".join(f"{ce.A.to_text()}\ttight={str(ce.tight).lower()}\tclosed_form="
                     f"{'n/a' if a is None else str(a).lower()}" for ce, a in out)


def cmd_verify(args):
    cache = HallCache(args.cache)
    qs = [int(x) for x in args.q.split(",")]
    checked = bad = 0
    lines = []
    for A, B, C in all_triples(args.n, args.max_dim):
        fresh = hall_polynomial(A, B, C)
        cached = cache.get(A, B, C)
        if cached is not None and cached != fresh:
            bad += 1
            lines.append(f"cache mismatch {A} {B} {C}")
        cache.put(A, B, C, fresh)
        for q in qs:
            checked += 1
            if eval_q(fresh, q) != count_submodules(A, B, C, q, args.budget):
                bad += 1
                lines.append(f"mismatch q={q} {A} {B} {C}")
    summary = {"n": args.n, "max_dim": args.max_dim, "q": qs, "checked": checked, "mismatches": bad}
    if args.format == "json":
        text = json.dumps(dict(summary, details=lines))
    else:
        text = "\n".join(lines + [f"checked {checked} mismatches {bad}"])
    return text, (1 if bad else 0)


def build_parser():
    p = argparse.ArgumentParser(prog="hall", description="Hall algebra and canonical basis of a cyclic quiver")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("json", "latex", "plain"), default="plain")
        sp.set_defaults(func=func)
        return sp

    add("dimvec", cmd_dimvec, "dimension vector").add_argument("--matrix", required=True)
    add("distword", cmd_distword, "distinguished word").add_argument("--matrix", required=True)
    add("monomial", cmd_monomial, "monomial in the PBW basis").add_argument("--matrix", required=True)
    sp = add("mult", cmd_mult, "left multiplication by a semisimple")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--untwisted", action="store_true")
    sp = add("hallpoly", cmd_hallpoly, "Hall polynomial phi^A_{B,C}")
    sp.add_argument("--n", type=int)
    for k in ("A", "B", "C"):
        sp.add_argument(f"--{k}", required=True)
    sp.add_argument("--cache", default=os.environ.get("HALL_CACHE"))
    sp = add("canonical", cmd_canonical, "canonical basis element")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--route", choices=("subtract", "ic"), default="subtract")
    sp = add("slice", cmd_slice, "n=2 slice with closed-form comparison")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--bound", type=int, default=3)
    sp = add("verify", cmd_verify, "compare Hall polynomials with brute-force counts")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--max-dim", type=int, default=3)
    sp.add_argument("--q", default="2,3")
    sp.add_argument("--budget", type=int, default=10**7)
    sp.add_argument("--cache", default=os.environ.get("HALL_CACHE"))
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        res = args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(res, tuple):
        res, code = res
    print(res)
    return code


if __name__ == "__main__":
    sys.exit(main())
