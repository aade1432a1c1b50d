"""Command line interface.

    voa verify --suite <name> --rank <d> [--weight-bound W]
               [--format json|text] [--out PATH]
    voa product <elemA> <n> <elemB>
    voa commutator <elemA> <i> <elemB> <j> --on <state>
    voa zhu member <expr> --rank <d> --weight-bound <W>
    voa boundary derive --relation <id> [--eps <int|sym>]
    voa gpoly <polyA> <polyB> --var <name>
    voa twisted mode <elem> <n> --on <state>

Exit code 0 only when every requested check passes.
"""

import argparse
import sys
from fractions import Fraction

from . import boundary, runner, zhu
from .catalog import Parser, _tokenize
from .exactalg import Context, UniPoly, g_poly
from .runner import Evaluator
from .twisted import twisted_n_product
from .vertex import eval_commutator, n_product


def _parse_expr(text):
    p = Parser(_tokenize(text, 0), 0)
    node = p.expr()
    p.expect("end")
    return node


def _evaluator(rank):
    return Evaluator(rank, runner.default_assign(rank))


def cmd_verify(args):
    if args.weight_bound:
        import os
        os.environ["VOA_MAX_WEIGHT"] = str(args.weight_bound)
    rep = runner.run_suite(args.suite, args.rank or None)
    runner.emit_report(rep, args.format, args.out)
    return 0 if rep.ok() else 1


def cmd_product(args):
    ev = _evaluator(args.rank)
    a = ev.element(_parse_expr(args.a))
    b = ev.state(_parse_expr(args.b))
    n = Fraction(args.n)
    if b.module.twisted():
        out = twisted_n_product(a, n, b)
    else:
        out = n_product(a, int(n), b)
    print(out.render())
    return 0


def cmd_commutator(args):
    ev = _evaluator(args.rank)
    a = ev.element(_parse_expr(args.a))
    b = ev.element(_parse_expr(args.b))
    s = ev.state(_parse_expr(args.on))
    out = eval_commutator(a, int(args.i), b, int(args.j), s)
    print(out.render())
    return 0


def cmd_zhu_member(args):
    ev = _evaluator(args.rank)
    v = ev.element(_parse_expr(args.expr))
    ok, cert = zhu.member_o(v, args.rank, args.weight_bound)
    if ok:
        print("member: certificate with %d circ generators" % len(cert))
        for oa, ob, c in cert:
            print("  %s * circ(%s, %s)" % (c, list(oa), list(ob)))
        return 0
    print("not found below weight %d" % args.weight_bound)
    return 1


def cmd_boundary_derive(args):
    names = ("s11_3", "s11_4_1", "s11_4_2", "s11_4_3")
    if args.relation not in names:
        print("unknown relation %r; choose from %s" % (args.relation, names))
        return 2
    eps = None if args.eps in (None, "sym") else int(args.eps)
    from .relations import RELATIONS
    from .words import WordEngine
    eng = WordEngine(boundary.PairConfig(eps))
    combo = boundary.boundary_action(
        eng, RELATIONS[args.relation],
        boundary._RELATION_WEIGHTS[args.relation])
    print(boundary.render_combo(combo))
    return 0


def cmd_gpoly(args):
    ctx = Context((args.coeff_var,)) if args.coeff_var else Context(())

    def parse_poly(text):
        # univariate in --var with rational or coeff-var coefficients:
        # terms like "3/2*x^2", "-x", "h*x", "5"
        text = text.replace("-", "+-")
        coeffs = {}
        for part in text.split("+"):
            part = part.strip()
            if not part:
                continue
            neg = part.startswith("-")
            if neg:
                part = part[1:]
            factors = part.split("*")
            c = ctx.const(1)
            deg = 0
            for f in factors:
                f = f.strip()
                if not f:
                    continue
                if f.startswith(args.var):
                    deg = 1
                    if "^" in f:
                        deg = int(f.split("^")[1])
                elif args.coeff_var and f.startswith(args.coeff_var):
                    d2 = 1
                    if "^" in f:
                        d2 = int(f.split("^")[1])
                    c = c * ctx.var(args.coeff_var) ** d2
                else:
                    c = c * Fraction(f)
            if neg:
                c = c * -1
            coeffs[deg] = coeffs.get(deg, ctx.const(0)) + c
        return UniPoly(ctx, [coeffs.get(d, ctx.const(0))
                             for d in range(max(coeffs, default=0) + 1)])

    g = g_poly(parse_poly(args.a), parse_poly(args.b))
    print(g)
    return 0


def cmd_twisted_mode(args):
    ev = _evaluator(args.rank)
    a = ev.element(_parse_expr(args.elem))
    s = ev.state(_parse_expr(args.on))
    print(twisted_n_product(a, Fraction(args.n), s).render())
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="voa", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="run a catalog suite")
    p.add_argument("--suite", default="all",
                   choices=runner.SUITES + ("all",))
    p.add_argument("--rank", type=int, default=0)
    p.add_argument("--weight-bound", type=int, default=0)
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("product", help="n-th product of two expressions")
    p.add_argument("a")
    p.add_argument("n")
    p.add_argument("b")
    p.add_argument("--rank", type=int, default=3)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("commutator", help="[a_i, b_j] applied to a state")
    p.add_argument("a")
    p.add_argument("i", type=int)
    p.add_argument("b")
    p.add_argument("j", type=int)
    p.add_argument("--on", required=True)
    p.add_argument("--rank", type=int, default=3)
    p.set_defaults(func=cmd_commutator)

    pz = sub.add_parser("zhu", help="level-zero algebra operations")
    zsub = pz.add_subparsers(dest="zcmd", required=True)
    p = zsub.add_parser("member", help="membership in the circ span")
    p.add_argument("expr")
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--weight-bound", type=int, default=10)
    p.set_defaults(func=cmd_zhu_member)

    pb = sub.add_parser("boundary", help="generic-vector derivations")
    bsub = pb.add_subparsers(dest="bcmd", required=True)
    p = bsub.add_parser("derive", help="top-mode action of a stored relation")
    p.add_argument("--relation", required=True)
    p.add_argument("--eps", default=None)
    p.set_defaults(func=cmd_boundary_derive)

    p = sub.add_parser("gpoly", help="pseudo-remainder chain of two polynomials")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--var", required=True)
    p.add_argument("--coeff-var", default=None)
    p.set_defaults(func=cmd_gpoly)

    pt = sub.add_parser("twisted", help="half-integer module operations")
    tsub = pt.add_subparsers(dest="tcmd", required=True)
    p = tsub.add_parser("mode", help="twisted mode action")
    p.add_argument("elem")
    p.add_argument("n")
    p.add_argument("--on", required=True)
    p.add_argument("--rank", type=int, default=2)
    p.set_defaults(func=cmd_twisted_mode)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
