"""Command-line front end.

Graph arguments are tag literals (``g{2;(1,2)(1,2)}``), linear combinations
(``2 * g{2;(1,2)} + -1/3 * g{1;(1,1)}``), or ``@path`` to read either from a
file.  Exit status: 0 on success, 1 on bad input or capacity refusal, 2 when
``verify`` finds a failing axiom.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import _kernels, commutative as comm, hopf
from .algebra import LinComb, TensorComb, parse_lincomb, product, product_lin, render_lincomb, render_tensor
from .errors import TagError
from .graph import Tag, canonicalize, min_spanning_forest, parse_tag, render_tag
from .verify import MUTATIONS, REFERENCE, enumerate_tags, mutant, run_standard_suite


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(arg: str) -> str:
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text()
        except OSError as exc:
            raise TagError(f"cannot read {arg[1:]!r}: {exc.strerror}") from None
    return arg


def _operand(arg: str) -> Tag | LinComb:
    """A single tag literal stays a Tag; anything else is a combination."""
    text = _read(arg).strip()
    if text.startswith("g{") and text.count("g{") == 1 and text.endswith("}"):
        return parse_tag(text)
    return parse_lincomb(text)


def _lin(x: Tag | LinComb) -> LinComb:
    return LinComb.of(x) if isinstance(x, Tag) else x


def _cmd_product(args) -> str:
    ops = [_operand(a) for a in args.operands]
    if all(isinstance(x, Tag) for x in ops):
        out = ops[0]
        for x in ops[1:]:
            out = product(out, x)
        return render_tag(out)
    acc = _lin(ops[0])
    for x in ops[1:]:
        acc = product_lin(acc, _lin(x))
    return render_lincomb(acc)


def _cmd_coproduct(args) -> str:
    x = _operand(args.operand)
    if isinstance(x, Tag):
        return render_tensor(hopf.coproduct(x, max_edges=args.capacity, workers=args.workers))
    return render_tensor(hopf.coproduct_lin(x, max_edges=args.capacity))


def _cmd_reduced(args) -> str:
    acc = TensorComb.zero()
    for t, c in _lin(_operand(args.operand)).items():
        acc = acc + hopf.reduced_coproduct(t, max_edges=args.capacity).scale(c)
    return render_tensor(acc)


def _cmd_antipode(args) -> str:
    x = _lin(_operand(args.operand))
    check = args.recursion == "check"
    recursion = "left" if check else args.recursion
    acc = LinComb.zero()
    for t, c in x.items():
        acc = acc + hopf.antipode(t, recursion, check=check, max_edges=args.capacity).scale(c)
    return render_lincomb(acc)


def _cmd_counit(args) -> str:
    c = hopf.counit(_lin(_operand(args.operand)))
    return str(c)


def _cmd_canon(args) -> str:
    x = _operand(args.operand)
    if isinstance(x, Tag):
        return render_tag(canonicalize(x))
    return render_lincomb(x)


def _cmd_project(args) -> str:
    x = _operand(args.operand)
    if isinstance(x, Tag):
        return comm.render_bare(comm.forget(x))
    return str(comm.project(x))


def _cmd_msf(args) -> str:
    x = _operand(args.operand)
    if not isinstance(x, Tag):
        raise TagError("msf takes a single tag")
    return "{" + ",".join(str(p) for p in sorted(min_spanning_forest(x))) + "}"


def _cmd_enumerate(args) -> str:
    return "\n".join(render_tag(t) for t in enumerate_tags(args.max_edges))


def _cmd_verify(args):
    ops = mutant(args.mutation) if args.mutation else REFERENCE
    report = run_standard_suite(max_edges=args.max_edges, samples=args.samples,
                                sample_max_edges=args.sample_max_edges, seed=args.seed, ops=ops)
    text = report.to_json() if args.format == "json" else report.to_text()
    return text.rstrip("\n"), (0 if report.passed else 2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="taghopf", description="Hopf algebra of totally assigned graphs")
    p.add_argument("--capacity", type=int, default=None,
                   help="edge limit for coproduct/antipode (default: $TAGHOPF_MAX_EDGES or 20)")
    p.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)

    s = sub.add_parser("product", help="ordinal-sum product of two or more operands")
    s.add_argument("operands", nargs="+")
    s.set_defaults(fn=_cmd_product)

    s = sub.add_parser("coproduct", help="sum of subgraph (x) quotient over edge subsets")
    s.add_argument("operand")
    s.add_argument("--workers", type=int, default=None, help="processes for the subset loop")
    s.set_defaults(fn=_cmd_coproduct)

    s = sub.add_parser("reduced-coproduct", help="coproduct minus t (x) 1 and 1 (x) t")
    s.add_argument("operand")
    s.set_defaults(fn=_cmd_reduced)

    s = sub.add_parser("antipode", help="antipode")
    s.add_argument("operand")
    s.add_argument("--recursion", choices=["left", "right", "check"], default="left",
                   help="left: S on the subgraph; right: S on the quotient; check: both, compared")
    s.set_defaults(fn=_cmd_antipode)

    s = sub.add_parser("counit", help="coefficient of the empty graph")
    s.add_argument("operand")
    s.set_defaults(fn=_cmd_counit)

    s = sub.add_parser("canon", help="canonical form")
    s.add_argument("operand")
    s.set_defaults(fn=_cmd_canon)

    s = sub.add_parser("project", help="forget the edge order")
    s.add_argument("operand")
    s.set_defaults(fn=_cmd_project)

    s = sub.add_parser("msf", help="minimum spanning forest (edge positions)")
    s.add_argument("operand")
    s.set_defaults(fn=_cmd_msf)

    s = sub.add_parser("enumerate", help="all classes with at most N edges")
    s.add_argument("--max-edges", type=int, required=True)
    s.set_defaults(fn=_cmd_enumerate)

    s = sub.add_parser("verify", help="run the axiom suite")
    s.add_argument("--max-edges", type=int, default=3, help="exhaustive universe bound")
    s.add_argument("--samples", type=int, default=200, help="sampled Tags above the bound")
    s.add_argument("--sample-max-edges", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--mutation", choices=sorted(MUTATIONS), default=None,
                   help="run against a deliberately broken build")
    s.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.backend:
            print(_kernels.BACKEND)
            return 0
        if args.verb is None:
            raise _UsageError(parser.format_help().rstrip())
        out = args.fn(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except TagError as exc:
        print(f"taghopf: error: {exc}", file=sys.stderr)
        return 1
    status = 0
    if isinstance(out, tuple):
        out, status = out
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
