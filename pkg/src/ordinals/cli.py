"""Command-line front end.

Exit codes: 0 on success (and for ``cmp``: 0 ``<``, 1 ``=``, 2 ``>``), 1 when
a check answers no (invalid order, no simulation, a failing axiom check),
64 for usage errors, 65 for malformed input and 66 for unreadable files.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import axiom_suite, brouwer, cnf, ewo
from .brouwer import ConsistentUpTo
from .expr import EvalError, ParseError, parse_cnf

EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _ordinal(text: str) -> cnf.Cnf:
    try:
        return parse_cnf(text)
    except ParseError as e:
        raise DataError(f"cannot parse {text!r} {e}") from None
    except EvalError as e:
        raise DataError(str(e)) from None


def _show(args, a: cnf.Cnf) -> str:
    return cnf.to_text(a, "ω" if args.unicode else "w")


def _brw(args, text: str) -> brouwer.Brw:
    x = brouwer.ctob(_ordinal(text))
    return brouwer.strip(x) if args.strip_cert else x


def _load(path: str) -> ewo.FiniteOrder:
    try:
        return ewo.load_order(path)
    except OSError as e:
        raise FileNotFoundError(f"{path}: {e.strerror or e}") from None
    except ewo.OrderFormatError as e:
        raise DataError(f"{path}: {e}") from None


# -- commands --------------------------------------------------------------------


def cmd_eval(args, out) -> int:
    print(_show(args, _ordinal(args.expr)), file=out)
    return 0


def cmd_cmp(args, out) -> int:
    o = cnf.compare(_ordinal(args.left), _ordinal(args.right))
    sym, code = {cnf.Ordering.LESS: ("<", 0), cnf.Ordering.EQUAL: ("=", 1),
                 cnf.Ordering.GREATER: (">", 2)}[o]
    print(sym, file=out)
    return code


def cmd_classify(args, out) -> int:
    a = _ordinal(args.expr)
    c = cnf.classify(a)
    if args.fund is not None and not isinstance(c, cnf.IsLimit):
        raise DataError(f"{_show(args, a)} is not a limit; it has no fundamental sequence")
    if isinstance(c, cnf.IsZero):
        print("zero", file=out)
    elif isinstance(c, cnf.IsSuccessor):
        print(f"successor of {_show(args, c.pred)}", file=out)
    else:
        print("limit", file=out)
        for i in range(args.fund + 1 if args.fund is not None else 0):
            print(f"f({i}) = {_show(args, cnf.fund_eval(a, i))}", file=out)
    return 0


def cmd_brw_cmp(args, out) -> int:
    x, y = _brw(args, args.left), _brw(args, args.right)
    query = brouwer.lt_fuel if args.strict else brouwer.leq_fuel
    print(query(x, y, args.fuel), file=out)
    return 0


def cmd_brw_bisim(args, out) -> int:
    x, y = _brw(args, args.left), _brw(args, args.right)
    r = brouwer.bisim_refute(x, y, args.depth, args.width)
    print("consistent" if isinstance(r, ConsistentUpTo) else "refuted", file=out)
    return 0


def cmd_ewo_check(args, out) -> int:
    report = ewo.validate(_load(args.file))
    print("valid" if report.ok else "invalid", file=out)
    print(report.describe(), file=out)
    return 0 if report.ok else 1


def _validated(o: ewo.FiniteOrder, path: str) -> ewo.FiniteOrder:
    report = ewo.validate(o)
    if not report.ok:
        bad = [line for line in report.describe().splitlines() if ": no" in line]
        raise DataError(f"{path}: not a valid order; " + "; ".join(bad))
    return o


def cmd_ewo_sim(args, out) -> int:
    a = _validated(_load(args.a), args.a)
    b = _validated(_load(args.b), args.b)
    sims = ewo.find_simulations(a, b)
    if not sims:
        print("no simulation", file=out)
        return 1
    for s in sims:
        print("simulation " + " ".join(f"{i}->{j}" for i, j in enumerate(s.map)), file=out)
    bounded = ewo.find_bounded_simulation(a, b)
    print(f"bounded by {bounded.bound}" if bounded else "not bounded", file=out)
    return 0


_ARITY = {"sum": 2, "prod": 2, "succ": 1}


def cmd_ewo_op(args, out) -> int:
    if len(args.files) != _ARITY[args.op]:
        raise UsageError(f"ewo op {args.op} takes {_ARITY[args.op]} file(s)")
    orders = [_validated(_load(f), f) for f in args.files]
    if args.op == "sum":
        r = ewo.sum(*orders)
    elif args.op == "prod":
        r = ewo.product(*orders)
    else:
        r = ewo.successor(orders[0])
    print(ewo.dump_order(r), file=out)
    return 0


def cmd_ewo_limit(args, out) -> int:
    orders = [_validated(_load(f), f) for f in args.files]
    try:
        r = ewo.limit_chain(orders)
    except ewo.NotAChain as e:
        raise DataError(str(e)) from None
    print(ewo.dump_order(r), file=out)
    return 0


def cmd_axioms(args, out) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    structure = axiom_suite.INSTANCES[args.instance]()
    report = axiom_suite.run_suite(structure, args.samples, args.seed)
    print(report.to_json() if args.json else report.to_text(), file=out)
    return 1 if report.failures else 0


# -- argument parsing ------------------------------------------------------------


def _natural(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--unicode", action="store_true", help="print ω instead of w")

    p = _Parser(prog="ordinals", description="Ordinal arithmetic below epsilon-zero.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("eval", parents=[fmt], help="print the canonical form")
    s.add_argument("expr")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("cmp", help="compare two ordinals: exit 0 for <, 1 for =, 2 for >")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(run=cmd_cmp)

    s = sub.add_parser("classify", parents=[fmt], help="zero, successor or limit")
    s.add_argument("expr")
    s.add_argument("--fund", type=_natural, metavar="N",
                   help="also print the fundamental sequence up to index N")
    s.set_defaults(run=cmd_classify)

    s = sub.add_parser("brw-cmp", help="fuelled <= on Brouwer images")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--fuel", type=_natural, required=True)
    s.add_argument("--strip-cert", action="store_true", help="forget CNF certificates first")
    s.add_argument("--strict", action="store_true", help="ask < instead of <=")
    s.set_defaults(run=cmd_brw_cmp)

    s = sub.add_parser("brw-bisim", help="try to refute bisimilarity of Brouwer images")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--depth", type=_natural, required=True)
    s.add_argument("--width", type=_natural, required=True)
    s.add_argument("--strip-cert", action="store_true", help="forget CNF certificates first")
    s.set_defaults(run=cmd_brw_bisim)

    e = sub.add_parser("ewo", help="finite wellfounded orders stored as JSON")
    esub = e.add_subparsers(dest="ewo_command", required=True, parser_class=_Parser)
    s = esub.add_parser("check", help="validate an order and report witnesses")
    s.add_argument("file")
    s.set_defaults(run=cmd_ewo_check)
    s = esub.add_parser("sim", help="list simulations from A to B")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(run=cmd_ewo_sim)
    s = esub.add_parser("op", help="sum, product or successor")
    s.add_argument("op", choices=sorted(_ARITY))
    s.add_argument("files", nargs="+")
    s.set_defaults(run=cmd_ewo_op)
    s = esub.add_parser("limit", help="limit of a simulation chain")
    s.add_argument("files", nargs="+")
    s.set_defaults(run=cmd_ewo_limit)

    s = sub.add_parser("axioms", help="run the property suite on a shipped instance")
    s.add_argument("--instance", choices=sorted(axiom_suite.INSTANCES), required=True)
    s.add_argument("--samples", type=_natural, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--json", action="store_true", help="machine-readable report")
    s.set_defaults(run=cmd_axioms)
    return p


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EX_USAGE
    try:
        return args.run(args, out)
    except UsageError as e:
        print(f"ordinals: error: {e}", file=err)
        return EX_USAGE
    except DataError as e:
        print(f"ordinals: error: {e}", file=err)
        return EX_DATAERR
    except FileNotFoundError as e:
        print(f"ordinals: error: {e}", file=err)
        return EX_NOINPUT


if __name__ == "__main__":
    sys.exit(main())
