"""Command-line interface.

Exit status: 0 on success, 1 when a verification suite has failures,
2 on malformed input, 3 when a degree exceeds the configured cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import qsym_algebra as qs
from . import ssym_algebra as ss
from . import weak_order as wo
from .config import DegreeTooLarge, HopfPermError, InvalidInput, check_degree
from .linear import PermExpansion, QSymExpansion
from .perm_core import Permutation
from .structure_lab import cofree, crossed, descent_pairs, duality
from .textio import dumps, format_expansion, parse_expansion, parse_index

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGREE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the usage text
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _element(algebra: str, basis: str | None, items: Sequence[str], expr: str | None):
    cls = PermExpansion if algebra == "ssym" else QSymExpansion
    if expr is not None:
        if items:
            raise InvalidInput("give either basis indices or --expr, not both")
        x = parse_expansion(expr)
        if not isinstance(x, cls) or x.dual or (basis is not None and x.basis != basis):
            raise InvalidInput(f"--expr is not a primal {algebra} element in the requested basis")
    elif not items:
        raise InvalidInput("give at least one basis index or --expr")
    else:
        x = cls(basis or "F", [(parse_index(s, algebra), 1) for s in items])
    check_degree(x.max_degree())
    return x


def _mod(algebra: str):
    return ss if algebra == "ssym" else qs


def _emit(x, as_json: bool) -> None:
    print(dumps(x) if as_json else format_expansion(x))


def _add_element_args(p: argparse.ArgumentParser, basis_flag: str = "--basis") -> None:
    p.add_argument("--algebra", choices=("ssym", "qsym"), default="ssym")
    if basis_flag:
        p.add_argument(basis_flag, dest="basis", choices=("F", "M"), default=None, help="default F")
    p.add_argument("--expr", help="a whole expansion, e.g. 'M[12] - 2*M[21]'")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")


def _cmd_expand(a) -> int:
    x = _element(a.algebra, a.basis, a.index, a.expr)
    _emit(_mod(a.algebra).to_basis(x, a.to), a.json)
    return EXIT_OK


def _cmd_product(a) -> int:
    if len(a.index) < 2:
        raise InvalidInput("product needs at least two factors")
    mod = _mod(a.algebra)
    out = _element(a.algebra, a.basis, a.index[:1], None)
    for s in a.index[1:]:
        out = mod.product(out, _element(a.algebra, a.basis, [s], None))
    _emit(out, a.json)
    return EXIT_OK


def _cmd_coproduct(a) -> int:
    x = _element(a.algebra, a.basis, a.index, a.expr)
    _emit(_mod(a.algebra).coproduct(x), a.json)
    return EXIT_OK


def _cmd_antipode(a) -> int:
    x = _element(a.algebra, a.basis, a.index, a.expr)
    mod = _mod(a.algebra)
    if a.method == "takeuchi":
        if a.algebra != "ssym":
            raise InvalidInput("the Takeuchi route is available for the permutation algebra")
        step = ss.takeuchi_antipode
    else:
        step = mod.antipode
    for _ in range(a.power):
        x = step(x)
    _emit(x, a.json)
    return EXIT_OK


def _cmd_mobius(a) -> int:
    u = Permutation(a.u)
    check_degree(len(u))
    if a.v is None:
        row = wo.mobius_row(u)
        x = PermExpansion("F", row)
        if a.json:
            print(json.dumps([{"v": list(v), "mu": c} for v, c in x.items()], separators=(",", ":")))
        else:
            for v, c in x.items():
                print(f"{v} {c}")
        return EXIT_OK
    v = Permutation(a.v)
    print(wo.mobius(u, v))
    return EXIT_OK


def _cmd_table(a) -> int:
    check_degree(a.degree)
    if a.name == "theta":
        table = duality.theta_table(a.degree)
    else:
        table = descent_pairs.pair_table(a.degree, a.name)
    sys.stdout.write(table.to_json() + "\n" if a.format == "json" else table.to_csv())
    return EXIT_OK


def _cmd_series(a) -> int:
    name = a.name.upper()
    if not name.startswith("G") or not name[1:].isdigit() or int(name[1:]) < 1:
        raise InvalidInput(f"unknown series {a.name!r}; use G1, G2, ...")
    k = int(name[1:])
    top = k + a.terms - 1
    check_degree(top)
    if a.route == "count":
        s = cofree.g_series(k, top)
    else:
        g1 = cofree.g1_by_determinant(top) if a.route == "determinant" else cofree.g1_by_reciprocal(top)
        s = cofree.series_power(g1, k)
    coeffs = s.coefficients[k:k + a.terms]
    if a.json:
        print(json.dumps({"name": f"G{k}", "start_degree": k, "coefficients": list(coeffs)}))
    else:
        print(" ".join(str(c) for c in coeffs))
    return EXIT_OK


def _print_perms(perms, as_json: bool) -> None:
    if as_json:
        print(json.dumps([list(u) for u in perms], separators=(",", ":")))
    else:
        print(" ".join(str(u) for u in perms))


def _cmd_primitives(a) -> int:
    check_degree(a.degree)
    _print_perms(cofree.primitives(a.degree), a.json)
    return EXIT_OK


def _cmd_kernel(a) -> int:
    check_degree(a.degree)
    _print_perms(crossed.hopf_kernel_basis(a.degree), a.json)
    return EXIT_OK


def _cmd_verify(a) -> int:
    from .verify import SUITES, run_suite

    check_degree(a.max_degree)
    if a.suite != "all" and a.suite not in SUITES:
        raise InvalidInput(f"unknown suite {a.suite!r}; choose from all, {', '.join(SUITES)}")
    results = run_suite(a.suite, a.max_degree)
    passed = sum(r.passed for r in results)
    failed = len(results) - passed
    if a.json:
        print(json.dumps({
            "suite": a.suite,
            "max_degree": a.max_degree,
            "passed": passed,
            "failed": failed,
            "checks": [
                {"suite": r.suite, "name": r.name, "passed": r.passed, "error": r.error}
                for r in results
            ],
        }))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            extra = f"  ({r.error})" if r.error else ""
            print(f"{status}  {r.suite}: {r.name}{extra}")
        print(f"{passed} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hopfperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="change basis")
    _add_element_args(p, basis_flag="--from")
    p.add_argument("--to", choices=("F", "M"), required=True)
    p.add_argument("index", nargs="*", help="permutation like 4123, composition like (2,1), or {1}@3")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("product", help="multiply basis elements")
    _add_element_args(p)
    p.add_argument("index", nargs="+")
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("coproduct", help="comultiply")
    _add_element_args(p)
    p.add_argument("index", nargs="*")
    p.set_defaults(fn=_cmd_coproduct)

    p = sub.add_parser("antipode", help="apply the antipode")
    _add_element_args(p)
    p.add_argument("--power", type=int, default=1, help="apply it this many times")
    p.add_argument("--method", choices=("closed", "takeuchi"), default="closed")
    p.add_argument("index", nargs="*")
    p.set_defaults(fn=_cmd_antipode)

    p = sub.add_parser("mobius", help="Möbius function of the weak order")
    p.add_argument("u")
    p.add_argument("v", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_mobius)

    p = sub.add_parser("table", help="theta, d, b or c table")
    p.add_argument("--name", choices=("theta", "d", "b", "c"), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("series", help="coefficients of G_k from degree k on")
    p.add_argument("--name", default="G1")
    p.add_argument("--terms", type=int, default=7)
    p.add_argument("--route", choices=("count", "determinant", "reciprocal"), default="count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("primitives", help="permutations with no global descent")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_primitives)

    p = sub.add_parser("kernel", help="basis of the Hopf kernel of the descent map")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_kernel)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DegreeTooLarge as exc:
        print(f"hopfperm: {exc}", file=sys.stderr)
        return EXIT_DEGREE
    except (HopfPermError, ValueError) as exc:
        print(f"hopfperm: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
