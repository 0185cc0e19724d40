"""``chm8`` command-line tool.

Exit codes: 0 success or predicate true, 1 predicate false, 2 error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import matrixio
from .equivalence import defect, equivalent
from .errors import CHMError, OutOfDomain
from .families import registry as reg
from .families.systems import SYSTEMS, get_system
from .membership import inequivalence_table, member
from .numerics import ToleranceConfig
from .verify import dephase, gram_residual, is_butson, is_hadamard, unimodular_deviation

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

KNOWN = ("A8A", "A8B", "V8A", "V8B", "B1", "B2")


class CLIError(Exception):
    pass


def _tol(args) -> ToleranceConfig:
    return ToleranceConfig(
        unimodular=args.eps_unimodular,
        gram=args.eps_gram,
        match=args.eps_match,
        rank=args.eps_rank,
        residual=args.eps_residual,
    )


def _floats(text: str | None) -> list[float]:
    if text is None or not text.strip():
        return []
    try:
        return [float(t) for t in text.split(",")]
    except ValueError:
        raise CLIError(f"cannot parse parameters {text!r}") from None


def _complexes(text: str) -> list[complex]:
    try:
        return [complex(t.strip().replace(" ", "")) for t in text.split(",")]
    except ValueError:
        raise CLIError(f"cannot parse values {text!r}") from None


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _write(args, H) -> None:
    q = getattr(args, "q", None)
    matrixio.write_matrix(H, args.out, repr=args.repr, q=q)


# --- commands ------------------------------------------------------------

def cmd_gen(args) -> int:
    spec = reg.get_family(args.family)
    params = _floats(args.params)
    try:
        H = reg.eval_family(spec, params, args.branch, _tol(args))
    except OutOfDomain as exc:
        for r in exc.verdict.reasons:
            print(f"out of domain: {r.name} = {r.value!r}", file=sys.stderr)
        return EXIT_ERROR
    _write(args, H)
    return EXIT_TRUE


def cmd_known(args) -> int:
    name = args.name.upper()
    if name not in KNOWN:
        raise CLIError(f"unknown matrix {args.name!r}; choose from {', '.join(KNOWN)}")
    _write(args, reg.eval_family(name))
    return EXIT_TRUE


def cmd_verify(args) -> int:
    H = matrixio.read_matrix(args.file)
    ok = is_hadamard(H, _tol(args))
    g, u = gram_residual(H), unimodular_deviation(H)
    _emit(
        args,
        {"hadamard": ok, "gram_residual": g, "unimodular_deviation": u},
        [f"hadamard: {str(ok).lower()}", f"gram residual: {g:.3e}",
         f"unimodular deviation: {u:.3e}"],
    )
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_dephase(args) -> int:
    H = matrixio.read_matrix(args.file)
    _write(args, dephase(H, _tol(args)).dephased)
    return EXIT_TRUE


def cmd_defect(args) -> int:
    H = matrixio.read_matrix(args.file)
    d = defect(H, _tol(args))
    _emit(args, {"defect": d}, [str(d)])
    return EXIT_TRUE


def cmd_equiv(args) -> int:
    A = matrixio.read_matrix(args.a)
    B = matrixio.read_matrix(args.b)
    w = equivalent(A, B, _tol(args))
    if w is None:
        _emit(args, {"equivalent": False}, ["equivalent: false"])
        return EXIT_FALSE
    p1, p2 = w.perms.one_line()
    d1 = [[float(z.real), float(z.imag)] for z in w.d1]
    d2 = [[float(z.real), float(z.imag)] for z in w.d2]
    _emit(
        args,
        {"equivalent": True, "p1": p1, "p2": p2, "d1": d1, "d2": d2},
        ["equivalent: true", f"P1 = {p1}", f"P2 = {p2}"],
    )
    return EXIT_TRUE


def cmd_member(args) -> int:
    H = matrixio.read_matrix(args.file)
    report = member(args.family, H, _tol(args))
    payload = report.to_dict()
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_TRUE if report.found else EXIT_FALSE


def cmd_table(args) -> int:
    fams, table = inequivalence_table(_tol(args))
    names = [reg.get_family(f).name for f in fams]
    diagonal = bool(np.array_equal(table, np.eye(len(fams), dtype=bool)))
    if args.json:
        print(json.dumps({"families": names, "table": table.astype(int).tolist(),
                          "diagonal": diagonal}, indent=2))
    else:
        width = max(len(n) for n in names)
        print(" " * width + " " + " ".join(n.rjust(width) for n in names))
        for name, row in zip(names, table):
            print(name.rjust(width) + " " + " ".join(("1" if v else ".").rjust(width) for v in row))
        print(f"diagonal: {str(diagonal).lower()}")
    return EXIT_TRUE if diagonal else EXIT_FALSE


def cmd_butson(args) -> int:
    H = matrixio.read_matrix(args.file)
    check = is_butson(H, args.q, _tol(args))
    payload = {"butson": check.is_butson, "q": args.q}
    lines = [f"butson({args.q}): {str(check.is_butson).lower()}"]
    if check.is_butson:
        payload["logs"] = check.logs.tolist()
        lines += [" ".join(str(int(k)) for k in row) for row in check.logs]
    _emit(args, payload, lines)
    return EXIT_TRUE if check.is_butson else EXIT_FALSE


def cmd_residual(args) -> int:
    system = get_system(args.system)
    values = _complexes(args.values)
    r = system.residual(values)
    ok = r < _tol(args).residual
    _emit(args, {"system": system.name, "residual": r}, [f"{r:.3e}"])
    return EXIT_TRUE if ok else EXIT_FALSE


# --- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    defaults = ToleranceConfig()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps-unimodular", type=float, default=defaults.unimodular)
    common.add_argument("--eps-gram", type=float, default=defaults.gram)
    common.add_argument("--eps-match", type=float, default=defaults.match)
    common.add_argument("--eps-rank", type=float, default=defaults.rank)
    common.add_argument("--eps-residual", type=float, default=defaults.residual)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    writer = argparse.ArgumentParser(add_help=False)
    writer.add_argument("--out", default="-", help="output file ('-' for stdout)")
    writer.add_argument("--repr", default="cartesian", choices=matrixio.REPRS)
    writer.add_argument("--q", type=int, default=None, help="order of roots for butson-log")

    parser = argparse.ArgumentParser(
        prog="chm8", description="Complex Hadamard matrices of order 8."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common, writer], help="evaluate a family")
    p.add_argument("family")
    p.add_argument("params", nargs="?", default="", help="comma-separated parameters")
    p.add_argument("--branch", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("known", parents=[common, writer], help="write an isolated or Butson matrix")
    p.add_argument("name", help=", ".join(KNOWN))
    p.set_defaults(func=cmd_known)

    p = sub.add_parser("verify", parents=[common], help="check the Hadamard property")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dephase", parents=[common, writer], help="dephase a matrix")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_dephase)

    p = sub.add_parser("defect", parents=[common], help="defect of a Hadamard matrix")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("equiv", parents=[common], help="test equivalence of two matrices")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("member", parents=[common], help="family membership search")
    p.add_argument("family")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("table", parents=[common], help="inequivalence table at the test points")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("butson", parents=[common], help="test for Butson type")
    p.add_argument("file")
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_butson)

    p = sub.add_parser("residual", parents=[common], help="evaluate an orthogonality system")
    p.add_argument("system", help=", ".join(SYSTEMS))
    p.add_argument("values", help="comma-separated complex values, e.g. 1,1j,-1")
    p.set_defaults(func=cmd_residual)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except (CHMError, CLIError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main_exit() -> None:  # pragma: no cover - console-script shim
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
