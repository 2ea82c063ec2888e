"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 domain error (empty variety
where a verdict was demanded, preconditions violated).  Domain errors are
reported as a machine-readable object on stdout.  Output is deterministic:
fixed sort orders and fixed key order everywhere.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import charvar, leaves as leaves_mod
from .corpus import BUILTIN_NAMES, builtin
from .decomp import canonical_decomposition, sigma_enumerate
from .errors import DomainError
from .quiver import ParamSet, Quiver, format_rational
from .roots import RootInfo, enumerate_roots
from .variety import VarietyDescriptor


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # malformed input -> exit 1
        raise ValueError(message)


def _parse_vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad dimension vector {text!r}; expected comma-separated integers")


def _parse_covector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad covector {text!r}; expected comma-separated rationals p/q")


def _parse_lambdas(text: Optional[str]) -> tuple[tuple[Fraction, ...], ...]:
    if not text:
        return ()
    return tuple(_parse_covector(part) for part in text.split(";") if part)


def _load_quiver(name: str) -> Quiver:
    try:
        return builtin(name)
    except ValueError:
        pass
    path = Path(name)
    if path.exists():
        return Quiver.from_json(path.read_text())
    raise ValueError(
        f"{name!r} is neither a builtin ({', '.join(BUILTIN_NAMES)}) nor a quiver file"
    )


def _params(args, n: int) -> ParamSet:
    lambdas = _parse_lambdas(getattr(args, "lam", None))
    theta = _parse_covector(args.theta) if getattr(args, "theta", None) else (Fraction(0),) * n
    for cov in lambdas + (theta,):
        if len(cov) != n:
            raise ValueError(f"covector of length {len(cov)} does not fit {n} vertices")
    return ParamSet(lambdas, theta)


# -- serialization ---------------------------------------------------------


def _root_obj(r: RootInfo) -> dict:
    return {"root": list(r.vector), "kind": r.kind.value, "p": r.p}


def _covector_obj(cov) -> list[str]:
    return [format_rational(x) for x in cov]


def _emit(obj, as_table: bool = False) -> None:
    if as_table:
        _emit_table(obj)
    else:
        print(json.dumps(obj, indent=2))


def _emit_table(obj) -> None:
    rows = obj if isinstance(obj, list) else [obj]
    for row in rows:
        print("  ".join(f"{k}={_plain(v)}" for k, v in row.items()))


def _plain(v):
    if isinstance(v, list):
        return "[" + ",".join(str(_plain(x)) for x in v) + "]"
    return v


# -- subcommands -----------------------------------------------------------


def _cmd_roots(args) -> int:
    q = _load_quiver(args.quiver)
    bound = _parse_vec(args.bound)
    out = [_root_obj(r) for r in enumerate_roots(q, bound)]
    _emit(out, args.format == "table")
    return 0


def _cmd_sigma(args) -> int:
    q = _load_quiver(args.quiver)
    bound = _parse_vec(args.bound)
    params = _params(args, q.vertices)
    out = [_root_obj(r) for r in sigma_enumerate(q, params, bound)]
    _emit(out, args.format == "table")
    return 0


def _cmd_canon(args) -> int:
    q = _load_quiver(args.quiver)
    alpha = _parse_vec(args.alpha)
    params = _params(args, q.vertices)
    canon = canonical_decomposition(q, params, alpha)
    if canon is None:
        _emit({"empty": True, "parts": [], "dimension": None}, args.format == "table")
        return 0
    out = {
        "empty": False,
        "parts": [{"mult": m, **_root_obj(r)} for m, r in canon.parts],
        "dimension": canon.dimension(),
    }
    _emit(out, args.format == "table")
    return 0


def _descriptor(args) -> VarietyDescriptor:
    q = _load_quiver(args.quiver)
    alpha = _parse_vec(args.alpha)
    params = _params(args, q.vertices)
    return VarietyDescriptor(q, alpha, params)


def _variety_obj(v: VarietyDescriptor) -> dict:
    if v.is_empty():
        return {"empty": True}
    verdict = v.resolution_verdict()
    return {
        "empty": False,
        "dimension": v.dimension(),
        "canonical": [{"mult": m, **_root_obj(r)} for m, r in v.canonical.parts],
        "smooth": v.is_smooth(),
        "resolvable": verdict.resolvable,
        "parts": [
            {"root": list(p.root.vector), "mult": p.mult, "gcd": p.gcd, "method": p.method}
            for p in verdict.per_part
        ],
    }


def _cmd_variety(args) -> int:
    _emit(_variety_obj(_descriptor(args)))
    return 0


def _cmd_strata(args) -> int:
    v = _descriptor(args)
    if v.is_empty():
        raise DomainError("the variety is empty; it has no strata")
    out = [
        {
            "parts": [{"mult": e, "root": list(r.vector)} for e, r in s.parts],
            "dim": s.dim,
            "codim": s.codim,
            "gcd": s.gcd_tau,
            "open": s.is_open,
            "formally_resolvable": s.formally_resolvable,
        }
        for s in v.strata
    ]
    _emit(out)
    return 0


def _cmd_leaves(args) -> int:
    v = _descriptor(args)
    pairs = leaves_mod.codim2_leaves(v, args.mode)
    out = {
        "leaves": [
            {
                "imag": [list(r.vector) for r in dec.imag_parts],
                "real": [{"mult": m, "root": list(r.vector)} for m, r in dec.real_parts],
                "type": dec.affine.label,
                "delta": list(dec.affine.delta),
                "weyl": dec.affine.weyl_label,
            }
            for dec, _ in pairs
        ],
        "caveat": "weyl labels the untwisted factor; the fundamental-group "
        "twist of each leaf is not computed",
    }
    if args.mode == leaves_mod.STRICT and leaves_mod.modes_may_differ(v):
        permissive = leaves_mod.codim2_leaves(v, leaves_mod.PERMISSIVE)
        extra = [
            {"imag": [list(r.vector) for r in d.imag_parts], "type": d.affine.label}
            for d, _ in permissive
            if all(d != sd for sd, _ in pairs)
        ]
        if extra:
            out["warning"] = {
                "message": "permissive-only leaves exist (alpha = 2*beta with p(beta) = 2)",
                "permissive_only": extra,
            }
    _emit(out)
    return 0


def _cmd_char(args) -> int:
    if args.table:
        return _char_table(args)
    s = charvar.SurfaceVariety(args.n, args.g, args.group.upper())
    verdict = charvar.resolution_verdict_char(s)
    out = {
        "n": s.n,
        "g": s.g,
        "group": s.group,
        "dimension": charvar.dimension_char(s),
        "resolvable": verdict["resolvable"],
        "method": verdict["method"],
        "singular_components": charvar.singular_components_char(s),
    }
    if s.group == charvar.GL:
        out["strata"] = [
            {"nu": [list(p) for p in nu], "dim": dim, "codim": codim}
            for nu, dim, codim in charvar.strata_char(s)
        ]
    _emit(out)
    return 0


def _char_table(args) -> int:
    rows = []
    for n in range(1, args.nmax + 1):
        for g in range(1, args.gmax + 1):
            s = charvar.SurfaceVariety(n, g, args.group.upper())
            verdict = charvar.resolution_verdict_char(s)
            rows.append(
                {
                    "n": n,
                    "g": g,
                    "dimension": charvar.dimension_char(s),
                    "resolvable": verdict["resolvable"],
                    "method": verdict["method"] or "",
                }
            )
    _print_grid(rows, args.format)
    return 0


def _print_grid(rows: list[dict], fmt: str) -> None:
    if not rows:
        return
    headers = list(rows[0])
    if fmt == "md":
        print("| " + " | ".join(headers) + " |")
        print("|" + "|".join("---" for _ in headers) + "|")
        for row in rows:
            print("| " + " | ".join(str(row[h]) for h in headers) + " |")
    else:
        print(",".join(headers))
        for row in rows:
            print(",".join(str(row[h]) for h in headers))


def _cmd_sweep(args) -> int:
    rows: list[dict] = []
    if args.grid == "char-quiver":
        for n in range(1, 6):
            for d in range(1, 6):
                v = charvar.char_as_quiver(n, d)
                verdict = v.resolution_verdict()
                rows.append(
                    {
                        "n": n,
                        "d": d,
                        "dimension": v.dimension(),
                        "resolvable": verdict.resolvable,
                    }
                )
    elif args.grid in ("char-gl", "char-sl"):
        group = charvar.GL if args.grid == "char-gl" else charvar.SL
        for n in range(1, 6):
            for g in range(1, 6):
                s = charvar.SurfaceVariety(n, g, group)
                verdict = charvar.resolution_verdict_char(s)
                rows.append(
                    {
                        "n": n,
                        "g": g,
                        "dimension": charvar.dimension_char(s),
                        "resolvable": verdict["resolvable"],
                        "method": verdict["method"] or "",
                    }
                )
    elif args.grid == "ade":
        cases = [
            ("affa1", (1, 1)),
            ("affa2", (1, 1, 1)),
            ("affd4", (2, 1, 1, 1, 1)),
        ]
        for name, delta in cases:
            q = builtin(name)
            for m in range(1, 4):
                alpha = tuple(m * x for x in delta)
                v = VarietyDescriptor(q, alpha, ParamSet.zero(q.vertices))
                rows.append(
                    {
                        "quiver": name,
                        "m": m,
                        "dimension": v.dimension(),
                        "smooth": v.is_smooth(),
                        "resolvable": v.resolution_verdict().resolvable,
                    }
                )
    else:
        raise ValueError(f"unknown grid {args.grid!r}")
    _print_grid(rows, args.format)
    return 0


# -- argument plumbing -----------------------------------------------------


def _add_quiver_opts(p, alpha: bool = False, bound: bool = False):
    p.add_argument("--quiver", required=True, help="builtin name or quiver JSON file")
    if alpha:
        p.add_argument("--alpha", required=True, help="dimension vector, comma-separated")
    if bound:
        p.add_argument("--bound", required=True, help="box bound, comma-separated")
    p.add_argument("--lambda", dest="lam", help="deformation covectors: lists joined by ';'")
    p.add_argument("--theta", help="stability covector, comma-separated rationals")


def build_parser() -> _Parser:
    parser = _Parser(prog="qsr", description="quiver variety decision engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots in a box")
    _add_quiver_opts(p, bound=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("sigma", help="Sigma elements in a box")
    _add_quiver_opts(p, bound=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(fn=_cmd_sigma)

    p = sub.add_parser("canon", help="canonical decomposition of alpha")
    _add_quiver_opts(p, alpha=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("variety", help="dimension, smoothness and resolution verdict")
    _add_quiver_opts(p, alpha=True)
    p.set_defaults(fn=_cmd_variety)

    p = sub.add_parser("strata", help="stratification by representation type")
    _add_quiver_opts(p, alpha=True)
    p.set_defaults(fn=_cmd_strata)

    p = sub.add_parser("leaves", help="codimension-two leaves and Weyl factors")
    _add_quiver_opts(p, alpha=True)
    p.add_argument(
        "--mode", choices=(leaves_mod.STRICT, leaves_mod.PERMISSIVE), default=leaves_mod.STRICT
    )
    p.set_defaults(fn=_cmd_leaves)

    p = sub.add_parser("char", help="surface-group character varieties")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--group", choices=("gl", "sl"), default="gl")
    p.add_argument("--table", action="store_true", help="emit an (n,g) verdict grid")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--gmax", type=int, default=5)
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.set_defaults(fn=_cmd_char)

    p = sub.add_parser("sweep", help="verdict tables over standard grids")
    p.add_argument(
        "--grid", choices=("char-quiver", "char-gl", "char-sl", "ade"), required=True
    )
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.set_defaults(fn=_cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except DomainError as exc:
        print(json.dumps({"error": {"code": "domain", "message": str(exc)}}, indent=2))
        return 2
    except ValueError as exc:
        print(json.dumps({"error": {"code": "input", "message": str(exc)}}, indent=2), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
