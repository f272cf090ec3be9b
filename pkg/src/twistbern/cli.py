"""Command-line interface: tables, single verifications, and grid sweeps.

Exit codes are stable across subcommands: 0 = all checks pass, 1 = a
mathematical mismatch was found, 2 = usage or parameter error.  Rationals are
always serialized as strings like "p/q", never as floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bernoulli import TwistContext, bernoulli_numbers, powersum_gf_check
from .characters import enumerate_characters
from .padic import convergence_check
from .symmetry import (THEOREM_IDS, QuotientSpec, _FAMILY_MAX_I,
                       permutation_invariance_check, verify_theorem)

_USAGE_ERROR = 2
_MISMATCH = 1


@dataclass
class GridSpec:
    """Cartesian sweep: moduli x characters x twist orders x weight triples."""

    d_list: list[int]
    char_selector: str  # "all" | "primitive" | comma list of indices
    xi_orders: list[int]
    w_list: list[tuple[int, int, int]]
    n_max: int = 4
    truncation: int = 4
    output_format: str = "text"
    jobs: int = 1

    def __post_init__(self):
        if not self.d_list or not self.xi_orders or not self.w_list:
            raise ValueError("grid needs at least one d, xi order, and w triple")
        if self.output_format not in ("text", "json", "csv"):
            raise ValueError("output format must be text, json, or csv")
        if any(d < 1 for d in self.d_list):
            raise ValueError("moduli must be >= 1")
        if any(r < 1 for r in self.xi_orders):
            raise ValueError("xi orders must be >= 1")
        if any(len(w) != 3 or min(w) < 1 for w in self.w_list):
            raise ValueError("every w component must be >= 1")

    def char_indices(self, d: int) -> list[int]:
        chars = enumerate_characters(d)
        if self.char_selector == "all":
            return list(range(len(chars)))
        if self.char_selector == "primitive":
            return [i for i, c in enumerate(chars) if c.is_primitive]
        idx = [int(t) for t in self.char_selector.split(",")]
        for i in idx:
            if not 0 <= i < len(chars):
                raise ValueError(f"character index {i} out of range mod {d}")
        return idx

    def points(self) -> list[tuple]:
        pts = []
        for d in sorted(self.d_list):
            for ci in self.char_indices(d):
                for r in sorted(self.xi_orders):
                    for w in self.w_list:
                        pts.append((d, ci, r, 1, tuple(w)))
        return sorted(set(pts))


def _parse_ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip() != ""]


def _parse_w(text: str) -> tuple[int, int, int]:
    parts = _parse_ints(text)
    if len(parts) != 3:
        raise ValueError("--w expects three comma-separated integers")
    return tuple(parts)  # type: ignore[return-value]


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _warn_imprimitive(ctx: TwistContext, char_index: int):
    chi = ctx.chi
    if not chi.is_primitive:
        print(f"note: character #{char_index} mod {chi.modulus} is imprimitive "
              f"(conductor {chi.conductor})", file=sys.stderr)


def _build_context(args, p=None, s=None) -> TwistContext:
    ctx = TwistContext.from_orders(args.d, args.char, args.xi_order,
                                   args.xi_exp, p=p, s=s)
    _warn_imprimitive(ctx, args.char)
    return ctx


# -- subcommands --------------------------------------------------------------

def cmd_chars(args) -> int:
    chars = enumerate_characters(args.d)
    rows = [[i, " ".join(map(str, c.exponents)), c.order, c.conductor,
             "yes" if c.is_primitive else "no"]
            for i, c in enumerate(chars)]
    if args.format == "json":
        payload = [dict(index=i, **c.to_json_dict(),
                        primitive=c.is_primitive)
                   for i, c in enumerate(chars)]
        _emit(_dump_json(payload), args.out)
    elif args.format == "csv":
        _emit(_csv_text(["index", "exponents", "order", "conductor",
                         "primitive"], rows), args.out)
    else:
        lines = [f"characters mod {args.d} ({len(chars)} total)",
                 f"{'index':>5} {'exponents':>12} {'order':>5} "
                 f"{'conductor':>9} {'primitive':>9}"]
        lines += [f"{r[0]:>5} {r[1]:>12} {r[2]:>5} {r[3]:>9} {r[4]:>9}"
                  for r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_bernoulli(args) -> int:
    ctx = _build_context(args)
    table = bernoulli_numbers(ctx, args.n)
    if args.format == "json":
        payload = {"params": ctx.params(),
                   "values": [v.to_json_dict() for v in table.values]}
        _emit(_dump_json(payload), args.out)
    elif args.format == "csv":
        rows = [[n, json.dumps(v.to_json_dict(), sort_keys=True)]
                for n, v in enumerate(table.values)]
        _emit(_csv_text(["n", "value"], rows), args.out)
    else:
        lines = [f"B_n for d={args.d}, chi #{args.char}, "
                 f"xi = zeta_{args.xi_order}^{args.xi_exp}"]
        lines += [f"  B_{n} = {v}" for n, v in enumerate(table.values)]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    ctx = _build_context(args)
    ids = list(THEOREM_IDS) if args.theorem == "all" else [int(args.theorem)]
    for tid in ids:
        if tid not in THEOREM_IDS:
            raise ValueError("theorem id must be 1..8 or 'all'")
    reports = [verify_theorem(tid, ctx, args.w, args.n) for tid in ids]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = [r.to_json_dict() for r in reports]
        _emit(_dump_json(payload if len(payload) > 1 else payload[0]), args.out)
    elif args.format == "csv":
        rows = [[r.theorem, args.d, args.char, args.xi_order, args.xi_exp,
                 ":".join(map(str, args.w)), args.n, r.verdict,
                 r.detail or ""] for r in reports]
        _emit(_csv_text(["theorem", "d", "char", "xi_order", "xi_exp", "w",
                         "n", "verdict", "detail"], rows), args.out)
    else:
        lines = [f"theorem {r.theorem}: {r.verdict}"
                 + (f"  [{r.detail}]" if r.detail else "")
                 for r in reports]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else _MISMATCH


def _grid_point_rows(point: tuple, n_max: int, truncation: int) -> list[dict]:
    d, ci, r, e, w = point
    ctx = TwistContext.from_orders(d, ci, r, e)
    base = {"d": d, "char": ci, "xi_order": r, "xi_exp": e, "w": list(w)}
    rows = []
    for tid in THEOREM_IDS:
        rep = verify_theorem(tid, ctx, w, n_max)
        rows.append(dict(base, kind="theorem", id=tid, n=n_max,
                         verdict=rep.verdict, detail=rep.detail))
    for scalar_w in sorted(set(w)):
        rep = powersum_gf_check(ctx, scalar_w, truncation)
        rows.append(dict(base, kind="powersum_gf", id=scalar_w, n=truncation,
                         verdict="pass" if rep.passed else "fail",
                         detail=rep.detail))
    for family, max_i in sorted(_FAMILY_MAX_I.items()):
        for i in range(max_i + 1):
            rep = permutation_invariance_check(
                QuotientSpec(family, i, w, ctx), truncation)
            rows.append(dict(base, kind=f"invariance-{family}", id=i,
                             n=truncation,
                             verdict="pass" if rep.passed else "fail",
                             detail=rep.detail))
    return rows


def _worker(task):
    point, n_max, truncation = task
    return _grid_point_rows(point, n_max, truncation)


def run_grid(spec: GridSpec) -> dict:
    """Run all verifiers over the grid; deterministic row order."""
    points = spec.points()
    tasks = [(pt, spec.n_max, spec.truncation) for pt in points]
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            chunks = list(pool.map(_worker, tasks))
    else:
        chunks = [_worker(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    failed = sum(1 for row in rows if row["verdict"] != "pass")
    return {"summary": {"total": len(rows), "passed": len(rows) - failed,
                        "failed": failed},
            "results": rows}


def cmd_grid(args) -> int:
    spec = GridSpec(d_list=args.d, char_selector=args.chars,
                    xi_orders=args.xi_orders,
                    w_list=[_parse_w(t) for t in (args.w or ["1,1,1"])],
                    n_max=args.n, truncation=args.trunc, jobs=args.jobs)
    outcome = run_grid(spec)
    if args.format == "json":
        _emit(_dump_json(outcome), args.out)
    elif args.format == "csv":
        rows = [[r["kind"], r["id"], r["d"], r["char"], r["xi_order"],
                 r["xi_exp"], ":".join(map(str, r["w"])), r["n"],
                 r["verdict"], r["detail"] or ""]
                for r in outcome["results"]]
        _emit(_csv_text(["kind", "id", "d", "char", "xi_order", "xi_exp",
                         "w", "n", "verdict", "detail"], rows), args.out)
    else:
        s = outcome["summary"]
        lines = [f"grid: {s['total']} checks, {s['passed']} passed, "
                 f"{s['failed']} failed"]
        lines += [f"  {r['kind']}[{r['id']}] d={r['d']} char={r['char']} "
                  f"xi_order={r['xi_order']} w={r['w']}: {r['verdict']}"
                  for r in outcome["results"] if r["verdict"] != "pass"]
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if outcome["summary"]["failed"] == 0 else _MISMATCH


def cmd_padic(args) -> int:
    ctx = TwistContext.from_orders(args.d, args.char, args.p ** args.s,
                                   args.xi_exp, p=args.p, s=args.s)
    _warn_imprimitive(ctx, args.char)
    report = convergence_check(ctx, args.k, args.n_max)
    if args.format == "json":
        _emit(_dump_json(report.to_json_dict()), args.out)
    else:
        rows = [[n, "inf" if v == float("inf") else str(v)]
                for n, v in report.rows]
        text = _csv_text(["N", "valuation"], rows)
        if args.format == "text":
            text += f"verdict: {'pass' if report.passed else 'fail'}\n"
        _emit(text, args.out)
    return 0 if report.passed else _MISMATCH


# -- argument parsing -----------------------------------------------------------

def _add_context_flags(sub, with_w=False):
    sub.add_argument("--d", type=int, default=1, help="character modulus")
    sub.add_argument("--char", type=int, default=0,
                     help="character index (see the chars subcommand)")
    sub.add_argument("--xi-order", dest="xi_order", type=int, default=1,
                     help="order of the twist root xi")
    sub.add_argument("--xi-exp", dest="xi_exp", type=int, default=1,
                     help="xi = zeta_order^exp (exp coprime to order)")
    if with_w:
        sub.add_argument("--w", type=_parse_w, default=(1, 1, 1),
                         help="weight triple, e.g. 1,2,3")


def _add_output_flags(sub):
    sub.add_argument("--format", choices=("text", "json", "csv"),
                     default="text")
    sub.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistbern",
        description="Exact tables and identity verification for twisted "
                    "Bernoulli polynomials and twisted power sums.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("chars", help="list Dirichlet characters mod d")
    p.add_argument("--d", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(fn=cmd_chars)

    p = subs.add_parser("bernoulli",
                        help="table of generalized twisted Bernoulli numbers")
    _add_context_flags(p)
    p.add_argument("--n", type=int, default=8, help="largest index")
    _add_output_flags(p)
    p.set_defaults(fn=cmd_bernoulli)

    p = subs.add_parser("verify", help="verify one or all symmetry theorems")
    p.add_argument("--theorem", default="all",
                   help="theorem id 1..8, or 'all'")
    _add_context_flags(p, with_w=True)
    p.add_argument("--n", type=int, default=4, help="coefficient index")
    _add_output_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = subs.add_parser("grid", help="run every verifier over a parameter grid")
    p.add_argument("--d", type=_parse_ints, default=[1],
                   help="comma list of moduli")
    p.add_argument("--chars", default="all",
                   help="'all', 'primitive', or a comma list of indices")
    p.add_argument("--xi-orders", dest="xi_orders", type=_parse_ints,
                   default=[1], help="comma list of twist orders")
    p.add_argument("--w", action="append", default=None,
                   help="weight triple (repeatable), e.g. --w 1,2,3 --w 2,3,5")
    p.add_argument("--n", type=int, default=4, help="theorem coefficient index")
    p.add_argument("--trunc", type=int, default=4,
                   help="series truncation for GF and invariance checks")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_output_flags(p)
    p.set_defaults(fn=cmd_grid)

    p = subs.add_parser("padic",
                        help="valuation table witnessing p-adic convergence")
    p.add_argument("--p", type=int, required=True, help="prime")
    p.add_argument("--s", type=int, default=0,
                   help="xi has order p^s (s=0 means xi=1)")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--xi-exp", dest="xi_exp", type=int, default=1)
    p.add_argument("--k", type=int, default=1, help="moment exponent")
    p.add_argument("--n-max", dest="n_max", type=int, default=5,
                   help="largest partial-sum level")
    _add_output_flags(p)
    p.set_defaults(fn=cmd_padic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else _USAGE_ERROR
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
