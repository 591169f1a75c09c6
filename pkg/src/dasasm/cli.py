"""Command-line interface: ``dasasm count | verify | eval``.

Exit codes: 0 success, 1 a verified identity failed, 2 bad input, singular
point or resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import DasasmError, DomainError, InputError, ResourceError
from .exact import LaurentPoly, render_scalar, simplify, zeta
from .reports import Report

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"0..7"`` or ``"1,3,5"`` to a list of integers."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise InputError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad range {text!r}") from None


def parse_scalar(text: str):
    text = text.strip()
    try:
        return simplify(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {text!r}") from None


def parse_q(tokens):
    """``symbolic``, a rational ``p/q`` or ``zeta N k``; None means symbolic."""
    if tokens is None:
        return zeta(12)
    if len(tokens) == 1 and tokens[0] == "symbolic":
        return None
    if tokens and tokens[0] == "zeta":
        if len(tokens) not in (2, 3):
            raise InputError("use --q zeta N [k]")
        try:
            N = int(tokens[1])
            k = int(tokens[2]) if len(tokens) == 3 else 1
        except ValueError:
            raise InputError(f"bad root of unity {' '.join(tokens)!r}") from None
        if N < 1:
            raise InputError("the conductor must be positive")
        return simplify(zeta(N, k))
    if len(tokens) == 1:
        return parse_scalar(tokens[0])
    raise InputError(f"bad value for --q: {' '.join(tokens)!r}")


def parse_u(text, count):
    if text is None:
        return [1] * count
    vals = [parse_scalar(x) for x in text.split(",") if x.strip()]
    if len(vals) == 1:
        return vals * count
    return vals


# ---------------------------------------------------------------------------
# count


def _count_rows(cls: str, ns, split: bool):
    from .asm import SymmetryClass, asm_count_formula, enumerate_class
    from .sym_functions import dasasm_count_formula, dasasm_pm_count_formula, vhsasm_count

    c = SymmetryClass.parse(cls)
    rows = []
    if c is SymmetryClass.DASASM:
        from .vertex_model import WeightContext, partition_function_value

        ctx = WeightContext(zeta(12))
        for n in ns:
            if n < 0:
                raise InputError("n must be nonnegative")
            u = [1] * (n + 1)
            plus = partition_function_value(n, u, ctx, "bottom-up")
            minus = partition_function_value(n, u, ctx, "bottom-down")
            total = plus + minus
            formula = dasasm_count_formula(n)
            row = {"n": n, "order": 2 * n + 1, "count": total, "formula": formula}
            agree = total == formula
            if split:
                fp, fm = dasasm_pm_count_formula(n)
                row.update({"plus": plus, "minus": minus, "formula_plus": fp, "formula_minus": fm})
                agree = agree and (plus, minus) == (fp, fm)
            row["agree"] = agree
            rows.append(row)
        return rows
    for n in ns:
        if n < 1:
            raise InputError("matrix order must be positive")
        formula = None
        if c is SymmetryClass.ASM:
            formula = asm_count_formula(n)
        elif c is SymmetryClass.VHSASM and n % 2 == 1 and n >= 3:
            formula = vhsasm_count((n - 1) // 2)
        if split:
            if n % 2 == 0:
                raise InputError("--split-center needs odd orders")
            plus = minus = 0
            for M in enumerate_class(n, c):
                if M.rows[n // 2][n // 2] == 1:
                    plus += 1
                else:
                    minus += 1
            total = plus + minus
            row = {"n": n, "order": n, "count": total, "plus": plus, "minus": minus}
        else:
            total = sum(1 for _ in enumerate_class(n, c))
            row = {"n": n, "order": n, "count": total}
        row["formula"] = formula
        row["agree"] = None if formula is None else total == formula
        rows.append(row)
    return rows


def _emit_table(rows, fmt, out):
    if not rows:
        return
    keys = list(rows[0].keys())
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: ("" if r[k] is None else r[k]) for k in keys})
        out.write(buf.getvalue())
    else:
        cells = [[str(k) for k in keys]] + [["-" if r[k] is None else str(r[k]) for k in keys] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(keys))]
        for row in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")


def cmd_count(args, out) -> int:
    ns = parse_range(args.n)
    if args.max_n is not None and max(ns) > args.max_n:
        raise ResourceError(f"n = {max(ns)} exceeds --max-n {args.max_n}")
    from .asm import SymmetryClass
    from .config import check_bound

    if ns:
        is_dasasm = SymmetryClass.parse(args.cls) is SymmetryClass.DASASM
        check_bound("dp" if is_dasasm else "asm", max(ns))
    rows = _count_rows(args.cls, ns, args.split_center)
    _emit_table(rows, args.format, out)
    return EXIT_OK if all(r["agree"] is not False for r in rows) else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify

SUITES = (
    "weights", "relations", "specializations", "global", "theorem-full", "corollary-u1",
    "schur", "okada", "ipi4", "q3-conjecture", "htsasm-ratio",
)

_DEFAULT_N = {
    "specializations": "1..3", "global": "0..3", "theorem-full": "1..3", "corollary-u1": "1..3",
    "schur": "1..3", "okada": "1..4", "ipi4": "1..3", "q3-conjecture": "1..4", "htsasm-ratio": "1..3",
}


def run_suite(suite: str, ns, trials=None, seed=0) -> Report:
    from . import det_formulas as D
    from . import sym_functions as S
    from .vertex_model import relations as R

    rep = Report()
    if suite == "weights":
        return R.verify_weight_symmetries()
    if suite == "relations":
        return R.verify_all_local_relations()
    if suite == "specializations":
        for n in ns:
            for prop in R.SPECIALIZATIONS:
                if n >= R._min_n(prop):
                    rep.extend(R.verify_specialization(prop, n, trials=trials or 20, seed=seed))
        return rep
    if suite == "global":
        for n in ns:
            rep.extend(R.verify_global_properties(n))
        return rep
    if suite == "theorem-full":
        if 1 in ns:
            rep.extend(D.verify_theorem_symbolic_n1())
        for n in ns:
            rep.extend(D.verify_theorem_full(n, trials or 20, seed))
            rep.extend(D.verify_pm(n, trials or 20, seed))
            rep.extend(D.verify_reciprocal(n, trials or 20, seed))
            rep.extend(D.verify_column_degeneracy(n, 5, seed))
        return rep
    if suite == "corollary-u1":
        for n in ns:
            rep.extend(D.verify_corollary_u1(n, trials or 20, seed))
            rep.extend(D.verify_corollary_vanishing(n, 5, seed))
        return rep
    if suite == "schur":
        rep.extend(S.verify_schur_kit(seed=seed))
        expected = {0: 1, 1: 3, 2: 15, 3: 126}
        for n, v in expected.items():
            rep.add("schur-corollary", f"n={n},u=1", S.schur_corollary_u1(n, [1] * n) == v)
        for n in ns:
            rep.extend(S.verify_schur_point(n, trials or 20, seed))
            rep.extend(S.verify_schur_pm(n, 5, seed))
            rep.extend(S.verify_reciprocal_identity(n, 10, seed))
            rest = [Fraction(k + 2, k + 3) for k in range(n - 1)]
            val = S.schur_corollary_u1(n, [zeta(12, 2)] + rest)
            rep.add("schur-factor", f"n={n},u1^2=zeta3", val == 0)
            num = S.dasasm_pm_count_formula(n)
            got = S.schur_pm(n, [1] * (n + 1))
            rep.add("sector-ratio", f"n={n}", tuple(got) == num and got[1] * (n + 1) == got[0] * n)
        return rep
    if suite == "okada":
        for k in ns:
            rep.extend(D.verify_cauchy_det(k, trials or 50, seed))
        return rep
    if suite == "ipi4":
        for n in ns:
            rep.extend(D.verify_ipi4(n, trials or 20, seed))
        return rep
    if suite == "q3-conjecture":
        for n in ns:
            rep.extend(S.conjecture_q3_check(n))
        return rep
    if suite == "htsasm-ratio":
        from .asm import htsasm_central_split

        for n in ns:
            plus, minus = htsasm_central_split(2 * n + 1)
            rep.add("htsasm-ratio", f"n={n}", minus * (n + 1) == plus * n,
                    witness={"plus": plus, "minus": minus, "ratio": str(Fraction(minus, plus))})
        return rep
    raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def cmd_verify(args, out) -> int:
    suites = SUITES if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    for s in suites:
        if s not in SUITES:
            raise InputError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    rep = Report()
    for s in suites:
        ns = parse_range(args.n if args.n is not None else _DEFAULT_N.get(s, "0"))
        if args.max_n is not None and ns and max(ns) > args.max_n:
            raise ResourceError(f"n = {max(ns)} exceeds --max-n {args.max_n}")
        rep.extend(run_suite(s, ns, args.trials, args.seed))
    if args.format == "json":
        out.write(rep.to_json() + "\n")
    else:
        for r in rep.sorted():
            out.write(f"{r.status:22s} {r.relation:24s} {r.case}\n")
        out.write(json.dumps(rep.summary(), sort_keys=True) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# eval

EXPRESSIONS = ("z", "z-plus", "z-minus", "rhs-full", "rhs-u1", "schur-rhs")


def evaluate_expression(expr, n, u_text=None, q=zeta(12), symbolic=False, cleared=False):
    from . import det_formulas as D
    from . import sym_functions as S
    from .vertex_model import (
        WeightContext,
        partition_function_eval,
        partition_function_symbolic,
        partition_function_value,
        sector_symbolic,
    )

    if expr not in EXPRESSIONS:
        raise InputError(f"unknown expression {expr!r}")
    if n < 0:
        raise InputError("n must be nonnegative")
    sector = {"z": "all", "z-plus": "bottom-up", "z-minus": "bottom-down"}.get(expr)
    if symbolic or q is None:
        if sector is None:
            raise InputError(f"{expr} has no symbolic form; give a point")
        if u_text is not None:
            raise InputError("--symbolic takes no --u")
        if expr == "z":
            return partition_function_symbolic(n).poly
        return sector_symbolic(n, sector)
    if expr == "rhs-u1":
        u = parse_u(u_text, n)
        if len(u) == n + 1 and u[n] == 1:
            u = u[:n]
    else:
        u = parse_u(u_text, n + 1)
    expected = n if expr == "rhs-u1" else n + 1
    if len(u) != expected:
        raise InputError(f"{expr} needs {expected} spectral parameters, got {len(u)}")
    if sector is not None:
        ctx = WeightContext(q)
        if cleared:
            return partition_function_eval(n, u, ctx, sector)
        return partition_function_value(n, u, ctx, sector)
    if cleared:
        raise InputError("--cleared applies to z, z-plus and z-minus")
    if expr == "rhs-full":
        return D.rhs_theorem_full(n, u, q)
    if expr == "rhs-u1":
        return D.rhs_corollary_u1(n, u, q)
    if q != zeta(12):
        raise InputError("schur-rhs is the value at q = zeta 12 1")
    return S.schur_theorem_rhs(n, u)


def _render(x):
    if isinstance(x, LaurentPoly):
        return str(x)
    return render_scalar(x)


def cmd_eval(args, out) -> int:
    q = parse_q(args.q)
    val = evaluate_expression(args.expression, args.n, args.u, q, args.symbolic, args.cleared)
    text = _render(val)
    if args.format == "json":
        doc = {
            "expression": args.expression,
            "n": args.n,
            "q": "symbolic" if (q is None or args.symbolic) else render_scalar(q),
            "u": args.u,
            "cleared": bool(args.cleared or args.symbolic or q is None),
            "value": text,
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dasasm", description="Exact DASASM enumeration and partition functions.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count members of a symmetry class")
    c.add_argument("--class", dest="cls", default="dasasm",
                   help="asm, vsasm, vhsasm, htsasm, qtsasm, dsasm, dasasm or tsasm (default dasasm)")
    c.add_argument("--n", default="0..7",
                   help="n or range a..b; for dasasm the order is 2n+1, otherwise n is the order")
    c.add_argument("--split-center", action="store_true", help="split by central entry +1 / -1")
    c.add_argument("--format", choices=("text", "json", "csv"), default="text")
    c.add_argument("--max-n", type=int, default=None)
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("--suite", required=True, help="one of %s, a comma list, or all" % ", ".join(SUITES))
    v.add_argument("--n", default=None, help="n or range a..b (suite-specific default)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="json")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a partition function or closed formula")
    e.add_argument("expression", choices=EXPRESSIONS)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--u", default=None, help="comma list of rationals, or a single value for all")
    e.add_argument("--q", nargs="+", default=None, help="symbolic | p/q | zeta N k (default zeta 12 1)")
    e.add_argument("--symbolic", action="store_true", help="print the cleared Laurent polynomial")
    e.add_argument("--cleared", action="store_true", help="multiply by sigma(q)^(2n) sigma(q^4)^(n^2)")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_eval)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (ResourceError, InputError, DomainError) as exc:
        factor = getattr(exc, "factor", None)
        msg = f"error: {exc}"
        if factor:
            msg += f" [vanishing factor: {factor}]"
        print(msg, file=sys.stderr)
        return EXIT_ERROR
    except DasasmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
