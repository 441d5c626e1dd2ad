"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 parameter error,
3 field-construction failure (reducible modulus or non-primitive omega).
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import reports
from .complexity import lc_report, nu2
from .correlation import (
    autocorrelation_constants,
    correlate,
    predict_cross_correlation,
    predict_se_autocorrelation,
    predict_t1_autocorrelation,
)
from .errors import GeoseqError, ParameterError
from .field import DEFAULT_MAX_ORDER, FieldContext, parse_coeffs
from .sequences import gen_se, gen_t1, gen_t2
from .verify import flip_bit, verify_instance

OUTPUT_DIR_ENV = "GEOSEQ_OUTPUT_DIR"

FORMATS = {
    "gen": ("bits", "hex"),
    "autocorr": ("csv", "json"),
    "crosscorr": ("csv", "json"),
    "lincomp": ("json", "csv"),
    "verify": ("json",),
    "field-info": ("json",),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--m", type=int, required=True, help="extension degree > 1")
    common.add_argument("--irreducible", help="modulus coefficients, constant first, e.g. 3,2,1")
    common.add_argument("--omega", help="primitive element coefficients, constant first, e.g. 0,4")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="refuse fields with p^m above this bound")
    common.add_argument("--format", dest="fmt")
    common.add_argument("--out", help=f"output file (relative paths resolve under ${OUTPUT_DIR_ENV})")

    parser = _Parser(prog="geoseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", parents=[common], help="emit one period of a sequence")
    gen.add_argument("--kind", choices=("t1", "t2", "se"), required=True)
    gen.add_argument("--e", type=int)

    auto = sub.add_parser("autocorr", parents=[common], help="periodic autocorrelation vs closed form")
    auto.add_argument("--kind", choices=("t1", "t2", "se"), default="se")
    auto.add_argument("--e", type=int)

    cross = sub.add_parser("crosscorr", parents=[common], help="cross-correlation of S^e1 and S^e2")
    cross.add_argument("--e1", type=int, required=True)
    cross.add_argument("--e2", type=int, required=True)

    lin = sub.add_parser("lincomp", parents=[common], help="linear complexity of S^e, three ways")
    lin.add_argument("--e", type=int, help="omit to sweep every e in [0, N)")

    ver = sub.add_parser("verify", parents=[common], help="check every closed form for one field")
    ver.add_argument("--e-list", type=_int_list, help="comma-separated shifts (default: all)")
    ver.add_argument("--inject-fault", type=int, metavar="E", help=argparse.SUPPRESS)

    sub.add_parser("field-info", parents=[common], help="field parameters and constants")
    return parser


def _context(args) -> FieldContext:
    f = parse_coeffs(args.irreducible) if args.irreducible else None
    w = parse_coeffs(args.omega) if args.omega else None
    ctx = FieldContext.build(args.p, args.m, f, w, max_order=args.max_order)
    info = ctx.describe()
    print(f"# p={info['p']} m={info['m']} f={info['f']} omega={info['omega']} N={ctx.N}",
          file=sys.stderr)
    return ctx


def _require_e(args) -> int:
    if args.e is None:
        raise ParameterError("--e is required for kind se")
    return args.e


def cmd_gen(args) -> tuple[str, int]:
    ctx = _context(args)
    if args.kind == "t1":
        s = gen_t1(ctx)
    elif args.kind == "t2":
        s = gen_t2(ctx)
    else:
        s = gen_se(ctx, _require_e(args))
    if args.fmt == "hex":
        return reports.pack_hex(s.bits) + "\n", 0
    return reports.bits_text(s.bits), 0


def cmd_autocorr(args) -> tuple[str, int]:
    ctx = _context(args)
    params = ctx.describe()
    params["kind"] = args.kind
    if args.kind == "se":
        e = _require_e(args)
        s = gen_se(ctx, e)
        pred = predict_se_autocorrelation(ctx, e)
        params["e"] = e
    else:
        s = gen_t1(ctx) if args.kind == "t1" else gen_t2(ctx)
        pred = predict_t1_autocorrelation(ctx)
    obs = correlate(s, s)
    return _correlation_output(args, params, obs, pred)


def cmd_crosscorr(args) -> tuple[str, int]:
    ctx = _context(args)
    e1, e2 = args.e1, args.e2
    if e1 == e2:
        raise ParameterError("e1 and e2 must differ; use autocorr for e1 = e2")
    swapped = e1 > e2
    if swapped:
        e1, e2 = e2, e1
        print(f"# note: swapped to e1={e1}, e2={e2} (need e1 < e2)", file=sys.stderr)
    pred = predict_cross_correlation(ctx, e1, e2)
    obs = correlate(gen_se(ctx, e1), gen_se(ctx, e2))
    params = {**ctx.describe(), "e1": e1, "e2": e2, "swapped": swapped}
    return _correlation_output(args, params, obs, pred)


def _correlation_output(args, params, obs, pred) -> tuple[str, int]:
    status = 0 if obs.values == pred.values else 1
    if status:
        tau = next(i for i, (a, b) in enumerate(zip(obs.values, pred.values)) if a != b)
        print(f"geoseq: mismatch at tau={tau}: predicted {pred.values[tau]}, "
              f"observed {obs.values[tau]}", file=sys.stderr)
    if args.fmt == "json":
        return reports.correlation_json(params, obs, pred), status
    return reports.correlation_csv(obs, pred), status


def cmd_lincomp(args) -> tuple[str, int]:
    ctx = _context(args)
    shifts = range(ctx.N) if args.e is None else [args.e]
    rows = [lc_report(ctx, e).to_json(ctx) for e in shifts]
    if args.fmt == "csv":
        return reports.rows_csv(rows), 0
    return reports.dump_json(rows[0] if args.e is not None else rows), 0


def cmd_verify(args) -> tuple[str, int]:
    ctx = _context(args)
    fault = fault_e = None
    if args.inject_fault is not None:
        fault, fault_e = flip_bit(1), [args.inject_fault]
    report = verify_instance(ctx, args.e_list, fault=fault, fault_e=fault_e)
    if not report.passed:
        ff = report.first_failure
        detail = ", ".join(f"{k}={v}" for k, v in ff.items() if k != "theorem")
        print(f"geoseq: {ff['theorem']} mismatch: {detail}", file=sys.stderr)
    return reports.dump_json(report.to_json()), 0 if report.passed else 1


def cmd_field_info(args) -> tuple[str, int]:
    ctx = _context(args)
    n, n1, n2 = autocorrelation_constants(ctx.p, ctx.m)
    info = {**ctx.describe(), "order": ctx.order, "N": n, "N1": n1, "N2": n2, "nu2": nu2(n)}
    return reports.dump_json(info), 0


COMMANDS = {
    "gen": cmd_gen,
    "autocorr": cmd_autocorr,
    "crosscorr": cmd_crosscorr,
    "lincomp": cmd_lincomp,
    "verify": cmd_verify,
    "field-info": cmd_field_info,
}


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(out)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    allowed = FORMATS[args.command]
    if args.fmt is None:
        args.fmt = allowed[0]
    try:
        if args.fmt not in allowed:
            raise ParameterError(
                f"--format {args.fmt} not valid for {args.command} (choose from {', '.join(allowed)})"
            )
        text, status = COMMANDS[args.command](args)
        _write(text, args.out)
    except GeoseqError as exc:
        print(f"geoseq: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"geoseq: cannot write output: {exc}", file=sys.stderr)
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
