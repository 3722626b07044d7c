"""Command line front end.

Subcommands:

  eval    evaluate one quantity at a single parameter point
  verify  run a named verification suite and adjudicate every record
  table   evaluate a quantity over a Cartesian parameter grid
  coeffs  print the shift-coefficient triangle as CSV
  errata  reproduce the catalogued discrepancies with numeric evidence

Output is deterministic: records are emitted in task order no matter how
many workers computed them, and floats are formatted through a single
helper so reruns are byte identical.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from .coeff_triangle import build as build_triangle
from .errata import reproduce_all
from .quadrature import IntegralSpec, VerificationRecord, oracle_value
from .series_engine import (
    SeriesParams,
    EvalResult,
    eval_phi,
    eval_phi_da_direct,
    eval_phi_tilde,
    eval_psi_general,
)
from .special_fn import (
    DivergenceError,
    DomainError,
    hurwitz_zeta,
    lerch_phi,
    s_prime,
)
from .verify import SUITE_NAMES, run_suite


@dataclasses.dataclass(frozen=True)
class RunConfig:
    command: str
    target: str
    output_format: str = "text"
    tolerance: Optional[float] = None
    workers: int = 1
    params: Dict[str, object] = dataclasses.field(default_factory=dict)


def _fmt(x: float, digits: int) -> str:
    if x != x:
        return "nan"
    s = "%.*g" % (digits, x)
    # normalise exponent spelling across platforms (1e-05 vs 1e-5)
    if "e" in s:
        mant, exp = s.split("e")
        s = mant + "e" + ("%d" % int(exp))
    return s


def _fmt_full(x: float) -> str:
    return repr(float(x))


def _parse_range(text: str, name: str) -> List[float]:
    """One flag value -> list of grid points.

    Accepted forms: a single number, lo:hi:step (inclusive at both ends,
    with a step-relative slack so 0.25:2.25:0.5 really ends at 2.25),
    and lo..hi for inclusive integer ranges.
    """
    text = text.strip()
    if ".." in text and ":" not in text:
        lo_s, hi_s = text.split("..", 1)
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise DomainError("bad integer range for --%s: %r" % (name, text))
        if hi < lo:
            raise DomainError("empty range for --%s: %r" % (name, text))
        return [float(v) for v in range(lo, hi + 1)]
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError("bad range for --%s: %r" % (name, text))
        try:
            lo, hi, step = (float(p) for p in parts)
        except ValueError:
            raise DomainError("bad range for --%s: %r" % (name, text))
        if step <= 0 or hi < lo:
            raise DomainError("bad range for --%s: %r" % (name, text))
        out = []
        k = 0
        while True:
            v = lo + k * step
            if v > hi + step * 1e-9:
                break
            out.append(v)
            k += 1
        return out
    try:
        return [float(text)]
    except ValueError:
        raise DomainError("bad value for --%s: %r" % (name, text))


_PARAM_FLAGS = ("a", "b", "beta", "alpha", "n", "m", "s", "q", "r", "w", "v", "p", "mu")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ramaseries",
        description="evaluate and verify binomial-weighted inverse-power series",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("text", "csv", "jsonl"), default="text")
        sp.add_argument("--tol", type=float, default=None)
        sp.add_argument("--workers", type=int, default=None)
        for flag in _PARAM_FLAGS:
            sp.add_argument("--" + flag, type=str, default=None)
        sp.add_argument("--part", type=str, default=None)
        sp.add_argument("--form", type=str, default=None)

    p_eval = sub.add_parser("eval", help="evaluate one quantity at a point")
    p_eval.add_argument(
        "target",
        choices=("phi", "phitilde", "psi", "phida", "zeta", "lerch", "sprime", "integral"),
    )
    common(p_eval)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("target", choices=("all",) + SUITE_NAMES)
    common(p_verify)

    p_table = sub.add_parser("table", help="evaluate over a parameter grid")
    p_table.add_argument(
        "target", choices=("phi", "phitilde", "psi", "phida", "zeta", "lerch", "sprime")
    )
    common(p_table)

    p_coeffs = sub.add_parser("coeffs", help="print the coefficient triangle")
    common(p_coeffs)
    p_coeffs.set_defaults(target="coeffs")

    p_err = sub.add_parser("errata", help="reproduce catalogued discrepancies")
    common(p_err)
    p_err.set_defaults(target="errata")

    return ap


def _resolve_workers(flag_value: Optional[int]) -> int:
    if flag_value is not None:
        return max(1, flag_value)
    env = os.environ.get("RAMASERIES_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError("RAMASERIES_WORKERS must be an integer, got %r" % env)
    return 1


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    params: Dict[str, object] = {}
    for flag in _PARAM_FLAGS + ("part", "form"):
        val = getattr(args, flag, None)
        if val is not None:
            params[flag] = val
    return RunConfig(
        command=args.command,
        target=args.target,
        output_format=args.format,
        tolerance=args.tol,
        workers=_resolve_workers(args.workers),
        params=params,
    )


def _need(cfg: RunConfig, *names: str) -> List[float]:
    out = []
    for nm in names:
        raw = cfg.params.get(nm)
        if raw is None:
            raise DomainError("eval %s requires --%s" % (cfg.target, nm))
        vals = _parse_range(str(raw), nm)
        if len(vals) != 1:
            raise DomainError("eval takes single values, got a range for --%s" % nm)
        out.append(vals[0])
    return out


def _order_param(cfg: RunConfig) -> float:
    # phi family order may be spelled --alpha or --n
    raw = cfg.params.get("alpha")
    if raw is None:
        raw = cfg.params.get("n")
    if raw is None:
        raise DomainError("eval %s requires --alpha (or --n)" % cfg.target)
    vals = _parse_range(str(raw), "alpha")
    if len(vals) != 1:
        raise DomainError("eval takes single values, got a range")
    return vals[0]


def _wrap(value: float, rel_bound: float, method: str) -> EvalResult:
    return EvalResult(
        value=value,
        abs_error_bound=rel_bound * max(1.0, abs(value)),
        terms_used=1,
        method=method,
    )


def _eval_point(target: str, cfg: RunConfig) -> EvalResult:
    if target == "phi":
        a, b = _need(cfg, "a", "b")
        return eval_phi(a, b, _order_param(cfg))
    if target == "phitilde":
        a, b = _need(cfg, "a", "b")
        return eval_phi_tilde(a, b, _order_param(cfg))
    if target == "psi":
        a, b, beta = _need(cfg, "a", "b", "beta")
        return eval_psi_general(SeriesParams(a=a, b=b, beta=beta, alpha=_order_param(cfg)))
    if target == "phida":
        a, b = _need(cfg, "a", "b")
        n = _order_param(cfg)
        if n != int(n) or n < 0:
            raise DomainError("phida needs a non-negative integer order")
        return eval_phi_da_direct(a, b, int(n))
    if target == "zeta":
        s, q = _need(cfg, "s", "q")
        return _wrap(hurwitz_zeta(s, q), 4e-15, "closed-form")
    if target == "lerch":
        beta, s, q = _need(cfg, "beta", "s", "q")
        return _wrap(lerch_phi(beta, s, q), 1e-13, "direct")
    if target == "sprime":
        (r,) = _need(cfg, "r")
        if r != int(r) or r < 1:
            raise DomainError("sprime needs a positive integer index")
        return _wrap(s_prime(int(r)), 4e-15, "closed-form")
    if target == "integral":
        form = cfg.params.get("form")
        if form is None:
            raise DomainError("eval integral requires --form (one of F1..F12)")
        ip: Dict[str, object] = {}
        for nm in ("a", "b", "beta", "alpha", "n", "w", "v", "mu"):
            raw = cfg.params.get(nm)
            if raw is not None:
                ip[nm] = _parse_range(str(raw), nm)[0]
        if "n" in ip:
            ip["n"] = int(ip["n"])
        part = cfg.params.get("part")
        if part is not None:
            ip["part"] = str(part)
        return oracle_value(IntegralSpec(form=str(form), params=ip))
    raise DomainError("unknown eval target %r" % target)


def cmd_eval(cfg: RunConfig) -> int:
    res = _eval_point(cfg.target, cfg)
    if cfg.output_format == "jsonl":
        print(
            json.dumps(
                {
                    "target": cfg.target,
                    "value": res.value,
                    "abs_error_bound": res.abs_error_bound,
                    "terms_used": res.terms_used,
                    "method": res.method,
                },
                sort_keys=True,
            )
        )
    elif cfg.output_format == "csv":
        print("target,value,abs_error_bound,terms_used,method")
        print(
            "%s,%s,%s,%d,%s"
            % (cfg.target, _fmt_full(res.value), _fmt_full(res.abs_error_bound), res.terms_used, res.method)
        )
    else:
        print("value        %s" % _fmt(res.value, 8))
        print("error bound  %s" % _fmt(res.abs_error_bound, 3))
        print("terms used   %d" % res.terms_used)
        print("method       %s" % res.method)
    return 0


def _record_row(rec: VerificationRecord) -> Dict[str, object]:
    spec = rec.spec
    ident = spec if isinstance(spec, str) else "%s %s" % (
        spec.form,
        " ".join("%s=%s" % (k, _fmt(float(v), 6)) if isinstance(v, float) else "%s=%s" % (k, v)
                 for k, v in sorted(spec.params.items())),
    )
    return {
        "id": ident,
        "series_value": rec.series_value,
        "oracle_value": rec.oracle_value,
        "residual": rec.residual,
        "tolerance": rec.tolerance,
        "verdict": rec.verdict,
        "errata_note": rec.errata_note,
    }


def _emit_records(records: Sequence[VerificationRecord], fmt: str) -> Tuple[int, int]:
    npass = sum(1 for r in records if r.verdict == "pass")
    nfail = len(records) - npass
    if fmt == "jsonl":
        for rec in records:
            print(json.dumps(_record_row(rec), sort_keys=True))
        print(
            json.dumps(
                {"records": len(records), "pass": npass, "fail": nfail},
                sort_keys=True,
            )
        )
    elif fmt == "csv":
        print("id,series_value,oracle_value,residual,tolerance,verdict,errata_note")
        for rec in records:
            row = _record_row(rec)
            note = row["errata_note"] or ""
            print(
                '%s,%s,%s,%s,%s,%s,"%s"'
                % (
                    '"%s"' % row["id"],
                    _fmt_full(rec.series_value),
                    _fmt_full(rec.oracle_value),
                    _fmt_full(rec.residual),
                    _fmt_full(rec.tolerance),
                    rec.verdict,
                    note,
                )
            )
    else:
        for rec in records:
            row = _record_row(rec)
            line = "%-4s %-46s lhs=%s rhs=%s resid=%s tol=%s" % (
                rec.verdict.upper(),
                row["id"],
                _fmt(rec.series_value, 10),
                _fmt(rec.oracle_value, 10),
                _fmt(rec.residual, 3),
                _fmt(rec.tolerance, 3),
            )
            if rec.errata_note:
                line += "  [%s]" % rec.errata_note
            print(line)
        print("%d records, %d pass, %d fail" % (len(records), npass, nfail))
    return npass, nfail


def cmd_verify(cfg: RunConfig) -> int:
    records = run_suite(cfg.target, tol=cfg.tolerance, workers=cfg.workers)
    _, nfail = _emit_records(records, cfg.output_format)
    return 1 if nfail else 0


_TABLE_AXES: Dict[str, Tuple[str, ...]] = {
    "phi": ("a", "b", "n"),
    "phitilde": ("a", "b", "n"),
    "psi": ("a", "b", "beta", "alpha"),
    "phida": ("a", "b", "n"),
    "zeta": ("s", "q"),
    "lerch": ("beta", "s", "q"),
    "sprime": ("r",),
}


def _table_cell(target: str, point: Dict[str, float]) -> Tuple[str, float]:
    try:
        if target == "phi":
            res = eval_phi(point["a"], point["b"], point["n"])
        elif target == "phitilde":
            res = eval_phi_tilde(point["a"], point["b"], point["n"])
        elif target == "psi":
            res = eval_psi_general(SeriesParams(a=point["a"], b=point["b"], beta=point["beta"], alpha=point["alpha"]))
        elif target == "phida":
            res = eval_phi_da_direct(point["a"], point["b"], int(point["n"]))
        elif target == "zeta":
            return "ok", hurwitz_zeta(point["s"], point["q"])
        elif target == "lerch":
            return "ok", lerch_phi(point["beta"], point["s"], point["q"])
        elif target == "sprime":
            return "ok", s_prime(int(point["r"]))
        else:
            raise DomainError("unknown table target %r" % target)
        return "ok", res.value
    except DivergenceError:
        return "divergent", float("nan")


def _table_task(item: Tuple[int, str, Tuple[Tuple[str, float], ...]]):
    ordinal, target, kv = item
    status, value = _table_cell(target, dict(kv))
    return ordinal, status, value


def cmd_table(cfg: RunConfig) -> int:
    axes = _TABLE_AXES[cfg.target]
    grids: List[List[float]] = []
    for nm in axes:
        raw = cfg.params.get(nm)
        if raw is None and nm == "n":
            raw = cfg.params.get("alpha")
        if raw is None:
            raise DomainError("table %s requires --%s" % (cfg.target, nm))
        grids.append(_parse_range(str(raw), nm))

    points: List[Tuple[Tuple[str, float], ...]] = [()]
    for nm, grid in zip(axes, grids):
        points = [pt + ((nm, v),) for pt in points for v in grid]

    tasks = [(i, cfg.target, pt) for i, pt in enumerate(points)]
    if cfg.workers > 1 and len(tasks) > 1:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            raw = list(pool.map(_table_task, tasks, chunksize=4))
    else:
        raw = [_table_task(t) for t in tasks]
    raw.sort(key=lambda r: r[0])

    header = list(axes) + ["value", "status"]
    if cfg.output_format == "jsonl":
        for (ordinal, status, value), pt in zip(raw, points):
            row = {nm: v for nm, v in pt}
            row["value"] = None if value != value else value
            row["status"] = status
            print(json.dumps(row, sort_keys=True))
    elif cfg.output_format == "csv":
        print(",".join(header))
        for (ordinal, status, value), pt in zip(raw, points):
            cells = [_fmt_full(v) for _, v in pt]
            cells.append("" if value != value else _fmt_full(value))
            cells.append(status)
            print(",".join(cells))
    else:
        print("  ".join("%-10s" % h for h in header))
        for (ordinal, status, value), pt in zip(raw, points):
            cells = ["%-10s" % _fmt(v, 6) for _, v in pt]
            cells.append("%-10s" % ("" if value != value else _fmt(value, 7)))
            cells.append(status)
            print("  ".join(cells))
    return 0


def cmd_coeffs(cfg: RunConfig) -> int:
    p = _need_one(cfg, "p", default=None)
    b = _need_one(cfg, "b", default=None)
    if p is None or b is None:
        raise DomainError("coeffs requires --p and --b")
    m_raw = cfg.params.get("m")
    depth = int(_parse_range(str(m_raw), "m")[0]) if m_raw is not None else 4
    if depth < 1:
        raise DomainError("coeffs needs --m >= 1")
    tri = build_triangle(p, b, depth)
    print("m,k,A")
    for m in range(1, depth + 1):
        for k in range(1, m + 1):
            print("%d,%d,%s" % (m, k, _fmt_full(tri.entry(m, k))))
    return 0


def _need_one(cfg: RunConfig, name: str, default=None):
    raw = cfg.params.get(name)
    if raw is None:
        return default
    vals = _parse_range(str(raw), name)
    if len(vals) != 1:
        raise DomainError("--%s takes a single value here" % name)
    return vals[0]


def cmd_errata(cfg: RunConfig) -> int:
    rows: List[VerificationRecord] = []
    if cfg.output_format == "text":
        for entry, printed, corrected in reproduce_all():
            print("%s" % entry.key)
            print("  printed:   %s" % entry.printed)
            print("  corrected: %s" % entry.corrected)
            print("  note:      %s" % entry.detail)
            print(
                "  evidence:  printed %s (resid %s), corrected %s (resid %s), oracle %s"
                % (
                    printed.verdict,
                    _fmt(printed.residual, 3),
                    corrected.verdict,
                    _fmt(corrected.residual, 3),
                    _fmt(corrected.oracle_value, 10),
                )
            )
        return 0
    for entry, printed, corrected in reproduce_all():
        rows.append(printed)
        rows.append(corrected)
    _emit_records(rows, cfg.output_format)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
        cfg = _config_from_args(args)
        if cfg.command == "eval":
            return cmd_eval(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        if cfg.command == "table":
            return cmd_table(cfg)
        if cfg.command == "coeffs":
            return cmd_coeffs(cfg)
        if cfg.command == "errata":
            return cmd_errata(cfg)
        raise DomainError("unknown command %r" % cfg.command)
    except (DomainError, DivergenceError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
