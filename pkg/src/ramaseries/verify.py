"""Verification suites: every identity confronted with an independent oracle.

A suite is a list of small, picklable tasks; each task produces one
VerificationRecord.  Tasks carry an ordinal so parallel execution can merge
results back into a deterministic order.  Suites never assert; they report.
The CLI turns any failing record into a nonzero exit, and the honest suites
do contain expected failures (the two-sided printed formula), so a clean
exit is a statement about the source text, not about this package.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import errata as errata_mod
from . import identities
from .quadrature import IntegralSpec, VerificationRecord, make_record, oracle_value
from .series_engine import SeriesParams, eval_phi, eval_phi_da_direct, eval_psi_general
from .special_fn import (
    DivergenceError,
    DomainError,
    EULER_GAMMA,
    digamma,
    hurwitz_zeta,
    lerch_phi,
)

Task = Tuple[int, str, tuple]

SUITE_NAMES = ("series", "shifts", "trig", "twosided", "errata")

_SERIES_A = (-0.9, -0.5, -0.25, 0.5, 2.0)
_SERIES_B = (0.25, 1.0, 2.5)
_DERIV_A = (-0.5, -0.25, 0.5, 2.0)
_DERIV_B = (0.25, 1.0, 2.5)
_TRIG_A = (1, 2, 3)
_TRIG_ALPHA = (0.0, 1.0)
_TRIG_SPOTS_SIN = (
    (1, 2.0, 0.0, -1.0 / 3.0, 0.0),
    (1, 2.0, 1.0, 0.0, -4.0 / 9.0),
    (2, 3.0, 0.0, 0.0, -2.0 / 15.0),
)
_TRIG_SPOTS_COS = (
    (1, 2.0, 0.0, 2.0 / 3.0),
    (2, 3.0, 0.0, 7.0 / 15.0),
)
_LOGSIN_CELLS = (
    (1, 3.0, 0.0),
    (2, 3.0, 0.0),
    (2, 3.0, 1.0),
)
_TWOSIDED_B = (0.25, 0.5, 0.75)
_TWOSIDED_BETA = (0.0, 0.25, 0.5)


def _inverse_factor_direct(b: float, n: int) -> float:
    # head by compensated block sums, tail by Euler-Maclaurin with the
    # integral mapped to a finite interval (u = 1/x) and Gauss nodes
    N = 100_000
    j = np.arange(1, N + 1, dtype=np.float64)
    head = float(math.fsum(np.sort(1.0 / (j * (b + j) ** n))))
    x0 = float(N + 1)
    nodes, weights = np.polynomial.legendre.leggauss(16)
    half = 0.5 / x0
    u = half * (nodes + 1.0)
    integ = float(np.sum(weights * half * u ** (n - 1) / (1.0 + b * u) ** n))
    correction = 0.5 / (x0 * (b + x0) ** n)
    return head + integ + correction


def _run_task(task: Task) -> Tuple[int, Optional[VerificationRecord]]:
    ordinal, op, args = task
    try:
        rec = _dispatch(op, args)
    except (DivergenceError, DomainError):
        rec = None
    return ordinal, rec


def _dispatch(op: str, args: tuple) -> VerificationRecord:
    if op == "series-cell":
        a, b, n, tol = args
        rec_val = identities.ramanujan_phi(a, b, n).value
        direct = eval_phi(a, b, float(n)).value
        t = tol if tol is not None else 1e-8 * max(1.0, abs(direct))
        return make_record(f"series a={a:g} b={b:g} n={n}", rec_val, direct, t)
    if op == "deriv-cell":
        a, b, n, tol = args
        closed = identities.phi_da_closed(a, b, n)
        direct = eval_phi_da_direct(a, b, n).value
        t = tol if tol is not None else 1e-7
        return make_record(f"deriv a={a:g} b={b:g} n={n}", closed, direct, t)
    if op == "invsum":
        b, n, tol = args
        orc = _inverse_factor_direct(b, n)
        val = identities.inverse_factor_sum(b, n)
        t = tol if tol is not None else 1e-9
        return make_record(f"invsum b={b:g} n={n}", val, orc, t)
    if op == "invsum-expansion":
        b, n, tol = args
        orc = _inverse_factor_direct(b, n)
        val = (digamma(b + 1.0) + EULER_GAMMA) / b ** n - math.fsum(
            hurwitz_zeta(k + 1.0, b + 1.0) * b ** (k - n) for k in range(1, n)
        )
        t = tol if tol is not None else 1e-9
        return make_record(f"invsum-exp b={b:g} n={n}", val, orc, t)
    if op == "harmonic":
        a, b, n, tol = args
        val = identities.harmonic_weighted_sum(a, b, n)
        orc = b ** (-float(n)) + eval_phi_da_direct(a, b, n - 1).value
        t = tol if tol is not None else 1e-7
        return make_record(f"harmonic a={a:g} b={b:g} n={n}", val, orc, t)
    if op == "interchange":
        a, b, tol = args
        rec = identities.interchange_check(a, b)
        return rec if tol is None else make_record(
            rec.spec, rec.series_value, rec.oracle_value, tol)
    if op == "shift":
        p, b, beta, mu, m, tol = args
        rec = identities.master_shift(p, b, beta, mu, m)
        return rec if tol is None else make_record(
            rec.spec, rec.series_value, rec.oracle_value, tol)
    if op == "lerch":
        b, beta, mu, tol = args
        val = eval_psi_general(SeriesParams(a=-1.0, b=b, beta=beta, alpha=mu)).value
        orc = lerch_phi(-beta, mu + 1.0, b)
        t = tol if tol is not None else 1e-10
        return make_record(f"lerch b={b:g} beta={beta:g} mu={mu:g}", val, orc, t)
    if op == "eta":
        b, alpha, tol = args
        rec = identities.eta_reduction(b, alpha)
        return rec if tol is None else make_record(
            rec.spec, rec.series_value, rec.oracle_value, tol)
    if op == "trig-sin":
        a, w, alpha, part, tol = args
        res = identities.trig_lambda(a, w, alpha)
        val = res.lambda_c if part == "c" else res.lambda_s
        form = "F7" if part == "c" else "F8"
        orc = oracle_value(IntegralSpec(form, {"a": a, "w": w, "alpha": alpha})).value
        t = tol if tol is not None else 1e-3
        return make_record(f"trig-sin {part} a={a} w={w:g} alpha={alpha:g}", val, orc, t)
    if op == "trig-cos":
        a, v, alpha, part, tol = args
        res = identities.trig_cos(a, v, alpha)
        val = res.lambda_c if part == "c" else res.lambda_s
        form = "F9" if part == "c" else "F10"
        orc = oracle_value(IntegralSpec(form, {"a": a, "v": v, "alpha": alpha})).value
        t = tol if tol is not None else 1e-3
        return make_record(f"trig-cos {part} a={a} v={v:g} alpha={alpha:g}", val, orc, t)
    if op == "trig-spot":
        fam, a, wv, alpha, part, want, tol = args
        res = (identities.trig_lambda if fam == "sin" else identities.trig_cos)(a, wv, alpha)
        val = res.lambda_c if part == "c" else res.lambda_s
        t = tol if tol is not None else 1e-12
        return make_record(f"spot-{fam} {part} a={a} f={wv:g} alpha={alpha:g}", val, want, t)
    if op == "logsin":
        a, w, alpha, part, tol = args
        dc, ds = identities.log_sin_integral(a, w, alpha)
        val = dc if part == "c" else ds
        orc = oracle_value(
            IntegralSpec("F11", {"a": a, "w": w, "alpha": alpha, "part": part})).value
        t = tol if tol is not None else 1e-6
        return make_record(f"logsin {part} a={a} w={w:g} alpha={alpha:g}", val, orc, t)
    if op == "twosided":
        b, beta, m, tol = args
        rec = identities.two_sided_family(b, beta, m)
        return rec if tol is None else make_record(
            rec.spec, rec.series_value, rec.oracle_value, tol, rec.errata_note)
    if op == "twosided-closed":
        b, beta, tol = args
        val = errata_mod.two_sided_closed(b, beta)
        orc = oracle_value(IntegralSpec("F12", {"b": b, "beta": beta})).value
        t = tol if tol is not None else 1e-6 * max(1.0, abs(orc))
        return make_record(f"two-sided-closed b={b:g} beta={beta:g}", val, orc, t)
    if op == "errata":
        key, tol = args
        entry = errata_mod.catalog()[key]
        printed_rec, corrected_rec = entry.reproduce()
        reproduces = printed_rec.verdict == "fail" and corrected_rec.verdict == "pass"
        return make_record(f"errata {key} reproduces", 1.0 if reproduces else 0.0,
                           1.0, 0.0)
    raise DomainError(f"unknown verification op: {op}")


def build_suite(name: str, tol: Optional[float] = None) -> List[Task]:
    """Assemble the task list for one suite name (or 'all')."""
    if name == "all":
        tasks: List[Task] = []
        for n in SUITE_NAMES:
            tasks.extend(build_suite(n, tol))
        return [(i, op, args) for i, (_, op, args) in enumerate(tasks)]
    entries: List[Tuple[str, tuple]] = []
    if name == "series":
        for a, b, n in itertools.product(_SERIES_A, _SERIES_B, range(6)):
            entries.append(("series-cell", (a, b, n, tol)))
        for a, b, n in itertools.product(_DERIV_A, _DERIV_B, range(3)):
            entries.append(("deriv-cell", (a, b, n, tol)))
        for b, n in itertools.product((0.5, 1.0, 2.0), (1, 2, 3)):
            entries.append(("invsum", (b, n, tol)))
            entries.append(("invsum-expansion", (b, n, tol)))
        for a, b, n in itertools.product((-0.5, 0.5, 1.0), (0.5, 1.0), (1, 2)):
            entries.append(("harmonic", (a, b, n, tol)))
        for a, b in itertools.product((-0.5, 0.5, 1.5), (0.25, 1.0, 2.5)):
            entries.append(("interchange", (a, b, tol)))
    elif name == "shifts":
        for m, b, mu in itertools.product((0, 1, 2), (0.5, 1.0, 2.0), (0.5, 1.0)):
            entries.append(("shift", (-1.0, b, -1.0, mu, m, tol)))
        for p, beta, b, mu, m in itertools.product(
                (-2.0, -1.0, -0.5, 0.5), (-1.0, -0.5, 0.5, 1.0),
                (0.5, 1.25), (0.5, 1.0), (0, 1, 2)):
            if abs(beta) == 1.0 and (p + mu <= -1.0 or (p <= -1.0 and mu <= 0.0)):
                continue
            entries.append(("shift", (p, b, beta, mu, m, tol)))
        entries.append(("shift", (-0.5, 0.25, -1.0, 0.0, 1, tol)))
        for beta, b, mu in itertools.product(
                (-0.75, -0.5, -0.25, 0.25, 0.5, 0.75), (0.5, 1.0, 2.0), (0.0, 1.0)):
            entries.append(("lerch", (b, beta, mu, tol)))
        for b, alpha in itertools.product((0.5, 1.0, 2.0), (1.0, 2.0)):
            entries.append(("eta", (b, alpha, tol)))
    elif name == "trig":
        for a, dw, alpha, part in itertools.product(
                _TRIG_A, (1, 2), _TRIG_ALPHA, ("c", "s")):
            entries.append(("trig-sin", (a, float(a + dw), alpha, part, tol)))
            entries.append(("trig-cos", (a, float(a + dw), alpha, part, tol)))
        for a, w, alpha, lc, ls in _TRIG_SPOTS_SIN:
            entries.append(("trig-spot", ("sin", a, w, alpha, "c", lc, tol)))
            entries.append(("trig-spot", ("sin", a, w, alpha, "s", ls, tol)))
        for a, v, alpha, ls in _TRIG_SPOTS_COS:
            entries.append(("trig-spot", ("cos", a, v, alpha, "s", ls, tol)))
        for a, w, alpha in _LOGSIN_CELLS:
            for part in ("c", "s"):
                entries.append(("logsin", (a, w, alpha, part, tol)))
    elif name == "twosided":
        for b, beta in itertools.product(_TWOSIDED_B, _TWOSIDED_BETA):
            entries.append(("twosided", (b, beta, 0, tol)))
        for b, beta in itertools.product(_TWOSIDED_B, _TWOSIDED_BETA):
            entries.append(("twosided", (b, beta, 1, tol)))
        for b, beta in itertools.product(_TWOSIDED_B, _TWOSIDED_BETA):
            entries.append(("twosided-closed", (b, beta, tol)))
    elif name == "errata":
        for entry in errata_mod.ENTRIES:
            entries.append(("errata", (entry.key, tol)))
    else:
        raise DomainError(f"unknown suite: {name}")
    return [(i, op, args) for i, (op, args) in enumerate(entries)]


def execute(tasks: Sequence[Task], workers: int = 1) -> List[VerificationRecord]:
    """Run tasks, serially or in a process pool; order follows the ordinals."""
    if workers <= 1 or len(tasks) <= 1:
        results = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=4))
    results.sort(key=lambda pair: pair[0])
    return [rec for _, rec in results if rec is not None]


def run_suite(name: str, tol: Optional[float] = None,
              workers: int = 1) -> List[VerificationRecord]:
    records = execute(build_suite(name, tol), workers)
    if not records:
        raise DomainError(f"suite '{name}' produced no records")
    return records
