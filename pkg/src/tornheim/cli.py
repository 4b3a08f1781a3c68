"""Command-line front end: ``python -m tornheim <verb> <target> [args] [options]``.

Verbs
  eval TARGET ARGS...   evaluate one function at one point
  verify SUITE          run a seeded identity suite (one record per check, then "passed/total")
  table NAME            print an exact table (corollary, convolution, witten-sign)
  selftest              run every end-to-end check

Complex literals look like ``2``, ``-1.5``, ``2+0.5i`` or ``0.3-2i``. Sample
points come from NumPy's PCG64 generator seeded with ``--seed``.
Exit status is 0 when every record is ok, 1 otherwise, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import sampling
from .approx import DEFAULT_OPTIONS, Approx, EvalOptions
from .errors import TornheimError

_COMPLEX = re.compile(
    r"^\s*([+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)?"
    r"(([+-])((\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)?i)?\s*$")
_INT = re.compile(r"^[+-]?\d+$")


class UsageError(Exception):
    pass


def parse_literal(text: str) -> int | complex:
    """Decimal integers stay integers; everything else must be ``a+bi``."""
    if _INT.match(text):
        return int(text)
    m = _COMPLEX.match(text)
    if not m or not text.strip():
        raise UsageError(f"cannot parse {text!r} as a number")
    re_part = float(m.group(1)) if m.group(1) else 0.0
    im_part = 0.0
    if m.group(5):
        mag = m.group(7)
        im_part = float(mag) if mag else 1.0
        if m.group(6) == "-":
            im_part = -im_part
    return complex(re_part, im_part)


def _cplx(x) -> complex:
    return complex(x)


def _int(x) -> int:
    if not isinstance(x, int):
        raise UsageError(f"expected an integer, got {x}")
    return x


@dataclass
class ResultRecord:
    target: str
    inputs: list[Any]
    value: complex | None = None
    abs_err: float | None = None
    exact: str | None = None
    status: str = "ok"
    error_kind: str | None = None
    elapsed_ms: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "target": self.target,
            "inputs": [_echo(x) for x in self.inputs],
            "value": None if self.value is None else {"re": self.value.real, "im": self.value.imag},
            "abs_err": self.abs_err,
            "status": self.status,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.exact is not None:
            d["exact"] = self.exact
        if self.error_kind is not None:
            d["error_kind"] = self.error_kind
        d.update(self.extra)
        return d


def _echo(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, Fraction):
        return str(x)
    return x


# ---------------------------------------------------------------------------
# eval targets: name -> (arity, callable(args, opts) -> Approx | Fraction)


def _eval_tornheim(args, opts):
    from .core import classify, Region, tornheim_continued, tornheim_direct
    s, t, u = map(_cplx, args)
    if classify(s, t, u).region is Region.CONVERGENT:
        try:
            return tornheim_direct(s, t, u, opts)
        except TornheimError:
            pass
    return tornheim_continued(s, t, u, opts)


def _eval_parity(args, opts):
    from .closed_forms import parity_eval
    return parity_eval(*map(_int, args))


def _eval_corollary(args, opts):
    from .closed_forms import corollary_values
    a, b, c = map(_int, args[:3])
    path = args[3] if len(args) > 3 else "joint_st"
    return corollary_values(a, b, c, path)


def _targets() -> dict[str, tuple[int, Callable]]:
    from . import appendix, closed_forms, core, special, witten
    return {
        "tornheim": (3, _eval_tornheim),
        "direct": (3, lambda a, o: core.tornheim_direct(*map(_cplx, a), o)),
        "continued": (3, lambda a, o: core.tornheim_continued(*map(_cplx, a), o)),
        "A": (3, lambda a, o: core.A_shifted(*map(_cplx, a), opts=o)),
        "A_contour": (3, lambda a, o: core.A_contour(*map(_cplx, a), o)),
        "Z": (3, lambda a, o: core.Z_theorem(*map(_cplx, a), o)),
        "euler": (2, lambda a, o: core.euler_double_zeta(*map(_cplx, a), o)),
        "h": (2, lambda a, o: appendix.h_eval(*map(_cplx, a), o)),
        "zeta": (1, lambda a, o: special.riemann_zeta(_cplx(a[0]), o)),
        "gamma": (1, lambda a, o: special.gamma(_cplx(a[0]))),
        "witten": (1, lambda a, o: witten.witten_eval(_cplx(a[0]), o)),
        "F": (3, lambda a, o: closed_forms.F_eval(_cplx(a[0]), _cplx(a[1]), _int(a[2]), o)),
        "parity": (3, _eval_parity),
        "corollary": (3, _eval_corollary),
        "convolution": (3, lambda a, o: closed_forms.convolution_check(*map(_int, a))),
    }


def _timed(target: str, inputs: list, fn: Callable[[], Any]) -> ResultRecord:
    t0 = time.perf_counter()
    rec = ResultRecord(target, inputs)
    try:
        out = fn()
        if isinstance(out, Fraction):
            rec.exact = str(out)
            rec.value, rec.abs_err = complex(out), 0.0
        elif isinstance(out, Approx):
            rec.value, rec.abs_err = out.value, out.abs_err
        elif isinstance(out, tuple):  # (passed, residual Approx or Fraction)
            ok, res = out
            if isinstance(res, Fraction):
                rec.exact, rec.value, rec.abs_err = str(res), complex(res), 0.0
            else:
                rec.value, rec.abs_err = res.value, res.abs_err
            rec.status = "ok" if ok else "failed"
        else:
            raise TypeError(f"unexpected result {out!r}")
    except TornheimError as exc:
        rec.status, rec.error_kind = "refused", type(exc).__name__
    except Exception as exc:  # noqa: BLE001 - every failure becomes a record
        rec.status, rec.error_kind = "failed", type(exc).__name__
    rec.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return rec


def do_eval(target: str, raw: list[str], opts: EvalOptions) -> list[ResultRecord]:
    table = _targets()
    if target not in table:
        raise UsageError(f"unknown target {target!r}; choose from {', '.join(sorted(table))}")
    arity, fn = table[target]
    if target == "corollary" and len(raw) == 4:
        args = [parse_literal(x) for x in raw[:3]] + [raw[3]]
    else:
        args = [parse_literal(x) for x in raw]
        if len(args) != arity:
            raise UsageError(f"{target} takes {arity} arguments, got {len(args)}")
    return [_timed(target, args, lambda: fn(args, opts))]


# ---------------------------------------------------------------------------
# verify suites


def _suite_theorem(seed, n, opts, tol):
    from .core import A_shifted, Z_def
    for s, t, u in sampling.theorem_points(seed, n):
        def run(s=s, t=t, u=u):
            z = Z_def(s, t, u, opts)
            a = A_shifted(s, t, u, opts=opts) + A_shifted(t, s, u, opts=opts)
            res = z - a
            return abs(res.value) <= tol * abs(z.value) + res.abs_err, res
        yield [s, t, u], run


def _suite_continuation(seed, n, opts, tol):
    from .core import tornheim_continued, tornheim_direct
    for s, t, u in sampling.continuation_points(seed, n):
        def run(s=s, t=t, u=u):
            d = tornheim_direct(s, t, u, opts)
            res = tornheim_continued(s, t, u, opts) - d
            return abs(res.value) <= tol * abs(d.value) + res.abs_err, res
        yield [s, t, u], run


def _suite_representation(seed, n, opts, tol):
    from .core import A_contour, A_shifted
    g = sampling.rng(seed)
    k = 0
    while k < n:
        s, t, u = (complex(g.uniform(-1.3, 3.0), g.uniform(-1, 1)) for _ in range(3))
        if min(abs(s - round(s.real)), abs(t - round(t.real)), abs(1 - t - u - round((1 - t - u).real))) < 0.1:
            continue
        k += 1

        def run(s=s, t=t, u=u):
            a = A_shifted(s, t, u, opts=opts)
            res = A_contour(s, t, u, opts) - a
            return abs(res.value) <= tol * max(abs(a.value), 1.0) + res.abs_err, res
        yield [s, t, u], run


def _suite_barnes(seed, n, opts, tol):
    from .contour import barnes_lemma_check
    for s, t in sampling.barnes_points(seed, n):
        def run(s=s, t=t):
            r = barnes_lemma_check(s, t, opts)
            return abs(r.value) <= max(tol, 1e-9), r
        yield [s, t], run


def _suite_funeq(seed, n, opts, tol):
    from .appendix import funeq_sides
    for s, t in sampling.funeq_points(seed, n):
        def run(s=s, t=t):
            lhs, rhs = funeq_sides(s, t, opts)
            res = lhs - rhs
            return abs(res.value) <= res.abs_err + max(tol, 1e-6) * max(abs(lhs.value), 1.0), res
        yield [s, t], run


def _suite_convolution(seed, n, opts, tol):
    from .closed_forms import convolution_check, convolution_check_formal
    top = max(0, round(n ** (1 / 3)) - 1)
    for a, b, c in itertools.product(range(top + 1), repeat=3):
        def run(a=a, b=b, c=c):
            r = convolution_check(a, b, c)
            return r == 0 and convolution_check_formal(a, b, c) == 0, r
        yield [a, b, c], run


def _suite_parity(seed, n, opts, tol):
    from .closed_forms import parity_eval
    from .core import tornheim_direct
    for a, b, c in itertools.product(range(1, 5), repeat=3):
        if (a + b + c) % 2 == 0:
            continue

        def run(a=a, b=b, c=c):
            d = tornheim_direct(a, b, c, opts)
            res = parity_eval(a, b, c) - d
            return abs(res.value) <= max(tol, 1e-8) * abs(d.value) + res.abs_err, res
        yield [a, b, c], run


SUITES = {
    "theorem": _suite_theorem,
    "continuation": _suite_continuation,
    "representation": _suite_representation,
    "barnes": _suite_barnes,
    "funeq": _suite_funeq,
    "convolution": _suite_convolution,
    "parity": _suite_parity,
}


def do_verify(suite: str, seed: int, n: int, opts: EvalOptions, tol: float) -> list[ResultRecord]:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return [_timed(suite, inputs, run) for inputs, run in SUITES[suite](seed, n, opts, tol)]


# ---------------------------------------------------------------------------
# tables


def do_table(name: str, top: int) -> list[ResultRecord]:
    from .closed_forms import LimitPath, convolution_check, corollary_values
    from .witten import witten_dderiv_neg_even, witten_deriv_neg_odd
    recs = []
    if name == "corollary":
        for a, b, c in itertools.product(range(top + 1), repeat=3):
            for p in LimitPath:
                r = _timed("corollary", [a, b, c, p.value], lambda: corollary_values(a, b, c, p))
                recs.append(r)
    elif name == "convolution":
        for a, b, c in itertools.product(range(top + 1), repeat=3):
            recs.append(_timed("convolution", [a, b, c],
                               lambda: (convolution_check(a, b, c) == 0, convolution_check(a, b, c))))
    elif name == "witten-sign":
        for a in range(1, top + 1):
            fn = witten_deriv_neg_odd if a % 2 else witten_dderiv_neg_even
            holder = {}

            def run(fn=fn, a=a, holder=holder):
                rep = fn(a)
                holder["rep"] = rep
                return rep.sign_ok, rep.value_or_deriv
            rec = _timed("witten-sign", [-a], run)
            rec.extra["order"] = 1 if a % 2 else 2
            if "rep" in holder:
                rec.extra["predicted_sign"] = holder["rep"].predicted_sign
            recs.append(rec)
    else:
        raise UsageError(f"unknown table {name!r}; choose from corollary, convolution, witten-sign")
    return recs


def do_selftest() -> list[ResultRecord]:
    from .acceptance import CHECKS
    recs = []
    for check in CHECKS:
        holder = {}

        def run(check=check):
            r = check()
            holder["r"] = r
            return r.passed, Approx(0j, 0.0)
        rec = _timed(check.__name__.removeprefix("check_"), [], run)
        rec.value = rec.abs_err = None
        if "r" in holder:
            rec.extra["detail"] = holder["r"].detail
        recs.append(rec)
    return recs


# ---------------------------------------------------------------------------
# output


def _emit(records: list[ResultRecord], fmt: str, out, summary: bool) -> None:
    passed = sum(r.status == "ok" for r in records)
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r.as_dict(), sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["target", "inputs", "re", "im", "abs_err", "exact", "status", "error_kind",
                    "elapsed_ms"])
        for r in records:
            d = r.as_dict()
            w.writerow([r.target, json.dumps(d["inputs"]),
                        "" if r.value is None else repr(r.value.real),
                        "" if r.value is None else repr(r.value.imag),
                        "" if r.abs_err is None else repr(r.abs_err), r.exact or "", r.status,
                        r.error_kind or "", d["elapsed_ms"]])
    else:
        for r in records:
            args = " ".join(_fmt_input(x) for x in r.inputs)
            if r.status != "ok" and r.value is None:
                body = f"{r.status} ({r.error_kind})" if r.error_kind else r.status
            elif r.exact is not None:
                body = f"{r.exact}  [{r.status}]"
            elif r.value is not None:
                body = f"{_fmt_c(r.value)} +- {r.abs_err:.1e}  [{r.status}]"
            else:
                body = r.status
            detail = f"  {r.extra['detail']}" if "detail" in r.extra else ""
            out.write(f"{r.target}({args}) = {body}{detail}\n")
    if summary:
        out.write(f"{passed}/{len(records)}\n")


def _fmt_input(x) -> str:
    return _fmt_c(x) if isinstance(x, complex) else str(x)


def _fmt_c(z: complex) -> str:
    return f"{z.real:.15g}{z.imag:+.15g}i"


def build_parser() -> argparse.ArgumentParser:
    epilog = (f"eval targets: {', '.join(sorted(_targets()))}\n"
              f"verify suites: {', '.join(SUITES)}\n"
              "tables: corollary, convolution, witten-sign")
    p = argparse.ArgumentParser(prog="tornheim", description=__doc__.split("\n\n", 1)[1],
                                epilog=epilog, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("verb", choices=["eval", "verify", "table", "selftest"])
    p.add_argument("target", nargs="?")
    p.add_argument("args", nargs="*")
    p.add_argument("--tol", type=float, default=None, help="relative tolerance / target accuracy")
    p.add_argument("--seed", type=int, default=7, help="PCG64 seed for sampled suites")
    p.add_argument("--points", type=int, default=10, help="number of sampled points")
    p.add_argument("--output", choices=["json", "csv", "text"], default="text")
    p.add_argument("--quad-height", type=float, default=None, help="initial contour height")
    p.add_argument("--max", type=int, default=2, help="largest index in tables")
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    # negative literals such as -1.5 may land among options; argparse keeps them positional
    opts = DEFAULT_OPTIONS
    try:
        if ns.tol is not None:
            opts = opts.with_(target_rel_tol=ns.tol)
        if ns.quad_height is not None:
            opts = opts.with_(quad_height=ns.quad_height)
        tol = 1e-7 if ns.tol is None else ns.tol
        if ns.verb == "eval":
            if not ns.target:
                raise UsageError("eval needs a target")
            records, summary = do_eval(ns.target, ns.args, opts), False
        elif ns.verb == "verify":
            if not ns.target:
                raise UsageError("verify needs a suite name")
            records, summary = do_verify(ns.target, ns.seed, ns.points, opts, tol), True
        elif ns.verb == "table":
            if not ns.target:
                raise UsageError("table needs a name")
            records, summary = do_table(ns.target, ns.max), False
        else:
            records, summary = do_selftest(), True
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"tornheim: {exc}\n")
        return 2
    _emit(records, ns.output, out, summary)
    return 0 if all(r.status == "ok" for r in records) else 1


def main() -> None:
    sys.exit(run())
