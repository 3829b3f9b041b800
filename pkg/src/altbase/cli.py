"""Command-line front end: ``altbase <command> [options]``.

Results go to stdout, diagnostics to stderr.  Exit codes: 2 parse error,
3 domain error, 4 unresolved within the cutoff, 5 hypothesis violated.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

import mpmath

from altbase.base import make_base, shift
from altbase.classify import Tag, classify_type, parry_status, star_from_types
from altbase.errors import AltBaseError, DomainError, HypothesisViolated, ParseError, UnresolvedError
from altbase.expansion import DEFAULT_CUTOFF, greedy_expand, quasi_greedy_expand
from altbase.parse import format_value, load_spec, parse_expression, parse_list
from altbase.spectra import (
    build_sharpness,
    circles,
    conjugate_bound_check,
    find_tangencies,
    tangency_note,
    to_csv,
    to_svg,
    z_bound,
    z_bound_oracle,
)

DEFAULT_PRECISION = 30


def default_precision() -> int:
    raw = os.environ.get("ALTBASE_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"ALTBASE_PRECISION must be an integer, got {raw!r}")
    if value < 5:
        raise DomainError("ALTBASE_PRECISION must be at least 5")
    return value


def _num(v, digits: int) -> str:
    return mpmath.nstr(v, digits)


def _cnum(z, digits: int) -> str:
    z = mpmath.mpc(z)
    if abs(z.imag) <= mpmath.mpf(10) ** (-digits):
        return _num(z.real, digits)
    sign = "+" if z.imag >= 0 else "-"
    return f"{_num(z.real, digits)}{sign}{_num(abs(z.imag), digits)}i"


# -- shared argument handling -------------------------------------------------

def _base_spec(args):
    if args.spec:
        spec = load_spec(args.spec)
        betas, gamma = list(spec.betas), spec.gamma
        if args.gamma is not None:
            gamma = parse_expression(args.gamma)
        return betas, gamma
    if not args.base:
        raise ParseError("either --base or --spec is required")
    gamma = parse_expression(args.gamma) if args.gamma is not None else parse_expression("0")
    return parse_list(args.base), gamma


def _build(args, extras=()):
    betas, gamma = _base_spec(args)
    extras = [parse_expression(e) if isinstance(e, str) else e for e in extras]
    base = make_base(betas, gamma, extras=extras)
    return base, [base.lift(e) for e in extras]


def _add_base_args(p, gamma=True):
    p.add_argument("--base", help="comma-separated entries, e.g. \"(3+sqrt(21))/6,sqrt(3)\" (use --base=... if it starts with '-')")
    p.add_argument("--spec", help="JSON base specification (file path or inline JSON)")
    if gamma:
        p.add_argument("--gamma", default=None, help="left end of the digit interval [gamma, gamma+1] (default 0)")


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- commands -----------------------------------------------------------------

def cmd_expand(args) -> int:
    if args.star:
        base, _ = _build(args)
        rec = quasi_greedy_expand(base, cutoff=args.cutoff)
    else:
        if args.x is None:
            raise ParseError("--x is required (or use --star for the quasi-greedy expansion of gamma+1)")
        base, (x,) = _build(args, [args.x])
        rec = greedy_expand(base, x, cutoff=args.cutoff)
    payload = {
        "digits": rec.digits.to_json(),
        "resolved": rec.resolved,
        "states_hash": rec.states_hash(),
        "kind": rec.kind,
        "k": rec.k,
        "m": rec.m,
    }
    _emit(args, payload, str(rec.digits))
    if rec.resolved:
        return 0
    print(f"altbase: unresolved: no recurrence within {args.cutoff} digits", file=sys.stderr)
    return UnresolvedError.exit_code


def _pair(args):
    base, _ = _build(args)
    if base.n != 2:
        raise DomainError("this command needs a base with two entries")
    return base


def cmd_classify(args) -> int:
    base = _pair(args)
    if not base.gamma.is_zero():
        raise DomainError("the type classification needs gamma = 0")
    t = classify_type(base.betas[0], base.betas[1], cutoff=args.cutoff)
    star = None
    if t.tag is not Tag.UNRESOLVED:
        star = star_from_types(base.betas[0], base.betas[1], pair_type=t)
    payload = {
        "type": t.tag.value,
        "c": t.c.to_json() if t.c else None,
        "c_resolved": t.c.resolved if t.c else None,
        "q": t.q.to_json() if t.q else None,
        "m": t.m,
        "m_prime": t.m_prime,
        "certificate": t.certificate,
        "star": star.to_json() if star is not None and star.resolved else None,
    }
    text = str(t)
    if star is not None:
        text += f"\nd*(alpha,beta;1) = {star}"
    _emit(args, payload, text)
    return UnresolvedError.exit_code if t.tag is Tag.UNRESOLVED else 0


def cmd_parry(args) -> int:
    base = _pair(args)
    st = parry_status(base.betas[0], base.betas[1], cutoff=args.cutoff, gamma=base.gamma)
    payload = {
        "semi_parry_forward": st.semi_parry_forward.value,
        "semi_parry_backward": st.semi_parry_backward.value,
        "parry_pair": st.parry_pair.value,
        "forward_note": st.forward_note,
        "backward_note": st.backward_note,
    }
    _emit(args, payload, str(st))
    return 0


def _report(args):
    if args.x is None:
        raise ParseError("--x is required")
    base, (x,) = _build(args, [args.x])
    i = args.i
    if not 1 <= i <= base.n:
        raise DomainError(f"--i must lie between 1 and {base.n}")
    if args.rotate and i > 1:
        # expand x in sigma^(i-1)(B), where entry i comes first
        base = shift(base, i - 1)
        i = 1
    return base, x, i, conjugate_bound_check(base, x, i, precision=args.precision, cutoff=args.cutoff)


def _report_payload(base, rep, digits) -> dict:
    return {
        "base": [format_value(b.to_real_algebraic()) for b in base.betas],
        "i": rep.i,
        "y": format_value(rep.y.to_real_algebraic()),
        "z_abs": _num(rep.z_abs, digits),
        "M_i": format_value(rep.M_i.to_real_algebraic()),
        "bound": _num(rep.bound, digits),
        "periodic": rep.periodic,
        "conjugates": [
            {"value": _cnum(c.value, digits), "modulus": _num(c.modulus, digits), "verdict": c.verdict.value}
            for c in rep.conjugates
        ],
        "summary": rep.summary(),
    }


def cmd_bound(args) -> int:
    base, x, i, rep = _report(args)
    d = args.precision
    lines = [
        f"y = T^{rep.i - 1}(x) = {format_value(rep.y.to_real_algebraic())}",
        f"|z(gamma;y)| = {_num(rep.z_abs, d)}",
        f"M_{rep.i} = {format_value(rep.M_i.to_real_algebraic())} ~ {_num(rep.M_i.to_mpf(d), d)}",
        f"bound 1/|M_i z| = {_num(rep.bound, d)}",
        f"expansion periodic: {'yes' if rep.periodic else 'unresolved'}",
        rep.summary(),
    ]
    _emit(args, _report_payload(base, rep, d), "\n".join(lines))
    return 0


def cmd_conjugates(args) -> int:
    base, x, i, rep = _report(args)
    d = args.precision
    lines = [f"base ({', '.join(format_value(b.to_real_algebraic()) for b in base.betas)}), i = {rep.i}",
             f"bound = {_num(rep.bound, d)}"]
    if not rep.conjugates:
        lines.append("no nontrivial conjugates over the field of the other data")
    for c in rep.conjugates:
        lines.append(f"conjugate {_cnum(c.value, d)}  |.| = {_num(c.modulus, d)}  {c.verdict.value}")
    lines.append(rep.summary())
    _emit(args, _report_payload(base, rep, d), "\n".join(lines))
    return 0


def cmd_sharpness(args) -> int:
    beta = parse_expression(args.beta)
    M = [int(m) for m in args.M.split(",")] if args.M else None
    inst = build_sharpness(beta=beta, Q=args.Q, N=args.N, n=args.n, M=M, precision=args.precision)
    d = min(args.precision, 20)
    payload = {
        "beta": format_value(inst.beta),
        "n": inst.n,
        "Q": inst.Q,
        "M": list(inst.M),
        "N": inst.N,
        "F_N": [str(c) for c in inst.F_N],
        "theta": format_value(inst.theta),
        "theta_approx": _num(inst.theta.to_mpf(d), d),
        "digits": inst.digits.to_json(),
        "theta_in_window": inst.theta_in_window,
        "digits_match": inst.digits_match,
        "irreducibility": inst.irreducibility,
        "target": _cnum(inst.target, d),
        "achieved_conjugate": _cnum(inst.achieved_conjugate, d),
        "distance": _num(inst.distance, d),
    }
    lines = [
        f"M = {list(inst.M)}, N = {inst.N} ({inst.irreducibility})",
        f"theta ~ {_num(inst.theta.to_mpf(d), d)}",
        f"d(theta,beta;1) = {inst.digits}",
        f"N*M_0 <= theta < N*M_0+1: {inst.theta_in_window}",
        f"target 1/(beta*delta) = {_cnum(inst.target, d)}",
        f"achieved conjugate = {_cnum(inst.achieved_conjugate, d)}",
        f"distance = {_num(inst.distance, d)}",
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def _real_arg(text: str, digits: int):
    v = parse_expression(text)
    return v.to_mpf(digits + 10)


def cmd_circles(args) -> int:
    d = args.precision
    with mpmath.workdps(d + 10):
        g = _real_arg(args.gamma if args.gamma is not None else "0", d)
        y = _real_arg(args.y, d)
        R = _real_arg(args.R, d)
        res = circles(g, y, R, samples=args.samples, dps=d)
        tangencies = find_tangencies(g, y, dps=d)
    if args.out:
        Path(args.out).write_text(to_svg(res))
    if args.csv:
        Path(args.csv).write_text(to_csv(res))
    note = tangency_note(res, tangencies)
    payload = {
        "gamma": _num(g, d), "y": _num(y, d), "R": _num(R, d),
        "count": res.count,
        "degenerate_line": res.degenerate,
        "A": {"center": _num(res.A.center, d), "radius": _num(res.A.radius, d)} if not res.degenerate
        else {"line_re": _num(res.A.line_at, d)},
        "C": {"center": "0", "radius": _num(res.C.radius, d)},
        "intersections": [_cnum(z, d) for z in res.intersections],
        "tangencies": [{"R": _num(t.R, d), "kind": t.kind, "point": _cnum(t.point, d)} for t in tangencies],
        "note": note,
    }
    lines = [f"intersection count: {res.count}"]
    if res.degenerate:
        lines.append(f"A_R is the line Re Z = {_num(res.A.line_at, d)} (degenerate)")
    for z in res.intersections:
        lines.append(f"  point {_cnum(z, d)}")
    for t in tangencies:
        lines.append(f"tangency ({t.kind}) at R = {_num(t.R, d)}, point {_cnum(t.point, d)}")
    if note:
        lines.append(note)
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_sweep(args) -> int:
    """Closed-form z(gamma; y) against the brute-force solver on a grid."""
    steps = max(args.samples, 2)
    rows = []
    worst = mpmath.mpf(0)
    for a in range(steps):
        g = Fraction(-2) + Fraction(3 * a, steps - 1)
        for b in range(1, steps + 1):
            y = g + Fraction(b, steps + 1)
            if y == 0:
                continue
            zc = z_bound(g, y, dps=args.precision)
            zo = z_bound_oracle(g, y, dps=args.precision)
            diff = abs(zc - zo)
            worst = max(worst, diff)
            rows.append((float(g), float(y), _num(zc, 17), _num(zo, 17), _num(diff, 5)))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["gamma", "y", "z_closed", "z_oracle", "abs_diff"])
    w.writerows(rows)
    if args.out:
        Path(args.out).write_text(buf.getvalue())
        print(f"{len(rows)} grid points, max |difference| = {_num(worst, 5)}")
    else:
        sys.stdout.write(buf.getvalue())
    return 0


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altbase", description="Exact alternate-base expansions and conjugate bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, base=True, x=False, cutoff=True, precision=True):
        if base:
            _add_base_args(p)
        if x:
            p.add_argument("--x", help="point to expand")
        if cutoff:
            p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF, help="maximum number of digits (default %(default)s)")
        if precision:
            p.add_argument("--precision", type=int, default=None, help="decimal digits for numeric output (default 30 or $ALTBASE_PRECISION)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("expand", help="greedy (or quasi-greedy) digits")
    common(p, x=True, precision=False)
    p.add_argument("--star", action="store_true", help="quasi-greedy expansion of gamma+1")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("classify", help="type of a positive pair (gamma = 0)")
    common(p, precision=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("parry", help="semi-Parry / Parry status of a pair")
    common(p, precision=False)
    p.set_defaults(func=cmd_parry)

    for name, func, hlp in (("bound", cmd_bound, "z(gamma;y), M_i and the conjugate bound"),
                            ("conjugates", cmd_conjugates, "conjugates of beta_i against the bound")):
        p = sub.add_parser(name, help=hlp)
        common(p, x=True)
        p.add_argument("--i", type=int, default=1, help="index of the entry to conjugate (1-based)")
        p.add_argument("--rotate", action="store_true",
                       help="expand x in the rotated base starting at entry i instead of in B")
        p.set_defaults(func=func)

    p = sub.add_parser("sharpness", help="semi-Parry pair with a conjugate near the extremal point")
    common(p, base=False, cutoff=False)
    p.add_argument("--beta", default="1")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--Q", type=int, default=8)
    p.add_argument("--N", type=int, default=None, help="prime (default: first admissible)")
    p.add_argument("--M", default=None, help="explicit comma-separated M_0,...,M_n")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("circles", help="the circles A_R and C_R")
    common(p, base=False, cutoff=False)
    p.add_argument("--gamma", default="0")
    p.add_argument("--y", required=True)
    p.add_argument("--R", required=True)
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--out", help="SVG output path")
    p.add_argument("--csv", help="CSV output path (columns re, im, curve)")
    p.set_defaults(func=cmd_circles)

    p = sub.add_parser("sweep", help="closed-form z against the numeric oracle on a grid (CSV)")
    common(p, base=False, cutoff=False)
    p.add_argument("--samples", type=int, default=20, help="grid points per axis")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "precision", 0) is None:
            args.precision = default_precision()
        with mpmath.workdps(getattr(args, "precision", DEFAULT_PRECISION) + 10):
            return args.func(args)
    except AltBaseError as exc:
        label = {ParseError: "parse error", UnresolvedError: "unresolved", HypothesisViolated: "hypothesis violated"}
        kind = next((v for k, v in label.items() if isinstance(exc, k)), "domain error" if isinstance(exc, DomainError) else "error")
        print(f"altbase: {kind}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
