"""Command-line front end.

Subcommands:

* ``add``    -- compose two velocities under the reflection-symmetric law,
  the Einstein law, or both, and compare magnitudes;
* ``boost``  -- transform an event by the quaternionic boost and/or the
  standard real boost, with intervals and the spin-like imaginary term;
* ``check``  -- run the seeded property campaigns (exit 1 on any failure);
* ``limit``  -- evaluate the scaled small-c products for both kinds across a
  list of c values, with deviations and per-decade ratios;
* ``matrix`` -- print the 2x2 representation of one element.

Complex numbers print as ``re+imi`` in tables, split into ``_re``/``_im``
column pairs in csv, and become ``{"re": ..., "im": ...}`` objects in json.
Exit codes: 0 success (all properties passed), 1 property failure,
2 invalid input (the message names the violated precondition).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .biquat import BiQuaternion, square_norm
from .checks import RunConfig, SUITE_NAMES, format_report, run_suite
from .errors import PauliqError
from .lorentz import (
    Event,
    LIMIT_KINDS,
    boost_event,
    einstein_add,
    interval,
    interval_of,
    le_boost,
    make_boost,
    rotational_limit,
)
from .pauli_matrix import det, spin_term, to_matrix
from .reflsum import compose_velocities, mag_sq

FORMATS = ("table", "csv", "json")


# ---------------------------------------------------------------------------
# argument parsing helpers

def _parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a number (use forms like 1.5, -2i, 0.5+0.25i)"
        ) from None


def _parse_vec3(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated 3-vector"
        )
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} has non-numeric components"
        ) from None


def _parse_cvec3(text: str) -> tuple[complex, complex, complex]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma-separated 3-vector"
        )
    return tuple(_parse_complex(p) for p in parts)


def _parse_float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated float list") from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def _parse_positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"value must be positive, got {text}")
    return value


def _parse_positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"value must be >= 1, got {text}")
    return value


def _parse_seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2^64)")
    return value


def _parse_tolerance(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not of the form property_name=value"
        )
    try:
        tol = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a number") from None
    if tol < 0:
        raise argparse.ArgumentTypeError("tolerance must be >= 0")
    return name.strip(), tol


# ---------------------------------------------------------------------------
# output helpers

def _ff(x) -> str:
    return f"{float(x) + 0.0:.12g}"


def _fc(z) -> str:
    z = complex(z)
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real + 0.0:.12g}{sign}{abs(z.imag):.12g}i"


def _fcvec(v) -> str:
    return ", ".join(_fc(z) for z in v)


def _jc(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _jcvec(v) -> list:
    return [_jc(z) for z in v]


def _csv_c(z) -> str:
    z = complex(z)
    return f"{z.real!r},{z.imag!r}"


def _csv_cvec(v) -> str:
    return ",".join(_csv_c(z) for z in v)


def _emit(text: str) -> None:
    print(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_add(args) -> int:
    rows = []
    if args.law in ("refl", "both"):
        neg_v = tuple(-x for x in args.v)
        w = compose_velocities(neg_v, args.u, args.c)
        rows.append(("refl", np.asarray(w), complex(mag_sq(w))))
    if args.law in ("einstein", "both"):
        we = einstein_add(args.v, args.u, args.c)
        rows.append(("einstein", we.astype(np.complex128), complex(np.dot(we, we))))
    mag_diff = abs(rows[0][2] - rows[1][2]) if len(rows) == 2 else None

    if args.format == "json":
        payload = {
            "input": {"v": list(args.v), "u": list(args.u), "c": args.c, "law": args.law},
            "results": [
                {"law": law, "w": _jcvec(w), "mag_sq": _jc(m)} for law, w, m in rows
            ],
        }
        if mag_diff is not None:
            payload["magnitude_difference"] = mag_diff
        _emit(json.dumps(payload, indent=2))
    elif args.format == "csv":
        lines = ["law,wx_re,wx_im,wy_re,wy_im,wz_re,wz_im,mag_sq_re,mag_sq_im"]
        for law, w, m in rows:
            lines.append(f"{law},{_csv_cvec(w)},{_csv_c(m)}")
        _emit("\n".join(lines))
    else:
        widths = ("law", "w", "mag_sq")
        body = [(law, _fcvec(w), _fc(m)) for law, w, m in rows]
        w0 = max(len(widths[0]), *(len(r[0]) for r in body))
        w1 = max(len(widths[1]), *(len(r[1]) for r in body))
        lines = [f"{widths[0]:<{w0}}  {widths[1]:<{w1}}  {widths[2]}"]
        for r in body:
            lines.append(f"{r[0]:<{w0}}  {r[1]:<{w1}}  {r[2]}")
        if mag_diff is not None:
            lines.append(f"magnitude difference: {_ff(mag_diff)}")
        _emit("\n".join(lines))
    return 0


def cmd_boost(args) -> int:
    rotor = make_boost(args.v, args.c)
    event = Event(args.t, args.x, args.c)
    before = interval(event)
    entries = []
    if args.method in ("quat", "both"):
        te = boost_event(rotor, event)
        entries.append(
            ("quat", te.t_prime, np.asarray(te.x_prime), complex(interval_of(te, args.c)))
        )
    if args.method in ("le", "both"):
        tp, xp = le_boost(rotor, event)
        after = complex((args.c * tp) ** 2 - float(np.dot(xp, xp)))
        entries.append(("le", tp, xp.astype(np.complex128), after))
    spin = np.asarray(spin_term(rotor, event))

    if args.format == "json":
        payload = {
            "input": {
                "t": event.t,
                "x": event.x.tolist(),
                "v": rotor.v.tolist(),
                "c": args.c,
                "gamma": rotor.g,
                "interval": before,
            },
            "results": [
                {
                    "method": method,
                    "t_prime": tp,
                    "x_prime": _jcvec(xp),
                    "interval": _jc(iv),
                }
                for method, tp, xp, iv in entries
            ],
            "spin_term": _jcvec(spin),
        }
        _emit(json.dumps(payload, indent=2))
    elif args.format == "csv":
        lines = [
            "method,t_prime,xp_x_re,xp_x_im,xp_y_re,xp_y_im,xp_z_re,xp_z_im,"
            "interval_re,interval_im"
        ]
        for method, tp, xp, iv in entries:
            lines.append(f"{method},{tp!r},{_csv_cvec(xp)},{_csv_c(iv)}")
        _emit("\n".join(lines))
    else:
        lines = [
            f"input: t = {_ff(event.t)}, x = ({_fcvec(event.x.astype(complex))}), "
            f"v = ({_fcvec(rotor.v.astype(complex))}), c = {_ff(args.c)}, "
            f"gamma = {_ff(rotor.g)}",
            f"input interval: {_ff(before)}",
        ]
        header = ("method", "t'", "x'", "interval")
        body = [
            (method, _ff(tp), _fcvec(xp), _fc(iv)) for method, tp, xp, iv in entries
        ]
        w0 = max(len(header[0]), *(len(r[0]) for r in body))
        w1 = max(len(header[1]), *(len(r[1]) for r in body))
        w2 = max(len(header[2]), *(len(r[2]) for r in body))
        lines.append(f"{header[0]:<{w0}}  {header[1]:<{w1}}  {header[2]:<{w2}}  {header[3]}")
        for r in body:
            lines.append(f"{r[0]:<{w0}}  {r[1]:<{w1}}  {r[2]:<{w2}}  {r[3]}")
        lines.append(f"spin term: {_fcvec(spin)}")
        _emit("\n".join(lines))
    return 0


def cmd_check(args) -> int:
    suite = args.suite_positional
    if suite is not None and args.suite is not None and suite != args.suite:
        raise argparse.ArgumentTypeError(
            f"conflicting suites: positional {suite!r} vs --suite {args.suite!r}"
        )
    suite = suite or args.suite or "all"
    config = RunConfig(
        c=args.c,
        trials=args.trials,
        seed=args.seed,
        tolerances=dict(args.tolerance or []),
    )
    report = run_suite(suite, config)
    _emit(format_report(report, args.format))
    return 0 if report.all_passed else 1


def cmd_limit(args) -> int:
    kinds = []
    for kind in LIMIT_KINDS:
        rows = [
            (cval, rotational_limit(kind, args.x, args.v, args.t, cval))
            for cval in args.c
        ]
        devs = [rl.deviation() for _, rl in rows]
        ratios = [
            devs[i] / devs[i + 1]
            for i in range(len(devs) - 1)
            if devs[i + 1] > 0
        ]
        kinds.append((kind, rows, ratios))

    if args.format == "json":
        payload = {
            "input": {"x": list(args.x), "v": list(args.v), "t": args.t, "c": list(args.c)},
            "kinds": [
                {
                    "kind": kind,
                    "cos_theta": rows[0][1].cos_theta,
                    "sin_theta": rows[0][1].sin_theta,
                    "axis": rows[0][1].axis.tolist(),
                    "rows": [
                        {
                            "c": cval,
                            "scalar": _jc(rl.scalar),
                            "vector": _jcvec(rl.vector),
                            "deviation": rl.deviation(),
                        }
                        for cval, rl in rows
                    ],
                    "ratios": ratios,
                }
                for kind, rows, ratios in kinds
            ],
        }
        _emit(json.dumps(payload, indent=2))
    elif args.format == "csv":
        lines = [
            "kind,c,scalar_re,scalar_im,vx_re,vx_im,vy_re,vy_im,vz_re,vz_im,deviation"
        ]
        for kind, rows, _ in kinds:
            for cval, rl in rows:
                lines.append(
                    f"{kind},{cval!r},{_csv_c(rl.scalar)},{_csv_cvec(rl.vector)},"
                    f"{rl.deviation()!r}"
                )
        _emit("\n".join(lines))
    else:
        lines = []
        header = ("kind", "c", "scalar", "vector", "deviation")
        body = []
        for kind, rows, _ in kinds:
            for cval, rl in rows:
                body.append(
                    (kind, _ff(cval), _fc(rl.scalar), _fcvec(rl.vector), f"{rl.deviation():.3e}")
                )
        ws = [max(len(header[i]), *(len(r[i]) for r in body)) for i in range(4)]
        lines.append(
            f"{header[0]:<{ws[0]}}  {header[1]:<{ws[1]}}  {header[2]:<{ws[2]}}  "
            f"{header[3]:<{ws[3]}}  {header[4]}"
        )
        for r in body:
            lines.append(
                f"{r[0]:<{ws[0]}}  {r[1]:<{ws[1]}}  {r[2]:<{ws[2]}}  {r[3]:<{ws[3]}}  {r[4]}"
            )
        for kind, rows, ratios in kinds:
            rl = rows[0][1]
            ratio_txt = ", ".join(f"{r:.3g}" for r in ratios) if ratios else "n/a"
            lines.append(
                f"{kind}: cos_theta = {_ff(rl.cos_theta)}, axis = ({_fcvec(rl.axis.astype(complex))}), "
                f"per-decade deviation ratios: {ratio_txt}"
            )
        _emit("\n".join(lines))
    return 0


def cmd_matrix(args) -> int:
    q = BiQuaternion(args.s, args.v)
    m = to_matrix(q)
    d = complex(det(m))
    sn = complex(square_norm(q))

    if args.format == "json":
        payload = {
            "input": {"s": _jc(q.s), "v": _jcvec(q.v)},
            "matrix": [[_jc(m[0, 0]), _jc(m[0, 1])], [_jc(m[1, 0]), _jc(m[1, 1])]],
            "det": _jc(d),
            "square_norm": _jc(sn),
        }
        _emit(json.dumps(payload, indent=2))
    elif args.format == "csv":
        lines = [
            "m00_re,m00_im,m01_re,m01_im,m10_re,m10_im,m11_re,m11_im,det_re,det_im",
            f"{_csv_c(m[0, 0])},{_csv_c(m[0, 1])},{_csv_c(m[1, 0])},{_csv_c(m[1, 1])},"
            f"{_csv_c(d)}",
        ]
        _emit("\n".join(lines))
    else:
        c00, c01, c10, c11 = _fc(m[0, 0]), _fc(m[0, 1]), _fc(m[1, 0]), _fc(m[1, 1])
        w0 = max(len(c00), len(c10))
        w1 = max(len(c01), len(c11))
        _emit(
            "\n".join(
                [
                    f"element: s = {_fc(q.s)}, v = ({_fcvec(q.v)})",
                    f"[ {c00:>{w0}}  {c01:>{w1}} ]",
                    f"[ {c10:>{w0}}  {c11:>{w1}} ]",
                    f"det: {_fc(d)}",
                    f"square_norm: {_fc(sn)}",
                ]
            )
        )
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_format(sub) -> None:
    sub.add_argument(
        "--format", choices=FORMATS, default="table", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauliq",
        description=(
            "Reflection-symmetric velocity composition, quaternionic Lorentz "
            "boosts, their 2x2 matrix representation, and seeded invariant checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_add = sub.add_parser(
        "add", help="compose two velocities under one or both addition laws"
    )
    p_add.add_argument("--v", type=_parse_vec3, required=True, help="first velocity vx,vy,vz (|v| < c)")
    p_add.add_argument("--u", type=_parse_vec3, required=True, help="second velocity ux,uy,uz (|u| <= c)")
    p_add.add_argument("--c", type=_parse_positive_float, default=1.0, help="speed constant (default 1)")
    p_add.add_argument("--law", choices=("refl", "einstein", "both"), default="both")
    _add_format(p_add)
    p_add.set_defaults(func=cmd_add)

    p_boost = sub.add_parser(
        "boost", help="boost one event by the quaternionic and/or standard transform"
    )
    p_boost.add_argument("--v", type=_parse_vec3, required=True, help="boost velocity (|v| < c)")
    p_boost.add_argument("--t", type=float, required=True, help="event time")
    p_boost.add_argument("--x", type=_parse_vec3, required=True, help="event position")
    p_boost.add_argument("--c", type=_parse_positive_float, default=1.0, help="speed constant (default 1)")
    p_boost.add_argument("--method", choices=("quat", "le", "both"), default="both")
    _add_format(p_boost)
    p_boost.set_defaults(func=cmd_boost)

    p_check = sub.add_parser("check", help="run the seeded property campaigns")
    p_check.add_argument(
        "suite_positional",
        nargs="?",
        choices=SUITE_NAMES + ("all",),
        metavar="suite",
        help="suite to run: %(choices)s (default all)",
    )
    p_check.add_argument("--suite", choices=SUITE_NAMES + ("all",), help="alternative to the positional suite")
    p_check.add_argument("--seed", type=_parse_seed, default=42, help="campaign seed (default 42)")
    p_check.add_argument("--trials", type=_parse_positive_int, default=1000, help="trials per property (default 1000)")
    p_check.add_argument("--c", type=_parse_positive_float, default=1.0, help="speed constant (default 1)")
    p_check.add_argument(
        "--tolerance",
        type=_parse_tolerance,
        action="append",
        metavar="NAME=VALUE",
        help="override one property tolerance (repeatable)",
    )
    _add_format(p_check)
    p_check.set_defaults(func=cmd_check)

    p_limit = sub.add_parser(
        "limit", help="evaluate the scaled small-c boost products for both kinds"
    )
    p_limit.add_argument("--x", type=_parse_vec3, required=True, help="event position")
    p_limit.add_argument("--v", type=_parse_vec3, required=True, help="boost velocity (|v| > c here)")
    p_limit.add_argument("--t", type=float, default=1.0, help="event time (default 1)")
    p_limit.add_argument(
        "--c",
        type=_parse_float_list,
        default=(1e-1, 1e-2, 1e-3),
        help="comma-separated c values (default 0.1,0.01,0.001)",
    )
    _add_format(p_limit)
    p_limit.set_defaults(func=cmd_limit)

    p_matrix = sub.add_parser("matrix", help="print the 2x2 representation of one element")
    p_matrix.add_argument("--s", type=_parse_complex, default=0j, help="scalar part (complex, e.g. 1.25 or 0.5+0.1i)")
    p_matrix.add_argument("--v", type=_parse_cvec3, default=(0j, 0j, 0j), help="vector part vx,vy,vz (complex components)")
    _add_format(p_matrix)
    p_matrix.set_defaults(func=cmd_matrix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PauliqError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
