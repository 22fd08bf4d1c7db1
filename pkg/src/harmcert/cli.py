"""Command-line surface and the on-disk function-file format.

Function files are canonical JSON with key order lambda, h_coeffs,
g_coeffs, meta; coefficients are [re, im] pairs printed with 17
significant digits, so serialize -> parse -> serialize is byte-identical.

Exit codes: 0 member, 1 non-member (or a failed threshold for ``hyper``),
2 boundary-sharp, 3 input or parameter error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .catalog import (
    CatalogParams,
    hyper_condition,
    make_example,
    poly_condition,
)
from .errors import NonMemberError, ParameterError
from .geometry import (
    RadiusKind,
    boundary_curve_audit,
    harmonic_radius_certify,
)
from .membership import (
    ClassParams,
    HarmonicMap,
    Verdict,
    harmonic_membership,
    stable_family_check,
)
from .series import AnalyticSeries, eval_array
from .specfun import HypergeomParams

EXIT_MEMBER = 0
EXIT_NON_MEMBER = 1
EXIT_BOUNDARY_SHARP = 2
EXIT_INPUT_ERROR = 3

_VERDICT_EXIT = {
    Verdict.MEMBER: EXIT_MEMBER,
    Verdict.NON_MEMBER: EXIT_NON_MEMBER,
    Verdict.BOUNDARY_SHARP: EXIT_BOUNDARY_SHARP,
    Verdict.INCONCLUSIVE: EXIT_INPUT_ERROR,
}


class FunctionFileError(ParameterError):
    """A function file failed to parse or validate."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


@dataclass(frozen=True)
class FunctionFile:
    lam: float
    h: tuple[complex, ...]
    g: tuple[complex, ...]
    meta: dict[str, str] = field(default_factory=dict)


def function_file_from_map(f: HarmonicMap, lam: float,
                           meta: dict[str, str] | None = None) -> FunctionFile:
    def padded(coeffs):
        cs = tuple(coeffs)
        return cs + (0j,) * max(0, 2 - len(cs))

    return FunctionFile(
        lam=float(lam),
        h=padded(f.h.coeffs),
        g=padded(f.g.coeffs),
        meta=dict(meta or {}),
    )


def to_harmonic_map(ff: FunctionFile) -> HarmonicMap:
    return HarmonicMap(h=AnalyticSeries(ff.h), g=AnalyticSeries(ff.g))


def serialize_function_file(ff: FunctionFile) -> str:
    lines = ["{"]
    lines.append(f'  "lambda": {_fmt(ff.lam)},')
    for key, coeffs in (("h_coeffs", ff.h), ("g_coeffs", ff.g)):
        lines.append(f'  "{key}": [')
        for i, c in enumerate(coeffs):
            comma = "," if i + 1 < len(coeffs) else ""
            lines.append(f"    [{_fmt(c.real)}, {_fmt(c.imag)}]{comma}")
        lines.append("  ],")
    lines.append('  "meta": {')
    items = sorted(ff.meta.items())
    for i, (k, v) in enumerate(items):
        comma = "," if i + 1 < len(items) else ""
        lines.append(f"    {json.dumps(k)}: {json.dumps(v)}{comma}")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_coeffs(raw, key: str) -> tuple[complex, ...]:
    if not isinstance(raw, list):
        raise FunctionFileError(f"{key}: expected a list of [re, im] pairs")
    out = []
    for i, pair in enumerate(raw):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, (int, float)) for v in pair)):
            raise FunctionFileError(f"{key}[{i}]: expected a [re, im] pair")
        out.append(complex(float(pair[0]), float(pair[1])))
    return tuple(out)


def parse_function_file(text: str) -> FunctionFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FunctionFileError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(obj, dict):
        raise FunctionFileError("top level must be an object")
    keys = {"lambda", "h_coeffs", "g_coeffs", "meta"}
    unknown = sorted(set(obj) - keys)
    if unknown:
        raise FunctionFileError(f"unknown fields: {', '.join(unknown)}")
    missing = sorted(keys - set(obj))
    if missing:
        raise FunctionFileError(f"missing fields: {', '.join(missing)}")
    lam = obj["lambda"]
    if not isinstance(lam, (int, float)) or not lam > 0:
        raise FunctionFileError("lambda: must be a positive number")
    h = _parse_coeffs(obj["h_coeffs"], "h_coeffs")
    if len(h) < 2:
        raise FunctionFileError("h_coeffs: need at least the first two entries")
    if abs(h[0]) > 1e-12:
        raise FunctionFileError("h_coeffs[0]: series must vanish at the origin")
    if abs(h[1] - 1.0) > 1e-12:
        raise FunctionFileError("h_coeffs[1]: linear coefficient must be 1")
    g = _parse_coeffs(obj["g_coeffs"], "g_coeffs")
    if len(g) >= 1 and abs(g[0]) > 1e-12:
        raise FunctionFileError(
            "g_coeffs[0]: co-analytic part must vanish at the origin"
        )
    if len(g) >= 2 and abs(g[1]) > 1e-12:
        raise FunctionFileError("g_coeffs[1]: co-analytic linear term must vanish")
    meta = obj["meta"]
    if not isinstance(meta, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in meta.items()
    ):
        raise FunctionFileError("meta: must map strings to strings")
    return FunctionFile(lam=float(lam), h=h, g=g, meta=dict(meta))


def load_function_file(path: str) -> FunctionFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FunctionFileError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return parse_function_file(text)
    except FunctionFileError as exc:
        raise FunctionFileError(f"{path}: {exc}") from exc


def write_text_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-harmcert-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def curve_csv(audit) -> str:
    lines = ["theta,re,im"]
    for t, p in zip(audit.thetas, audit.points):
        lines.append(f"{_fmt(t)},{_fmt(p.real)},{_fmt(p.imag)}")
    return "\n".join(lines) + "\n"


def _svg_path(points, closed: bool = True) -> str:
    parts = []
    for i, p in enumerate(points):
        cmd = "M" if i == 0 else "L"
        parts.append(f"{cmd} {p.real:.6g} {-p.imag:.6g}")
    if closed:
        parts.append("Z")
    return " ".join(parts)


def curve_svg(f: HarmonicMap, audit, rings=(0.25, 0.5, 0.75),
              ring_samples: int = 256) -> str:
    """Closed polyline of the boundary image plus images of inner circles."""
    thetas = np.linspace(0.0, 2.0 * math.pi, ring_samples, endpoint=False)
    circle = np.exp(1j * thetas)
    ring_paths = [f.eval_array(r * circle) for r in rings]
    all_pts = np.concatenate([audit.points] + ring_paths)
    x = np.concatenate([all_pts.real, [0.0]])
    y = np.concatenate([-all_pts.imag, [0.0]])
    margin = 0.05 * max(np.ptp(x), np.ptp(y), 1e-9)
    x0, x1 = x.min() - margin, x.max() + margin
    y0, y1 = y.min() - margin, y.max() + margin
    stroke = max(x1 - x0, y1 - y0) / 400.0
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="640" height="640" '
        f'viewBox="{x0:.6g} {y0:.6g} {x1 - x0:.6g} {y1 - y0:.6g}">',
        f'  <line x1="{x0:.6g}" y1="0" x2="{x1:.6g}" y2="0" '
        f'stroke="#ccc" stroke-width="{stroke:.6g}" />',
        f'  <line x1="0" y1="{y0:.6g}" x2="0" y2="{y1:.6g}" '
        f'stroke="#ccc" stroke-width="{stroke:.6g}" />',
        f'  <circle cx="0" cy="0" r="{2 * stroke:.6g}" fill="#888" />',
    ]
    for pts in ring_paths:
        lines.append(
            f'  <path d="{_svg_path(pts)}" fill="none" stroke="#999" '
            f'stroke-width="{stroke:.6g}" />'
        )
    lines.append(
        f'  <path d="{_svg_path(audit.points)}" fill="none" stroke="#000" '
        f'stroke-width="{2 * stroke:.6g}" />'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _parse_eta(text: str) -> complex:
    try:
        return complex(text)
    except ValueError as exc:
        raise ParameterError(
            f"eta: cannot parse {text!r} (use forms like 1, -0.5, 0.3+0.4j)"
        ) from exc


def _print_report(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")


def _cmd_check(args) -> int:
    ff = load_function_file(args.path)
    lam = args.lam if args.lam is not None else ff.lam
    params = ClassParams(lam=lam)
    f = to_harmonic_map(ff)
    rep = harmonic_membership(f, params, angles=args.angles)
    payload = {
        "verdict": rep.verdict.value,
        "measured_sup": rep.measured_sup,
        "margin": rep.margin,
        "witness_angle": rep.witness_angle,
        "lambda": lam,
        "justification": rep.justification,
    }
    if args.zeta_samples is not None:
        scan = stable_family_check(f, params, zeta_samples=args.zeta_samples)
        payload["zeta_family_max"] = scan.scan.max_sup
        payload["zeta_family_gap"] = scan.gap
    _print_report(payload, args.json)
    return _VERDICT_EXIT[rep.verdict]


def _catalog_params_from_args(args) -> CatalogParams:
    hyper = None
    if args.name in ("f4", "f5", "f6"):
        if args.a is None or args.b is None or args.c is None:
            raise ParameterError(f"{args.name} needs --a, --b and --c")
        hyper = HypergeomParams(args.a, args.b, args.c)
    return CatalogParams(
        name=args.name,
        lam=args.lam,
        eta=_parse_eta(args.eta),
        n=args.n,
        hyper=hyper,
        s=args.s,
        c=args.c,
        truncation=args.truncation,
    )


def _cmd_example(args) -> int:
    params = _catalog_params_from_args(args)
    f = make_example(params)
    meta = {"name": args.name, "lambda": _fmt(args.lam)}
    if args.name in ("f3", "f4", "f5", "f6", "p1", "p2", "p3"):
        meta["eta"] = args.eta
    if args.name in ("f_a", "f_b"):
        meta["n"] = str(args.n)
    if args.name in ("f4", "f5", "f6"):
        meta.update(a=_fmt(args.a), b=_fmt(args.b), c=_fmt(args.c),
                    truncation=str(args.truncation))
    if args.name in ("p1", "p2", "p3"):
        meta.update(s=str(args.s), c=_fmt(args.c))
    text = serialize_function_file(function_file_from_map(f, args.lam, meta))
    if args.out:
        write_text_atomic(args.out, text)
        print(args.out)
    else:
        sys.stdout.write(text)
    return EXIT_MEMBER


def _cmd_radius(args) -> int:
    ff = load_function_file(args.path)
    lam = args.lam if args.lam is not None else ff.lam
    kind = RadiusKind.STARLIKE if args.kind == "starlike" else RadiusKind.CONVEX
    try:
        cert = harmonic_radius_certify(
            to_harmonic_map(ff), ClassParams(lam=lam), kind,
            tol=args.tol, zeta_samples=args.zeta_samples,
        )
    except NonMemberError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_MEMBER
    print(f"kind: {cert.kind.value}")
    print(f"radius: {cert.radius}")
    print(f"inner_margin: {cert.inner_margin}")
    if cert.outer_witness is None:
        print("outer_witness: none (capped at 1)")
    else:
        r, ang = cert.outer_witness
        print(f"outer_witness: radius={r}, angle={ang}")
    return EXIT_MEMBER


def _cmd_curve(args) -> int:
    ff = load_function_file(args.path)
    lam = args.lam if args.lam is not None else ff.lam
    f = to_harmonic_map(ff)
    try:
        audit = boundary_curve_audit(f, ClassParams(lam=lam), samples=args.samples)
    except NonMemberError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_MEMBER
    if args.csv:
        write_text_atomic(args.csv, curve_csv(audit))
    if args.svg:
        write_text_atomic(args.svg, curve_svg(f, audit))
    print(f"polygonal_length: {audit.polygonal_length}")
    print(f"max_lipschitz_ratio: {audit.max_lipschitz_ratio}")
    print(f"min_pairwise_gap: {audit.min_pairwise_gap}")
    print(f"max_modulus: {audit.max_modulus}")
    return EXIT_MEMBER


def _cmd_hyper(args) -> int:
    eta = _parse_eta(args.eta)
    if args.which in ("213", "214", "215"):
        if args.a is None or args.b is None or args.c is None:
            raise ParameterError(f"condition {args.which} needs --a, --b and --c")
        report = hyper_condition(
            f"c{args.which}", HypergeomParams(args.a, args.b, args.c),
            eta, args.lam,
        )
    else:
        if args.s is None or args.c is None:
            raise ParameterError(f"condition {args.which} needs --s and --c")
        report = poly_condition(f"c{args.which}", args.s, args.c, eta, args.lam)
    print(f"lhs: {report.lhs}")
    print(f"rhs: {report.rhs}")
    print(f"holds: {report.holds}")
    if report.at_equality:
        print("note: lhs equals rhs; strict inequality fails")
    return EXIT_MEMBER if report.holds else EXIT_NON_MEMBER


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmcert",
        description="Certify and explore harmonic maps defined by a disk "
                    "differential inequality.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="membership verdict for a function file")
    check.add_argument("path")
    check.add_argument("--lambda", dest="lam", type=float, default=None)
    check.add_argument("--json", action="store_true")
    check.add_argument("--zeta-samples", dest="zeta_samples", type=int,
                       default=None)
    check.add_argument("--angles", type=int, default=None)
    check.set_defaults(func=_cmd_check)

    example = sub.add_parser("example", help="write a catalog function file")
    example.add_argument("name")
    example.add_argument("--lambda", dest="lam", type=float, default=1.0)
    example.add_argument("--eta", default="1")
    example.add_argument("--n", type=int, default=2)
    example.add_argument("--a", type=float, default=None)
    example.add_argument("--b", type=float, default=None)
    example.add_argument("--c", type=float, default=None)
    example.add_argument("--s", type=int, default=None)
    example.add_argument("--truncation", type=int, default=64)
    example.add_argument("--out", default=None)
    example.set_defaults(func=_cmd_example)

    radius = sub.add_parser("radius", help="certified starlike/convex radius")
    radius.add_argument("path")
    radius.add_argument("--kind", choices=("starlike", "convex"),
                        default="starlike")
    radius.add_argument("--tol", type=float, default=1e-4)
    radius.add_argument("--lambda", dest="lam", type=float, default=None)
    radius.add_argument("--zeta-samples", dest="zeta_samples", type=int,
                        default=16)
    radius.set_defaults(func=_cmd_radius)

    curve = sub.add_parser("curve", help="boundary image curve audit and export")
    curve.add_argument("path")
    curve.add_argument("--samples", type=int, default=2048)
    curve.add_argument("--csv", default=None)
    curve.add_argument("--svg", default=None)
    curve.add_argument("--lambda", dest="lam", type=float, default=None)
    curve.set_defaults(func=_cmd_curve)

    hyper = sub.add_parser("hyper", help="closed-form membership thresholds")
    hyper.add_argument("--which", required=True,
                       choices=("213", "214", "215", "216", "217", "218"))
    hyper.add_argument("--a", type=float, default=None)
    hyper.add_argument("--b", type=float, default=None)
    hyper.add_argument("--c", type=float, default=None)
    hyper.add_argument("--s", type=int, default=None)
    hyper.add_argument("--eta", default="1")
    hyper.add_argument("--lambda", dest="lam", type=float, default=1.0)
    hyper.set_defaults(func=_cmd_hyper)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MEMBER if exc.code in (0, None) else EXIT_INPUT_ERROR
    try:
        return args.func(args)
    except (ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception as exc:  # exit-code contract is total
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_entry()
