"""Geometric audits: envelopes, certified radii, closure, boundary curves.

Radii are certified by bisection on rings |z| = r.  The ring functional is
Re(z F'/F) for starlikeness and Re(1 + z F''/F') for convexity; on a ring
free of zeros of the denominator the minimum over the closed sub-disk is
attained on the ring, so a positive ring minimum certifies the property up
to that radius.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConsistencyError, NonMemberError, ParameterError
from .membership import (
    ClassParams,
    HarmonicMap,
    MembershipReport,
    Verdict,
    _golden_max,
    harmonic_membership,
    paired_boundary_sup,
    zeta_family_sup,
)
from .series import (
    AnalyticSeries,
    EvalGrid,
    combine_with_zeta,
    derivative,
    eval_array,
    eval_series,
    hadamard,
    linear_combination,
)

_TWO_PI = 2.0 * math.pi
_ZERO_GUARD = 1e-12


class RadiusKind(Enum):
    STARLIKE = "Starlike"
    CONVEX = "Convex"


@dataclass(frozen=True)
class RadiusCertificate:
    """Largest ring radius at which the test functional stayed positive.

    ``inner_margin`` is the functional minimum one step inside the
    certified radius and must be positive; when the radius is below 1 the
    ``outer_witness`` records a ring at most one step outside on which the
    functional dropped to zero or below.
    """

    kind: RadiusKind
    radius: float
    inner_margin: float
    outer_witness: tuple[float, float] | None


@dataclass(frozen=True)
class EnvelopeAudit:
    max_violation: float
    violations: dict[str, float]
    tightness: dict[str, float]
    worst_point: complex


@dataclass(frozen=True)
class JacobianAudit:
    max_violation: float
    max_ratio: float
    sense_preserving: bool
    worst_point: complex


@dataclass(frozen=True)
class DifferentialTestResult:
    passes: bool
    measured_max: float
    threshold: float
    membership: MembershipReport


@dataclass(frozen=True)
class CurveAudit:
    thetas: np.ndarray
    points: np.ndarray
    polygonal_length: float
    max_lipschitz_ratio: float
    min_pairwise_gap: float
    max_modulus: float


def growth_envelope_check(f: HarmonicMap, params: ClassParams,
                          grid: EvalGrid) -> EnvelopeAudit:
    """Audit the modulus and derivative envelopes on a disk grid.

    At every grid point the map modulus must stay between
    |z| - lam |z|^2 and |z| + lam |z|^2, and the derivative pair must obey
    1 - 2 lam |z| <= |h'| - |g'| together with |h'| + |g'| <= 1 + 2 lam |z|.
    """
    angles = max(grid.boundary_angles, 64 * max(1, f.degree))
    rep = harmonic_membership(f, params, angles=angles)
    if rep.verdict is Verdict.NON_MEMBER:
        raise NonMemberError("envelope audit needs a class member")
    lam = params.lam
    zs = grid.points()
    r = np.abs(zs)
    af = np.abs(f.eval_array(zs))
    hp = np.abs(eval_array(derivative(f.h), zs))
    gp = np.abs(eval_array(derivative(f.g), zs))
    excess = {
        "growth_lower": (r - lam * r * r) - af,
        "growth_upper": af - (r + lam * r * r),
        "deriv_lower": (1.0 - 2.0 * lam * r) - (hp - gp),
        "deriv_upper": (hp + gp) - (1.0 + 2.0 * lam * r),
    }
    violations = {k: float(max(0.0, v.max())) for k, v in excess.items()}
    tightness = {k: float(-v.max()) for k, v in excess.items()}
    worst_key = max(excess, key=lambda k: excess[k].max())
    worst_point = complex(zs[int(np.argmax(excess[worst_key]))])
    return EnvelopeAudit(
        max_violation=max(violations.values()),
        violations=violations,
        tightness=tightness,
        worst_point=worst_point,
    )


def jacobian_bound_check(f: HarmonicMap, params: ClassParams,
                         grid: EvalGrid) -> JacobianAudit:
    """Audit |h'|^2 - |g'|^2 against (1 + 2 lam |z|)^2 on a disk grid."""
    lam = params.lam
    zs = grid.points()
    r = np.abs(zs)
    hp = np.abs(eval_array(derivative(f.h), zs))
    gp = np.abs(eval_array(derivative(f.g), zs))
    jac = hp * hp - gp * gp
    bound = (1.0 + 2.0 * lam * r) ** 2
    excess = jac - bound
    k = int(np.argmax(excess))
    return JacobianAudit(
        max_violation=float(max(0.0, excess[k])),
        max_ratio=float(np.max(jac / bound)),
        sense_preserving=bool(np.all(jac > 0.0)),
        worst_point=complex(zs[k]),
    )


def _ring_min(F: AnalyticSeries, Fp: AnalyticSeries, Fpp: AnalyticSeries,
              kind: RadiusKind, radius: float, angles: int
              ) -> tuple[float, float]:
    """Minimum of the ring functional over |z| = radius, refined.

    A denominator zero on the ring (a zero of F, or of F' for the convex
    test) fails the whole ring: the functional is reported as -inf there.
    """
    thetas = np.linspace(0.0, _TWO_PI, angles, endpoint=False)
    zs = radius * np.exp(1j * thetas)
    if kind is RadiusKind.STARLIKE:
        den = eval_array(F, zs)
        num = zs * eval_array(Fp, zs)
        offset = 0.0
    else:
        den = eval_array(Fp, zs)
        num = zs * eval_array(Fpp, zs)
        offset = 1.0
    bad = np.abs(den) < _ZERO_GUARD
    if np.any(bad):
        k = int(np.argmax(bad))
        return -math.inf, float(thetas[k])
    vals = offset + np.real(num / den)
    k = int(np.argmin(vals))
    step = _TWO_PI / angles

    def neg_functional(t: float) -> float:
        z = radius * cmath.exp(1j * t)
        if kind is RadiusKind.STARLIKE:
            d = eval_series(F, z)
            n = z * eval_series(Fp, z)
            off = 0.0
        else:
            d = eval_series(Fp, z)
            n = z * eval_series(Fpp, z)
            off = 1.0
        if abs(d) < _ZERO_GUARD:
            return math.inf
        return -(off + (n / d).real)

    x, neg = _golden_max(neg_functional, thetas[k] - step, thetas[k] + step,
                         width_tol=1e-9, max_iter=50)
    if -neg < vals[k]:
        return float(-neg), float(x % _TWO_PI)
    return float(vals[k]), float(thetas[k])


def _denominator_root_cap(F: AnalyticSeries, Fp: AnalyticSeries,
                          kind: RadiusKind) -> tuple[float, float]:
    """Modulus and angle of the smallest denominator zero away from 0.

    The ring functional is the real part of a function analytic wherever
    its denominator (F away from the origin, or F') has no zeros, so its
    ring minimum is non-increasing in the radius up to the first zero.
    Bisection brackets are capped there to stay on the monotone stretch.
    """
    if kind is RadiusKind.STARLIKE:
        # Zeros of F other than the mandatory one at the origin.
        poly = np.asarray(F.coeffs, dtype=complex)[:0:-1]
    else:
        poly = np.asarray(Fp.coeffs, dtype=complex)[::-1]
    if len(poly) < 2:
        return math.inf, 0.0
    roots = np.roots(poly)
    if len(roots) == 0:
        return math.inf, 0.0
    k = int(np.argmin(np.abs(roots)))
    return float(np.abs(roots[k])), float(np.angle(roots[k]) % _TWO_PI)


def radius_certify(F: AnalyticSeries, kind: RadiusKind,
                   tol: float = 1e-4) -> RadiusCertificate:
    """Bisect for the largest ring radius with a positive test functional.

    A radius of 1 is returned capped when the functional stays positive on
    the ring at 1 - tol.  A denominator zero strictly inside the disk
    bounds the search from above: the property fails from that modulus on.
    """
    if not F.is_normalized():
        raise ParameterError("radius certification needs a normalized series")
    if not 0.0 < tol < 0.5:
        raise ParameterError("tol must lie in (0, 0.5)")
    Fp = derivative(F)
    Fpp = derivative(Fp)
    angles = max(256, 64 * max(1, F.degree))

    def ring(r: float) -> tuple[float, float]:
        return _ring_min(F, Fp, Fpp, kind, r, angles)

    probe = 1.0 - tol
    cap, cap_angle = _denominator_root_cap(F, Fp, kind)
    if cap <= probe:
        hi, hi_ang = cap, cap_angle
    else:
        m_probe, ang_probe = ring(probe)
        if m_probe > 0.0:
            return RadiusCertificate(
                kind=kind, radius=1.0, inner_margin=m_probe,
                outer_witness=None,
            )
        hi, hi_ang = probe, ang_probe
    lo = hi / 2.0
    m_lo, _ = ring(lo)
    halvings = 0
    while m_lo <= 0.0 and halvings < 60:
        lo /= 2.0
        m_lo, _ = ring(lo)
        halvings += 1
    if m_lo <= 0.0:
        raise ConsistencyError("functional not positive near the origin")
    for _ in range(100):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        m_mid, ang_mid = ring(mid)
        if m_mid > 0.0:
            lo = mid
        else:
            hi, hi_ang = mid, ang_mid
    inner_r = lo - tol if lo > tol else 0.5 * lo
    inner_margin, _ = ring(inner_r)
    if inner_margin <= 0.0:
        raise ConsistencyError(
            f"certificate failed: functional non-positive at {inner_r!r}"
        )
    return RadiusCertificate(
        kind=kind, radius=lo, inner_margin=inner_margin,
        outer_witness=(hi, hi_ang),
    )


def harmonic_radius_certify(f: HarmonicMap, params: ClassParams,
                            kind: RadiusKind, tol: float = 1e-4,
                            zeta_samples: int = 16) -> RadiusCertificate:
    """Stable-family radius: the worst certified radius over sampled sections.

    For a certified member the result must reach the class floor, 1/(2 lam)
    for starlikeness and 1/(4 lam) for convexity, both capped at 1; falling
    short raises ConsistencyError.
    """
    if zeta_samples < 1:
        raise ParameterError("need at least one zeta sample")
    rep = harmonic_membership(f, params)
    if rep.verdict is Verdict.NON_MEMBER:
        raise NonMemberError("radius certification needs a class member")
    best: RadiusCertificate | None = None
    for k in range(zeta_samples):
        zeta = cmath.exp(2j * math.pi * k / zeta_samples)
        cert = radius_certify(combine_with_zeta(f.h, f.g, zeta), kind, tol)
        if best is None or cert.radius < best.radius:
            best = cert
    if kind is RadiusKind.STARLIKE:
        floor = min(1.0, 1.0 / (2.0 * params.lam))
    else:
        floor = min(1.0, 1.0 / (4.0 * params.lam))
    if best.radius < floor - tol:
        raise ConsistencyError(
            f"certified {kind.value} radius {best.radius!r} fell below the "
            f"class floor {floor!r}"
        )
    return best


def _second_derivative(F: AnalyticSeries) -> AnalyticSeries:
    return derivative(derivative(F))


def _euler_image(F: AnalyticSeries) -> AnalyticSeries:
    # z^2 F'' + z F' - F acts coefficientwise as c_n -> (n^2 - 1) c_n.
    return AnalyticSeries(tuple((n * n - 1) * c for n, c in enumerate(F.coeffs)))


def _differential_test(h: AnalyticSeries, g: AnalyticSeries,
                       params: ClassParams, zeta_samples: int,
                       image, threshold: float) -> DifferentialTestResult:
    f = HarmonicMap(h=h, g=g)
    A = image(h)
    B = image(g)
    measured, _ = paired_boundary_sup(A, B)
    scan = zeta_family_sup(A, B, zeta_samples)
    if abs(scan.max_sup - measured) > 1e-9 * max(1.0, measured):
        raise ConsistencyError(
            f"family scan {scan.max_sup!r} disagrees with direct scan "
            f"{measured!r}"
        )
    passes = measured <= threshold + params.sup_tolerance
    rep = harmonic_membership(f, params)
    if passes and rep.verdict is Verdict.NON_MEMBER:
        raise ConsistencyError(
            "sufficient test passed on a map the boundary scan rejects"
        )
    return DifferentialTestResult(
        passes=passes, measured_max=measured, threshold=threshold,
        membership=rep,
    )


def second_derivative_test(h: AnalyticSeries, g: AnalyticSeries,
                           params: ClassParams,
                           zeta_samples: int = 64) -> DifferentialTestResult:
    """Sufficient test: family supremum of |h'' + zeta g''| at most 2 lam.

    Passing implies membership; the threshold is attained by the quadratic
    member with top coefficient lam, so no smaller constant works.
    """
    return _differential_test(
        h, g, params, zeta_samples, _second_derivative, 2.0 * params.lam
    )


def euler_operator_test(h: AnalyticSeries, g: AnalyticSeries,
                        params: ClassParams,
                        zeta_samples: int = 64) -> DifferentialTestResult:
    """Sufficient test via z^2 F'' + z F' - F, threshold 3 lam, same contract."""
    return _differential_test(
        h, g, params, zeta_samples, _euler_image, 3.0 * params.lam
    )


def convolve_members(f1: HarmonicMap, f2: HarmonicMap, params: ClassParams
                     ) -> tuple[HarmonicMap, MembershipReport]:
    """Coefficientwise product of two members plus a fresh verdict.

    Closure is guaranteed for lam <= 1, and a NonMember verdict there is a
    numerical fault; for larger lam the operation still runs and the
    report is advisory.
    """
    for f in (f1, f2):
        if harmonic_membership(f, params).verdict is Verdict.NON_MEMBER:
            raise NonMemberError("convolution closure needs member inputs")
    out = HarmonicMap(h=hadamard(f1.h, f2.h), g=hadamard(f1.g, f2.g))
    rep = harmonic_membership(out, params)
    if params.lam <= 1.0 and rep.verdict is Verdict.NON_MEMBER:
        raise ConsistencyError("convolution of members scanned as NonMember")
    return out, rep


def convex_combination(fs, weights, params: ClassParams
                       ) -> tuple[HarmonicMap, MembershipReport]:
    """Weighted average of members; the class is closed under this."""
    fs = list(fs)
    weights = [float(w) for w in weights]
    if not fs or len(fs) != len(weights):
        raise ParameterError("need matching non-empty maps and weights")
    if any(w < -1e-12 or w > 1.0 + 1e-12 for w in weights):
        raise ParameterError("weights must lie in [0, 1]")
    if abs(sum(weights) - 1.0) > 1e-12:
        raise ParameterError("weights must sum to 1")
    for f in fs:
        if harmonic_membership(f, params).verdict is Verdict.NON_MEMBER:
            raise NonMemberError("convex combination needs member inputs")
    h = linear_combination([(w, f.h) for w, f in zip(weights, fs)])
    g = linear_combination([(w, f.g) for w, f in zip(weights, fs)])
    out = HarmonicMap(h=h, g=g)
    rep = harmonic_membership(out, params)
    if rep.verdict is Verdict.NON_MEMBER:
        raise ConsistencyError("convex combination of members scanned as NonMember")
    return out, rep


def _min_nonadjacent_gap(pts: np.ndarray) -> float:
    n = len(pts)
    best = math.inf
    chunk = max(1, (1 << 21) // n)
    idx = np.arange(n)
    for start in range(0, n, chunk):
        block = pts[start:start + chunk, None]
        d = np.abs(block - pts[None, :])
        sep = (idx[start:start + chunk, None] - idx[None, :]) % n
        d[(sep <= 1) | (sep >= n - 1)] = math.inf
        best = min(best, float(d.min()))
    return best


def boundary_curve_audit(f: HarmonicMap, params: ClassParams,
                         samples: int = 2048) -> CurveAudit:
    """Sample the boundary image curve and audit length and Lipschitz data.

    The polygonal length of the closed image curve is bounded by
    (1 + 2 lam) 2 pi for members, the same constant bounds the difference
    quotient between boundary points, and the minimum gap between
    non-adjacent samples is a desk-scale injectivity proxy.
    """
    if samples < 512:
        raise ParameterError("need at least 512 samples")
    rep = harmonic_membership(f, params)
    if rep.verdict is Verdict.NON_MEMBER:
        raise NonMemberError("curve audit needs a class member")
    thetas = np.linspace(0.0, _TWO_PI, samples, endpoint=False)
    ring = np.exp(1j * thetas)
    pts = f.eval_array(ring)
    seg_img = np.abs(np.diff(pts, append=pts[:1]))
    seg_dom = np.abs(np.diff(ring, append=ring[:1]))
    ratios = [float(np.max(seg_img / seg_dom))]
    rng = np.random.default_rng(7)
    i = rng.integers(0, samples, size=1000)
    j = (i + rng.integers(2, samples - 1, size=1000)) % samples
    ratios.append(float(np.max(np.abs(pts[i] - pts[j]) / np.abs(ring[i] - ring[j]))))
    return CurveAudit(
        thetas=thetas,
        points=pts,
        polygonal_length=float(np.sum(seg_img)),
        max_lipschitz_ratio=max(ratios),
        min_pairwise_gap=_min_nonadjacent_gap(pts),
        max_modulus=float(np.max(np.abs(pts))),
    )
