"""Membership certification for the disk classes.

The analytic class at level lam collects normalized series F with
|F(z) - z F'(z)| < lam on the open unit disk; the harmonic class collects
maps h + conj(g) with |h - z h'| + |g - z g'| < lam.  Both deficiency
images vanish at the origin, so unless they are identically zero their
modulus (or the sum of the two moduli, which is subharmonic) attains its
supremum only on the boundary circle.  A boundary maximum at or below lam
therefore certifies the strict interior inequality, and functions whose
boundary maximum equals lam exactly are genuine members sitting at the
sharp constant.  The scanner reports them as BoundarySharp instead of
misclassifying them through a naive strict comparison.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    ConsistencyError,
    NonMemberError,
    NormalizationError,
    ParameterError,
)
from .series import (
    COEFF_TOL,
    AnalyticSeries,
    combine_with_zeta,
    deficiency,
    eval_array,
    eval_series,
)

_TWO_PI = 2.0 * math.pi
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

_ANALYTIC_JUSTIFICATION = (
    "deficiency image vanishes at the origin, so its open-disk supremum is "
    "the boundary maximum; a boundary maximum at or below the level "
    "certifies the strict interior inequality"
)
_HARMONIC_JUSTIFICATION = (
    "sum of moduli of two deficiency images vanishing at the origin is "
    "subharmonic, so its open-disk supremum is the boundary maximum; a "
    "boundary maximum at or below the level certifies the strict interior "
    "inequality"
)


class Verdict(Enum):
    MEMBER = "Member"
    BOUNDARY_SHARP = "BoundarySharp"
    NON_MEMBER = "NonMember"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ClassParams:
    """Level lam > 0 plus the numerical tolerances of the verdict bands."""

    lam: float
    sup_tolerance: float = 1e-9
    boundary_band: float = 1e-6

    def __post_init__(self):
        if not self.lam > 0.0:
            raise ParameterError(f"lam must be positive, got {self.lam!r}")
        if not (self.sup_tolerance > 0.0 and self.boundary_band > 0.0):
            raise ParameterError("tolerances must be positive")


@dataclass(frozen=True)
class HarmonicMap:
    """Pair (h, g) for the map h + conj(g).

    h carries the normalization c0 = 0, c1 = 1; g must vanish to second
    order (no constant and no linear coefficient).
    """

    h: AnalyticSeries
    g: AnalyticSeries

    def __post_init__(self):
        if not self.h.is_normalized():
            raise NormalizationError(
                "analytic part must have c0 = 0 and c1 = 1"
            )
        if abs(self.g.coeff(0)) > COEFF_TOL or abs(self.g.coeff(1)) > COEFF_TOL:
            raise NormalizationError("co-analytic linear term must vanish")

    @property
    def degree(self) -> int:
        return max(self.h.degree, self.g.degree)

    def eval(self, z: complex) -> complex:
        return eval_series(self.h, z) + eval_series(self.g, z).conjugate()

    def eval_array(self, zs: np.ndarray) -> np.ndarray:
        return eval_array(self.h, zs) + np.conj(eval_array(self.g, zs))


@dataclass(frozen=True)
class MembershipReport:
    verdict: Verdict
    measured_sup: float
    margin: float
    witness_angle: float
    justification: str


def _golden_max(fn, lo: float, hi: float, width_tol: float = 1e-12,
                max_iter: int = 90) -> tuple[float, float]:
    """Golden-section maximization of a scalar function on [lo, hi]."""
    a, b = float(lo), float(hi)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fn(c), fn(d)
    if fc >= fd:
        best_x, best_v = c, fc
    else:
        best_x, best_v = d, fd
    it = 0
    while (b - a) > width_tol and it < max_iter:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fn(c)
            if fc > best_v:
                best_x, best_v = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
            if fd > best_v:
                best_x, best_v = d, fd
        it += 1
    return best_x, best_v


def _circle_grid(angles: int) -> tuple[np.ndarray, np.ndarray]:
    thetas = np.linspace(0.0, _TWO_PI, angles, endpoint=False)
    return thetas, np.exp(1j * thetas)


def _resolve_angles(angles: int | None, degree: int) -> int:
    floor = 64 * degree
    if angles is None:
        return max(256, floor)
    if angles < max(1, floor):
        raise ParameterError(
            f"need at least {max(1, floor)} angles for degree {degree}, "
            f"got {angles}"
        )
    return angles


def _refine_circle_max(objective, thetas: np.ndarray, vals: np.ndarray
                       ) -> tuple[float, float]:
    """Grid argmax (first index wins ties) plus golden-section polish."""
    k = int(np.argmax(vals))
    step = _TWO_PI / len(thetas)
    x, v = _golden_max(objective, thetas[k] - step, thetas[k] + step)
    if v > vals[k]:
        return float(v), float(x % _TWO_PI)
    return float(vals[k]), float(thetas[k])


def boundary_sup(F: AnalyticSeries, angles: int | None = None
                 ) -> tuple[float, float]:
    """Maximum of |F| over the unit circle and the angle attaining it.

    Scans an equispaced grid of at least 64 x degree angles, then polishes
    the best cell with a golden-section search.  Ties on the grid resolve
    to the smallest angle.
    """
    n = _resolve_angles(angles, F.degree)
    thetas, ring = _circle_grid(n)
    vals = np.abs(eval_array(F, ring))

    def objective(t: float) -> float:
        return abs(eval_series(F, cmath.exp(1j * t)))

    return _refine_circle_max(objective, thetas, vals)


def paired_boundary_sup(F1: AnalyticSeries, F2: AnalyticSeries,
                        angles: int | None = None) -> tuple[float, float]:
    """Maximum of |F1| + |F2| over the unit circle, refined as boundary_sup."""
    n = _resolve_angles(angles, max(F1.degree, F2.degree))
    thetas, ring = _circle_grid(n)
    vals = np.abs(eval_array(F1, ring)) + np.abs(eval_array(F2, ring))

    def objective(t: float) -> float:
        z = cmath.exp(1j * t)
        return abs(eval_series(F1, z)) + abs(eval_series(F2, z))

    return _refine_circle_max(objective, thetas, vals)


def _classify(measured_sup: float, params: ClassParams) -> Verdict:
    if measured_sup > params.lam + params.boundary_band:
        return Verdict.NON_MEMBER
    if measured_sup < params.lam - params.boundary_band:
        return Verdict.MEMBER
    return Verdict.BOUNDARY_SHARP


def analytic_membership(F: AnalyticSeries, params: ClassParams,
                        angles: int | None = None) -> MembershipReport:
    """Three-way membership verdict for a normalized series."""
    if not F.is_normalized():
        raise NormalizationError("membership needs a normalized series")
    sup, angle = boundary_sup(deficiency(F), angles)
    return MembershipReport(
        verdict=_classify(sup, params),
        measured_sup=sup,
        margin=params.lam - sup,
        witness_angle=angle,
        justification=_ANALYTIC_JUSTIFICATION,
    )


def harmonic_membership(f: HarmonicMap, params: ClassParams,
                        angles: int | None = None) -> MembershipReport:
    """Three-way membership verdict for a harmonic map."""
    sup, angle = paired_boundary_sup(
        deficiency(f.h), deficiency(f.g), angles
    )
    return MembershipReport(
        verdict=_classify(sup, params),
        measured_sup=sup,
        margin=params.lam - sup,
        witness_angle=angle,
        justification=_HARMONIC_JUSTIFICATION,
    )


@dataclass(frozen=True)
class ZetaFamilyScan:
    """Boundary suprema of the sections A + zeta B over sampled zeta."""

    phases: np.ndarray
    sups: np.ndarray
    max_sup: float
    witness_phase: float


def zeta_family_sup(A: AnalyticSeries, B: AnalyticSeries, zeta_samples: int,
                    angles: int | None = None) -> ZetaFamilyScan:
    """Max over unimodular zeta of the boundary sup of A + zeta B.

    The zeta grid brackets the optimum; per-zeta suprema are polished over
    the angle in lockstep, and the winning zeta cell is polished over the
    zeta phase with full boundary scans, mirroring the angle treatment.
    """
    if zeta_samples < 8:
        raise ParameterError("need at least 8 zeta samples")
    n = _resolve_angles(angles, max(A.degree, B.degree))
    thetas, ring = _circle_grid(n)
    va = eval_array(A, ring)
    vb = eval_array(B, ring)
    phases = _TWO_PI * np.arange(zeta_samples) / zeta_samples
    zetas = np.exp(1j * phases)
    grid = np.abs(va[None, :] + zetas[:, None] * vb[None, :])
    starts = thetas[np.argmax(grid, axis=1)]
    step = _TWO_PI / n

    ca = np.asarray(A.coeffs, dtype=complex)[::-1]
    cb = np.asarray(B.coeffs, dtype=complex)[::-1]

    def batch(ts: np.ndarray) -> np.ndarray:
        zs = np.exp(1j * ts)
        return np.abs(np.polyval(ca, zs) + zetas * np.polyval(cb, zs))

    lo = starts - step
    hi = starts + step
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = batch(c), batch(d)
    best = np.max(grid, axis=1)
    for _ in range(60):
        left = fc >= fd
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
        c = hi - _INV_PHI * (hi - lo)
        d = lo + _INV_PHI * (hi - lo)
        fc, fd = batch(c), batch(d)
        best = np.maximum(best, np.maximum(fc, fd))
    sups = best

    k = int(np.argmax(sups))
    phase_step = _TWO_PI / zeta_samples

    def sup_at_phase(phi: float) -> float:
        section = combine_with_zeta(A, B, cmath.exp(1j * phi))
        return boundary_sup(section, angles=n)[0]

    phi, refined = _golden_max(
        sup_at_phase, phases[k] - phase_step, phases[k] + phase_step,
        width_tol=1e-5, max_iter=40,
    )
    if refined > sups[k]:
        max_sup, witness = float(refined), float(phi % _TWO_PI)
    else:
        max_sup, witness = float(sups[k]), float(phases[k])
    return ZetaFamilyScan(
        phases=phases, sups=sups, max_sup=max_sup, witness_phase=witness
    )


@dataclass(frozen=True)
class StableFamilyReport:
    scan: ZetaFamilyScan
    harmonic_sup: float
    gap: float
    identity_checked: bool


def stable_family_check(f: HarmonicMap, params: ClassParams,
                        zeta_samples: int = 256,
                        angles: int | None = None) -> StableFamilyReport:
    """Cross-check the family of analytic sections against the harmonic scan.

    For every unimodular zeta the section h + zeta g must obey the analytic
    inequality exactly when the map obeys the harmonic one; pointwise the
    sup over zeta of |A + zeta B| is |A| + |B|, so the family maximum must
    reproduce the harmonic supremum.  When the sample count is a multiple
    of 4 (degree + 1) the two are required to agree within sup_tolerance.
    """
    A = deficiency(f.h)
    B = deficiency(f.g)
    scan = zeta_family_sup(A, B, zeta_samples, angles)
    harmonic_sup, _ = paired_boundary_sup(A, B, angles)
    gap = abs(scan.max_sup - harmonic_sup)
    checked = zeta_samples % (4 * (f.degree + 1)) == 0
    if checked and gap > params.sup_tolerance:
        raise ConsistencyError(
            f"family max {scan.max_sup!r} disagrees with harmonic sup "
            f"{harmonic_sup!r} by {gap!r}"
        )
    return StableFamilyReport(
        scan=scan, harmonic_sup=harmonic_sup, gap=gap, identity_checked=checked
    )


@dataclass(frozen=True)
class CoefficientSufficiency:
    """Outcome of the coefficient-mass test.

    The test is sufficient, not necessary: sharp members carry total mass
    exactly lam yet still belong to the class, so a failed test is reported
    as inconclusive rather than as a rejection.
    """

    sufficient: bool
    total: float


def coefficient_sufficient(f: HarmonicMap, params: ClassParams
                           ) -> CoefficientSufficiency:
    """Sum (n-1)(|a_n| + |b_n|) and compare strictly against lam."""
    total = 0.0
    for n in range(2, f.degree + 1):
        total += (n - 1) * (abs(f.h.coeff(n)) + abs(f.g.coeff(n)))
    return CoefficientSufficiency(sufficient=total < params.lam, total=total)


@dataclass(frozen=True)
class BoundsAuditEntry:
    index: int
    side: str
    value: float
    bound: float
    violated: bool


def coefficient_bounds_audit(f: HarmonicMap, params: ClassParams
                             ) -> list[BoundsAuditEntry]:
    """Check |a_n| and |b_n| against lam/(n-1); violations force rejection.

    The bound is necessary for membership, so any violated entry implies
    the boundary scan must return NonMember.
    """
    out = []
    for n in range(2, f.degree + 1):
        bound = params.lam / (n - 1)
        for side, series_ in (("a", f.h), ("b", f.g)):
            value = abs(series_.coeff(n))
            out.append(BoundsAuditEntry(
                index=n,
                side=side,
                value=value,
                bound=bound,
                violated=value > bound + params.sup_tolerance,
            ))
    return out


def random_member(degree: int, params: ClassParams, rng: np.random.Generator,
                  fill: float = 0.9) -> HarmonicMap:
    """Random guaranteed member: coefficient mass rescaled to fill * lam.

    Draws complex Gaussian coefficients for indices 2..degree on both
    parts, then rescales so the sufficient-condition sum lands strictly
    below lam.  This is the trustworthy positive oracle the property
    suites lean on.
    """
    if degree < 2:
        return HarmonicMap(h=AnalyticSeries((0, 1)), g=AnalyticSeries((0,)))
    if not 0.0 < fill < 1.0:
        raise ParameterError("fill must lie strictly between 0 and 1")
    k = degree - 1
    ha = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    gb = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    weights = np.arange(1, degree)
    mass = float(np.sum(weights * (np.abs(ha) + np.abs(gb))))
    scale = fill * params.lam / mass
    h = AnalyticSeries((0, 1) + tuple(ha * scale))
    g = AnalyticSeries((0, 0) + tuple(gb * scale))
    return HarmonicMap(h=h, g=g)
