"""Constructors for the named example maps and their threshold conditions.

Catalog keys:

  eq13   cubic analytic showcase     h = z + lam z^2/2 + lam z^3/4
  f_a    sharp analytic coefficient  h = z + lam/(n-1) z^n
  f_b    sharp co-analytic coeff.    g = -lam/(n-1) z^n
  f3     sharp quadratic             h = z + lam eta z^2
  f4     integrated Gauss tail       g_n = eta t_{n-2}/(n-1)
  f5     shifted Gauss tail          g_n = eta t_{n-1}
  f6     plain Gauss tail            g_n = eta t_{n-2}
  p1/p2/p3  terminating polynomial forms of f4/f5/f6 at a = b = -s

with t_k = (a)_k (b)_k / (k! (c)_k).  Tail coefficients are computed in
exact rational arithmetic and rounded once, so the polynomial families
reproduce the terminating tail families bit for bit.

Conditions 213-215 compare the Gauss-value expressions against
lam / |eta|; 216-218 are their a = b = -s specializations written with
Gamma quotients, with the same right-hand side.  All comparisons are
strict: equality is reported as not holding, with a flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .membership import HarmonicMap
from .series import AnalyticSeries
from .specfun import HypergeomParams, gamma, gauss_value, weighted_gauss_value

CATALOG_NAMES = ("eq13", "f_a", "f_b", "f3", "f4", "f5", "f6", "p1", "p2", "p3")

HYPER_CONDITIONS = ("c213", "c214", "c215")
POLY_CONDITIONS = ("c216", "c217", "c218")


@dataclass(frozen=True)
class CatalogParams:
    """Everything a catalog constructor may need; names pick what they use."""

    name: str
    lam: float
    eta: complex = 1.0 + 0j
    n: int = 2
    hyper: HypergeomParams | None = None
    s: int | None = None
    c: float | None = None
    truncation: int = 64

    def __post_init__(self):
        if self.name not in CATALOG_NAMES:
            raise ParameterError(f"unknown catalog name {self.name!r}")
        if not self.lam > 0.0:
            raise ParameterError("lam must be positive")
        if self.truncation < 2:
            raise ParameterError("truncation must be at least 2")
        object.__setattr__(self, "eta", complex(self.eta))


def _require_eta(eta: complex) -> complex:
    if eta == 0:
        raise ParameterError("eta must be nonzero")
    if abs(eta) > 1.0 + 1e-12:
        raise ParameterError("eta must lie in the closed unit disk")
    return eta


def _require_index(n: int) -> int:
    if n < 2:
        raise ParameterError("coefficient index n must be at least 2")
    return n


def _rational_terms(a: float, b: float, c: float, count: int) -> list[Fraction]:
    """t_k = (a)_k (b)_k / (k! (c)_k) for k = 0..count, exact."""
    fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
    terms = [Fraction(1)]
    for k in range(count):
        terms.append(terms[-1] * (fa + k) * (fb + k) / ((fc + k) * (k + 1)))
    return terms


def hyper_family_coeffs(kind: str, a: float, b: float, c: float,
                        eta: complex, truncation: int) -> list[complex]:
    """Co-analytic coefficients b_2..b_truncation of f4, f5 or f6.

    Low-level stream with no positivity guards; make_example wraps it.
    """
    if kind not in ("f4", "f5", "f6"):
        raise ParameterError(f"not a tail family: {kind!r}")
    terms = _rational_terms(a, b, c, truncation - 1)
    out = []
    for n in range(2, truncation + 1):
        if kind == "f4":
            frac = terms[n - 2] / (n - 1)
        elif kind == "f5":
            frac = terms[n - 1]
        else:
            frac = terms[n - 2]
        out.append(eta * float(frac))
    return out


def poly_family_coeffs(kind: str, s: int, c: float,
                       eta: complex) -> list[complex]:
    """Co-analytic coefficients b_2.. of p1, p2 or p3, exact finite sums.

    The building block is B_m = C(s, m) (s-m+1)_m / (c)_m; p1 places
    B_m/(m+1) on z^{m+2}, p3 places B_m on z^{m+2}, and p2 places B_m on
    z^{m+1} starting at m = 1 so no mass lands on the conjugate-linear
    coefficient.
    """
    if kind not in ("p1", "p2", "p3"):
        raise ParameterError(f"not a polynomial family: {kind!r}")
    if s < 0:
        raise ParameterError("s must be a non-negative integer")
    fc = Fraction(c)
    weights = []
    for m in range(s + 1):
        num = math.comb(s, m) * math.prod(range(s - m + 1, s + 1))
        den = Fraction(1)
        for k in range(m):
            den *= fc + k
        weights.append(Fraction(num) / den)
    if kind == "p2":
        degree = s + 1
    else:
        degree = s + 2
    out = [0j] * max(0, degree - 1)

    def place(index: int, frac: Fraction) -> None:
        out[index - 2] = eta * float(frac)

    if kind == "p1":
        for m in range(s + 1):
            place(m + 2, weights[m] / (m + 1))
    elif kind == "p2":
        for m in range(1, s + 1):
            place(m + 1, weights[m])
    else:
        for m in range(s + 1):
            place(m + 2, weights[m])
    return out


def _map_from_g(coeffs: list[complex]) -> HarmonicMap:
    return HarmonicMap(
        h=AnalyticSeries((0, 1)),
        g=AnalyticSeries((0j, 0j) + tuple(coeffs)),
    )


def _require_hyper(params: CatalogParams, min_gap: float) -> HypergeomParams:
    hp = params.hyper
    if hp is None:
        raise ParameterError(f"{params.name} needs hypergeometric parameters")
    if not (hp.a > 0.0 and hp.b > 0.0 and hp.c > 0.0):
        raise ParameterError(f"{params.name} needs positive a, b, c")
    if not hp.c - hp.a - hp.b > min_gap:
        raise ParameterError(
            f"{params.name} needs c - a - b > {min_gap}, got "
            f"{hp.c - hp.a - hp.b!r}"
        )
    return hp


def make_example(params: CatalogParams) -> HarmonicMap:
    """Build the named example map."""
    lam = params.lam
    name = params.name
    if name == "eq13":
        return HarmonicMap(
            h=AnalyticSeries((0, 1, lam / 2.0, lam / 4.0)),
            g=AnalyticSeries((0j,)),
        )
    if name == "f_a":
        n = _require_index(params.n)
        coeffs = [0j] * (n + 1)
        coeffs[1] = 1.0
        coeffs[n] = lam / (n - 1)
        return HarmonicMap(h=AnalyticSeries(tuple(coeffs)),
                           g=AnalyticSeries((0j,)))
    if name == "f_b":
        n = _require_index(params.n)
        coeffs = [0j] * (n + 1)
        coeffs[n] = -lam / (n - 1)
        return HarmonicMap(h=AnalyticSeries((0, 1)),
                           g=AnalyticSeries(tuple(coeffs)))
    if name == "f3":
        eta = _require_eta(params.eta)
        return HarmonicMap(h=AnalyticSeries((0, 1, lam * eta)),
                           g=AnalyticSeries((0j,)))
    if name in ("f4", "f5", "f6"):
        eta = _require_eta(params.eta)
        hp = _require_hyper(params, 0.0 if name == "f4" else 1.0)
        coeffs = hyper_family_coeffs(
            name, hp.a, hp.b, hp.c, eta, params.truncation
        )
        return _map_from_g(coeffs)
    # p1 / p2 / p3
    eta = _require_eta(params.eta)
    if params.s is None or params.c is None:
        raise ParameterError(f"{name} needs s and c")
    if not params.c > 0.0:
        raise ParameterError("c must be positive")
    return _map_from_g(poly_family_coeffs(name, params.s, params.c, eta))


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    lhs: float
    rhs: float
    at_equality: bool


def _compare(lhs: float, lam: float, eta: complex) -> ConditionReport:
    rhs = lam / abs(eta)
    at_equality = abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))
    return ConditionReport(
        holds=lhs < rhs and not at_equality,
        lhs=lhs,
        rhs=rhs,
        at_equality=at_equality,
    )


def hyper_condition(which: str, hyper: HypergeomParams, eta: complex,
                    lam: float) -> ConditionReport:
    """Closed-form membership thresholds for the tail families.

    c213 needs the Gauss value below lam/|eta| (f4); c214 scales it by
    ab/(c-a-b-1) (f5); c215 uses the first-moment closed form (f6).
    """
    if which not in HYPER_CONDITIONS:
        raise ParameterError(f"unknown condition {which!r}")
    eta = _require_eta(complex(eta))
    if not lam > 0.0:
        raise ParameterError("lam must be positive")
    if not (hyper.a > 0.0 and hyper.b > 0.0 and hyper.c > 0.0):
        raise ParameterError("conditions need positive a, b, c")
    gap1 = hyper.c - hyper.a - hyper.b - 1.0
    if which == "c213":
        if not hyper.c - hyper.a - hyper.b > 0.0:
            raise ParameterError("c213 needs c - a - b > 0")
        lhs = gauss_value(hyper)
    elif which == "c214":
        if not gap1 > 0.0:
            raise ParameterError("c214 needs c - a - b - 1 > 0")
        lhs = (hyper.a * hyper.b / gap1) * gauss_value(hyper)
    else:
        if not gap1 > 0.0:
            raise ParameterError("c215 needs c - a - b - 1 > 0")
        lhs = weighted_gauss_value(hyper)
    return _compare(lhs, lam, eta)


def poly_condition(which: str, s: int, c: float, eta: complex,
                   lam: float) -> ConditionReport:
    """Gamma-quotient thresholds for the polynomial families.

    The base quotient is Gamma(c) Gamma(c+2s) / Gamma(c+s)^2; c217 scales
    it by s^2/(c+2s-1) and c218 by (c+s^2+2s-1)/(c+2s-1), all against
    lam/|eta|.
    """
    if which not in POLY_CONDITIONS:
        raise ParameterError(f"unknown condition {which!r}")
    eta = _require_eta(complex(eta))
    if not lam > 0.0:
        raise ParameterError("lam must be positive")
    if s < 0:
        raise ParameterError("s must be a non-negative integer")
    if not c > 0.0:
        raise ParameterError("c must be positive")
    base = gamma(c) * gamma(c + 2.0 * s) / gamma(c + s) ** 2
    if which == "c216":
        lhs = base
    elif which == "c217":
        lhs = 0.0 if s == 0 else (s * s / (c + 2.0 * s - 1.0)) * base
    else:
        if s == 0:
            lhs = base
        else:
            lhs = ((c + s * s + 2.0 * s - 1.0) / (c + 2.0 * s - 1.0)) * base
    return _compare(lhs, lam, eta)
