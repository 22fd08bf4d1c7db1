"""Real special-function kernel: Gamma, Pochhammer, Gauss sums.

Only positive real Gamma arguments are needed anywhere in this package, so
the implementation stays on that branch and rejects the rest.  The Gauss
value F(a,b;c;1) is computed from the Gamma closed form

    F(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)),

valid for c-a-b > 0, with an exact finite summation whenever a or b is a
non-positive integer (terminating series).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

_INT_TOL = 1e-12

# Lanczos approximation, g = 7, nine coefficients.  Relative error on the
# positive real axis is a few 1e-14, comfortably inside the 1e-12 budget.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(x: float) -> float:
    """Gamma on the positive real axis via the Lanczos rational form."""
    x = float(x)
    if not x > 0.0:
        raise ParameterError(f"gamma needs a positive argument, got {x!r}")
    if x < 0.5:
        # One recurrence step keeps the core approximation on x >= 0.5.
        return gamma(x + 1.0) / x
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for k in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def pochhammer(x: float, n: int) -> float:
    """Rising factorial x (x+1) ... (x+n-1), with the empty product 1."""
    if n < 0:
        raise ParameterError("pochhammer order must be non-negative")
    if n <= 64 or x <= 0.0:
        acc = 1.0
        for k in range(n):
            acc *= x + k
        return acc
    return gamma(x + n) / gamma(x)


def _terminating_index(x: float) -> int | None:
    """s >= 0 such that x is within tolerance of -s, else None."""
    if x > 0.5:
        return None
    r = round(x)
    if r <= 0 and abs(x - r) <= _INT_TOL:
        return -int(r)
    return None


@dataclass(frozen=True)
class HypergeomParams:
    """Parameter triple (a, b, c) of the Gauss series.

    c must not be zero or a negative integer; convergence guards for the
    point z = 1 are checked by the operations that need them.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "c", float(self.c))
        if _terminating_index(self.c) is not None:
            raise ParameterError(
                f"c must not be zero or a negative integer, got {self.c!r}"
            )

    def terminating_index(self) -> int | None:
        """Index of the last nonzero series term, when a or b terminates it."""
        sa = _terminating_index(self.a)
        sb = _terminating_index(self.b)
        if sa is None and sb is None:
            return None
        if sa is None:
            return sb
        if sb is None:
            return sa
        return min(sa, sb)


def hyper_coefficients(p: HypergeomParams, N: int) -> np.ndarray:
    """Terms t_n = (a)_n (b)_n / (n! (c)_n) for n = 0..N.

    Built with the ratio recurrence
    t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1)), which goes exactly to zero in
    terminating cases.
    """
    if N < 0:
        raise ParameterError("N must be non-negative")
    if N == 0:
        return np.ones(1)
    n = np.arange(N, dtype=float)
    ratios = (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1.0))
    out = np.empty(N + 1)
    out[0] = 1.0
    out[1:] = np.cumprod(ratios)
    return out


def gauss_value(p: HypergeomParams) -> float:
    """The series value at z = 1.

    Terminating cases sum the finitely many nonzero terms exactly;
    otherwise the Gamma closed form applies and c - a - b > 0 is required.
    """
    s = p.terminating_index()
    if s is not None:
        return float(np.sum(hyper_coefficients(p, s)))
    gap = p.c - p.a - p.b
    if not gap > 0.0:
        raise ParameterError(
            f"divergent at z = 1: need c - a - b > 0, got {gap!r}"
        )
    return gamma(p.c) * gamma(gap) / (gamma(p.c - p.a) * gamma(p.c - p.b))


def weighted_gauss_value(p: HypergeomParams) -> float:
    """Closed form of the first-moment sum  sum (n+1) (a)_n (b)_n / (n! (c)_n).

    Equals (ab / (c-a-b-1) + 1) * gauss_value for c - a - b - 1 > 0 and
    positive parameters; terminating cases are summed directly.
    """
    s = p.terminating_index()
    if s is not None:
        terms = hyper_coefficients(p, s)
        return float(np.sum((np.arange(s + 1) + 1.0) * terms))
    gap = p.c - p.a - p.b - 1.0
    if not gap > 0.0:
        raise ParameterError(
            f"weighted sum diverges: need c - a - b - 1 > 0, got {gap!r}"
        )
    if not (p.a > 0.0 and p.b > 0.0 and p.c > 0.0):
        raise ParameterError("weighted sum needs positive a, b, c")
    return (p.a * p.b / gap + 1.0) * gauss_value(p)
