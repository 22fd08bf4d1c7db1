"""Truncated complex power series and the coefficient algebra built on them.

A series is a finite coefficient vector c_0..c_N read as sum c_n z^n on the
closed unit disk.  Everything downstream is a low-degree polynomial or an
aggressively truncated series, so storage is dense and every operation is
O(N).  Values are immutable; all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ParameterError

COEFF_TOL = 1e-12


@dataclass(frozen=True)
class AnalyticSeries:
    """Immutable truncated power series sum c_n z^n.

    Trailing zero coefficients are stripped on construction, so ``degree``
    is always the index of the last stored coefficient.  The zero series is
    stored as the single coefficient (0,).
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        cs = tuple(complex(c) for c in self.coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        if not cs:
            cs = (0j,)
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> complex:
        return self.coeffs[n] if 0 <= n <= self.degree else 0j

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_normalized(self, tol: float = COEFF_TOL) -> bool:
        """True when c_0 = 0 and c_1 = 1, the class normalization."""
        return abs(self.coeff(0)) <= tol and abs(self.coeff(1) - 1.0) <= tol


ZERO = AnalyticSeries((0j,))
IDENTITY = AnalyticSeries((0j, 1.0 + 0j))


def eval_series(F: AnalyticSeries, z: complex) -> complex:
    """Horner evaluation of F at a point; exact for polynomials."""
    acc = 0j
    for c in reversed(F.coeffs):
        acc = acc * z + c
    return acc


def eval_array(F: AnalyticSeries, zs: np.ndarray) -> np.ndarray:
    """Vectorized Horner evaluation on an array of points."""
    return np.polyval(np.asarray(F.coeffs, dtype=complex)[::-1], zs)


def derivative(F: AnalyticSeries) -> AnalyticSeries:
    if F.degree == 0:
        return ZERO
    return AnalyticSeries(tuple(n * c for n, c in enumerate(F.coeffs))[1:])


def deficiency(F: AnalyticSeries) -> AnalyticSeries:
    """The image of F under F |-> F - z F'.

    Coefficientwise: c_n -> (1 - n) c_n, so the constant term is preserved,
    the linear term is annihilated, and higher terms flip sign and grow.
    """
    return AnalyticSeries(tuple((1 - n) * c for n, c in enumerate(F.coeffs)))


def hadamard(F1: AnalyticSeries, F2: AnalyticSeries) -> AnalyticSeries:
    """Coefficientwise product; the result is truncated to the shorter input."""
    n = min(len(F1.coeffs), len(F2.coeffs))
    return AnalyticSeries(tuple(F1.coeffs[k] * F2.coeffs[k] for k in range(n)))


def linear_combination(
    terms: Sequence[tuple[complex, AnalyticSeries]],
) -> AnalyticSeries:
    """Weighted coefficientwise sum; shorter operands are zero-padded.

    Summation runs in the order given, one index at a time, so the result
    is reproducible bit for bit.
    """
    if not terms:
        raise ParameterError("linear_combination needs at least one operand")
    width = max(len(F.coeffs) for _, F in terms)
    out = [0j] * width
    for w, F in terms:
        w = complex(w)
        for k, c in enumerate(F.coeffs):
            out[k] = out[k] + w * c
    return AnalyticSeries(tuple(out))


def combine_with_zeta(
    h: AnalyticSeries, g: AnalyticSeries, zeta: complex
) -> AnalyticSeries:
    """The section h + zeta*g of the family swept by a unimodular zeta."""
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise ParameterError(f"zeta must be unimodular, got |zeta| = {abs(zeta)!r}")
    width = max(len(h.coeffs), len(g.coeffs))
    return AnalyticSeries(
        tuple(h.coeff(k) + zeta * g.coeff(k) for k in range(width))
    )


def all_ones(degree: int) -> AnalyticSeries:
    """Hadamard absorbing kernel 1 + z + ... + z^degree."""
    if degree < 0:
        raise ParameterError("degree must be non-negative")
    return AnalyticSeries((1.0 + 0j,) * (degree + 1))


@dataclass(frozen=True)
class EvalGrid:
    """Polar sample grid strictly inside the unit disk.

    ``boundary_angles`` is the floor used when a boundary scan is driven
    from this grid; it must be at least 64 times the largest degree the
    scan will see.
    """

    radii: tuple[float, ...]
    angles_per_ring: int
    boundary_angles: int

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise ParameterError("grid needs at least one radius")
        if any(not (0.0 <= r < 1.0) for r in radii):
            raise ParameterError("grid radii must lie in [0, 1)")
        if any(b < a for a, b in zip(radii, radii[1:])):
            raise ParameterError("grid radii must be sorted")
        if self.angles_per_ring < 1 or self.boundary_angles < 1:
            raise ParameterError("angle counts must be positive")
        object.__setattr__(self, "radii", radii)

    def points(self) -> np.ndarray:
        """All grid points r * exp(i theta), flattened ring by ring."""
        thetas = np.linspace(0.0, 2.0 * math.pi, self.angles_per_ring, endpoint=False)
        ring = np.exp(1j * thetas)
        return np.concatenate([r * ring for r in self.radii])


def default_grid(
    max_degree: int, rings: int = 8, angles_per_ring: int = 128
) -> EvalGrid:
    """Evenly spaced rings up to radius 0.96 with the boundary-angle floor."""
    radii = tuple((k + 1) * 0.96 / rings for k in range(rings))
    return EvalGrid(
        radii=radii,
        angles_per_ring=angles_per_ring,
        boundary_angles=max(256, 64 * max(1, max_degree)),
    )
