"""Deformed oscillator ladder algebra for a field mode confined to a circle.

The curvature parameter ``lam`` (inverse squared circle radius) rescales the
flat-space ladder operators so that the commutator becomes number-dependent,
``[a, a^dag] = lam*n + gamma(lam)``.  The module provides the scalar pieces
(:func:`gamma`, :func:`coupling_strength`), finite matrix representations for
consistency checking, and :func:`verify_algebra`, which measures how well a
truncated representation satisfies the deformed relations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, DomainError

__all__ = [
    "CurvatureParam",
    "LadderRep",
    "RelationCheck",
    "gamma",
    "coupling_strength",
    "build_ladder_rep",
    "verify_algebra",
]


def gamma(lam: float) -> float:
    """Curvature scale factor: the positive root of ``x**2 - lam*x - 1 = 0``.

    Equals ``(lam + sqrt(lam**2 + 4)) / 2``; reduces to 1 in the flat limit
    ``lam = 0`` and is >= 1 for all admissible curvatures.

    Raises:
        DomainError: if ``lam < 0``.
    """
    if lam < 0:
        raise DomainError(f"curvature must be >= 0, got {lam}")
    return 0.5 * (lam + math.sqrt(lam * lam + 4.0))


@dataclass(frozen=True)
class CurvatureParam:
    """Validated curvature value with its derived scale factor."""

    lam: float

    def __post_init__(self):
        if self.lam < 0:
            raise DomainError(f"curvature must be >= 0, got {self.lam}")

    @property
    def gamma(self) -> float:
        return gamma(self.lam)


def coupling_strength(n: float, lam: float) -> float:
    """Deformed ladder matrix element ``<n+1| a_dag |n> = sqrt((n+1)(gamma + lam*n/2))``.

    Accepts non-integer ``n`` as well: the expression is a smooth function of
    the photon index, which the revival-time estimate exploits.

    Raises:
        DomainError: if ``n < 0`` or ``lam < 0``.
    """
    if n < 0:
        raise DomainError(f"photon index must be >= 0, got {n}")
    return math.sqrt((n + 1.0) * (gamma(lam) + 0.5 * lam * n))


@dataclass(frozen=True)
class LadderRep:
    """Truncated number-basis matrices of the deformed ladder operators.

    ``lowering`` carries ``coupling_strength(n, lam)`` at positions
    ``(n, n+1)`` and zeros elsewhere; ``raising`` is its conjugate transpose;
    ``number`` is ``diag(0..dim-1)``.
    """

    dim: int
    lowering: np.ndarray = field(repr=False)
    raising: np.ndarray = field(repr=False)
    number: np.ndarray = field(repr=False)


def build_ladder_rep(lam: float, dim: int) -> LadderRep:
    """Build the ``dim x dim`` number-basis representation of the algebra.

    Raises:
        DimensionError: if ``dim < 2``.
        DomainError: if ``lam < 0``.
    """
    if dim < 2:
        raise DimensionError(f"representation needs dim >= 2, got {dim}")
    lowering = np.zeros((dim, dim), dtype=complex)
    for n in range(dim - 1):
        lowering[n, n + 1] = coupling_strength(n, lam)
    raising = lowering.conj().T.copy()
    number = np.diag(np.arange(dim, dtype=float))
    for m in (lowering, raising, number):
        m.setflags(write=False)
    return LadderRep(dim=dim, lowering=lowering, raising=raising, number=number)


@dataclass(frozen=True)
class RelationCheck:
    """Maximum absolute deviation of one commutation relation."""

    name: str
    deviation: float
    within_tol: bool


def _max_dev(lhs: np.ndarray, rhs: np.ndarray, interior: int) -> float:
    """Max abs difference on the leading ``interior x interior`` block."""
    return float(np.max(np.abs(lhs[:interior, :interior] - rhs[:interior, :interior])))


def verify_algebra(rep: LadderRep, lam: float, tol: float) -> list[RelationCheck]:
    """Measure the deformed commutation relations on a truncated representation.

    All checks exclude the last basis row/column: the commutators necessarily
    fail on the final state of any finite truncation.  Deviations above
    ``tol`` are reported, not raised.

    Checks, with ``a = lowering``, ``ad = raising``, ``nm = number``:
    ``[nm, a] = -a``; ``[nm, ad] = ad``; ``[a, ad] = lam*nm + gamma``; and the
    ladder-to-su(1,1) mapping ``K0 = (lam*nm + gamma)/2``, ``K+ = ad``,
    ``K- = a``: ``[K0, K-] = -(lam/2) K-``, ``[K0, K+] = (lam/2) K+``,
    ``[K+, K-] = -2 K0``.
    """
    g = gamma(lam)
    a, ad, nm = rep.lowering, rep.raising, rep.number
    dim = rep.dim
    interior = dim - 1
    eye = np.eye(dim)

    k0 = 0.5 * (lam * nm + g * eye)
    checks = [
        ("[n, a] = -a", nm @ a - a @ nm, -a),
        ("[n, ad] = ad", nm @ ad - ad @ nm, ad),
        ("[a, ad] = lam*n + gamma", a @ ad - ad @ a, lam * nm + g * eye),
        ("[K0, K-] = -(lam/2) K-", k0 @ a - a @ k0, -0.5 * lam * a),
        ("[K0, K+] = (lam/2) K+", k0 @ ad - ad @ k0, 0.5 * lam * ad),
        ("[K+, K-] = -2 K0", ad @ a - a @ ad, -2.0 * k0),
    ]
    report = []
    for name, lhs, rhs in checks:
        dev = _max_dev(lhs, rhs, interior)
        report.append(RelationCheck(name=name, deviation=dev, within_tol=dev < tol))
    return report
