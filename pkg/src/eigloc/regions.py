"""Disc geometry and eigenvalue inclusion regions for stochastic matrices.

Three localizations are provided: the classic per-row discs of a matrix, the
deflation-based region (an intersection over removed states of unions of
discs, adjoined with the point 1), and two closed-form single discs built from
column extrema. Regions stay symbolic: lists of discs with union/intersection
membership semantics; the only geometric query is point membership.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .deflate import deflate
from .matcore import (
    DenseMatrix,
    IndexOutOfRange,
    InputError,
    OrderTooSmall,
    StochasticMatrix,
    trace,
)


class ComplexCenters(InputError):
    def __init__(self, worst_imag: float):
        super().__init__(
            f"disc centers must be real for an interval hull; worst |Im| = {worst_imag!r}"
        )
        self.worst_imag = worst_imag


class DegenerateRadiusWarning(UserWarning):
    """A closed-form disc radius evaluated negative and was clamped to zero."""


@dataclass(frozen=True)
class Disc:
    """Closed disc {z : |z - center| <= radius} in the complex plane."""

    center: complex
    radius: float

    def __post_init__(self):
        c = complex(self.center)
        r = float(self.radius)
        if not (np.isfinite(c.real) and np.isfinite(c.imag) and np.isfinite(r)):
            raise InputError(f"disc components must be finite: center {c!r}, radius {r!r}")
        if r < 0.0:
            raise InputError(f"disc radius must be non-negative, got {r!r}")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", r)

    def contains(self, z: complex, slack: float = 0.0) -> bool:
        return abs(complex(z) - self.center) <= self.radius + slack


@dataclass(frozen=True)
class DiscUnion:
    """Union of labelled discs; labels are original 1-based row indices."""

    discs: tuple[Disc, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        discs = tuple(self.discs)
        labels = tuple(int(v) for v in self.labels)
        if not discs:
            raise InputError("a disc union must contain at least one disc")
        if len(discs) != len(labels):
            raise InputError(
                f"{len(discs)} discs but {len(labels)} labels"
            )
        object.__setattr__(self, "discs", discs)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.discs)

    def contains(self, z: complex, slack: float = 0.0) -> bool:
        return any(d.contains(z, slack) for d in self.discs)


@dataclass(frozen=True)
class InclusionRegion:
    """Intersection over groups of (union of discs, adjoined with a special point).

    A point z belongs iff z equals `special_point` or every group has at least
    one disc containing z.
    """

    groups: tuple[DiscUnion, ...]
    special_point: complex = 1.0 + 0.0j

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "special_point", complex(self.special_point))

    @property
    def order(self) -> int:
        return len(self.groups)


def gershgorin_discs(m: DenseMatrix) -> DiscUnion:
    """Per-row discs: center at each diagonal entry, radius the absolute off-diagonal row sum."""
    a = m.entries
    off = np.abs(a).copy()
    np.fill_diagonal(off, 0.0)
    radii = off.sum(axis=1)
    centers = np.diag(a)
    discs = tuple(Disc(complex(c), float(r)) for c, r in zip(centers, radii))
    return DiscUnion(discs, tuple(range(1, m.order + 1)))


def deflated_region(s: StochasticMatrix, i: int) -> DiscUnion:
    """Disc union for the deflation at state i, labelled by original states.

    Identical to the per-row discs of the deflated matrix: the disc for
    original state k has center s_kk - s_ik and radius sum over j not in
    {i, k} of |s_kj - s_ij| (the deflated matrix has no column i, so the sum
    excludes it).
    """
    n = s.order
    if not 1 <= i <= n:
        raise IndexOutOfRange(i, n)
    d = deflate(s, i)
    base = gershgorin_discs(d.inner)
    return DiscUnion(base.discs, d.index_map)


def full_inclusion_region(s: StochasticMatrix) -> InclusionRegion:
    """Intersection over all states i of (deflated disc union at i, adjoined with 1)."""
    n = s.order
    if n < 2:
        raise OrderTooSmall(n, minimum=2)
    groups = tuple(deflated_region(s, i) for i in range(1, n + 1))
    return InclusionRegion(groups=groups, special_point=1.0 + 0.0j)


def contains(r: InclusionRegion, z: complex, slack: float = 0.0) -> bool:
    """Membership in the region, with a non-negative numerical slack.

    True iff |z - special_point| <= slack, or every group has some disc with
    |z - center| <= radius + slack.
    """
    if not (np.isfinite(slack) and slack >= 0.0):
        raise InputError(f"slack must be a non-negative real, got {slack!r}")
    z = complex(z)
    if abs(z - r.special_point) <= slack:
        return True
    return all(g.contains(z, slack) for g in r.groups)


def cvetkovic_disc(s: StochasticMatrix) -> Disc:
    """Single disc containing every non-unit eigenvalue, from column minima.

    With s_i the minimal off-diagonal entry of column i and
    g = max_i (s_ii - s_i), the disc is |z - g| <= 1 - trace(S) + (n-1) g.
    """
    n = s.order
    if n < 2:
        raise OrderTooSmall(n, minimum=2)
    a = s.entries
    masked = a.copy()
    np.fill_diagonal(masked, np.inf)
    col_min = masked.min(axis=0)
    g = float(np.max(np.diag(a) - col_min))
    radius = 1.0 - trace(s.inner) + (n - 1) * g
    return Disc(complex(g), _clamped_radius(radius, "column-minimum disc"))


def lili_disc(s: StochasticMatrix) -> Disc:
    """Single disc containing every non-unit eigenvalue, from column maxima.

    With S_i the maximal off-diagonal entry of column i and
    g' = max_i (S_i - s_ii), the disc is |z + g'| <= trace(S) + (n-1) g' - 1.
    """
    n = s.order
    if n < 2:
        raise OrderTooSmall(n, minimum=2)
    a = s.entries
    masked = a.copy()
    np.fill_diagonal(masked, -np.inf)
    col_max = masked.max(axis=0)
    gp = float(np.max(col_max - np.diag(a)))
    radius = trace(s.inner) + (n - 1) * gp - 1.0
    return Disc(complex(-gp), _clamped_radius(radius, "column-maximum disc"))


def _clamped_radius(radius: float, what: str) -> float:
    # Cannot go negative for a stochastic matrix with n >= 2; clamp defensively.
    if radius < 0.0:
        warnings.warn(
            f"{what} radius {radius!r} is negative; clamped to 0",
            DegenerateRadiusWarning,
            stacklevel=3,
        )
        return 0.0
    return radius


def disc_union_in_disc(u: DiscUnion, d: Disc) -> bool:
    """True iff every member disc lies inside d: |c - d.center| + r <= d.radius."""
    return all(abs(m.center - d.center) + m.radius <= d.radius for m in u.discs)


def real_interval_hull(u: DiscUnion) -> tuple[float, float]:
    """Smallest real interval covering a union of discs with real centers."""
    worst = max(abs(d.center.imag) for d in u.discs)
    if worst > 0.0:
        raise ComplexCenters(worst)
    lo = min(d.center.real - d.radius for d in u.discs)
    hi = max(d.center.real + d.radius for d in u.discs)
    return lo, hi


def _num(x: float) -> str:
    # 17 significant digits: lossless for binary64, comfortably >= 15.
    if not np.isfinite(x):
        raise InputError(f"cannot serialize non-finite number {x!r}")
    return format(float(x), ".16e")


def inclusion_region_json(
    region: InclusionRegion,
    eigenvalues: Iterable[complex] | None = None,
) -> str:
    """Serialize a region to JSON.

    Schema: {"n", "groups": [{"i", "discs": [{"cx", "cy", "r", "label"}]}],
    "special_point": [re, im], optional "eigenvalues": [[re, im], ...]}.
    All numbers carry 17 significant digits and re-parse to the exact values.
    """
    group_parts = []
    for i, g in enumerate(region.groups, start=1):
        discs = ",".join(
            '{"cx":%s,"cy":%s,"r":%s,"label":%d}'
            % (_num(d.center.real), _num(d.center.imag), _num(d.radius), label)
            for d, label in zip(g.discs, g.labels)
        )
        group_parts.append('{"i":%d,"discs":[%s]}' % (i, discs))
    fields = [
        '"n":%d' % region.order,
        '"groups":[%s]' % ",".join(group_parts),
        '"special_point":[%s,%s]'
        % (_num(region.special_point.real), _num(region.special_point.imag)),
    ]
    if eigenvalues is not None:
        vals = ",".join(
            "[%s,%s]" % (_num(complex(z).real), _num(complex(z).imag))
            for z in eigenvalues
        )
        fields.append('"eigenvalues":[%s]' % vals)
    return "{%s}" % ",".join(fields)
