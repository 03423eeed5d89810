"""Self-contained dense eigensolvers used as the verification oracle.

Two paths, both written here rather than delegated to LAPACK so that the
oracle is itself a reviewable part of the artifact:

* symmetric real: cyclic Jacobi rotations with an off-diagonal norm stopping
  rule, eigenvectors accumulated and used for a residual check;
* general real: power-of-two balancing, Householder reduction to upper
  Hessenberg form, then double-shift QR iteration with deflation (real or
  conjugate-pair 2x2 blocks), eigenvalues only.

Both are desk-scale solvers (hundreds of rows symmetric, tens general); the
test suite cross-checks them against an independent reference factorization.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .matcore import DenseMatrix, InputError, NumericalError, Spectrum

_MACHINE_EPS = float(np.finfo(float).eps)

#: Tolerance used to recognize the unit (Perron) eigenvalue of a stochastic matrix.
PERRON_TOL = 1e-8


class NotSymmetric(InputError):
    def __init__(self, worst: float):
        super().__init__(f"matrix is not symmetric: worst |a_ij - a_ji| = {worst!r}")
        self.worst = worst


class NoConvergence(NumericalError):
    def __init__(self, iterations: int):
        super().__init__(f"eigensolver failed to converge after {iterations} iterations")
        self.iterations = iterations


class PerronNotFound(NumericalError):
    def __init__(self, closest: complex):
        super().__init__(
            f"no eigenvalue within tolerance of 1; closest is {closest!r}"
        )
        self.closest = closest


class PerronMultiplicityWarning(UserWarning):
    """More than one eigenvalue sits within tolerance of 1 (reducible input)."""


@dataclass(frozen=True)
class SolverConfig:
    """Iteration cap and convergence tolerance for both solvers.

    For the symmetric path `max_iterations` counts full Jacobi sweeps; for the
    general path it caps QR iterations spent on any single deflation window.
    """

    max_iterations: int = 40
    tolerance: float = 1e-12

    def __post_init__(self):
        if self.max_iterations < 1:
            raise InputError(f"iteration cap must be >= 1, got {self.max_iterations}")
        if not (self.tolerance > 0.0 and np.isfinite(self.tolerance)):
            raise InputError(f"tolerance must be positive, got {self.tolerance!r}")


DEFAULT_CONFIG = SolverConfig()


def eig_symmetric(m: DenseMatrix, cfg: SolverConfig = DEFAULT_CONFIG) -> Spectrum:
    """All-real spectrum of a symmetric matrix, sorted descending.

    Requires symmetry within 1e-12 entrywise; the symmetrized average is what
    gets diagonalized. After convergence the accumulated rotations are used to
    verify the residual bound ||A V - V diag(w)||_F <= 1e-9 ||A||_F.
    """
    a = m.entries
    worst = float(np.max(np.abs(a - a.T))) if m.order > 1 else 0.0
    if worst > 1e-12:
        raise NotSymmetric(worst)
    sym = (a + a.T) / 2.0
    w, v, sweeps = _jacobi(sym, cfg)
    scale = float(np.linalg.norm(sym))
    residual = float(np.linalg.norm(sym @ v - v * w[None, :]))
    if residual > 1e-9 * max(scale, 1.0):
        raise NoConvergence(sweeps)
    order = np.argsort(-w, kind="stable")
    return Spectrum(tuple(complex(w[i]) for i in order))


def _jacobi(sym: np.ndarray, cfg: SolverConfig) -> tuple[np.ndarray, np.ndarray, int]:
    """Cyclic Jacobi diagonalization; returns (eigenvalues, eigenvectors, sweeps)."""
    a = sym.copy()
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return np.diag(a).copy(), v, 0
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n), v, 0
    for sweep in range(cfg.max_iterations):
        off = math.sqrt(max(float(np.sum(a * a)) - float(np.sum(np.diag(a) ** 2)), 0.0))
        if off <= cfg.tolerance * scale:
            return np.diag(a).copy(), v, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # Rotation annihilating a[p, q]; the smaller-root formula for
                # t keeps the rotation angle below pi/4 (stability).
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p - s * vcol_q
                v[:, q] = s * vcol_p + c * vcol_q
    raise NoConvergence(cfg.max_iterations)


def eig_general(m: DenseMatrix, cfg: SolverConfig = DEFAULT_CONFIG) -> Spectrum:
    """Complex spectrum of a real square matrix, sorted by descending real
    part, then descending imaginary part.

    Conjugate pairs come out exactly conjugate: each 2x2 deflation block
    yields both members of the pair from one square root.
    """
    n = m.order
    if n == 1:
        return Spectrum((complex(m.entries[0, 0]),))
    balanced = _balance(m.entries)
    hess = _hessenberg(balanced)
    values = _double_shift_qr([list(row) for row in hess], cfg)
    values.sort(key=lambda z: (-z.real, -z.imag))
    return Spectrum(tuple(values))


def _balance(a: np.ndarray) -> np.ndarray:
    """Diagonal similarity scaling by powers of two (exact in floating point)
    to even out row and column norms before the QR iteration."""
    b = a.astype(float).copy()
    n = b.shape[0]
    radix = 2.0
    done = False
    while not done:
        done = True
        for i in range(n):
            r = float(np.sum(np.abs(b[i, :]))) - abs(b[i, i])
            c = float(np.sum(np.abs(b[:, i]))) - abs(b[i, i])
            if r == 0.0 or c == 0.0:
                continue
            f = 1.0
            s = c + r
            g = r / radix
            while c < g:
                f *= radix
                c *= radix * radix
            g = r * radix
            while c > g:
                f /= radix
                c /= radix * radix
            if (c + r) / f < 0.95 * s:
                done = False
                b[i, :] *= 1.0 / f
                b[:, i] *= f
    return b


def _hessenberg(a: np.ndarray) -> np.ndarray:
    """Householder similarity reduction to upper Hessenberg form."""
    h = a.astype(float).copy()
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1 :, k].copy()
        norm_x = math.sqrt(float(x @ x))
        if norm_x == 0.0:
            continue
        # Reflect onto -sign(x0) * ||x|| * e1 so the leading entry grows.
        x[0] += math.copysign(norm_x, x[0] if x[0] != 0.0 else 1.0)
        norm_v = math.sqrt(float(x @ x))
        if norm_v == 0.0:
            continue
        v = x / norm_v
        h[k + 1 :, k:] -= 2.0 * np.outer(v, v @ h[k + 1 :, k:])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v)
        h[k + 2 :, k] = 0.0
    return h


def _double_shift_qr(a: list[list[float]], cfg: SolverConfig) -> list[complex]:
    """Double-shift QR iteration on an upper Hessenberg matrix (lists of rows).

    Works down from the bottom-right corner: each pass either splits off a
    real eigenvalue (1x1 block) or a conjugate/real pair (2x2 block), using
    implicit double shifts with the occasional exceptional shift to break
    cycling. Eigenvalues only; transformations are not accumulated.
    """
    n = len(a)
    tol = cfg.tolerance
    eigenvalues: list[complex] = []
    anorm = 0.0
    for i in range(n):
        for j in range(max(i - 1, 0), n):
            anorm += abs(a[i][j])
    if anorm == 0.0:
        return [0.0 + 0.0j] * n
    nn = n - 1
    shift_total = 0.0
    while nn >= 0:
        iters = 0
        while True:
            # Find the highest l with a negligible subdiagonal entry.
            l = nn
            while l >= 1:
                s = abs(a[l - 1][l - 1]) + abs(a[l][l])
                if s == 0.0:
                    s = anorm
                if abs(a[l][l - 1]) <= tol * s:
                    a[l][l - 1] = 0.0
                    break
                l -= 1
            x = a[nn][nn]
            if l == nn:
                eigenvalues.append(complex(x + shift_total))
                nn -= 1
                break
            y = a[nn - 1][nn - 1]
            w = a[nn][nn - 1] * a[nn - 1][nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += shift_total
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    first = x + z
                    second = first if z == 0.0 else x - w / z
                    eigenvalues.append(complex(first))
                    eigenvalues.append(complex(second))
                else:
                    eigenvalues.append(complex(x + p, z))
                    eigenvalues.append(complex(x + p, -z))
                nn -= 2
                break
            if iters == cfg.max_iterations:
                raise NoConvergence(iters)
            if iters in (10, 20, 30):
                # Exceptional shift: perturb to break a non-converging cycle.
                shift_total += x
                for i in range(nn + 1):
                    a[i][i] -= x
                s = abs(a[nn][nn - 1]) + abs(a[nn - 1][nn - 2])
                y = x = 0.75 * s
                w = -0.4375 * s * s
            iters += 1
            # Find m such that rows m..nn admit the implicit double shift.
            m = nn - 2
            while m >= l:
                z = a[m][m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1][m] + a[m][m + 1]
                q = a[m + 1][m + 1] - z - r - s
                r = a[m + 2][m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m][m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1][m - 1]) + abs(z) + abs(a[m + 1][m + 1]))
                if u <= _MACHINE_EPS * v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i][i - 2] = 0.0
                if i > m + 2:
                    a[i][i - 3] = 0.0
            # Chase the bulge from row m down to row nn.
            for k in range(m, nn):
                if k != m:
                    p = a[k][k - 1]
                    q = a[k + 1][k - 1]
                    r = a[k + 2][k - 1] if k != nn - 1 else 0.0
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                if s == 0.0:
                    continue
                if k == m:
                    if l != m:
                        a[k][k - 1] = -a[k][k - 1]
                else:
                    a[k][k - 1] = -s * x
                p += s
                x = p / s
                y = q / s
                z = r / s
                q /= p
                r /= p
                if k == nn - 1:
                    for j in range(k, nn + 1):
                        value = a[k][j] + q * a[k + 1][j]
                        a[k][j] -= value * x
                        a[k + 1][j] -= value * y
                    for i in range(l, min(nn, k + 3) + 1):
                        value = x * a[i][k] + y * a[i][k + 1]
                        a[i][k] -= value
                        a[i][k + 1] -= value * q
                else:
                    for j in range(k, nn + 1):
                        value = a[k][j] + q * a[k + 1][j] + r * a[k + 2][j]
                        a[k][j] -= value * x
                        a[k + 1][j] -= value * y
                        a[k + 2][j] -= value * z
                    for i in range(l, min(nn, k + 3) + 1):
                        value = x * a[i][k] + y * a[i][k + 1] + z * a[i][k + 2]
                        a[i][k] -= value
                        a[i][k + 1] -= value * q
                        a[i][k + 2] -= value * r
    return eigenvalues


def identify_perron(spec: Spectrum, tol: float = PERRON_TOL) -> Spectrum:
    """Return the spectrum with the eigenvalue closest to 1 marked, if within tol.

    Warns (PerronMultiplicityWarning) when several eigenvalues sit within tol
    of 1, which signals a reducible matrix; the closest one is marked.
    """
    if not (tol > 0.0 and np.isfinite(tol)):
        raise InputError(f"tolerance must be positive, got {tol!r}")
    if not spec.values:
        raise InputError("empty spectrum")
    distances = [abs(v - 1.0) for v in spec.values]
    best = min(range(len(distances)), key=lambda i: (distances[i], i))
    if distances[best] > tol:
        raise PerronNotFound(spec.values[best])
    within = sum(1 for d in distances if d <= tol)
    if within > 1:
        warnings.warn(
            f"{within} eigenvalues within {tol} of 1; matrix is likely reducible",
            PerronMultiplicityWarning,
            stacklevel=2,
        )
    return Spectrum(spec.values, perron_index=best)


def non_perron(spec: Spectrum, tol: float = PERRON_TOL) -> Spectrum:
    """Remove exactly one eigenvalue within tol of 1 (the closest one).

    Raises PerronNotFound if no eigenvalue qualifies; warns when the unit root
    appears with multiplicity (reducibility signal) but still removes only one.
    """
    marked = identify_perron(spec, tol)
    remaining = tuple(
        v for i, v in enumerate(marked.values) if i != marked.perron_index
    )
    return Spectrum(remaining)


def pairing_distance(a, b) -> float:
    """Greedy minimal-distance pairing between two equal-size multisets of
    complex numbers; returns the largest paired distance.

    Repeatedly matches the globally closest remaining pair. Adequate for
    desk-scale spectra; used to compare eigenvalue multisets in tests.
    """
    left = [complex(z) for z in (a.values if isinstance(a, Spectrum) else a)]
    right = [complex(z) for z in (b.values if isinstance(b, Spectrum) else b)]
    if len(left) != len(right):
        raise InputError(f"multisets differ in size: {len(left)} vs {len(right)}")
    worst = 0.0
    while left:
        best = None
        for i, x in enumerate(left):
            for j, y in enumerate(right):
                d = abs(x - y)
                if best is None or d < best[0]:
                    best = (d, i, j)
        worst = max(worst, best[0])
        left.pop(best[1])
        right.pop(best[2])
    return worst


def spectra_match(a, b, tol: float) -> bool:
    """True iff the greedy pairing distance between the multisets is within tol."""
    return pairing_distance(a, b) <= tol
