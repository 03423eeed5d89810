"""Core dense-matrix types: validation, stochasticity, irreducibility, text format."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

#: Default tolerance for "each row sums to one". Tight enough to reject a
#: genuinely defective row, loose enough that a matrix typed as short decimal
#: literals validates exactly.
DEFAULT_ROW_SUM_TOL = 1e-9


class LocalizationError(Exception):
    """Base class for every error raised by this package."""


class InputError(LocalizationError):
    """Invalid input: malformed file, bad matrix/graph, violated precondition."""


class NumericalError(LocalizationError):
    """A numerical procedure failed to meet its convergence or accuracy contract."""


class NotSquare(InputError):
    def __init__(self, shape):
        super().__init__(f"matrix must be square, got shape {tuple(shape)}")
        self.shape = tuple(shape)


class NotFinite(InputError):
    def __init__(self, i: int, j: int, value: float):
        super().__init__(f"entry ({i}, {j}) is not finite: {value!r}")
        self.i, self.j, self.value = i, j, value


class NegativeEntry(InputError):
    def __init__(self, i: int, j: int, value: float):
        super().__init__(f"entry ({i}, {j}) = {value!r} is negative beyond tolerance")
        self.i, self.j, self.value = i, j, value


class RowSumViolation(InputError):
    def __init__(self, i: int, total: float):
        super().__init__(f"row {i} sums to {total!r}, not 1")
        self.i, self.total = i, total


class OrderTooSmall(InputError):
    def __init__(self, order: int, minimum: int = 2):
        super().__init__(f"matrix order {order} is below the required minimum {minimum}")
        self.order, self.minimum = order, minimum


class IndexOutOfRange(InputError):
    def __init__(self, index: int, order: int):
        super().__init__(f"index {index} outside 1..{order}")
        self.index, self.order = index, order


class MatrixParseError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Immutable square real matrix.

    Entries are held in a read-only float64 array. All public accessors use
    1-based indices, matching the file formats and report labels; the storage
    layout is an internal detail.
    """

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotSquare(arr.shape)
        if not np.all(np.isfinite(arr)):
            i, j = np.argwhere(~np.isfinite(arr))[0]
            raise NotFinite(int(i) + 1, int(j) + 1, float(arr[i, j]))
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def entry(self, i: int, j: int) -> float:
        """Entry at row i, column j (1-based)."""
        n = self.order
        if not 1 <= i <= n:
            raise IndexOutOfRange(i, n)
        if not 1 <= j <= n:
            raise IndexOutOfRange(j, n)
        return float(self.entries[i - 1, j - 1])


@dataclass(frozen=True, eq=False)
class StochasticMatrix:
    """Non-negative square matrix whose rows sum to one within a stated tolerance.

    Construct through :func:`validate_stochastic`, which clamps entries that
    are negative by at most the tolerance; direct construction re-checks the
    invariants but does not clamp.
    """

    inner: DenseMatrix
    row_sum_tolerance: float = DEFAULT_ROW_SUM_TOL

    def __post_init__(self):
        tol = self.row_sum_tolerance
        if not (np.isfinite(tol) and tol >= 0.0):
            raise InputError(f"row_sum_tolerance must be a non-negative real, got {tol!r}")
        a = self.inner.entries
        if np.any(a < 0.0):
            i, j = np.argwhere(a < 0.0)[0]
            raise NegativeEntry(int(i) + 1, int(j) + 1, float(a[i, j]))
        sums = a.sum(axis=1)
        bad = np.abs(sums - 1.0) > tol
        if np.any(bad):
            i = int(np.argmax(bad))
            raise RowSumViolation(i + 1, float(sums[i]))

    @property
    def entries(self) -> np.ndarray:
        return self.inner.entries

    @property
    def order(self) -> int:
        return self.inner.order

    def entry(self, i: int, j: int) -> float:
        return self.inner.entry(i, j)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of complex eigenvalues, optionally with one identified as the unit root.

    `perron_index` points at the eigenvalue identified as 1 (within the
    tolerance used at identification time); it is None until identified.
    """

    values: tuple[complex, ...]
    perron_index: int | None = None

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.perron_index is not None and not 0 <= self.perron_index < len(vals):
            raise InputError(
                f"perron_index {self.perron_index} outside 0..{len(vals) - 1}"
            )

    def __len__(self) -> int:
        return len(self.values)

    @property
    def perron_value(self) -> complex:
        if self.perron_index is None:
            raise InputError("no eigenvalue has been identified as the unit root")
        return self.values[self.perron_index]


def validate_stochastic(m: DenseMatrix, tol: float = DEFAULT_ROW_SUM_TOL) -> StochasticMatrix:
    """Validate m as row-stochastic, clamping entries within tol of zero.

    Raises NegativeEntry for an entry below -tol and RowSumViolation for a row
    whose sum (after clamping) differs from 1 by more than tol.
    """
    if not (np.isfinite(tol) and tol >= 0.0):
        raise InputError(f"tolerance must be a non-negative real, got {tol!r}")
    a = m.entries
    below = a < -tol
    if np.any(below):
        i, j = np.argwhere(below)[0]
        raise NegativeEntry(int(i) + 1, int(j) + 1, float(a[i, j]))
    clamped = np.where(a < 0.0, 0.0, a)
    return StochasticMatrix(DenseMatrix(clamped), tol)


def trace(m: DenseMatrix) -> float:
    """Sum of the diagonal entries."""
    return float(np.trace(m.entries))


def _reaches_all(adjacency: np.ndarray) -> bool:
    n = adjacency.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.nonzero(adjacency[i])[0]:
            j = int(j)
            if not seen[j]:
                seen[j] = True
                stack.append(j)
    return bool(seen.all())


def is_irreducible(s: StochasticMatrix) -> bool:
    """True iff the digraph with an arc i -> j for every positive entry is strongly connected.

    Checked by forward reachability from state 1 in the digraph and in its
    reverse; both must cover every state.
    """
    positive = s.entries > 0.0
    return _reaches_all(positive) and _reaches_all(positive.T)


def parse_matrix_text(text: str) -> DenseMatrix:
    """Parse the plain-text matrix format.

    Lines starting with '#' (and blank lines) are skipped. The first data line
    holds the integer order n; the next n data lines hold n whitespace-separated
    decimal numbers each. Decimal literals convert with standard
    round-to-nearest binary semantics.
    """
    order: int | None = None
    rows: list[list[float]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if order is None:
            if len(tokens) != 1:
                raise MatrixParseError(lineno, "expected a single integer order")
            try:
                order = int(tokens[0])
            except ValueError:
                raise MatrixParseError(lineno, f"invalid order {tokens[0]!r}") from None
            if order < 1:
                raise MatrixParseError(lineno, f"order must be >= 1, got {order}")
            continue
        if len(rows) == order:
            raise MatrixParseError(lineno, "unexpected data after the final matrix row")
        if len(tokens) != order:
            raise MatrixParseError(
                lineno, f"expected {order} values, found {len(tokens)}"
            )
        try:
            rows.append([float(t) for t in tokens])
        except ValueError:
            bad = next(t for t in tokens if not _is_number(t))
            raise MatrixParseError(lineno, f"invalid number {bad!r}") from None
    if order is None:
        raise MatrixParseError(last_line + 1, "missing order line")
    if len(rows) != order:
        raise MatrixParseError(
            last_line + 1, f"expected {order} matrix rows, found {len(rows)}"
        )
    return DenseMatrix(np.array(rows, dtype=float))


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def load_matrix(path: str | Path) -> DenseMatrix:
    """Read and parse a matrix file (see :func:`parse_matrix_text`)."""
    return parse_matrix_text(Path(path).read_text(encoding="utf-8"))
