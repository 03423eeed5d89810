"""Graphs, Randic-type matrices, and closed-form bounds on their extreme eigenvalues.

For a connected simple graph the degree-normalized adjacency matrix D^-1 A is
row-stochastic with all eigenvalues real in [-1, 1]; its symmetric twin
D^-1/2 A D^-1/2 has the same spectrum. The bounds here come from applying the
deflation-region machinery to D^-1 A and reading the disc edges off the graph
combinatorics (degrees and common-neighbor counts), so the closed forms must
agree with the generic disc route; that agreement is a test invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .matcore import (
    DenseMatrix,
    InputError,
    OrderTooSmall,
    StochasticMatrix,
    validate_stochastic,
)

#: Row-sum tolerance used when validating the degree-normalized matrix; its
#: rows are d_i copies of 1/d_i and sum to 1 up to a few ulps.
RANDIC_ROW_SUM_TOL = 1e-12


class VertexOutOfRange(InputError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} outside 1..{n}")
        self.vertex, self.n = vertex, n


class SameVertex(InputError):
    def __init__(self, vertex: int):
        super().__init__(f"the two vertices must differ, both are {vertex}")
        self.vertex = vertex


class InvalidEdge(InputError):
    pass


class Disconnected(InputError):
    def __init__(self):
        super().__init__("graph must be connected")


class IsolatedVertex(InputError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has degree 0")
        self.vertex = vertex


class NotRegular(InputError):
    def __init__(self, degrees):
        super().__init__(f"graph is not regular; degree multiset {sorted(set(degrees))}")
        self.degrees = tuple(degrees)


class NoEdges(InputError):
    def __init__(self):
        super().__init__("graph has no edges")


class EdgeListParseError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 1..n, stored as a normalized edge set."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"vertex count must be >= 1, got {self.n}")
        seen: set[tuple[int, int]] = set()
        normalized = []
        for u, v in self.edges:
            if not 1 <= u <= self.n:
                raise VertexOutOfRange(u, self.n)
            if not 1 <= v <= self.n:
                raise VertexOutOfRange(v, self.n)
            if u == v:
                raise InvalidEdge(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InvalidEdge(f"duplicate edge {{{e[0]}, {e[1]}}}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            sets[u - 1].add(v)
            sets[v - 1].add(u)
        return tuple(frozenset(s) for s in sets)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbor_sets)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v - 1]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.neighbor_sets[v - 1]

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u - 1, v - 1] = 1.0
            a[v - 1, u - 1] = 1.0
        return a

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise VertexOutOfRange(v, self.n)


@dataclass(frozen=True)
class BoundReport:
    """Closed-form bounds on the extreme non-unit eigenvalues, with per-vertex terms.

    alpha_by_vertex[i-1] is the minimum over k != i of the pair term entering
    the lower bound; beta_by_vertex likewise for the upper bound.
    """

    alpha_by_vertex: tuple[float, ...]
    beta_by_vertex: tuple[float, ...]
    lower_bound: float
    upper_bound: float


@dataclass(frozen=True)
class RegularBoundReport:
    """Regular-graph corollary bounds (integer pair terms, scaled by 1/degree).

    The clamp with 1 sits inside the 1/r scaling, exactly as the corollary is
    stated; when it binds and r > 1 this is weaker than substituting into the
    general bound, so reports should show both routes.
    """

    degree: int
    gamma_by_vertex: tuple[float, ...]
    delta_by_vertex: tuple[float, ...]
    lower_bound: float
    upper_bound: float


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 1."""
    if g.n == 1:
        return True
    seen = {1}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        for w in g.neighbor_sets[v - 1]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == g.n


def common_neighbors(g: Graph, i: int, j: int) -> int:
    """Number of vertices adjacent to both i and j."""
    if i == j:
        raise SameVertex(i)
    return len(g.neighbors(i) & g.neighbors(j))


def randic_matrix(g: Graph) -> StochasticMatrix:
    """Degree-normalized adjacency matrix: entry (i, j) = 1/d_i if i ~ j, else 0."""
    _require_degrees(g)
    if not is_connected(g):
        raise Disconnected()
    a = g.adjacency()
    m = a / np.array(g.degrees, dtype=float)[:, None]
    return validate_stochastic(DenseMatrix(m), RANDIC_ROW_SUM_TOL)


def symmetric_randic(g: Graph) -> DenseMatrix:
    """Symmetric form: entry (i, j) = 1/sqrt(d_i d_j) if i ~ j, else 0.

    Similar to :func:`randic_matrix` by a diagonal scaling, hence the same
    spectrum, real and inside [-1, 1].
    """
    _require_degrees(g)
    if not is_connected(g):
        raise Disconnected()
    a = g.adjacency()
    d = np.array(g.degrees, dtype=float)
    return DenseMatrix(a / np.sqrt(np.outer(d, d)))


def _require_degrees(g: Graph) -> None:
    for v, d in enumerate(g.degrees, start=1):
        if d == 0:
            raise IsolatedVertex(v)


def alpha(g: Graph, i: int, k: int) -> float:
    """Pair term for the lower bound: the deflation disc of k (with i removed)
    has left edge -2 + alpha(g, i, k)."""
    if i == k:
        raise SameVertex(i)
    g._check_vertex(i)
    g._check_vertex(k)
    di, dk = g.degrees[i - 1], g.degrees[k - 1]
    shared = 2.0 * common_neighbors(g, i, k) / max(di, dk)
    if k in g.neighbor_sets[i - 1]:
        return 1.0 / dk + shared
    return shared


def beta(g: Graph, i: int, k: int) -> float:
    """Pair term for the upper bound: the deflation disc of k (with i removed)
    has right edge 2 - beta(g, i, k)."""
    if i == k:
        raise SameVertex(i)
    g._check_vertex(i)
    g._check_vertex(k)
    di, dk = g.degrees[i - 1], g.degrees[k - 1]
    shared = 2.0 * common_neighbors(g, i, k) / max(di, dk)
    if k in g.neighbor_sets[i - 1]:
        return 1.0 / dk + 2.0 / di + shared
    return shared


def randic_bounds(g: Graph) -> BoundReport:
    """Bounds on the extreme non-unit eigenvalues of the degree-normalized matrix.

    lower_bound = -2 + max(1, max_i min_{k != i} alpha(i, k)) <= smallest eigenvalue;
    largest non-unit eigenvalue <= 2 - max(1, max_i min_{k != i} beta(i, k)) = upper_bound.
    The clamp with 1 keeps both bounds inside [-1, 1].
    """
    if g.n < 2:
        raise OrderTooSmall(g.n, minimum=2)
    if not is_connected(g):
        raise Disconnected()
    vertices = range(1, g.n + 1)
    alphas = tuple(min(alpha(g, i, k) for k in vertices if k != i) for i in vertices)
    betas = tuple(min(beta(g, i, k) for k in vertices if k != i) for i in vertices)
    lower = -2.0 + max(1.0, max(alphas))
    upper = 2.0 - max(1.0, max(betas))
    return BoundReport(alphas, betas, lower, upper)


def normalized_laplacian_bounds(g: Graph) -> tuple[float, float]:
    """Bounds for the smallest and largest nonzero normalized-Laplacian eigenvalues.

    The normalized-Laplacian eigenvalues are 1 minus the eigenvalues here, so
    the pair is (-1 + max(1, max_i beta_i), 3 - max(1, max_i alpha_i)).
    """
    report = randic_bounds(g)
    rho2_lower = -1.0 + max(1.0, max(report.beta_by_vertex))
    rhon_upper = 3.0 - max(1.0, max(report.alpha_by_vertex))
    return rho2_lower, rhon_upper


def regular_graph_bounds(g: Graph) -> RegularBoundReport:
    """Corollary bounds for a connected r-regular graph, implemented literally.

    Pair terms: gamma = 1 + 2N(i,k) if k ~ i else 2N(i,k), and delta likewise
    with 3 in place of 1. Bounds: -2 + (1/r) max(1, max_i min_k gamma) and
    2 - (1/r) max(1, max_i min_k delta). Note the clamp sits inside the 1/r
    scaling, so the lower bound may fall below -1 (e.g. a 4-cycle gives -1.5);
    substituting the terms into :func:`randic_bounds` can be tighter.
    """
    if g.n < 2:
        raise OrderTooSmall(g.n, minimum=2)
    if not is_connected(g):
        raise Disconnected()
    degrees = set(g.degrees)
    if len(degrees) != 1:
        raise NotRegular(g.degrees)
    r = g.degrees[0]
    vertices = range(1, g.n + 1)
    gammas = []
    deltas = []
    for i in vertices:
        gi = []
        di = []
        for k in vertices:
            if k == i:
                continue
            shared = 2.0 * common_neighbors(g, i, k)
            if k in g.neighbor_sets[i - 1]:
                gi.append(1.0 + shared)
                di.append(3.0 + shared)
            else:
                gi.append(shared)
                di.append(shared)
        gammas.append(min(gi))
        deltas.append(min(di))
    lower = -2.0 + max(1.0, max(gammas)) / r
    upper = 2.0 - max(1.0, max(deltas)) / r
    return RegularBoundReport(r, tuple(gammas), tuple(deltas), lower, upper)


def rojo_soto_bound(g: Graph) -> float:
    """Bound on the largest modulus among the negative eigenvalues.

    Returns 1 - min over adjacent pairs {i, j} of N(i,j)/max(d_i, d_j); the
    induced lower bound on the smallest eigenvalue is the negation. Trivial
    (equal to 1) whenever some edge lies in no triangle.
    """
    if not is_connected(g):
        raise Disconnected()
    if not g.edges:
        raise NoEdges()
    worst = min(
        common_neighbors(g, u, v) / max(g.degrees[u - 1], g.degrees[v - 1])
        for u, v in g.edges
    )
    return 1.0 - worst


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with '#' (and blank lines) are skipped. The first data line
    holds two integers `n m`; the next m data lines hold one edge `u v` each,
    1-based, u != v. Duplicate edges and self-loops are errors.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if header is None:
            if len(tokens) != 2:
                raise EdgeListParseError(lineno, "expected two integers: n m")
            try:
                n, m = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise EdgeListParseError(
                    lineno, f"invalid header {stripped!r}"
                ) from None
            if n < 1 or m < 0:
                raise EdgeListParseError(lineno, f"invalid sizes n={n}, m={m}")
            header = (n, m)
            continue
        if len(edges) == header[1]:
            raise EdgeListParseError(lineno, "unexpected data after the final edge")
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, "expected an edge: u v")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"invalid edge {stripped!r}") from None
        for w in (u, v):
            if not 1 <= w <= header[0]:
                raise EdgeListParseError(lineno, f"vertex {w} outside 1..{header[0]}")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {{{key[0]}, {key[1]}}}")
        seen.add(key)
        edges.append((u, v))
    if header is None:
        raise EdgeListParseError(last_line + 1, "missing header line")
    if len(edges) != header[1]:
        raise EdgeListParseError(
            last_line + 1, f"expected {header[1]} edges, found {len(edges)}"
        )
    return Graph(header[0], tuple(edges))


def load_graph(path: str | Path) -> Graph:
    """Read and parse an edge-list file (see :func:`parse_edge_list`)."""
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))
