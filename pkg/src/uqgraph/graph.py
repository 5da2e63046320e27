"""Unit-quadrance graphs on F_q^m.

Vertices are the points of F_q^m indexed row-major over canonical
element codes, last coordinate fastest; two points are adjacent exactly
when their quadrance (the sum of squared coordinate differences) is 1.
Adjacency is a Cayley structure on the additive group, so the graph is
built by translating the unit circle across all vertices and every
vertex has degree equal to the circle size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooSmallError,
    IOFailureError,
    TooLargeError,
)
from .field import FieldCtx, is_prime

DEFAULT_MAX_VERTICES = 1 << 16


@dataclass(frozen=True)
class Point:
    """A vertex of F_q^m: coordinate codes plus its canonical index."""

    coords: tuple[int, ...]
    index: int


def vertex_index(q: int, coords: Sequence[int]) -> int:
    """Row-major index of a coordinate vector, last coordinate fastest."""
    idx = 0
    for c in coords:
        idx = idx * q + c
    return idx


def vertex_coords(q: int, m: int, index: int) -> tuple[int, ...]:
    """Inverse of vertex_index."""
    out = []
    for _ in range(m):
        index, r = divmod(index, q)
        out.append(r)
    return tuple(reversed(out))


def _coords_of(x) -> tuple[int, ...]:
    return x.coords if isinstance(x, Point) else tuple(x)


def quadrance(ctx: FieldCtx, x, y) -> int:
    """Sum of squared coordinate differences, as an element code.

    Accepts Points or plain coordinate sequences of equal dimension >= 2.
    """
    cx, cy = _coords_of(x), _coords_of(y)
    if len(cx) != len(cy):
        raise DimensionMismatchError(
            f"points of dimension {len(cx)} and {len(cy)} cannot be compared"
        )
    if len(cx) < 2:
        raise DimensionTooSmallError("quadrance needs dimension >= 2")
    acc = 0
    for a, b in zip(cx, cy):
        d = ctx.sub(a, b)
        acc = ctx.add(acc, ctx.mul(d, d))
    return acc


def _digit_columns(q: int, m: int, n_vertices: int) -> list[np.ndarray]:
    idx = np.arange(n_vertices, dtype=np.int64)
    return [(idx // q ** (m - 1 - j)) % q for j in range(m)]


def unit_circle(
    ctx: FieldCtx, m: int = 2, max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[Point]:
    """All points at quadrance 1 from the origin, in index order."""
    if m < 2:
        raise DimensionTooSmallError("the unit circle needs dimension >= 2")
    n_vertices = ctx.q**m
    if n_vertices > max_vertices:
        raise TooLargeError(f"{n_vertices} points exceed the bound {max_vertices}")
    add_tab = ctx.add_table()
    squares = ctx.square_vector()
    cols = _digit_columns(ctx.q, m, n_vertices)
    acc = np.zeros(n_vertices, dtype=np.int64)
    for col in cols:
        acc = add_tab[acc, squares[col]]
    hits = np.flatnonzero(acc == 1)
    return [
        Point(tuple(int(col[i]) for col in cols), int(i)) for i in hits
    ]


class UnitQuadranceGraph:
    """Dense adjacency of D_q^m with packed-bit rows and sorted neighbor lists."""

    def __init__(self, ctx, m, connection_set, neighbor_matrix, rows):
        self.ctx = ctx
        self.m = m
        self.connection_set = connection_set
        self._nbr = neighbor_matrix  # (degree, N), column i sorted = neighbors of i
        self._rows = rows  # python-int bitmasks, one per vertex

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def n_vertices(self) -> int:
        return len(self._rows)

    @property
    def degree(self) -> int:
        return len(self.connection_set)

    @property
    def n_edges(self) -> int:
        return self.n_vertices * self.degree // 2

    def neighbors_of(self, u: int) -> np.ndarray:
        return self._nbr[:, u]

    def row_bits(self, u: int) -> int:
        return self._rows[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._rows[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        for u in range(self.n_vertices):
            for v in self._nbr[:, u]:
                if v > u:
                    yield (u, int(v))

    def index_of(self, coords) -> int:
        return vertex_index(self.q, _coords_of(coords))

    def coords_of(self, index: int) -> tuple[int, ...]:
        return vertex_coords(self.q, self.m, index)

    def __repr__(self) -> str:
        return (
            f"UnitQuadranceGraph(q={self.q}, m={self.m},"
            f" vertices={self.n_vertices}, degree={self.degree})"
        )


def build_graph(
    ctx: FieldCtx, m: int = 2, max_vertices: int = DEFAULT_MAX_VERTICES
) -> UnitQuadranceGraph:
    """Build D_q^m by translating the unit circle across all vertices."""
    if m < 2:
        raise DimensionTooSmallError("unit-quadrance graphs need dimension >= 2")
    n_vertices = ctx.q**m
    if n_vertices > max_vertices:
        raise TooLargeError(
            f"{n_vertices} vertices exceed the bound {max_vertices}"
        )
    circle = unit_circle(ctx, m, max_vertices)
    add_tab = ctx.add_table()
    q = ctx.q
    cols = _digit_columns(q, m, n_vertices)
    nbr = np.empty((len(circle), n_vertices), dtype=np.int64)
    for k, s in enumerate(circle):
        acc = add_tab[cols[0], s.coords[0]]
        for j in range(1, m):
            acc = acc * q + add_tab[cols[j], s.coords[j]]
        nbr[k] = acc
    nbr.sort(axis=0)
    rows = []
    buf = np.zeros(n_vertices, dtype=bool)
    for i in range(n_vertices):
        buf[:] = False
        buf[nbr[:, i]] = True
        rows.append(
            int.from_bytes(np.packbits(buf, bitorder="little").tobytes(), "little")
        )
    return UnitQuadranceGraph(ctx, m, circle, nbr, rows)


def triangle_count(graph: UnitQuadranceGraph) -> int:
    """Exact number of triangles, via bitset intersections over edges.

    Each triangle is seen once per edge, so the edge-wise common-neighbor
    total is exactly three times the triangle count.
    """
    rows = graph._rows
    total = 0
    for u in range(graph.n_vertices):
        row_u = rows[u]
        for v in graph.neighbors_of(u):
            if v > u:
                total += (row_u & rows[v]).bit_count()
    return total // 3


def triangle_free_predicted(q: int) -> bool | None:
    """True when q is a prime with q mod 12 in {5, 7}, which forces
    triangle-freeness; None when the criterion is silent (prime powers
    with n > 1, other residues)."""
    if is_prime(q) and q % 12 in (5, 7):
        return True
    return None


def export_dimacs(graph: UnitQuadranceGraph, sink) -> None:
    """Write the graph in DIMACS coloring format.

    Header comments record q, p, n, m and the field modulus; edges are
    1-based, u < v, in lexicographic order. The sink may be a text or a
    binary stream.
    """
    ctx = graph.ctx
    lines = [
        "c unit-quadrance graph\n",
        f"c q={ctx.q} p={ctx.p} n={ctx.n} m={graph.m}\n",
        f"c modulus={','.join(str(c) for c in ctx.modulus)}\n",
        f"p edge {graph.n_vertices} {graph.n_edges}\n",
    ]
    for u, v in graph.edges():
        lines.append(f"e {u + 1} {v + 1}\n")
    data = "".join(lines)
    try:
        try:
            sink.write(data)
        except TypeError:
            sink.write(data.encode("ascii"))
    except (OSError, ValueError, AttributeError) as exc:
        raise IOFailureError(f"could not write DIMACS output: {exc}") from exc


def degree_formula(q: int) -> int:
    """q - (-1)**((q-1)/2), the regular degree of the plane graph D_q."""
    return q - (-1) ** ((q - 1) // 2)
