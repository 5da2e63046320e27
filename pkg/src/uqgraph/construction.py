"""Proper colorings of unit-quadrance graphs from slope and shift certificates.

The plane F_q^2 is sliced into the q parallel lines y = a*x + i for a
slope a such that a**2 + 1 is a nonsquare; no two points of one line are
then at quadrance 1. A nonzero shift t with a**2 + 1 - t**2 also a
nonsquare guarantees the same for any point pair taken from lines i and
i + t, so two such lines can be fused into one color class. Walking the
additive cosets {r, r+t, ..., r+(p-1)*t} of the subgroup generated by t
pairs the lines at offsets (2k)t and (2k+1)t and leaves the (p-1)t line
alone, using (p**n + p**(n-1)) / 2 colors in total. In higher dimensions
the plane coloring is applied to the last two coordinates and the
leading coordinates become part of the color, which multiplies the count
by q**(m-2) and stays proper: equal colors force the leading coordinates
to agree, reducing the quadrance to the plane case.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    ConstructionUnavailableError,
    DimensionTooSmallError,
    IncompleteColoringError,
    InvalidPlanError,
    NoSlopeExistsError,
    NotNonsquareError,
    TooLargeError,
)
from .field import FieldCtx
from .graph import DEFAULT_MAX_VERTICES, UnitQuadranceGraph, quadrance


@dataclass(frozen=True)
class ColoringPlan:
    """Slope a, shift t, and coset representatives partitioning F_q."""

    a: int
    t: int
    coset_reps: tuple[int, ...]


@dataclass(frozen=True)
class CharCountReport:
    """Brute-force count of squares i with t - i a nonsquare, next to the
    closed-form value (q + (-1)**((q-1)/2) - 2) / 4."""

    t: int
    brute_count: int
    formula_value: int


@dataclass(frozen=True)
class Coloring:
    """A vertex-to-color map for D_q^m; color ids are 0-based and contiguous."""

    q: int
    m: int
    colors: np.ndarray
    k: int


def _slope_target(ctx: FieldCtx, a: int) -> int:
    return ctx.add(ctx.mul(a, a), 1)


def _require_slope(ctx: FieldCtx, a: int) -> None:
    if not 0 <= a < ctx.q:
        raise InvalidPlanError(f"slope code {a} outside [0, {ctx.q})")
    if ctx.quadratic_character(_slope_target(ctx, a)) != -1:
        raise InvalidPlanError(f"a={a} rejected: a^2+1 is a square in F_{ctx.q}")


def _require_shift(ctx: FieldCtx, a: int, t: int) -> None:
    if not 0 < t < ctx.q:
        raise InvalidPlanError(f"shift t={t} must be a nonzero code in [1, {ctx.q})")
    rest = ctx.sub(_slope_target(ctx, a), ctx.mul(t, t))
    if ctx.quadratic_character(rest) != -1:
        raise InvalidPlanError(
            f"t={t} rejected: a^2+1-t^2 is a square in F_{ctx.q}"
        )


def find_slope(ctx: FieldCtx, override: int | None = None) -> int:
    """Smallest slope a with a**2 + 1 a nonsquare, or a validated override."""
    if override is not None:
        _require_slope(ctx, override)
        return override
    for a in range(ctx.q):
        if ctx.quadratic_character(_slope_target(ctx, a)) == -1:
            return a
    raise NoSlopeExistsError(
        f"no a with a^2+1 a nonsquare exists in F_{ctx.q}"
    )


def count_Aq(ctx: FieldCtx, t: int) -> CharCountReport:
    """Count squares i in F_q* with t - i a nonsquare, for a nonsquare t."""
    if ctx.quadratic_character(t) != -1:
        raise NotNonsquareError(f"t={t} is not a nonsquare in F_{ctx.q}")
    brute = 0
    for i in range(1, ctx.q):
        if ctx.quadratic_character(i) == 1 and ctx.quadratic_character(ctx.sub(t, i)) == -1:
            brute += 1
    sign = (-1) ** ((ctx.q - 1) // 2)
    return CharCountReport(t=t, brute_count=brute, formula_value=(ctx.q + sign - 2) // 4)


def find_shift(ctx: FieldCtx, a: int, override: int | None = None) -> int:
    """Smallest nonzero t with a**2 + 1 - t**2 a nonsquare, or a validated
    override. Unavailable for q = 3, where no such t exists."""
    if ctx.q <= 3:
        raise ConstructionUnavailableError(
            f"no shift exists for q={ctx.q}; the construction needs q > 3"
        )
    _require_slope(ctx, a)
    if override is not None:
        _require_shift(ctx, a, override)
        return override
    target = _slope_target(ctx, a)
    for t in range(1, ctx.q):
        if ctx.quadratic_character(ctx.sub(target, ctx.mul(t, t))) == -1:
            return t
    raise ConstructionUnavailableError(
        f"no shift with a^2+1-t^2 a nonsquare exists in F_{ctx.q}"
    )  # unreachable for q >= 5


def _coset_reps(ctx: FieldCtx, t: int) -> tuple[int, ...]:
    # smallest-uncovered-first, so the partition is deterministic
    covered = bytearray(ctx.q)
    reps = []
    for r in range(ctx.q):
        if covered[r]:
            continue
        reps.append(r)
        cur = r
        for _ in range(ctx.p):
            covered[cur] = 1
            cur = ctx.add(cur, t)
    return tuple(reps)


def make_plan(ctx: FieldCtx, a: int | None = None, t: int | None = None) -> ColoringPlan:
    """Assemble a validated plan, honoring optional slope/shift overrides."""
    slope = find_slope(ctx, override=a)
    shift = find_shift(ctx, slope, override=t)
    return ColoringPlan(a=slope, t=shift, coset_reps=_coset_reps(ctx, shift))


def validate_plan(ctx: FieldCtx, plan: ColoringPlan) -> None:
    """Check the slope/shift certificates and the coset partition."""
    _require_slope(ctx, plan.a)
    _require_shift(ctx, plan.a, plan.t)
    expected = ctx.p ** (ctx.n - 1)
    if len(plan.coset_reps) != expected:
        raise InvalidPlanError(
            f"expected {expected} coset representatives, got {len(plan.coset_reps)}"
        )
    covered = bytearray(ctx.q)
    for r in plan.coset_reps:
        if not 0 <= r < ctx.q:
            raise InvalidPlanError(f"coset representative {r} outside [0, {ctx.q})")
        cur = r
        for _ in range(ctx.p):
            if covered[cur]:
                raise InvalidPlanError("coset representatives overlap")
            covered[cur] = 1
            cur = ctx.add(cur, plan.t)
    if not all(covered):
        raise InvalidPlanError("cosets do not cover F_q")


def verify_line_lemma(ctx: FieldCtx, a: int) -> bool:
    """Exhaustively check Q(A, B) != 1 for distinct A, B on each line
    y = a*x + i. Runs for any a, including slopes violating the nonsquare
    requirement (for which it returns False)."""
    q = ctx.q
    for i in range(q):
        pts = [(x, ctx.add(ctx.mul(a, x), i)) for x in range(q)]
        for u in range(q):
            for v in range(u + 1, q):
                if quadrance(ctx, pts[u], pts[v]) == 1:
                    return False
    return True


def verify_cross_line_lemma(ctx: FieldCtx, a: int, t: int) -> bool:
    """Exhaustively check Q(A, B) != 1 for A on line y = a*x + i and B on
    line y = a*x + i + t, over all i."""
    q = ctx.q
    for i in range(q):
        shifted = ctx.add(i, t)
        pts_a = [(x, ctx.add(ctx.mul(a, x), i)) for x in range(q)]
        pts_b = [(x, ctx.add(ctx.mul(a, x), shifted)) for x in range(q)]
        for pa in pts_a:
            for pb in pts_b:
                if quadrance(ctx, pa, pb) == 1:
                    return False
    return True


def expected_color_count(ctx: FieldCtx, m: int = 2) -> int:
    """q**(m-2) * (p**n + p**(n-1)) / 2, the construction's color count."""
    return ctx.q ** (m - 2) * (ctx.p**ctx.n + ctx.p ** (ctx.n - 1)) // 2


def build_coloring_2d(ctx: FieldCtx, plan: ColoringPlan) -> Coloring:
    """Color F_q^2 by fused line pairs along each coset of the plan."""
    validate_plan(ctx, plan)
    p, q = ctx.p, ctx.q
    color_of_line = {}
    next_color = 0
    for rep in plan.coset_reps:
        line = [rep]
        for _ in range(p - 1):
            line.append(ctx.add(line[-1], plan.t))
        for k in range((p - 1) // 2):
            color_of_line[line[2 * k]] = next_color
            color_of_line[line[2 * k + 1]] = next_color
            next_color += 1
        color_of_line[line[p - 1]] = next_color
        next_color += 1
    line_colors = np.empty(q, dtype=np.int64)
    for intercept, color in color_of_line.items():
        line_colors[intercept] = color
    colors = np.empty(q * q, dtype=np.int64)
    for x in range(q):
        ax = ctx.mul(plan.a, x)
        base = x * q
        for y in range(q):
            colors[base + y] = line_colors[ctx.sub(y, ax)]
    return Coloring(q=q, m=2, colors=colors, k=next_color)


def build_coloring_md(
    ctx: FieldCtx,
    m: int,
    plan: ColoringPlan,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Coloring:
    """Color F_q^m by the plane coloring of the last two coordinates
    crossed with the identity on the leading ones."""
    if m < 2:
        raise DimensionTooSmallError("colorings need dimension >= 2")
    n_vertices = ctx.q**m
    if n_vertices > max_vertices:
        raise TooLargeError(f"{n_vertices} vertices exceed the bound {max_vertices}")
    base = build_coloring_2d(ctx, plan)
    if m == 2:
        return base
    idx = np.arange(n_vertices, dtype=np.int64)
    plane = ctx.q * ctx.q
    colors = (idx // plane) * base.k + base.colors[idx % plane]
    return Coloring(q=ctx.q, m=m, colors=colors, k=ctx.q ** (m - 2) * base.k)


def verify_coloring(graph: UnitQuadranceGraph, coloring: Coloring):
    """Return None when proper, else the first conflicting edge (u, v) in
    lexicographic order."""
    n = graph.n_vertices
    if (
        coloring.q != graph.q
        or coloring.m != graph.m
        or len(coloring.colors) != n
    ):
        raise IncompleteColoringError(
            f"coloring for q={coloring.q}, m={coloring.m},"
            f" {len(coloring.colors)} vertices does not cover this graph"
        )
    colors = coloring.colors
    if np.any(colors < 0):
        raise IncompleteColoringError("some vertices are uncolored")
    for u in range(n):
        nbrs = graph.neighbors_of(u)
        later = nbrs[nbrs > u]
        hits = later[colors[later] == colors[u]]
        if hits.size:
            return (u, int(hits[0]))
    return None


# ---------------------------------------------------------------------------
# Coloring file format: "# q=<q> m=<m> k=<k>" header, then "index color"
# lines, both 0-based, UTF-8.

_HEADER_RE = re.compile(r"#\s*q=(\d+)\s+m=(\d+)\s+k=(\d+)\s*$")


def write_coloring(coloring: Coloring, sink) -> None:
    """Write a coloring in the text format; sink is a path or text stream."""
    lines = [f"# q={coloring.q} m={coloring.m} k={coloring.k}\n"]
    for i, c in enumerate(coloring.colors):
        lines.append(f"{i} {int(c)}\n")
    data = "".join(lines)
    if isinstance(sink, (str, Path)):
        Path(sink).write_text(data, encoding="utf-8")
    else:
        sink.write(data)


def read_coloring(source) -> Coloring:
    """Read a coloring file; raises IncompleteColoringError when vertices
    are missing and ValueError on malformed content."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty coloring file")
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise ValueError(f"bad coloring header: {lines[0]!r}")
    q, m, k = (int(g) for g in header.groups())
    n = q**m
    colors = np.full(n, -1, dtype=np.int64)
    for line in lines[1:]:
        if line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad coloring line: {line!r}")
        idx, color = int(parts[0]), int(parts[1])
        if not 0 <= idx < n:
            raise ValueError(f"vertex index {idx} outside [0, {n})")
        if not 0 <= color < k:
            raise ValueError(f"color {color} outside [0, {k})")
        colors[idx] = color
    if np.any(colors < 0):
        missing = int(np.flatnonzero(colors < 0)[0])
        raise IncompleteColoringError(f"vertex {missing} has no color")
    return Coloring(q=q, m=m, colors=colors, k=k)
