"""Exact chromatic numbers at desk scale.

The solver is DSATUR-ordered backtracking with branch and bound: the
upper bound is seeded from a greedy DSATUR coloring and, when the graph
carries a field context, from the line-pairing construction; the lower
bound comes from a bounded clique search and a bipartiteness test. Each
round tries to exhaust (upper-1)-colorings with color-permutation
symmetry removed (the first vertex is fixed to color 0 and new colors
are introduced in order). A completed exhaustion proves optimality; an
exhausted budget degrades the result to a valid bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter

import numpy as np

from .construction import (
    Coloring,
    build_coloring_md,
    make_plan,
)
from .errors import (
    ConstructionUnavailableError,
    InvalidPlanError,
    NoSlopeExistsError,
)

DEFAULT_TIME_LIMIT = 60.0
DEFAULT_NODE_LIMIT = 10**8


@dataclass(frozen=True)
class ChiResult:
    """Outcome of a chromatic-number run; exact exactly when lower == upper."""

    status: str  # "exact" | "bounded"
    lower: int
    upper: int
    witness: Coloring
    nodes: int
    millis: float

    def record(self) -> dict:
        """JSON-ready summary of the run."""
        return {
            "q": self.witness.q,
            "m": self.witness.m,
            "status": self.status,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "millis": int(self.millis),
        }


def _lowest_missing(mask: int) -> int:
    c = 0
    while (mask >> c) & 1:
        c += 1
    return c


def greedy_bound(graph) -> Coloring:
    """Proper coloring from greedy assignment in DSATUR order.

    Ties break by degree, then by smallest vertex index, so the result is
    deterministic.
    """
    n = graph.n_vertices
    nbrs = [graph.neighbors_of(u) for u in range(n)]
    colors = np.full(n, -1, dtype=np.int64)
    forbid = [0] * n
    big = n + 1  # outranks any degree, so saturation dominates the score
    score = np.array([len(x) for x in nbrs], dtype=np.int64)
    for _ in range(n):
        v = int(np.argmax(score))
        c = _lowest_missing(forbid[v])
        colors[v] = c
        score[v] = -1
        bit = 1 << c
        for w in nbrs[v]:
            w = int(w)
            if colors[w] < 0 and not forbid[w] & bit:
                forbid[w] |= bit
                score[w] += big
    return Coloring(q=graph.q, m=graph.m, colors=colors, k=int(colors.max()) + 1)


def clique_lower(graph, node_budget: int = 100_000) -> int:
    """Size of the largest clique found within the node budget.

    Always a valid chromatic lower bound; exact when the search finishes
    before the budget runs out (it does on desk-scale instances).
    """
    n = graph.n_vertices
    if n == 0:
        return 0
    rows = [graph.row_bits(u) for u in range(n)]
    best = 1
    nodes = 0

    def extend(size: int, cand: int) -> None:
        nonlocal best, nodes
        while cand:
            if nodes >= node_budget:
                return
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nodes += 1
            if size + 1 > best:
                best = size + 1
            sub = cand & rows[v]
            if sub:
                extend(size + 1, sub)

    extend(0, (1 << n) - 1)
    return best


def _structural_lower(graph) -> int:
    """1 for edgeless, 2 for bipartite with edges, 3 when an odd cycle exists."""
    n = graph.n_vertices
    if n == 0:
        return 0
    side = [-1] * n
    has_edge = False
    for start in range(n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in graph.neighbors_of(u):
                w = int(w)
                if w == u:
                    continue
                has_edge = True
                if side[w] < 0:
                    side[w] = side[u] ^ 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return 3
    return 2 if has_edge else 1


def _construction_seed(graph) -> Coloring | None:
    ctx = getattr(graph, "ctx", None)
    if ctx is None:
        return None
    try:
        plan = make_plan(ctx)
        return build_coloring_md(ctx, graph.m, plan)
    except (ConstructionUnavailableError, NoSlopeExistsError, InvalidPlanError):
        return None


def _search_k_coloring(graph, k, deadline, node_limit, nodes):
    """Try to k-color the graph; returns (status, coloring, nodes) with
    status in {"found", "none", "budget"}."""
    n = graph.n_vertices
    if n == 0:
        return "found", Coloring(graph.q, graph.m, np.zeros(0, dtype=np.int64), 0), nodes
    if k < 1:
        return "none", None, nodes
    nbrs = [[int(w) for w in graph.neighbors_of(u)] for u in range(n)]
    deg = [len(x) for x in nbrs]
    colors = [-1] * n
    forbid = [0] * n
    sat = [0] * n
    full = (1 << k) - 1
    max_used = -1
    n_colored = 0

    def pick() -> int:
        best_v = -1
        best_sat = -1
        best_deg = -1
        for u in range(n):
            if colors[u] < 0:
                s = sat[u]
                if s > best_sat or (s == best_sat and deg[u] > best_deg):
                    best_v = u
                    best_sat = s
                    best_deg = deg[u]
        return best_v

    v0 = pick()
    # frame: [vertex, colors left to try, bit of current try, touched, saved max_used]
    stack = [[v0, (~forbid[v0]) & full & ((1 << (max_used + 2)) - 1), 0, [], -1]]
    while stack:
        frame = stack[-1]
        v = frame[0]
        if frame[2]:
            bit = frame[2]
            for w in frame[3]:
                forbid[w] ^= bit
                sat[w] -= 1
            colors[v] = -1
            n_colored -= 1
            max_used = frame[4]
            frame[2] = 0
            frame[3] = []
        rem = frame[1]
        if rem == 0:
            stack.pop()
            continue
        bit = rem & -rem
        c = bit.bit_length() - 1
        frame[1] = rem ^ bit
        nodes += 1
        if nodes >= node_limit or (
            (nodes & 1023) == 0 and perf_counter() > deadline
        ):
            return "budget", None, nodes
        colors[v] = c
        n_colored += 1
        frame[2] = bit
        frame[4] = max_used
        if c > max_used:
            max_used = c
        touched = frame[3]
        dead = False
        for w in nbrs[v]:
            if colors[w] < 0:
                fw = forbid[w]
                if not fw & bit:
                    fw |= bit
                    forbid[w] = fw
                    sat[w] += 1
                    touched.append(w)
                    if fw == full:
                        dead = True
        if dead:
            continue
        if n_colored == n:
            witness = Coloring(
                q=graph.q,
                m=graph.m,
                colors=np.array(colors, dtype=np.int64),
                k=max_used + 1,
            )
            return "found", witness, nodes
        nv = pick()
        allowed = (~forbid[nv]) & full & ((1 << (max_used + 2)) - 1)
        if allowed == 0:
            continue
        stack.append([nv, allowed, 0, [], -1])
    return "none", None, nodes


def exact_chromatic(
    graph,
    time_limit: float = DEFAULT_TIME_LIMIT,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> ChiResult:
    """Compute the chromatic number exactly, or a valid bracket on budget
    exhaustion (status "bounded", never an error)."""
    t0 = perf_counter()
    deadline = t0 + time_limit
    witness = greedy_bound(graph)
    upper = witness.k
    seed = _construction_seed(graph)
    if seed is not None and seed.k < upper:
        upper, witness = seed.k, seed
    lower = max(
        _structural_lower(graph),
        clique_lower(graph, node_budget=min(100_000, node_limit)),
    )
    nodes = 0
    interrupted = False
    while lower < upper and not interrupted:
        status, found, nodes = _search_k_coloring(
            graph, upper - 1, deadline, node_limit, nodes
        )
        if status == "found":
            upper, witness = found.k, found
        elif status == "none":
            lower = upper
        else:
            interrupted = True
    return ChiResult(
        status="exact" if lower == upper else "bounded",
        lower=lower,
        upper=upper,
        witness=witness,
        nodes=nodes,
        millis=(perf_counter() - t0) * 1000.0,
    )
