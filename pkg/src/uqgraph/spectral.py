"""Spectra of unit-quadrance graphs, computed two independent ways.

The dense route diagonalizes the 0/1 adjacency matrix; the Cayley route
evaluates, for every frequency vector c, the cosine sum of the additive
character over the connection set (real because the set is symmetric).
Agreement of the two multisets validates both the graph build and the
field trace machinery. The extreme eigenvalues feed the spectral
chromatic lower bound 1 - lambda1/lambda_min.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DegenerateSpectrumError, NoConvergenceError, TooLargeError
from .field import FieldCtx
from .graph import DEFAULT_MAX_VERTICES, _digit_columns, unit_circle

DENSE_MAX_VERTICES = 4096
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset (descending) with its computation provenance."""

    eigenvalues: np.ndarray
    method: str  # "dense" | "cayley"
    tol: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda1(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[-1])


@dataclass(frozen=True)
class EigenBoundReport:
    """Measured magnitude of non-principal eigenvalues against sqrt(q) and
    2*sqrt(q); both flags are reported, neither is asserted."""

    q: int
    max_nonprincipal_abs: float
    within_sqrt_q: bool
    within_two_sqrt_q: bool


def dense_spectrum(
    graph, tol: float = DEFAULT_TOL, max_vertices: int = DENSE_MAX_VERTICES
) -> Spectrum:
    """Eigenvalues of the symmetric adjacency matrix via a dense solver."""
    n = graph.n_vertices
    if n > max_vertices:
        raise TooLargeError(f"{n} vertices exceed the dense bound {max_vertices}")
    adj = np.zeros((n, n), dtype=np.float64)
    for u in range(n):
        adj[u, graph.neighbors_of(u)] = 1.0
    try:
        eig = np.linalg.eigvalsh(adj)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"dense eigensolver failed: {exc}") from exc
    return Spectrum(eigenvalues=eig[::-1].copy(), method="dense", tol=tol)


def cayley_spectrum(
    ctx: FieldCtx,
    m: int = 2,
    tol: float = DEFAULT_TOL,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Spectrum:
    """Exact eigenvalues as additive-character sums over the unit circle.

    For each frequency c the eigenvalue is the sum over circle points s of
    cos(2*pi*Tr(<c, s>)/p); the zero frequency gives the degree.
    """
    n_vertices = ctx.q**m
    if n_vertices > max_vertices:
        raise TooLargeError(
            f"{n_vertices} vertices exceed the bound {max_vertices}"
        )
    circle = unit_circle(ctx, m, max_vertices)
    add_tab = ctx.add_table()
    traces = ctx.trace_vector()
    cosines = np.cos(2.0 * np.pi * np.arange(ctx.p) / ctx.p)
    cols = _digit_columns(ctx.q, m, n_vertices)
    eig = np.zeros(n_vertices, dtype=np.float64)
    for s in circle:
        inner = None
        for j in range(m):
            times_s = np.array(
                [ctx.mul(x, s.coords[j]) for x in range(ctx.q)], dtype=np.int64
            )
            term = times_s[cols[j]]
            inner = term if inner is None else add_tab[inner, term]
        eig += cosines[traces[inner]]
    eig.sort()
    return Spectrum(eigenvalues=eig[::-1].copy(), method="cayley", tol=tol)


def hoffman_bound(spectrum: Spectrum) -> float:
    """The spectral chromatic lower bound 1 - lambda1/lambda_min.

    Callers take the ceiling for an integer bound. Raises when no safely
    negative eigenvalue exists.
    """
    floor = -spectrum.tol * max(1.0, abs(spectrum.lambda1))
    if spectrum.lambda_min >= floor:
        raise DegenerateSpectrumError(
            f"lambda_min={spectrum.lambda_min} is not negative"
        )
    return 1.0 - spectrum.lambda1 / spectrum.lambda_min


def eigen_bound_report(spectrum: Spectrum, q: int) -> EigenBoundReport:
    """Compare the largest non-principal |eigenvalue| against sqrt(q) and
    2*sqrt(q). One copy of the principal (largest) eigenvalue is excluded."""
    rest = spectrum.eigenvalues[1:]
    max_abs = float(np.max(np.abs(rest))) if rest.size else 0.0
    slack = spectrum.tol * max(1.0, abs(spectrum.lambda1))
    return EigenBoundReport(
        q=q,
        max_nonprincipal_abs=max_abs,
        within_sqrt_q=max_abs <= sqrt(q) + slack,
        within_two_sqrt_q=max_abs <= 2.0 * sqrt(q) + slack,
    )


def grouped_eigenvalues(spectrum: Spectrum) -> list[tuple[float, int]]:
    """Cluster the descending eigenvalues into (value, multiplicity) pairs,
    merging values closer than the scaled tolerance."""
    slack = spectrum.tol * max(1.0, abs(spectrum.lambda1))
    groups = []
    for value in spectrum.eigenvalues:
        value = float(value)
        if groups and groups[-1][0] - value <= slack:
            groups[-1][1] += 1
        else:
            groups.append([value, 1])
    return [(v, c) for v, c in groups]


def write_spectrum(spectrum: Spectrum, sink) -> None:
    """Write one 'eigenvalue multiplicity' pair per line, sorted descending."""
    for value, count in grouped_eigenvalues(spectrum):
        sink.write(f"{value:.9f} {count}\n")


def spectrum_record(spectrum: Spectrum, q: int, m: int) -> dict:
    """JSON-ready summary with the spectral lower bound and the magnitude
    diagnostic; hoffman is null for degenerate spectra."""
    report = eigen_bound_report(spectrum, q)
    try:
        hoffman = round(hoffman_bound(spectrum), 9)
    except DegenerateSpectrumError:
        hoffman = None
    return {
        "q": q,
        "m": m,
        "method": spectrum.method,
        "lambda1": round(spectrum.lambda1, 9),
        "lambdaMin": round(spectrum.lambda_min, 9),
        "maxNonprincipalAbs": round(report.max_nonprincipal_abs, 9),
        "hoffman": hoffman,
    }
