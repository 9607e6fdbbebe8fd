"""Adjacency and Laplacian spectra.

The eigensolver is a cyclic Jacobi method.  Sweeps use the round-robin
(tournament) ordering, so each step annihilates ``n // 2`` disjoint
off-diagonal pairs at once and can be applied as a single orthogonal
similarity ``J^T A J``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

OFF_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    def __init__(self, off_norm: float, sweeps: int):
        self.off_norm = off_norm
        super().__init__(f"Jacobi did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order with matching eigenvector columns.

    ``residual`` is ``max_i ||M v_i - lambda_i v_i||`` and ``sweeps`` the
    number of full Jacobi sweeps that were run.
    """

    values: np.ndarray
    vectors: np.ndarray
    residual: float
    sweeps: int

    @property
    def max(self) -> float:
        return float(self.values[-1])


def laplacian(graph: Graph) -> np.ndarray:
    a = graph.adjacency_matrix()
    return (np.diag(a.sum(axis=1)) - a).astype(float)


def adjacency(graph: Graph) -> np.ndarray:
    return graph.adjacency_matrix().astype(float)


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """``n - 1`` (or ``n``, for odd n) rounds of disjoint pairs covering every pair once."""
    players = list(range(n + (n % 2)))
    k = len(players)
    rounds = []
    for _ in range(k - 1):
        ps, qs = [], []
        for i in range(k // 2):
            p, q = players[i], players[k - 1 - i]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def eigenvalues(matrix: np.ndarray, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Diagonalise a real symmetric matrix.

    Stops once the off-diagonal Frobenius norm is at most
    ``tol * ||matrix||_F``; raises :class:`ConvergenceError` after
    ``max_sweeps``.
    """
    m0 = np.array(matrix, dtype=float)
    n = m0.shape[0]
    if m0.ndim != 2 or m0.shape != (n, n) or n < 1:
        raise ValueError(f"expected a nonempty square matrix, got shape {m0.shape}")
    if not np.array_equal(m0, m0.T):
        raise ValueError("matrix is not symmetric")
    a = m0.copy()
    v = np.eye(n)
    target = tol * np.linalg.norm(m0)
    rounds = _round_robin(n)
    sweeps = 0
    off = _off_norm(a)
    while off > target:
        if sweeps == max_sweeps:
            raise ConvergenceError(off, sweeps)
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            j = np.eye(n)
            j[p, p] = c
            j[q, q] = c
            j[p, q] = s
            j[q, p] = -s
            a = j.T @ a @ j
            a = 0.5 * (a + a.T)
            a[p, q] = a[q, p] = 0.0
            v = v @ j
        sweeps += 1
        off = _off_norm(a)
    lam = np.diag(a).copy()
    order = np.argsort(lam, kind="stable")
    lam, v = lam[order], v[:, order]
    res = np.linalg.norm(m0 @ v - v * lam, axis=0).max()
    return Spectrum(lam, v, float(res), sweeps)


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def adjacency_spectrum(graph: Graph) -> Spectrum:
    return eigenvalues(adjacency(graph))


def laplacian_spectrum(graph: Graph) -> Spectrum:
    return eigenvalues(laplacian(graph))


def graph_energy(graph: Graph, spectrum: Spectrum | None = None) -> float:
    """Sum of absolute adjacency eigenvalues."""
    spec = adjacency_spectrum(graph) if spectrum is None else spectrum
    return float(np.abs(spec.values).sum())


def laplacian_spectral_radius(graph: Graph, spectrum: Spectrum | None = None) -> float:
    spec = laplacian_spectrum(graph) if spectrum is None else spectrum
    return max(spec.max, 0.0)


def top_laplacian_vector(graph: Graph, spectrum: Spectrum | None = None) -> np.ndarray:
    spec = laplacian_spectrum(graph) if spectrum is None else spectrum
    return spec.vectors[:, -1]


def quadratic_form(graph: Graph, x) -> float | np.ndarray:
    """Edge-wise ``sum (x(u) - x(v))^2``; ``x`` may be a batch of row vectors."""
    x = np.asarray(x, dtype=float)
    if not graph.edges:
        return 0.0 if x.ndim == 1 else np.zeros(x.shape[0])
    e = np.array(graph.edges)
    diff = x[..., e[:, 0]] - x[..., e[:, 1]]
    return (diff * diff).sum(axis=-1)


def pairwise_square_sum(x) -> float | np.ndarray:
    """``sum_u sum_v (x(u) - x(v))^2`` over ordered pairs, computed directly."""
    x = np.asarray(x, dtype=float)
    diff = x[..., :, None] - x[..., None, :]
    return (diff * diff).sum(axis=(-2, -1))


def fiedler_ratio(graph: Graph, x) -> float | np.ndarray:
    """``2n * x^T L x / sum_u sum_v (x(u) - x(v))^2`` for nonconstant ``x``.

    Its maximum over nonconstant vectors is the Laplacian spectral radius.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != graph.n:
        raise ValueError(f"vector length {x.shape[-1]} does not match n={graph.n}")
    num = quadratic_form(graph, x)
    # sum over ordered pairs = 2n * sum (x - mean)^2; centring avoids cancellation
    centred = x - x.mean(axis=-1, keepdims=True)
    spread = (centred * centred).sum(axis=-1)
    if np.any(spread <= 1e-28 * (x * x).sum(axis=-1)):
        raise ValueError("ratio undefined for a constant vector")
    return num / spread


def check_sum_identity(x) -> tuple[float, float]:
    """Both sides of ``1/2 sum_u sum_v (x(u)-x(v))^2 = n sum x^2 - (sum x)^2``."""
    x = np.asarray(x, dtype=float)
    lhs = 0.5 * float(pairwise_square_sum(x))
    rhs = float(x.size * (x * x).sum() - x.sum() ** 2)
    return lhs, rhs
