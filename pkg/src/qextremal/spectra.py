"""Signless Laplacian Q = D + A and its largest eigenvalue (the Q-index)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import Graph, GraphError, component_masks, induced_subgraph, iter_bits

DEFAULT_TOL = 1e-10
DENSE_LIMIT = 64


class ConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap; carries the best iterate."""

    def __init__(self, message: str, q: float, vector: np.ndarray, residual: float):
        super().__init__(message)
        self.q = q
        self.vector = vector
        self.residual = residual


@dataclass
class QResult:
    q: float
    vector: np.ndarray
    iterations: int
    residual: float
    method: str = "power"


def q_matrix(G: Graph) -> np.ndarray:
    if G.n == 0:
        raise GraphError("the signless Laplacian of the null graph is undefined")
    A = G.adjacency_matrix()
    return A + np.diag(A.sum(axis=1))


def q_sparse(G: Graph) -> sp.csr_matrix:
    if G.n == 0:
        raise GraphError("the signless Laplacian of the null graph is undefined")
    edges = G.edges()
    rows = [u for u, v in edges] + [v for u, v in edges]
    cols = [v for u, v in edges] + [u for u, v in edges]
    A = sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(G.n, G.n))
    return (A + sp.diags(np.asarray(A.sum(axis=1)).ravel())).tocsr()


def _dense_top(Q: np.ndarray) -> tuple[float, np.ndarray]:
    vals, vecs = np.linalg.eigh(Q)
    x = vecs[:, -1]
    if x.sum() < 0:
        x = -x
    return float(vals[-1]), x


def _power(Q, tol: float, max_iter: int) -> tuple[float, np.ndarray, int, float]:
    n = Q.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    q, res = 0.0, math.inf
    for it in range(1, max_iter + 1):
        y = Q @ x
        q = float(x @ y)
        res = float(np.linalg.norm(y - q * x))
        if res <= tol:
            return q, x, it, res
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0, x, it, 0.0
        x = y / norm
    raise ConvergenceError(f"power iteration did not reach residual {tol} in {max_iter} steps",
                           q, x, res)


def _component_q(H: Graph, tol: float, max_iter: int | None) -> QResult:
    if H.n == 1:
        return QResult(0.0, np.ones(1), 0, 0.0, "trivial")
    Q = q_sparse(H) if H.n > DENSE_LIMIT else q_matrix(H)
    cap = max_iter if max_iter is not None else 200 * H.n
    try:
        q, x, it, res = _power(Q, tol, cap)
        return QResult(q, x, it, res)
    except ConvergenceError:
        if H.n > DENSE_LIMIT:
            raise
    q, x = _dense_top(Q)
    res = float(np.linalg.norm(Q @ x - q * x))
    return QResult(q, x, cap, res, "dense")


def q_index(G: Graph, tol: float = DEFAULT_TOL, max_iter: int | None = None) -> QResult:
    """Largest eigenvalue of Q(G) with a unit nonnegative eigenvector.

    Runs power iteration from the all-ones vector on each connected component
    and keeps the largest value (ties go to the lower component). Components of
    order <= 64 that exhaust the iteration cap fall back to a dense solve.
    """
    if G.n == 0:
        raise GraphError("q-index of the null graph is undefined")
    if tol <= 0:
        raise ValueError("tol must be positive")
    best: QResult | None = None
    best_members: list[int] = []
    for comp in component_masks(G):
        members = list(iter_bits(comp))
        H = G if len(members) == G.n else induced_subgraph(G, members)
        res = _component_q(H, tol, max_iter)
        if best is None or res.q > best.q:
            best, best_members = res, members
    x = np.zeros(G.n)
    x[best_members] = np.abs(best.vector)
    return QResult(best.q, x, best.iterations, best.residual, best.method)


def q_dense(G: Graph) -> float:
    """Largest eigenvalue by a full dense symmetric solve (cross-check oracle)."""
    return float(np.linalg.eigvalsh(q_matrix(G))[-1])


def rayleigh_edge_sum(G: Graph, x) -> float:
    """Sum over edges ij of (x_i + x_j)^2, which equals x^T Q x."""
    x = np.asarray(x, dtype=float)
    if x.shape != (G.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({G.n},)")
    edges = G.edges()
    if not edges:
        return 0.0
    e = np.asarray(edges)
    return float(np.sum((x[e[:, 0]] + x[e[:, 1]]) ** 2))


def snk_q_closed_form(n: int, k: int) -> float:
    """q(S_{n,k}) as the top root of x^2 - (n+2k-2)x + 2k(k-1) = 0."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if k == n:
        # empty independent class: the quotient root n is spurious (n = 1)
        return 2.0 * (n - 1)
    a = n + 2 * k - 2
    return (a + math.sqrt(a * a - 8 * k * (k - 1))) / 2
