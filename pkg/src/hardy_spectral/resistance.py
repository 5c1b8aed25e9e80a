"""Effective resistance between disjoint vertex sets.

1/R(A, B) is the minimum energy of a potential held at 1 on A and 0 on B;
masses play no role. The primary route is one SPD solve for the harmonic
extension; a pseudoinverse route exists purely as a cross-check oracle.
"""

from __future__ import annotations

import numpy as np

from . import errors
from .graph import VertexSet, WeightedGraph
from .linalg import cholesky_solve, jacobi_eigen, quadratic_form
from .spectral import harmonic_extension, laplacian

_KERNEL_CUTOFF = 1e-10


def _check_sets(graph: WeightedGraph, a: VertexSet, b: VertexSet) -> None:
    n = graph.vertex_count
    if len(a) == 0 or len(b) == 0:
        raise errors.EmptySet("resistance needs two nonempty sets")
    if not a.isdisjoint(b):
        raise errors.SetsOverlap(f"sets share vertices {sorted(set(a) & set(b))}")
    if any(not (0 <= v < n) for v in list(a) + list(b)):
        raise errors.LengthMismatch("vertex id out of range")


def _energy_given_laplacian(lap: np.ndarray, a_ids, b_ids) -> float:
    """Minimum energy with potential 1 on a_ids and 0 on b_ids: the inner
    routine shared by the public function and the content enumerations,
    which call it many times against one prebuilt Laplacian."""
    n = lap.shape[0]
    x = np.zeros(n)
    x[a_ids] = 1.0
    outside = np.ones(n, dtype=bool)
    outside[a_ids] = False
    outside[b_ids] = False
    free = np.flatnonzero(outside)
    if free.size:
        rhs = -lap[np.ix_(free, a_ids)].sum(axis=1)
        x[free] = cholesky_solve(lap[np.ix_(free, free)], rhs)
    return float(x @ (lap @ x))


def effective_resistance(graph: WeightedGraph, a: VertexSet, b: VertexSet) -> float:
    """R(A, B) via the harmonic extension of the unit voltage drop.

    When A and B exhaust the vertices there is nothing to extend and the
    energy is just the total conductance of the crossing edges.
    """
    _check_sets(graph, a, b)
    if len(a) + len(b) == graph.vertex_count:
        in_a, in_b = set(a.members), set(b.members)
        cut = sum(k for (u, v, k) in graph.edges
                  if (u in in_a and v in in_b) or (u in in_b and v in in_a))
        return 1.0 / cut
    fixed = {v: 1.0 for v in a}
    fixed.update({v: 0.0 for v in b})
    x = harmonic_extension(graph, fixed)
    lap, _, _ = laplacian(graph)
    return 1.0 / quadratic_form(lap, x)


def resistance_via_pseudoinverse(graph: WeightedGraph, a: int, b: int) -> float:
    """Oracle route for singleton sets: chi^T L^+ chi with the pseudoinverse
    built from the full eigendecomposition (kernel eigenvalues zeroed)."""
    if a == b:
        raise errors.SameVertex(f"need two distinct vertices, got {a} twice")
    n = graph.vertex_count
    if not (0 <= a < n and 0 <= b < n):
        raise errors.LengthMismatch("vertex id out of range")
    lap, _, _ = laplacian(graph)
    dec = jacobi_eigen(lap)
    cutoff = _KERNEL_CUTOFF * float(np.max(np.abs(dec.eigenvalues)))
    keep = np.abs(dec.eigenvalues) > cutoff
    inv = np.zeros_like(dec.eigenvalues)
    inv[keep] = 1.0 / dec.eigenvalues[keep]
    pinv = (dec.eigenvectors * inv) @ dec.eigenvectors.T
    chi = np.zeros(n)
    chi[a], chi[b] = 1.0, -1.0
    return float(chi @ pinv @ chi)
