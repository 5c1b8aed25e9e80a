"""Resistance-based content quantities that pin the Laplacian eigenvalues
to within a factor of four.

The one-sided content of (G, S) is the minimum over nonempty vertex sets A
disjoint from S of R(S,A)^{-1} / mu(A); its reciprocal (the extremal
resistance-mass product) is the classical Hardy-style quantity. The
two-sided content minimizes (mu(A)^{-1} + mu(B)^{-1}) / R(A,B) over
disjoint nonempty pairs. Both are computed by exact enumeration behind
explicit size guards; paths get an O(N) tail-set scan, and a level-set
sweep of the fundamental eigenvector provides a cheap upper bound for the
two-sided quantity on larger graphs.

Every enumeration breaks ties by the lexicographic order of
(value, canonical key of A, canonical key of B) so witnesses are identical
across runs and schedules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import errors
from .graph import (VertexSet, WeightedGraph, is_canonical_path, path_graph,
                    validate)
from .resistance import _energy_given_laplacian
from .spectral import laplacian, neumann_eigenvalue

DIRICHLET_ENUM_LIMIT = 20
NEUMANN_ENUM_LIMIT = 12
ISOPERIMETRIC_ENUM_LIMIT = 20

EXACT_ENUMERATION = "exact-enumeration"
PATH_TAILSET = "path-tailset"
SWEEP_HEURISTIC = "sweep-heuristic"

LEVEL_GROUP_RTOL = 1e-9


@dataclass(frozen=True)
class ContentResult:
    """An extremal ratio plus the set (or pair) achieving it. `value` is
    always the eigenvalue-comparable form; `hardy` is its reciprocal."""

    value: float
    witness_a: VertexSet
    witness_b: Optional[VertexSet]
    method: str

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))

    @property
    def hardy(self) -> float:
        return 1.0 / self.value


def _mass_by_mask(masses: list[float], nbits: int) -> np.ndarray:
    out = np.zeros(1 << nbits)
    for mask in range(1, 1 << nbits):
        low = mask & -mask
        out[mask] = out[mask ^ low] + masses[low.bit_length() - 1]
    return out


def _mask_ids(mask: int, universe: list[int]) -> list[int]:
    ids = []
    i = 0
    while mask:
        if mask & 1:
            ids.append(universe[i])
        mask >>= 1
        i += 1
    return ids


def hardy_path(path: WeightedGraph) -> ContentResult:
    """Tail-set scan of a path with boundary vertex 0.

    On a path the extremal set is always a tail {v_k, ..., v_N}, so the
    extremal resistance-mass product is max_k (sum_{i<=k} 1/kappa_i) *
    (sum_{i>=k} mu_i), found in one pass over prefix resistances and
    suffix masses. Smallest k wins ties.
    """
    validate(path)
    if not is_canonical_path(path):
        raise errors.NotAPath("expected edges exactly (0,1), (1,2), ...")
    n = path.vertex_count
    if all(m == 0.0 for m in path.masses[1:]):
        raise errors.ZeroInteriorMass("every interior mass is zero")

    suffix = 0.0
    suffix_mass = [0.0] * (n + 1)
    for i in range(n - 1, 0, -1):
        suffix += path.masses[i]
        suffix_mass[i] = suffix

    best_h = -1.0
    best_k = -1
    prefix_r = 0.0
    for k in range(1, n):
        prefix_r += 1.0 / path.edges[k - 1][2]
        h = prefix_r * suffix_mass[k]
        if h > best_h:
            best_h = h
            best_k = k
    witness = VertexSet.of(range(best_k, n))
    return ContentResult(value=1.0 / best_h, witness_a=witness,
                         witness_b=None, method=PATH_TAILSET)


def dirichlet_content_exact(graph: WeightedGraph, boundary: VertexSet) -> ContentResult:
    """Minimum of R(S,A)^{-1} / mu(A) over nonempty A disjoint from the
    boundary, by enumerating all subsets of the interior.

    Zero-mass subsets are skipped (their ratio is +inf). Guarded at
    interior size 20.
    """
    validate(graph)
    n = graph.vertex_count
    bset = set(boundary.members)
    if not bset or len(bset) >= n or any(not (0 <= v < n) for v in bset):
        raise errors.BadBoundary(f"boundary must be a proper nonempty subset of 0..{n-1}")
    interior = [v for v in range(n) if v not in bset]
    if len(interior) > DIRICHLET_ENUM_LIMIT:
        raise errors.TooLarge(len(interior), DIRICHLET_ENUM_LIMIT)

    lap, _, _ = laplacian(graph)
    b_ids = np.array(sorted(bset))
    mass = _mass_by_mask([graph.masses[v] for v in interior], len(interior))

    best: Optional[tuple[float, int]] = None
    for mask in range(1, 1 << len(interior)):
        mu = mass[mask]
        if mu == 0.0:
            continue
        a_ids = np.array(_mask_ids(mask, interior))
        ratio = _energy_given_laplacian(lap, a_ids, b_ids) / mu
        cand = (ratio, VertexSet.of(a_ids).canonical_key)
        if best is None or cand < best:
            best = cand
    if best is None:
        raise errors.ZeroInteriorMass("every interior subset has zero mass")
    return ContentResult(value=best[0], witness_a=VertexSet.from_mask(best[1]),
                         witness_b=None, method=EXACT_ENUMERATION)


def neumann_content_exact(graph: WeightedGraph) -> ContentResult:
    """Minimum of (mu(A)^{-1} + mu(B)^{-1}) / R(A,B) over disjoint nonempty
    pairs, by enumerating all 3^n assignments of vertices to A, B, or
    neither. The (A,B) ~ (B,A) symmetry is removed by keeping the
    orientation whose A has the smaller canonical key. Guarded at n = 12.
    """
    validate(graph)
    n = graph.vertex_count
    if n > NEUMANN_ENUM_LIMIT:
        raise errors.TooLarge(n, NEUMANN_ENUM_LIMIT)
    for v, m in enumerate(graph.masses):
        if m <= 0.0:
            raise errors.ZeroMass(v)

    lap, _, _ = laplacian(graph)
    verts = list(range(n))
    mass = _mass_by_mask(list(graph.masses), n)
    ids = [np.array(_mask_ids(mask, verts)) for mask in range(1 << n)]

    full = (1 << n) - 1
    best: Optional[tuple[float, int, int]] = None
    for a_mask in range(1, full):
        comp = full ^ a_mask
        inv_a = 1.0 / mass[a_mask]
        b_mask = 0
        while True:
            b_mask = (b_mask - comp) & comp
            if b_mask == 0:
                break
            if b_mask > a_mask:
                energy = _energy_given_laplacian(lap, ids[a_mask], ids[b_mask])
                ratio = (inv_a + 1.0 / mass[b_mask]) * energy
                cand = (ratio, a_mask, b_mask)
                if best is None or cand < best:
                    best = cand
    assert best is not None  # n >= 2 always yields a pair
    return ContentResult(value=best[0], witness_a=VertexSet.from_mask(best[1]),
                         witness_b=VertexSet.from_mask(best[2]),
                         method=EXACT_ENUMERATION)


def neumann_content_sweep(graph: WeightedGraph) -> ContentResult:
    """Upper bound on the two-sided content from level sets of the
    fundamental eigenvector.

    For every threshold pair (t-, t+) among the eigenvector's distinct
    values with t- < 0 <= t+, score the pair A = {x <= t-}, B = {x >= t+}
    and keep the best. Never below the exact value, often equal to it.
    """
    x = neumann_eigenvalue(graph).eigenvector
    lap, _, _ = laplacian(graph)
    values = sorted(set(float(v) for v in x))
    neg = [t for t in values if t < 0.0]
    pos = [t for t in values if t >= 0.0]

    best: Optional[tuple[float, int, int]] = None
    for t_minus in neg:
        a = VertexSet.of(np.flatnonzero(x <= t_minus))
        a_ids = np.array(a.members)
        inv_a = 1.0 / graph.mass_of(a)
        for t_plus in pos:
            b = VertexSet.of(np.flatnonzero(x >= t_plus))
            energy = _energy_given_laplacian(lap, a_ids, np.array(b.members))
            ratio = (inv_a + 1.0 / graph.mass_of(b)) * energy
            cand = (ratio, a.canonical_key, b.canonical_key)
            if best is None or cand < best:
                best = cand
    assert best is not None  # eigenvector always takes both signs
    return ContentResult(value=best[0], witness_a=VertexSet.from_mask(best[1]),
                         witness_b=VertexSet.from_mask(best[2]),
                         method=SWEEP_HEURISTIC)


def isoperimetric_exact(graph: WeightedGraph) -> ContentResult:
    """Minimum cut conductance over the lighter side's mass, over all
    bipartitions (vertex 0 fixed on the A side). Guarded at n = 20."""
    validate(graph)
    n = graph.vertex_count
    if n > ISOPERIMETRIC_ENUM_LIMIT:
        raise errors.TooLarge(n, ISOPERIMETRIC_ENUM_LIMIT)
    if n < 2:
        raise errors.EmptySet("isoperimetric constant needs two vertices")
    for v, m in enumerate(graph.masses):
        if m <= 0.0:
            raise errors.ZeroMass(v)

    u_arr = np.array([e[0] for e in graph.edges])
    v_arr = np.array([e[1] for e in graph.edges])
    k_arr = np.array([e[2] for e in graph.edges])
    mass = _mass_by_mask(list(graph.masses), n)
    total = mass[(1 << n) - 1]

    best: Optional[tuple[float, int]] = None
    for t in range(1 << (n - 1)):
        a_mask = (t << 1) | 1
        if a_mask == (1 << n) - 1:
            continue
        crossing = ((a_mask >> u_arr) & 1) != ((a_mask >> v_arr) & 1)
        cut = float(k_arr[crossing].sum())
        ratio = cut / min(mass[a_mask], total - mass[a_mask])
        cand = (ratio, a_mask)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return ContentResult(value=best[0], witness_a=VertexSet.from_mask(best[1]),
                         witness_b=None, method=EXACT_ENUMERATION)


def level_set_quotient(graph: WeightedGraph, boundary: VertexSet,
                       x: np.ndarray) -> tuple[WeightedGraph, list[float]]:
    """Collapse the level sets of a nonnegative boundary-vanishing potential
    into a path.

    Values are grouped into levels with relative tolerance 1e-9 * max|x|;
    an edge spanning several levels is cut into segments with conductance
    inversely proportional to each level gap (exactly the zero-mass edge
    split), and consecutive level classes are joined by the total
    conductance between them. The returned path has the level-0 class as
    vertex 0 and preserves the Dirichlet eigenvalue when x is the ground
    state of (graph, boundary).
    """
    validate(graph)
    x = np.asarray(x, dtype=float)
    n = graph.vertex_count
    if x.shape != (n,):
        raise errors.DimensionMismatch(f"potential shape {x.shape} != ({n},)")
    bset = set(boundary.members)
    if not bset or len(bset) >= n:
        raise errors.BadBoundary("boundary must be a proper nonempty subset")

    scale = float(np.max(np.abs(x)))
    if scale == 0.0:
        raise errors.ZeroVector("potential is identically zero")
    tol = LEVEL_GROUP_RTOL * scale
    for v in bset:
        if abs(x[v]) > tol:
            raise errors.BoundaryNotZero(f"x[{v}] = {x[v]!r} on the boundary")

    has_pos = bool(np.any(x > tol))
    has_neg = bool(np.any(x < -tol))
    if has_pos and has_neg:
        raise errors.MixedSigns("potential takes both signs beyond tolerance")
    if has_neg:
        x = -x
    y = np.where(np.abs(x) <= tol, 0.0, x)

    # group sorted distinct values into levels; representative = group minimum
    levels: list[float] = []
    group_of: dict[float, int] = {}
    for val in sorted(set(float(v) for v in y)):
        if not levels or val - levels[-1] > tol:
            levels.append(val)
        group_of[val] = len(levels) - 1
    level_of = [group_of[float(v)] for v in y]

    nlev = len(levels)
    mu_t = [0.0] * nlev
    for v in range(n):
        mu_t[level_of[v]] += graph.masses[v]
    kappa_t = [0.0] * nlev
    for (u, v, k) in graph.edges:
        i, j = level_of[u], level_of[v]
        if i == j:
            continue
        if i > j:
            i, j = j, i
        if j == i + 1:
            kappa_t[j] += k
        else:
            span = levels[j] - levels[i]
            for m in range(i + 1, j + 1):
                kappa_t[m] += k * span / (levels[m] - levels[m - 1])
    return path_graph(mu_t, kappa_t[1:]), levels
