"""Builders for the explicit graphs satisfying the six conditions."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..errors import CodeVerificationFailed, DiameterUnsupported
from ..graphs import Graph, from_adjacency
from . import gf4
from .codes import binary_golay, ternary_golay


def grid_3x3() -> Graph:
    """3x3 rook's graph: cells (i, j), adjacent when they share a row or a column."""
    cells = list(itertools.product(range(3), repeat=2))
    adj = np.array([[u != v and (u[0] == v[0] or u[1] == v[1]) for v in cells] for u in cells])
    return from_adjacency(adj, cells)


def gq22_graph() -> Graph:
    """Complement of T(6): 2-subsets of {1..6}, adjacent when disjoint."""
    pairs = list(itertools.combinations(range(1, 7), 2))
    adj = np.array([[not set(u) & set(v) for v in pairs] for u in pairs])
    return from_adjacency(adj, pairs)


def _row_candidates(dim: int, pivot: int, pivots: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Isotropic RREF rows with leading 1 at ``pivot`` and zeros at the other pivots."""
    free = [c for c in range(pivot + 1, dim) if c not in pivots]
    out = []
    for values in itertools.product(range(4), repeat=len(free)):
        v = [0] * dim
        v[pivot] = 1
        for c, a in zip(free, values):
            v[c] = a
        if gf4.hermitian(v, v) == 0:
            out.append(tuple(v))
    return out


def maximal_isotropic_subspaces(D: int) -> list[tuple[tuple[int, ...], ...]]:
    """RREF bases of the D-dimensional totally isotropic subspaces of GF(4)^{2D}.

    The form is ``h(x, y) = sum x_i y_i^2``. RREF bases are canonical, so each
    subspace is produced once: backtrack over pivot patterns, then rows.
    """
    dim = 2 * D
    found = []
    for pivots in itertools.combinations(range(dim), D):
        rows = [_row_candidates(dim, p, pivots) for p in pivots]

        def extend(chosen):
            if len(chosen) == D:
                found.append(tuple(chosen))
                return
            for v in rows[len(chosen)]:
                if all(gf4.hermitian(v, w) == 0 for w in chosen):
                    extend(chosen + [v])

        extend([])
    return found


def _points(basis) -> list[tuple[int, ...]]:
    pts = set()
    for coeffs in itertools.product(range(4), repeat=len(basis)):
        if any(coeffs):
            v = [0] * len(basis[0])
            for a, row in zip(coeffs, basis):
                for i, x in enumerate(row):
                    v[i] ^= gf4.MUL[a][x]
            pts.add(gf4.normalize(v))
    return sorted(pts)


def hermitian_dual_polar(D: int) -> Graph:
    """Dual polar graph A_{2D-1}(2): maximal isotropic subspaces, adjacent when meeting in dimension D-1."""
    if D not in (2, 3):
        raise DiameterUnsupported(f"hermitian_dual_polar supports D in {{2, 3}}, got {D}")
    spaces = maximal_isotropic_subspaces(D)
    expected = math.prod(1 + 2 ** (2 * i - 1) for i in range(1, D + 1))
    if len(spaces) != expected:
        raise DiameterUnsupported(f"found {len(spaces)} maximal subspaces, expected {expected}")
    index: dict[tuple[int, ...], int] = {}
    incidence = []
    for basis in spaces:
        incidence.append([index.setdefault(p, len(index)) for p in _points(basis)])
    N = np.zeros((len(spaces), len(index)), dtype=np.float64)
    for row, cols in enumerate(incidence):
        N[row, cols] = 1
    shared = N @ N.T
    adj = shared == (4 ** (D - 1) - 1) // 3
    return from_adjacency(adj, spaces)


def ternary_golay_coset_graph() -> Graph:
    """Coset graph of the extended ternary Golay code, on its 729 syndromes."""
    H = ternary_golay().parity_check()
    r = H.shape[0]
    if r != 6:
        raise CodeVerificationFailed(f"parity check has {r} rows, expected 6")
    gens = np.vstack([H.T, (-H.T) % 3])
    weights = 3 ** np.arange(r)
    if len(set((gens @ weights).tolist())) != 24:
        raise CodeVerificationFailed("weight-1 syndromes are not pairwise distinct")
    vectors = np.array(list(itertools.product(range(3), repeat=r)))[:, ::-1]
    codes = vectors @ weights
    order = np.argsort(codes)
    vectors = vectors[order]
    adj = np.zeros((3**r, 3**r), dtype=bool)
    for g in gens:
        adj[np.arange(3**r), ((vectors + g) % 3) @ weights] = True
    return from_adjacency(adj, [tuple(v) for v in vectors.tolist()])


def octad_graph() -> Graph:
    """The 759 octads of the extended binary Golay code, adjacent when disjoint."""
    words = binary_golay().codewords
    octads = words[(words != 0).sum(axis=1) == 8]
    if len(octads) != 759:
        raise CodeVerificationFailed(f"{len(octads)} octads, expected 759")
    octads = octads[np.lexsort(octads.T[::-1])][::-1]
    o = octads.astype(np.float64)
    adj = (o @ o.T) == 0
    return from_adjacency(adj, [tuple(np.flatnonzero(w).tolist()) for w in octads])


@dataclass(frozen=True)
class Construction:
    name: str
    builder: Callable[[], Graph]
    array: str
    description: str


REGISTRY = {c.name: c for c in (
    Construction("grid3x3", grid_3x3, "{4,2;1,2}", "3x3 rook's graph, near 4-gon of order (2,1)"),
    Construction("gq22", gq22_graph, "{6,4;1,3}", "GQ(2,2) collinearity graph, near 4-gon of order (2,2)"),
    Construction("dual-polar-a3", lambda: hermitian_dual_polar(2), "{10,8;1,5}", "dual polar graph A3(2)"),
    Construction("dual-polar-a5", lambda: hermitian_dual_polar(3), "{42,40,32;1,5,21}", "dual polar graph A5(2)"),
    Construction("golay3-coset", ternary_golay_coset_graph, "{24,22,20;1,2,12}",
                 "coset graph of the extended ternary Golay code, near hexagon of order (2,11)"),
    Construction("octad", octad_graph, "{30,28,24;1,3,15}", "octad graph, near hexagon of order (2,14)"),
)}

OUT_OF_SCOPE = {
    "gh2-8": "generalized hexagon GH(2,8) {18,16,16;1,1,9}: construction out of scope; parameter-verified only",
}
