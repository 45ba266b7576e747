"""Linear codes over GF(2) and GF(3), and the two Golay codes."""
from __future__ import annotations

import itertools
from collections import Counter
from functools import cached_property

import numpy as np

from ..errors import CodeVerificationFailed


def rref_mod(matrix: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over the prime field GF(q), and the pivot columns."""
    m = np.array(matrix, dtype=np.int64) % q
    pivots = []
    row = 0
    for col in range(m.shape[1]):
        hits = np.flatnonzero(m[row:, col]) + row
        if not hits.size:
            continue
        m[[row, hits[0]]] = m[[hits[0], row]]
        m[row] = m[row] * pow(int(m[row, col]), -1, q) % q
        for r in range(m.shape[0]):
            if r != row and m[r, col]:
                m[r] = (m[r] - m[r, col] * m[row]) % q
        pivots.append(col)
        row += 1
        if row == m.shape[0]:
            break
    return m[:row], pivots


class LinearCode:
    """Code over GF(q), q prime, given by a generator matrix with independent rows."""

    def __init__(self, q: int, generator, declared_distance: int | None = None):
        self.q = q
        self.generator = np.array(generator, dtype=np.int64) % q
        self.length = self.generator.shape[1]
        if len(rref_mod(self.generator, q)[1]) != self.generator.shape[0]:
            raise CodeVerificationFailed("generator rows are dependent")
        self.declared_distance = declared_distance

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    @cached_property
    def codewords(self) -> np.ndarray:
        messages = np.array(list(itertools.product(range(self.q), repeat=self.dimension)), dtype=np.int64)
        return messages @ self.generator % self.q

    @cached_property
    def weight_enumerator(self) -> dict[int, int]:
        return dict(sorted(Counter((self.codewords != 0).sum(axis=1).tolist()).items()))

    @property
    def minimum_distance(self) -> int:
        return min(w for w in self.weight_enumerator if w)

    def verify(self) -> "LinearCode":
        if self.declared_distance is not None and self.minimum_distance != self.declared_distance:
            raise CodeVerificationFailed(
                f"minimum distance {self.minimum_distance}, declared {self.declared_distance}"
            )
        return self

    def parity_check(self) -> np.ndarray:
        """``H`` with ``G H^T = 0``, from the systematic form ``[I | A]`` up to column order."""
        r, pivots = rref_mod(self.generator, self.q)
        free = [c for c in range(self.length) if c not in pivots]
        H = np.zeros((len(free), self.length), dtype=np.int64)
        for i, c in enumerate(free):
            H[i, c] = 1
            H[i, pivots] = (-r[:, c]) % self.q
        return H


def cyclic_code(q: int, n: int, generator_poly, extend: bool = True, declared_distance=None) -> LinearCode:
    """Cyclic code of length ``n`` from ``g`` (coefficients lowest degree first), optionally parity-extended."""
    g = list(generator_poly)
    k = n - (len(g) - 1)
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i:i + len(g)] = g
    if extend:
        rows = np.hstack([rows, (-rows.sum(axis=1, keepdims=True)) % q])
    return LinearCode(q, rows, declared_distance)


# x^5 + x^4 + 2x^3 + x^2 + 2 over GF(3): the [11,6,5] ternary Golay code
TERNARY_GOLAY_POLY = (2, 0, 1, 2, 1, 1)
# x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 over GF(2): the [23,12,7] binary Golay code
BINARY_GOLAY_POLY = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)


def ternary_golay() -> LinearCode:
    """Extended ternary Golay code [12,6,6], verified over all 729 codewords."""
    return cyclic_code(3, 11, TERNARY_GOLAY_POLY, declared_distance=6).verify()


def binary_golay() -> LinearCode:
    """Extended binary Golay code [24,12,8], verified over all 4096 codewords."""
    code = cyclic_code(2, 23, BINARY_GOLAY_POLY, declared_distance=8).verify()
    expected = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    if code.weight_enumerator != expected:
        raise CodeVerificationFailed(f"weight enumerator {code.weight_enumerator} != {expected}")
    return code
