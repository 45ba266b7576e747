"""GF(4) = {0, 1, w, w^2} with w^2 = w + 1, encoded as the ints 0, 1, 2, 3.

Bit 0 is the constant coefficient and bit 1 the coefficient of w, so addition
is XOR. ``MUL`` and ``CONJ`` are the lookup tables used by the builders;
:class:`GF4Element` wraps them for readable scalar code and tests.
"""
from __future__ import annotations

from dataclasses import dataclass


def _poly_mul(x: int, y: int) -> int:
    # carry-less product reduced modulo w^2 + w + 1
    p = 0
    for bit in range(2):
        if y >> bit & 1:
            p ^= x << bit
    if p & 4:
        p ^= 0b111
    return p


MUL = tuple(tuple(_poly_mul(x, y) for y in range(4)) for x in range(4))
CONJ = tuple(MUL[x][x] for x in range(4))  # Frobenius x -> x^2
INV = (None, 1, 3, 2)
NAMES = ("0", "1", "w", "w^2")


@dataclass(frozen=True)
class GF4Element:
    value: int

    def __post_init__(self):
        if self.value not in range(4):
            raise ValueError(f"GF(4) element must be encoded in 0..3, got {self.value}")

    def __add__(self, other: "GF4Element") -> "GF4Element":
        return GF4Element(self.value ^ other.value)

    __sub__ = __add__

    def __neg__(self) -> "GF4Element":
        return self

    def __mul__(self, other: "GF4Element") -> "GF4Element":
        return GF4Element(MUL[self.value][other.value])

    def inverse(self) -> "GF4Element":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(4)")
        return GF4Element(INV[self.value])

    def conjugate(self) -> "GF4Element":
        return GF4Element(CONJ[self.value])

    def __repr__(self):
        return f"GF4({NAMES[self.value]})"

    @classmethod
    def elements(cls) -> list["GF4Element"]:
        return [cls(v) for v in range(4)]


def hermitian(x, y) -> int:
    """``h(x, y) = sum x_i * conj(y_i)`` on int-encoded vectors."""
    acc = 0
    for a, b in zip(x, y):
        acc ^= MUL[a][CONJ[b]]
    return acc


def normalize(v) -> tuple[int, ...]:
    """Scale ``v`` so its first nonzero coordinate is 1 (projective point)."""
    lead = next(a for a in v if a)
    inv = INV[lead]
    return tuple(MUL[inv][a] for a in v)
