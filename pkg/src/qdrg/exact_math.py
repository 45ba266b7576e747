"""Exact rational arithmetic, integer polynomials and real-root extraction.

Scalars are :class:`fractions.Fraction` throughout; ``Rational`` is an alias
kept so call sites read like the algebra they implement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

#: Isolating intervals of irrational roots are narrowed to at most this width.
ROOT_WIDTH = Fraction(1, 10**12)


def gaussian_bracket(i: int, b: int) -> int:
    """``[i choose 1]_b = 1 + b + ... + b**(i-1)``, with ``[0] = 0``."""
    if b == 0:
        raise ValueError("gaussian bracket is undefined for b = 0")
    if i < 0:
        raise ValueError("i must be nonnegative")
    return sum(b**j for j in range(i))


# ---------------------------------------------------------------------------
# rational polynomial helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _evaluate(p, x):
    acc = Fraction(0)
    for coeff in reversed(p):
        acc = acc * x + coeff
    return acc


def _derivative(p):
    return _trim(i * p[i] for i in range(1, len(p)))


def _divmod(num, den):
    num = [Fraction(c) for c in _trim(num)]
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = Fraction(den[-1])
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        factor = num[-1] / lead
        quot[shift] = factor
        for j, c in enumerate(den):
            num[shift + j] -= factor * c
        num = _trim(num)
    return _trim(quot), num


def _monic(p):
    p = _trim(p)
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def _gcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _divmod(p, q)[1]
    return _monic(p) if p else []


def _primitive_integer(p) -> list[int]:
    """Scale a rational polynomial to a primitive integer one with positive lead."""
    p = [Fraction(c) for c in _trim(p)]
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with integer coefficients, lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x) -> Fraction:
        return _evaluate(self.coefficients, Fraction(x))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntegerPolynomial":
        p = [1]
        for r in roots:
            p = [0] + p
            for j in range(len(p) - 1):
                p[j] -= r * p[j + 1]
        return cls(tuple(p))

    def __str__(self):
        terms = []
        for power, c in reversed(list(enumerate(self.coefficients))):
            if c:
                terms.append(f"{c}*x^{power}" if power else str(c))
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class Eigenvalue:
    """A real root: exact when rational, otherwise an isolating interval."""

    exact: Fraction | None = None
    lo: Fraction | None = None
    hi: Fraction | None = None

    @property
    def is_rational(self) -> bool:
        return self.exact is not None

    @property
    def midpoint(self) -> Fraction:
        if self.exact is not None:
            return self.exact
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def __str__(self):
        if self.exact is not None:
            return str(self.exact)
        return f"({float(self.lo):.12g}, {float(self.hi):.12g})"


def charpoly_tridiagonal(c: Sequence, a: Sequence, b: Sequence) -> IntegerPolynomial:
    """Characteristic polynomial of the tridiagonal matrix with diagonal ``a``.

    ``c`` holds the subdiagonal ``c_1..c_D`` and ``b`` the superdiagonal
    ``b_0..b_{D-1}``; both have one entry fewer than ``a``.
    """
    if len(c) != len(a) - 1 or len(b) != len(a) - 1 or not a:
        raise ValueError(
            f"dimension mismatch: len(c)={len(c)}, len(a)={len(a)}, len(b)={len(b)}"
        )
    entries = [Fraction(v) for v in (*c, *a, *b)]
    if any(v.denominator != 1 for v in entries):
        raise ValueError("tridiagonal entries must be integers")
    a = [int(v) for v in a]
    prev, cur = [1], [-a[0], 1]
    for i in range(1, len(a)):
        off = int(b[i - 1]) * int(c[i - 1])
        nxt = [0] + cur
        for j, coeff in enumerate(cur):
            nxt[j] -= a[i] * coeff
        for j, coeff in enumerate(prev):
            nxt[j] -= off * coeff
        prev, cur = cur, nxt
    return IntegerPolynomial(tuple(cur))


def squarefree_decomposition(p: IntegerPolynomial) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: factors ``f_i`` (monic, squarefree, coprime) with p = lc * prod f_i**i."""
    f = _monic(p.coefficients)
    out = []
    g = _gcd(f, _derivative(f))
    if not g or len(g) == 1:
        return [(f, 1)]
    w = _divmod(f, g)[0]
    y = _divmod(_derivative(f), g)[0]
    z = _trim(u - v for u, v in _zip_pad(y, _derivative(w)))
    i = 1
    while len(w) > 1:
        h = _gcd(w, z) if z else _monic(w)
        if len(h) > 1:
            out.append((h, i))
        w = _divmod(w, h)[0]
        y = _divmod(z, h)[0] if z else []
        z = _trim(u - v for u, v in _zip_pad(y, _derivative(w)))
        i += 1
    return out


def _zip_pad(p, q):
    n = max(len(p), len(q))
    p = list(p) + [0] * (n - len(p))
    q = list(q) + [0] * (n - len(q))
    return zip(p, q)


def _sturm_chain(p):
    chain = [p, _derivative(p)]
    while len(chain[-1]) > 1:
        rem = _divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign_changes(chain, x) -> int:
    signs = [s for s in (_evaluate(q, x) for q in chain) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u < 0) != (v < 0))


def _isolate(f) -> list[Eigenvalue]:
    """Distinct real roots of a squarefree rational polynomial."""
    if len(f) <= 1:
        return []
    ints = _primitive_integer(f)
    if len(ints) == 2:
        return [Eigenvalue(exact=Fraction(-ints[0], ints[1]))]
    chain = _sturm_chain([Fraction(c) for c in ints])
    bound = 1 + max(Fraction(abs(c), abs(ints[-1])) for c in ints[:-1])
    count = lambda lo, hi: _sign_changes(chain, lo) - _sign_changes(chain, hi)

    intervals = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count(lo, hi)
        if n == 1:
            intervals.append((lo, hi))
        elif n > 1:
            mid = (lo + hi) / 2
            stack.extend([(lo, mid), (mid, hi)])

    roots = [_refine(ints, lo, hi, count) for lo, hi in intervals]
    roots.sort(key=lambda e: e.midpoint, reverse=True)
    return roots


def _refine(ints, lo, hi, count) -> Eigenvalue:
    """Narrow ``(lo, hi]``, which holds exactly one root, and decide whether it is rational.

    A rational root ``p/q`` has ``q`` dividing the leading coefficient ``L``, and two
    such rationals differ by at least ``1/L^2``. Once the interval is narrower than
    ``1/(2 L^2)`` the only candidate is the best approximation with denominator <= L.
    """
    lead = abs(ints[-1])
    separation = Fraction(1, 2 * lead * lead)

    def bisect(lo, hi, width):
        while hi - lo > width:
            mid = (lo + hi) / 2
            if _evaluate(ints, mid) == 0:
                return mid, mid
            if count(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return lo, hi

    if _evaluate(ints, hi) == 0:
        return Eigenvalue(exact=hi)
    lo, hi = bisect(lo, hi, separation)
    if lo == hi:
        return Eigenvalue(exact=lo)
    candidate = ((lo + hi) / 2).limit_denominator(lead)
    if lo < candidate <= hi and _evaluate(ints, candidate) == 0:
        return Eigenvalue(exact=candidate)
    lo, hi = bisect(lo, hi, ROOT_WIDTH)
    if lo == hi:
        return Eigenvalue(exact=lo)
    return Eigenvalue(lo=lo, hi=hi)


def real_roots(p: IntegerPolynomial) -> list[Eigenvalue]:
    """Distinct real roots of ``p``, sorted descending.

    Rational roots come back exact; irrational ones as isolating intervals of
    width at most ``ROOT_WIDTH`` on which ``p`` changes sign.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    roots = []
    for factor, _ in squarefree_decomposition(p):
        roots.extend(_isolate(factor))
    roots.sort(key=lambda e: e.midpoint, reverse=True)
    return roots


def roots_with_multiplicity(p: IntegerPolynomial) -> list[tuple[Eigenvalue, int]]:
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    out = []
    for factor, mult in squarefree_decomposition(p):
        out.extend((root, mult) for root in _isolate(factor))
    out.sort(key=lambda pair: pair[0].midpoint, reverse=True)
    return out


def rational_polynomial_to_integer(coefficients: Sequence) -> IntegerPolynomial:
    """Clear denominators of a rational polynomial (roots are unchanged)."""
    return IntegerPolynomial(tuple(_primitive_integer(coefficients)))


def is_integer(x: Fraction) -> bool:
    return Fraction(x).denominator == 1
