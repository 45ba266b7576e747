"""Everything computable from an intersection array alone."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import (
    C1NotOne,
    DiameterTooLargeForSearch,
    InvalidArray,
    IrrationalEigenvalue,
    NegativeAi,
    NonIntegralKi,
    TerminalIdentityFails,
)
from .exact_math import Eigenvalue, charpoly_tridiagonal, gaussian_bracket, real_roots

#: Integrality slack for multiplicities of irrational eigenvalues (midpoint based).
APPROX_TOLERANCE = 1e-6

#: Largest diameter the Q-polynomial ordering search accepts.
MAX_ORDERING_DIAMETER = 10


@dataclass(frozen=True)
class IntersectionArray:
    """A validated array ``{b_0..b_{D-1}; c_1..c_D}``; build with :func:`validate`."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    a: tuple[int, ...]
    k_seq: tuple[int, ...]

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    @property
    def n(self) -> int:
        return sum(self.k_seq)

    @property
    def b_full(self) -> tuple[int, ...]:
        """``b_0..b_D`` with ``b_D = 0``."""
        return self.b + (0,)

    @property
    def c_full(self) -> tuple[int, ...]:
        """``c_0..c_D`` with ``c_0 = 0``."""
        return (0,) + self.c

    def __str__(self):
        return "{%s;%s}" % (",".join(map(str, self.b)), ",".join(map(str, self.c)))

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        """Parse ``"{4,2;1,2}"`` (braces optional)."""
        m = re.fullmatch(r"\s*\{?\s*([-\d,\s]+);([-\d,\s]+)\}?\s*", text)
        if not m:
            raise InvalidArray(f"cannot parse intersection array {text!r}")
        parse = lambda s: [int(v) for v in s.split(",") if v.strip()]
        return validate(parse(m.group(1)), parse(m.group(2)))


def validate(raw_b: Sequence, raw_c: Sequence) -> IntersectionArray:
    b, c = list(raw_b), list(raw_c)
    if not b or len(b) != len(c):
        raise InvalidArray(f"need nonempty lists of equal length, got {len(b)} and {len(c)}")
    for v in b + c:
        if Fraction(v).denominator != 1:
            raise InvalidArray(f"intersection numbers must be integers, got {v}")
    b, c = [int(v) for v in b], [int(v) for v in c]
    if any(v <= 0 for v in b + c):
        raise InvalidArray("every b_i (i < D) and c_i (i >= 1) must be positive")
    if c[0] != 1:
        raise C1NotOne(f"c_1 must be 1, got {c[0]}")
    D, k = len(b), b[0]
    b_full, c_full = b + [0], [0] + c
    a = [k - b_full[i] - c_full[i] for i in range(D + 1)]
    for i, ai in enumerate(a):
        if ai < 0:
            raise NegativeAi(f"a_{i} = k - b_{i} - c_{i} = {ai} < 0")
    k_seq = [1]
    for i in range(1, D + 1):
        num = k_seq[-1] * b_full[i - 1]
        if num % c_full[i]:
            raise NonIntegralKi(f"k_{i} = {Fraction(num, c_full[i])} is not an integer")
        k_seq.append(num // c_full[i])
    return IntersectionArray(tuple(b), tuple(c), tuple(a), tuple(k_seq))


# ---------------------------------------------------------------------------
# cosines, multiplicities, spectrum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CosineSequence:
    theta: Fraction
    sigma: tuple[Fraction, ...]
    terminal_residual: Fraction = Fraction(0)

    @property
    def satisfies_terminal_identity(self) -> bool:
        return self.terminal_residual == 0


def cosine_sequence(arr: IntersectionArray, theta, check: bool = True) -> CosineSequence:
    """Run the three-term recurrence from ``sigma_0 = 1``, ``sigma_1 = theta/k``.

    The last relation ``c_D sigma_{D-1} + a_D sigma_D = theta sigma_D`` only
    holds when ``theta`` is an eigenvalue; with ``check`` a failure raises.
    """
    theta = Fraction(theta)
    D, a, b, c = arr.D, arr.a, arr.b_full, arr.c_full
    sigma = [Fraction(1), theta / arr.k]
    for i in range(1, D):
        sigma.append((theta * sigma[i] - c[i] * sigma[i - 1] - a[i] * sigma[i]) / b[i])
    residual = c[D] * sigma[D - 1] + a[D] * sigma[D] - theta * sigma[D]
    if check and residual != 0:
        raise TerminalIdentityFails(f"theta = {theta} is not an eigenvalue of {arr}")
    return CosineSequence(theta, tuple(sigma), residual)


def _biggs(arr: IntersectionArray, sigma: Sequence[Fraction]) -> Fraction:
    return Fraction(arr.n) / sum(ki * s * s for ki, s in zip(arr.k_seq, sigma))


def multiplicity(arr: IntersectionArray, theta) -> Fraction:
    """Biggs' formula ``n / sum_i k_i sigma_i^2``."""
    return _biggs(arr, cosine_sequence(arr, theta).sigma)


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: tuple[Eigenvalue, ...]
    multiplicities: tuple[Fraction, ...]
    cosines: tuple[CosineSequence, ...]
    approximate: tuple[bool, ...]

    @property
    def is_rational(self) -> bool:
        return not any(self.approximate)

    @property
    def thetas(self) -> tuple[Fraction, ...]:
        """Exact (or midpoint) eigenvalues, descending."""
        return tuple(e.midpoint for e in self.eigenvalues)

    def index_of(self, theta) -> int:
        theta = Fraction(theta)
        for i, e in enumerate(self.eigenvalues):
            if e.is_rational and e.exact == theta:
                return i
        raise TerminalIdentityFails(f"{theta} is not a rational eigenvalue")

    @property
    def minimal(self) -> Eigenvalue:
        return self.eigenvalues[-1]


def characteristic_polynomial(arr: IntersectionArray):
    return charpoly_tridiagonal(arr.c, arr.a, arr.b)


def spectrum(arr: IntersectionArray) -> SpectralData:
    roots = real_roots(characteristic_polynomial(arr))
    if len(roots) != arr.D + 1:
        raise InvalidArray(f"expected {arr.D + 1} distinct eigenvalues, found {len(roots)}")
    mults, cosines, approx = [], [], []
    for root in roots:
        cs = cosine_sequence(arr, root.midpoint, check=root.is_rational)
        cosines.append(cs)
        mults.append(_biggs(arr, cs.sigma))
        approx.append(not root.is_rational)
    return SpectralData(tuple(roots), tuple(mults), tuple(cosines), tuple(approx))


# ---------------------------------------------------------------------------
# Krein parameters and Q-polynomial orderings
# ---------------------------------------------------------------------------

def krein_parameters(sd: SpectralData, arr: IntersectionArray) -> list[list[list[Fraction]]]:
    """``q[i][j][h] = (m_i m_j / n) sum_l k_l s_l(i) s_l(j) s_l(h)`` in spectrum order."""
    if not sd.is_rational:
        raise IrrationalEigenvalue("Krein parameters need a fully rational spectrum")
    d1 = arr.D + 1
    n = arr.n
    sig = [cs.sigma for cs in sd.cosines]
    m = sd.multiplicities
    ks = arr.k_seq
    q = [[[Fraction(0)] * d1 for _ in range(d1)] for _ in range(d1)]
    for i in range(d1):
        for j in range(i, d1):
            pair = [ks[l] * sig[i][l] * sig[j][l] for l in range(d1)]
            scale = m[i] * m[j] / n
            for h in range(d1):
                value = scale * sum(p * sig[h][l] for l, p in enumerate(pair))
                q[i][j][h] = q[j][i][h] = value
    return q


def _triple_constraint(x: int, y: int, z: int) -> int:
    """+1: Krein value must be nonzero, -1: must vanish, 0: unconstrained."""
    total = x + y + z
    for v in (x, y, z):
        other = total - v
        if v > other:
            return -1
    for v in (x, y, z):
        if v == total - v:
            return 1
    return 0


def q_polynomial_orderings(arr: IntersectionArray, sd: SpectralData | None = None,
                           krein=None) -> list[tuple[int, ...]]:
    """Every ordering ``(0, i_1, .., i_D)`` of spectrum indices that is Q-polynomial.

    Exhaustive over permutations, pruned by checking each new position against
    all earlier ones, so the result equals a brute-force permutation scan.
    """
    if arr.D > MAX_ORDERING_DIAMETER:
        raise DiameterTooLargeForSearch(f"D = {arr.D} > {MAX_ORDERING_DIAMETER}")
    sd = sd or spectrum(arr)
    q = krein if krein is not None else krein_parameters(sd, arr)
    d1 = arr.D + 1
    found: list[tuple[int, ...]] = []

    def consistent(order):
        r = len(order) - 1
        for x in range(r + 1):
            for y in range(r + 1):
                for z in range(r + 1):
                    if max(x, y, z) != r:
                        continue
                    rule = _triple_constraint(x, y, z)
                    if rule == 0:
                        continue
                    value = q[order[y]][order[z]][order[x]]
                    if (rule < 0) != (value == 0):
                        return False
        return True

    def extend(order, remaining):
        if not remaining:
            found.append(tuple(order))
            return
        for idx in sorted(remaining):
            order.append(idx)
            if consistent(order):
                extend(order, remaining - {idx})
            order.pop()

    extend([0], set(range(1, d1)))
    return found


# ---------------------------------------------------------------------------
# classical parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassicalParameters:
    D: int
    b: int
    alpha: Fraction
    sigma_cl: Fraction

    def __post_init__(self):
        if self.b in (0, -1):
            raise ValueError("classical parameter b must not be 0 or -1")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "sigma_cl", Fraction(self.sigma_cl))

    def c_value(self, i: int) -> Fraction:
        br = lambda j: gaussian_bracket(j, self.b)
        return br(i) * (1 + self.alpha * br(i - 1)) if i > 0 else Fraction(0)

    def b_value(self, i: int) -> Fraction:
        br = lambda j: gaussian_bracket(j, self.b)
        return (br(self.D) - br(i)) * (self.sigma_cl - self.alpha * br(i))

    def __str__(self):
        return f"({self.D},{self.b},{self.alpha},{self.sigma_cl})"


def classical_array(cp: ClassicalParameters) -> IntersectionArray:
    bs = [cp.b_value(i) for i in range(cp.D)]
    cs = [cp.c_value(i) for i in range(1, cp.D + 1)]
    return validate(bs, cs)


def classical_fit(arr: IntersectionArray) -> list[ClassicalParameters]:
    """All classical parameter sets with integer ``b`` in ``[-k, k]`` reproducing ``arr``.

    Diameter 1 is excluded: ``alpha`` is then unconstrained.
    """
    if arr.D < 2:
        return []
    k, D = arr.k, arr.D
    fits = []
    for base in range(-k, k + 1):
        if base in (0, -1):
            continue
        bracket_d = gaussian_bracket(D, base)
        if bracket_d == 0:
            continue
        alpha = Fraction(arr.c[1], 1 + base) - 1
        sigma = Fraction(k, bracket_d)
        cp = ClassicalParameters(D, base, alpha, sigma)
        if all(cp.c_value(i) == arr.c_full[i] for i in range(D + 1)) and all(
            cp.b_value(i) == arr.b_full[i] for i in range(D + 1)
        ):
            fits.append(cp)
    return fits


def classical_eigenvalues(cp: ClassicalParameters) -> list[Fraction]:
    """``theta_i = b_i / b**i - [i]`` for ``i = 0..D`` (the Q-polynomial order)."""
    return [
        cp.b_value(i) / Fraction(cp.b) ** i - gaussian_bracket(i, cp.b)
        for i in range(cp.D + 1)
    ]


# ---------------------------------------------------------------------------
# near polygons and feasibility
# ---------------------------------------------------------------------------

def near_polygon_order(arr: IntersectionArray) -> tuple[int, int] | None:
    """Order ``(s, t) = (a_1 + 1, k/(a_1 + 1) - 1)`` when ``a_i = a_1 c_i`` for all i.

    Necessary condition only; the local clique structure is a graph property.
    """
    a1 = arr.a[1]
    if any(arr.a[i] != a1 * arr.c_full[i] for i in range(1, arr.D + 1)):
        return None
    if arr.k % (a1 + 1):
        return None
    return a1 + 1, arr.k // (a1 + 1) - 1


@dataclass
class Check:
    name: str
    passed: bool | None  # None: skipped
    detail: str = ""
    witness: dict = field(default_factory=dict)


@dataclass
class FeasibilityReport:
    array: IntersectionArray
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def feasibility_report(arr: IntersectionArray, sd: SpectralData | None = None) -> FeasibilityReport:
    checks = [
        Check("k_i integral", True, f"k = {list(arr.k_seq)}, n = {arr.n}"),
        Check("a_i nonnegative", all(v >= 0 for v in arr.a), f"a = {list(arr.a)}"),
    ]
    sd = sd or spectrum(arr)

    bad = []
    for ev, m, approx in zip(sd.eigenvalues, sd.multiplicities, sd.approximate):
        ok = abs(float(m) - round(float(m))) < APPROX_TOLERANCE if approx else m.denominator == 1
        if not ok:
            bad.append((ev.midpoint, m))
    shown = ", ".join(
        f"~{float(m):.6g}" if approx else str(m)
        for m, approx in zip(sd.multiplicities, sd.approximate)
    )
    if not bad:
        checks.append(Check("multiplicities integral", True, f"m = {shown}"))
    else:
        checks.append(Check(
            "multiplicities integral", False,
            "; ".join(f"theta = {t} has multiplicity {m} ({float(m):g})" for t, m in bad),
            {"non_integral": bad},
        ))

    if not sd.is_rational:
        checks.append(Check("Krein condition", None, "skipped: irrational eigenvalue"))
        checks.append(Check("Q-polynomial ordering", None, "skipped: irrational eigenvalue"))
        return FeasibilityReport(arr, checks)

    q = krein_parameters(sd, arr)
    d1 = arr.D + 1
    negative = [(i, j, h) for i in range(d1) for j in range(d1) for h in range(d1) if q[i][j][h] < 0]
    if negative:
        i, j, h = negative[0]
        checks.append(Check("Krein condition", False, f"q[{i}][{j}][{h}] = {q[i][j][h]} < 0",
                            {"index": (i, j, h), "value": q[i][j][h]}))
    else:
        checks.append(Check("Krein condition", True,
                            f"min q = {min(q[i][j][h] for i in range(d1) for j in range(d1) for h in range(d1))}"))

    try:
        orders = q_polynomial_orderings(arr, sd, q)
    except DiameterTooLargeForSearch as exc:
        checks.append(Check("Q-polynomial ordering", None, f"skipped: {exc}"))
    else:
        thetas = sd.thetas
        checks.append(Check(
            "Q-polynomial ordering", bool(orders),
            "; ".join("(" + ",".join(str(thetas[i]) for i in o) + ")" for o in orders) or "none",
            {"orderings": orders},
        ))
    return FeasibilityReport(arr, checks)


class ArrayAnalysis:
    """Lazily cached bundle of everything derived from one array."""

    def __init__(self, arr: IntersectionArray):
        self.array = arr

    @cached_property
    def spectrum(self) -> SpectralData:
        return spectrum(self.array)

    @cached_property
    def krein(self):
        return krein_parameters(self.spectrum, self.array)

    @cached_property
    def orderings(self) -> list[tuple[int, ...]]:
        return q_polynomial_orderings(self.array, self.spectrum, self.krein)

    @cached_property
    def classical(self) -> list[ClassicalParameters]:
        return classical_fit(self.array)

    @cached_property
    def near_polygon(self):
        return near_polygon_order(self.array)

    @cached_property
    def feasibility(self) -> FeasibilityReport:
        return feasibility_report(self.array, self.spectrum)

    def e1_candidates(self) -> list[Fraction]:
        """Eigenvalues sitting at position 1 of some Q-polynomial ordering."""
        if not self.spectrum.is_rational:
            return []
        thetas = self.spectrum.thetas
        return sorted({thetas[o[1]] for o in self.orderings}, reverse=True)
