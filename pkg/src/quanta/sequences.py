"""The psi / omega / lambda sequence engines.

The sequence psi(a, b, n) is the two-parameter linear recurrence

    psi(0) = 2,  psi(1) = 1,  psi(n+1) = (2a-b)^(n mod 2) psi(n) - a psi(n-1),

and the omega table is the double-indexed triangle

    omega_r(0) = 1,
    omega_r(k) = (2z-x)(n-r-k) omega_r(k-1) - 2z (n-2r-d(n-1)) omega_{r+1}(k-1)

for a point (z, x), filled by k-levels for 0 <= r+k <= floor(n/2).  The top
entry omega_0(floor(n/2)) divided by the falling-factorial product
(n-1)(n-2)...(n-floor(n/2)) recovers psi at the point; that quotient is the
single most exercised identity in the verification suite.

The recurrence runners are generic over any ring whose elements support
arithmetic with ints (exact scalars, residues, polynomials).  The omega
triangle additionally has tuned integer paths: rational points are scaled to
integer multipliers and quadratic points run on integer component pairs, so
the large sweeps stay in native bigint arithmetic.
"""

from __future__ import annotations

import json
from contextlib import contextmanager
from fractions import Fraction
from math import comb, factorial, lcm, prod
from typing import Iterator, Union

from .scalars import ModInt, QuadExt, format_scalar, reduce_mod

Scalar = Union[int, Fraction, QuadExt]


class TheoremViolationError(ArithmeticError):
    """An identity the library verifies at runtime failed to hold."""


class KernelPointError(ValueError):
    """psi vanishes at the point, so a psi-normalized quantity is undefined."""


class DegeneratePointError(ValueError):
    """The expansion data satisfies beta*a - alpha*b == 0."""


def delta(n: int) -> int:
    """Parity indicator n mod 2."""
    return n & 1


def falling_factorial(n: int) -> int:
    """(n-1)(n-2)...(n - floor(n/2)), the universal ratio denominator."""
    return prod(range(n - n // 2, n))


def rising_product(n: int) -> int:
    """n(n+1)...(2n-1)."""
    return prod(range(n, 2 * n))


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _lucas_coeff(n: int, i: int) -> int:
    # n/(n-i) C(n-i, i); always an integer for 0 <= i <= floor(n/2)
    c = Fraction(n, n - i) * comb(n - i, i)
    if c.denominator != 1:
        raise TheoremViolationError(f"non-integral closed-form coefficient at n={n}, i={i}")
    return c.numerator


class QPoint:
    """A nonzero parameter pair (alpha, beta) over a shared radicand."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha: Scalar, beta: Scalar) -> None:
        a = alpha if isinstance(alpha, QuadExt) else QuadExt(alpha)
        b = beta if isinstance(beta, QuadExt) else QuadExt(beta)
        a._common_d(b)  # raises on mismatched radicands
        if not a and not b:
            raise ValueError("point (0, 0) is not allowed")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QPoint is immutable")

    @property
    def d(self) -> int:
        return self.alpha.d or self.beta.d

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    @property
    def is_integral(self) -> bool:
        return self.alpha.is_integral and self.beta.is_integral and self.is_rational

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPoint):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta))

    def __repr__(self) -> str:
        return f"QPoint({format_scalar(self.alpha)}, {format_scalar(self.beta)})"


def as_point(point: QPoint | tuple) -> QPoint:
    if isinstance(point, QPoint):
        return point
    return QPoint(*point)


class SeqParams:
    """Bundle of recurrence parameters (a, b, n) with the parity indicator."""

    __slots__ = ("a", "b", "n", "delta_n")

    def __init__(self, a: Scalar, b: Scalar, n: int) -> None:
        if n < 0:
            raise ValueError("n must be nonnegative")
        point = QPoint(a, b)  # validates (a, b) != (0, 0) and the shared ring
        object.__setattr__(self, "a", point.alpha)
        object.__setattr__(self, "b", point.beta)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "delta_n", n & 1)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SeqParams is immutable")

    def psi(self) -> QuadExt:
        return psi_point(QPoint(self.a, self.b), self.n)

    def __repr__(self) -> str:
        return (
            f"SeqParams({format_scalar(self.a)}, {format_scalar(self.b)}, "
            f"n={self.n})"
        )


# -- psi --------------------------------------------------------------------


def psi_rec(a, b, n: int):
    """psi(a, b, n) by the defining recurrence; generic over the ring of a, b."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev = a * 0 + 2
    if n == 0:
        return prev
    cur = a * 0 + 1
    t = 2 * a - b
    for m in range(1, n):
        nxt = (t * cur if m & 1 else cur) - a * prev
        prev, cur = cur, nxt
    return cur


def psi_point(point: QPoint | tuple, n: int) -> QuadExt:
    """psi at a parameter point, returned as an exact scalar."""
    point = as_point(point)
    al, be = point.alpha, point.beta
    if point.is_rational:
        av, bv = al.a, be.a
        if av.denominator == 1 and bv.denominator == 1:
            return QuadExt(psi_rec(av.numerator, bv.numerator, n))
        return QuadExt(psi_rec(av, bv, n))
    return psi_rec(al, be, n)


def psi_closed(a, b, n: int):
    """psi(a, b, n) by the floor(n/2)-term closed form; must match psi_rec."""
    if n < 1:
        raise ValueError("closed form needs n >= 1")
    half = n // 2
    t = 2 * a - b
    tpow = t * 0 + 1
    tpowers = [tpow]
    for _ in range(half):
        tpow = tpow * t
        tpowers.append(tpow)
    apow = a * 0 + 1
    total = a * 0
    for i in range(half + 1):
        sign = -1 if i & 1 else 1
        total = total + (sign * _lucas_coeff(n, i)) * apow * tpowers[half - i]
        apow = apow * a
    return total


def psi_pow2(a, b, s: int, modulus: int | None = None):
    """psi(a, b, 2**s) by repeated doubling from psi(2) = -b.

    With a modulus the whole chain runs on residues (s-1 modular squarings
    plus a squared power track for a), which is what the Mersenne criterion
    consumes.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if modulus is None:
        cur = -(a * 0 + b)
        apow = a * a
        for _ in range(s - 1):
            cur = cur * cur - 2 * apow
            apow = apow * apow
        return cur
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    ua, va = reduce_mod(a, modulus)
    ub, vb = reduce_mod(b, modulus)
    if va or vb:
        raise ValueError("modular doubling requires rational parameters")
    cur = ModInt(-ub, modulus)
    apow = ModInt(ua * ua, modulus)
    for _ in range(s - 1):
        cur = cur * cur - 2 * apow
        apow = apow * apow
    return cur


def product_identity_check(a, b, n: int, m: int) -> bool:
    """(2a-b)^(d(n)d(m)) psi(n) psi(m) == psi(n+m) + a^m psi(n-m)."""
    if not n >= m >= 0:
        raise ValueError("need n >= m >= 0")
    pn, pm = psi_rec(a, b, n), psi_rec(a, b, m)
    lhs = pn * pm
    if n & 1 and m & 1:
        lhs = (2 * a - b) * lhs
    rhs = psi_rec(a, b, n + m) + a**m * psi_rec(a, b, n - m)
    return lhs == rhs


# -- omega triangle ----------------------------------------------------------

_coupling_sign = -1


@contextmanager
def flipped_omega_coupling() -> Iterator[None]:
    """Fault-injection fixture: negate the coupling term of the omega
    recurrence.  Used to measure how much of the verification suite notices
    a wrong table; never enable outside tests."""
    global _coupling_sign
    _coupling_sign = 1
    try:
        yield
    finally:
        _coupling_sign = -1


def _point_multipliers(point: QPoint) -> tuple[int, tuple[int, int], tuple[int, int], int]:
    """Scale s and integer component pairs for A = s(2z-x), B = s(2z)."""
    al, be = point.alpha, point.beta
    s = lcm(
        al.a.denominator, al.b.denominator, be.a.denominator, be.b.denominator
    )
    big_a = 2 * al - be
    big_b = 2 * al
    a_pair = (int(big_a.a * s), int(big_a.b * s))
    b_pair = (int(big_b.a * s), int(big_b.b * s))
    return s, a_pair, b_pair, point.d


def _scalar_levels(A: int, B: int, n: int, K: int, mod: int | None, keep: bool):
    sign = _coupling_sign
    dlt = (n - 1) & 1
    prev = [1] * (K + 1)
    levels = [prev]
    cbs = [B * (n - 2 * r - dlt) for r in range(K)]
    for k in range(1, K + 1):
        width = K - k + 1
        if sign < 0:
            cur = [A * (n - k - r) * prev[r] - cbs[r] * prev[r + 1] for r in range(width)]
        else:
            cur = [A * (n - k - r) * prev[r] + cbs[r] * prev[r + 1] for r in range(width)]
        if mod is not None:
            cur = [x % mod for x in cur]
        if keep:
            levels.append(cur)
        prev = cur
    return levels if keep else [prev]


def _pair_levels(
    A: tuple[int, int],
    B: tuple[int, int],
    d: int,
    n: int,
    K: int,
    mod: int | None,
    keep: bool,
):
    sign = _coupling_sign
    dlt = (n - 1) & 1
    a1, a2 = A
    b1, b2 = B
    prev = [(1, 0)] * (K + 1)
    levels = [prev]
    cbs = [(b1 * (n - 2 * r - dlt), b2 * (n - 2 * r - dlt)) for r in range(K)]
    for k in range(1, K + 1):
        width = K - k + 1
        cur = []
        for r in range(width):
            c = n - k - r
            ca1, ca2 = a1 * c, a2 * c
            u, v = prev[r]
            u2, v2 = prev[r + 1]
            w1, w2 = cbs[r]
            if sign < 0:
                nu = ca1 * u + ca2 * v * d - w1 * u2 - w2 * v2 * d
                nv = ca1 * v + ca2 * u - w1 * v2 - w2 * u2
            else:
                nu = ca1 * u + ca2 * v * d + w1 * u2 + w2 * v2 * d
                nv = ca1 * v + ca2 * u + w1 * v2 + w2 * u2
            if mod is not None:
                nu, nv = nu % mod, nv % mod
            cur.append((nu, nv))
        if keep:
            levels.append(cur)
        prev = cur
    return levels if keep else [prev]


class OmegaTable:
    """The triangular array omega_r(k) for 0 <= r+k <= floor(n/2).

    Entries materialize as QuadExt for exact tables; modular tables yield
    ModInt at rational points and componentwise-residue QuadExt at quadratic
    points (the table-level ``modulus`` qualifies those components).
    """

    def __init__(
        self,
        point: QPoint,
        n: int,
        modulus: int | None,
        levels: list,
        scale: int,
        paired: bool,
    ) -> None:
        self.point = point
        self.n = n
        self.modulus = modulus
        self.K = n // 2
        self._levels = levels
        self._scale = scale
        self._paired = paired
        self._top_only = len(levels) == 1 and self.K > 0

    def entry(self, r: int, k: int):
        if k < 0 or r < 0 or r + k > self.K:
            raise IndexError(f"(r={r}, k={k}) outside triangle for n={self.n}")
        if self._top_only:
            raise IndexError("table was built top-only; rebuild with omega_table()")
        raw = self._levels[k][r]
        return self._materialize(raw, k)

    def __getitem__(self, rk: tuple[int, int]):
        return self.entry(*rk)

    def top(self):
        """omega_0(floor(n/2)), the numerator of the fundamental ratio."""
        raw = self._levels[-1][0]
        return self._materialize(raw, self.K)

    def stable_column(self) -> list:
        """The r = 0 column across all levels."""
        return [self.entry(0, k) for k in range(self.K + 1)]

    def _materialize(self, raw, k: int):
        if self.modulus is not None:
            if self._paired:
                u, v = raw
                return QuadExt(u, v, self.point.d)
            return ModInt(raw, self.modulus)
        if self._paired:
            u, v = raw
            if self._scale == 1:
                return QuadExt(u, v, self.point.d)
            sk = self._scale**k
            return QuadExt(Fraction(u, sk), Fraction(v, sk), self.point.d)
        if self._scale == 1:
            return QuadExt(raw)
        return QuadExt(Fraction(raw, self._scale**k))

    def to_dict(self) -> dict:
        if self._top_only:
            entries = [[0, self.K, format_scalar_entry(self.top())]]
        else:
            entries = [
                [r, k, format_scalar_entry(self.entry(r, k))]
                for k in range(self.K + 1)
                for r in range(self.K - k + 1)
            ]
        return {
            "n": self.n,
            "point": [format_scalar(self.point.alpha), format_scalar(self.point.beta)],
            "modulus": self.modulus,
            "entries": entries,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def format_scalar_entry(value) -> str:
    if isinstance(value, ModInt):
        return str(value.residue)
    return format_scalar(value)


def _build_omega(point: QPoint, n: int, modulus: int | None, keep: bool) -> OmegaTable:
    if n < 1:
        raise ValueError("n must be >= 1")
    K = n // 2
    if modulus is not None:
        au, av = reduce_mod(point.alpha, modulus)
        bu, bv = reduce_mod(point.beta, modulus)
        a_pair = ((2 * au - bu) % modulus, (2 * av - bv) % modulus)
        b_pair = ((2 * au) % modulus, (2 * av) % modulus)
        if point.d == 0:
            levels = _scalar_levels(a_pair[0], b_pair[0], n, K, modulus, keep)
            return OmegaTable(point, n, modulus, levels, 1, False)
        levels = _pair_levels(a_pair, b_pair, point.d % modulus, n, K, modulus, keep)
        return OmegaTable(point, n, modulus, levels, 1, True)
    s, a_pair, b_pair, d = _point_multipliers(point)
    if d == 0:
        levels = _scalar_levels(a_pair[0], b_pair[0], n, K, None, keep)
        return OmegaTable(point, n, None, levels, s, False)
    levels = _pair_levels(a_pair, b_pair, d, n, K, None, keep)
    return OmegaTable(point, n, None, levels, s, True)


def omega_table(point: QPoint | tuple, n: int, modulus: int | None = None) -> OmegaTable:
    """Full triangle, all entries retained."""
    return _build_omega(as_point(point), n, modulus, keep=True)


def omega_top(point: QPoint | tuple, n: int, modulus: int | None = None):
    """omega_0(floor(n/2)) with two rolling levels of memory."""
    return _build_omega(as_point(point), n, modulus, keep=False).top()


_CLOSED_FORMS = {(1, -2), (1, 2), (0, -1)}


def omega_closed(point_id: tuple[int, int], r: int, k: int, n: int) -> int:
    """Product closed forms of the triangle at the three special points."""
    if point_id not in _CLOSED_FORMS:
        raise ValueError(f"no closed form registered for point {point_id}")
    if k < 0 or r < 0 or r + k > n // 2:
        raise ValueError(f"(r={r}, k={k}) outside triangle for n={n}")
    if point_id == (1, -2):
        return 2**k * prod(n + delta(n - 1) - 2 * lam for lam in range(1, k + 1))
    if point_id == (1, 2):
        return (-2) ** k * prod(
            n - delta(n + 1) - 2 * r - 2 * lam for lam in range(k)
        )
    return prod(n - r - lam for lam in range(1, k + 1))


# -- lambda triangle ----------------------------------------------------------


class LambdaTable:
    """Triangle of derivative-expansion coefficients lambda_r(k)."""

    def __init__(self, point: QPoint, n: int, levels: list) -> None:
        self.point = point
        self.n = n
        self.K = n // 2
        self._levels = levels

    def entry(self, r: int, k: int) -> QuadExt:
        if k < 0 or r < 0 or r + k > self.K:
            raise IndexError(f"(r={r}, k={k}) outside triangle for n={self.n}")
        raw = self._levels[k][r]
        return raw if isinstance(raw, QuadExt) else QuadExt(raw)

    def __getitem__(self, rk: tuple[int, int]) -> QuadExt:
        return self.entry(*rk)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "point": [format_scalar(self.point.alpha), format_scalar(self.point.beta)],
            "modulus": None,
            "entries": [
                [r, k, format_scalar(self.entry(r, k))]
                for k in range(self.K + 1)
                for r in range(self.K - k + 1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def lambda_seed(n: int, r: int) -> int:
    """(-1)^r n/(n-r) C(n-r, r), checked integral rather than assumed."""
    s = Fraction(n, n - r) * comb(n - r, r)
    if s.denominator != 1:
        raise TheoremViolationError(f"lambda seed not integral at n={n}, r={r}")
    return -s.numerator if r & 1 else s.numerator


def lambda_table(point: QPoint | tuple, n: int) -> LambdaTable:
    if n < 1:
        raise ValueError("n must be >= 1")
    point = as_point(point)
    K = n // 2
    if point.is_rational:
        m1 = 2 * point.alpha.a - point.beta.a
        m2 = point.alpha.a
        if m1.denominator == 1 and m2.denominator == 1:
            m1, m2 = m1.numerator, m2.numerator
    else:
        m1 = 2 * point.alpha - point.beta
        m2 = point.alpha
    prev = [lambda_seed(n, r) for r in range(K + 1)]
    levels = [prev]
    for k in range(1, K + 1):
        width = K - k + 1
        cur = [
            m1 * (K - k - r + 1) * prev[r] + m2 * (r + 1) * prev[r + 1]
            for r in range(width)
        ]
        levels.append(cur)
        prev = cur
    return LambdaTable(point, n, levels)


def lambda_from_omega(
    point: QPoint | tuple,
    n: int,
    r: int,
    k: int,
    table: OmegaTable | None = None,
) -> QuadExt:
    """lambda_r(k) recovered from the omega entry by the factorial bridge."""
    point = as_point(point)
    K = n // 2
    if k < 0 or r < 0 or r + k > K:
        raise ValueError(f"(r={r}, k={k}) outside triangle for n={n}")
    if table is None:
        table = omega_table(point, n)
    factor = Fraction(
        n * factorial(n - r - k - 1) * factorial(K - r),
        factorial(n - 2 * r) * factorial(r) * factorial(K - r - k),
    )
    if r & 1:
        factor = -factor
    return factor * table.entry(r, k)


# -- fundamental expansions ---------------------------------------------------


def _expansion_coeff(n: int, r: int, k: int, omega_entry: QuadExt) -> QuadExt:
    K = n // 2
    frac = Fraction(
        n * factorial(n - r - k - 1), factorial(n - 2 * r) * factorial(r)
    ) * comb(K - r, k)
    if (r + k) & 1:
        frac = -frac
    return frac * omega_entry


def psi_k_expand(
    a,
    b,
    point: QPoint | tuple,
    n: int,
    k: int,
    table: OmegaTable | None = None,
) -> tuple[QuadExt, list[QuadExt]]:
    """Value and coefficient list of the k-th expansion of psi(a, b, n)
    along the point.

    The value equals (-1)^k / k! times the k-fold directional derivative of
    the psi polynomial in (a, b); at k = 0 it is psi(a, b, n) and at
    k = floor(n/2) it is (-1)^k psi at the point.  For integral points every
    coefficient is checked to be a rational integer.
    """
    point = as_point(point)
    aq = a if isinstance(a, QuadExt) else QuadExt(a)
    bq = b if isinstance(b, QuadExt) else QuadExt(b)
    if not (point.beta * aq - point.alpha * bq):
        raise DegeneratePointError(f"beta*a == alpha*b for point {point}")
    K = n // 2
    if not 0 <= k <= K:
        raise ValueError(f"k={k} outside [0, {K}] for n={n}")
    if table is None:
        table = omega_table(point, n)
    coeffs = [
        _expansion_coeff(n, r, k, table.entry(r, k)) for r in range(K - k + 1)
    ]
    if point.is_integral:
        for r, c in enumerate(coeffs):
            if not c.is_integral:
                raise TheoremViolationError(
                    f"non-integral expansion coefficient at n={n}, k={k}, r={r}"
                )
    t = 2 * aq - bq
    value = QuadExt(0)
    apow = QuadExt(1)
    tpowers = [QuadExt(1)]
    for _ in range(K - k):
        tpowers.append(tpowers[-1] * t)
    for r, c in enumerate(coeffs):
        value = value + c * apow * tpowers[K - k - r]
        apow = apow * aq
    return value, coeffs


def second_fundamental(point: QPoint | tuple, n: int) -> QuadExt:
    """omega_0(floor(n/2)) / (n-1)...(n-floor(n/2)); checked equal to psi.

    For integral points the quotient is additionally checked to be integral.
    Failure of either check raises TheoremViolationError.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    point = as_point(point)
    quotient = omega_top(point, n) / falling_factorial(n)
    if point.is_integral and not quotient.is_integral:
        raise TheoremViolationError(
            f"fundamental ratio not integral at point {point}, n={n}"
        )
    expected = psi_point(point, n)
    if quotient != expected:
        raise TheoremViolationError(
            f"fundamental ratio != psi at point {point}, n={n}"
        )
    return quotient


def second_fundamental_v2(point: QPoint | tuple, n: int) -> QuadExt:
    """omega_0(n | point | 2n) / psi(point, 2n); checked equal to n(n+1)...(2n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    point = as_point(point)
    psi = psi_point(point, 2 * n)
    if not psi:
        raise KernelPointError(f"psi({point}, {2 * n}) = 0")
    ratio = omega_top(point, 2 * n) / psi
    if ratio != rising_product(n):
        raise TheoremViolationError(
            f"psi-normalized top entry != rising product at {point}, n={n}"
        )
    return ratio


def sums_of_powers_check(x: int, y: int, n: int) -> bool:
    """(x^n + y^n)/(x+y)^(n mod 2) against psi, the omega ratio, and the
    explicit power-sum expansion."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = x**n + y**n
    if n & 1:
        if x + y == 0:
            raise ValueError("x + y must be nonzero for odd n")
        val, rem = divmod(num, x + y)
        if rem:
            return False
    else:
        val = num
    point = QPoint(x * y, -x * x - y * y)
    if psi_point(point, n) != val:
        return False
    if n >= 2 and omega_top(point, n) != falling_factorial(n) * val:
        return False
    expansion = sum(
        (-1) ** i * _lucas_coeff(n, i) * (x * y) ** i * (x + y) ** (n - 2 * i)
        for i in range(n // 2 + 1)
    )
    return expansion == num


def psi_expansion_identity_check(
    a, b, point: QPoint | tuple, x: int, y: int, n: int
) -> bool:
    """The degree-floor(n/2) expansion of (beta a - alpha b)^K (x^n+y^n)/(x+y)^d
    into the two quadratic forms, with coefficients from psi_k_expand."""
    point = as_point(point)
    aq = a if isinstance(a, QuadExt) else QuadExt(a)
    bq = b if isinstance(b, QuadExt) else QuadExt(b)
    pivot = point.beta * aq - point.alpha * bq
    if not pivot:
        raise DegeneratePointError(f"beta*a == alpha*b for point {point}")
    K = n // 2
    num = x**n + y**n
    if n & 1:
        if x + y == 0:
            raise ValueError("x + y must be nonzero for odd n")
        val, rem = divmod(num, x + y)
        if rem:
            return False
    else:
        val = num
    lhs = pivot**K * val
    table = omega_table(point, n)
    p_form = point.alpha * (x * x) + point.beta * (x * y) + point.alpha * (y * y)
    q_form = aq * (x * x) + bq * (x * y) + aq * (y * y)
    rhs = QuadExt(0)
    for r in range(K + 1):
        value, _ = psi_k_expand(aq, bq, point, n, r, table)
        rhs = rhs + value * p_form ** (K - r) * q_form**r
    return lhs == rhs


# -- the companion triangle feeding Fibonacci ---------------------------------


class FibTable:
    """Triangle for the Fibonacci-producing companion recurrence."""

    def __init__(self, n: int, levels: list[list[int]]) -> None:
        self.n = n
        self.K = (n - 1) // 2
        self._levels = levels

    def entry(self, r: int, k: int) -> int:
        if k < 0 or r < 0 or r + k > self.K:
            raise IndexError(f"(r={r}, k={k}) outside triangle for n={self.n}")
        return self._levels[k][r]

    def top(self) -> int:
        return self._levels[self.K][0]


def fib_lambda_table(n: int) -> tuple[FibTable, int]:
    """Companion triangle L_r(k) = (n-r-k) L_r(k-1) + 2(n-1-2r-d(n)) L_{r+1}(k-1)
    with unit seeds; the normalized top entry is checked equal to F(n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    K = (n - 1) // 2
    dn = delta(n)
    prev = [1] * (K + 1)
    levels = [prev]
    for k in range(1, K + 1):
        width = K - k + 1
        cur = [
            (n - r - k) * prev[r] + 2 * (n - 1 - 2 * r - dn) * prev[r + 1]
            for r in range(width)
        ]
        levels.append(cur)
        prev = cur
    table = FibTable(n, levels)
    denom = prod(n - j for j in range(1, K + 1))
    value, rem = divmod(table.top(), denom)
    if rem:
        raise TheoremViolationError(f"companion top entry not divisible at n={n}")
    if value != fibonacci(n):
        raise TheoremViolationError(f"companion ratio != F({n})")
    return table, value
