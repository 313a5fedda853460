"""Exact scalar arithmetic: rationals, quadratic extensions and modular residues.

Every value in the library bottoms out here.  ``QuadExt`` is the universal
scalar: an exact element ``a + b*sqrt(d)`` with rational components over a
fixed square-free radicand, so that integer points, rational points and the
quadratic points (sqrt(2), sqrt(3), sqrt(5), golden ratio) all live in one
type.  ``ModInt`` is a canonical residue used by the modular table builders
and the Mersenne doubling test.

All scalars are immutable; no operation mutates its operands.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Union

RationalLike = Union[int, Fraction, "QuadExt"]


class RingMismatchError(ValueError):
    """Operands belong to incompatible rings (radicands or moduli differ)."""


class LocalizationError(ValueError):
    """A denominator shares a factor with the modulus, so reduction mod m
    is undefined."""


class ScalarParseError(ValueError):
    """Malformed scalar text; ``pos`` is the offset of the first bad char."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_SQUARE_FREE_OK: set[int] = {0, 1}


def is_square_free(d: int) -> bool:
    if d < 0:
        return False
    if d in _SQUARE_FREE_OK:
        return True
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    _SQUARE_FREE_OK.add(d)
    return True


class QuadExt:
    """Exact element ``a + b*sqrt(d)`` with rational a, b and square-free d >= 0.

    d in {0, 1} is canonicalized to the rational subring (b folded into a),
    and b == 0 forces d == 0, so the representation is unique.  Values with
    d == 0 interoperate with any radicand; two genuinely quadratic values
    combine only when their radicands match.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, d: int = 0) -> None:
        if isinstance(a, QuadExt) or isinstance(b, QuadExt):
            raise TypeError("components must be int or Fraction, not QuadExt")
        a = Fraction(a)
        b = Fraction(b)
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if d == 0 or b == 0:
            b, d = Fraction(0), 0
        elif not is_square_free(d):
            raise ValueError(f"radicand {d} is not square-free and nonnegative")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def sqrt(cls, d: int) -> QuadExt:
        return cls(0, 1, d)

    @classmethod
    def _coerce(cls, x: object) -> QuadExt | None:
        if isinstance(x, QuadExt):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        return None

    def _common_d(self, other: QuadExt) -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise RingMismatchError(
            f"cannot combine sqrt({self.d}) with sqrt({other.d})"
        )

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self._common_d(o))

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self._common_d(o))

    def __rsub__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return QuadExt(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QuadExt:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result = QuadExt(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quadratic element")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- structure ----------------------------------------------------------

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2 d; zero exactly when the element is zero."""
        return self.a * self.a - self.b * self.b * self.d

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    @property
    def is_integral(self) -> bool:
        """True when both components are rational integers."""
        return self.a.denominator == 1 and self.b.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.d != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __hash__(self) -> int:
        if self.d == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __repr__(self) -> str:
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self) -> str:
        return format_scalar(self)


SQRT2 = QuadExt.sqrt(2)
SQRT3 = QuadExt.sqrt(3)
SQRT5 = QuadExt.sqrt(5)
GOLDEN = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)


def _cleared_components(x: QuadExt) -> tuple[int, int, int]:
    """Write x = (u + v*sqrt(d)) / q with integer u, v and q > 0 minimal."""
    q = x.a.denominator * x.b.denominator // gcd(x.a.denominator, x.b.denominator)
    u = x.a.numerator * (q // x.a.denominator)
    v = x.b.numerator * (q // x.b.denominator)
    return u, v, q


def divides_int(m: int, x: RationalLike) -> bool:
    """Whether the integer m >= 2 divides x componentwise.

    x is cleared to (u + v*sqrt(d)) / q; q must be coprime to m (otherwise
    the question has no answer in the localization and LocalizationError is
    raised), and the result is m | u and m | v.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    xq = QuadExt._coerce(x)
    if xq is None:
        raise TypeError(f"cannot test divisibility of {type(x).__name__}")
    u, v, q = _cleared_components(xq)
    if gcd(q, m) != 1:
        raise LocalizationError(f"denominator {q} shares a factor with {m}")
    return u % m == 0 and v % m == 0


def reduce_mod(x: RationalLike, m: int) -> tuple[int, int]:
    """Componentwise residues (u mod m, v mod m) of x = u + v*sqrt(d).

    Denominators are cleared by multiplying with their inverse mod m; they
    must be coprime to m.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    xq = QuadExt._coerce(x)
    if xq is None:
        raise TypeError(f"cannot reduce {type(x).__name__}")
    u, v, q = _cleared_components(xq)
    if gcd(q, m) != 1:
        raise LocalizationError(f"denominator {q} shares a factor with {m}")
    qinv = pow(q, -1, m)
    return (u * qinv) % m, (v * qinv) % m


def exact_div(x: RationalLike, y: RationalLike) -> QuadExt:
    """Exact quotient in the field of fractions; y must be nonzero."""
    xq, yq = QuadExt._coerce(x), QuadExt._coerce(y)
    if xq is None or yq is None:
        raise TypeError("exact_div expects scalar operands")
    if not yq:
        raise ZeroDivisionError("exact_div by zero")
    return xq / yq


class ModInt:
    """Canonical residue modulo a fixed integer modulus >= 2."""

    __slots__ = ("residue", "modulus")

    def __init__(self, value: int, modulus: int) -> None:
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        object.__setattr__(self, "residue", value % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ModInt is immutable")

    def _coerce(self, other: object) -> ModInt | None:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise RingMismatchError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}"
                )
            return other
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        return None

    def __add__(self, other: object) -> ModInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.residue + o.residue, self.modulus)

    __radd__ = __add__

    def __neg__(self) -> ModInt:
        return ModInt(-self.residue, self.modulus)

    def __sub__(self, other: object) -> ModInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.residue - o.residue, self.modulus)

    def __rsub__(self, other: object) -> ModInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> ModInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModInt(self.residue * o.residue, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ModInt:
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return ModInt(pow(self.residue, e, self.modulus), self.modulus)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModInt):
            return (
                self.modulus == other.modulus and self.residue == other.residue
            )
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.residue, self.modulus))

    def __bool__(self) -> bool:
        return self.residue != 0

    def __int__(self) -> int:
        return self.residue

    def __repr__(self) -> str:
        return f"ModInt({self.residue}, {self.modulus})"

    def __str__(self) -> str:
        return str(self.residue)


# -- canonical text form ------------------------------------------------------
#
# Scalars print as `a/b+c/e*sqrt(d)` with zero parts omitted, e.g. `3`,
# `-1-1*sqrt(2)`, `1/2+1/2*sqrt(5)`.  Parsing round-trips bit-exactly.

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<num>\d+)\s*(?:/\s*(?P<den>\d+))?\s*(?:\*\s*sqrt\(\s*(?P<rad1>\d+)\s*\))?"
    r"|sqrt\(\s*(?P<rad2>\d+)\s*\))"
)


def format_scalar(x: RationalLike) -> str:
    xq = QuadExt._coerce(x)
    if xq is None:
        raise TypeError(f"cannot format {type(x).__name__}")
    if xq.b == 0:
        return str(xq.a)
    root = f"{xq.b}*sqrt({xq.d})"
    if xq.a == 0:
        return root
    sep = "+" if xq.b > 0 else ""
    return f"{xq.a}{sep}{root}"


def parse_scalar(text: str) -> QuadExt:
    """Parse the canonical scalar text form back into a QuadExt."""
    rational = Fraction(0)
    coeff = Fraction(0)
    radicand: int | None = None
    pos = 0
    first = True
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TERM_RE.match(text, pos)
        if m is None:
            raise ScalarParseError("expected a term like '3', '1/2' or '1*sqrt(2)'", pos)
        if m.group("sign") is None and not first:
            raise ScalarParseError("expected '+' or '-' between terms", pos)
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("rad2") is not None:
            value = Fraction(1)
            rad = int(m.group("rad2"))
        else:
            num = int(m.group("num"))
            den = int(m.group("den")) if m.group("den") else 1
            if den == 0:
                raise ScalarParseError("zero denominator", pos)
            value = Fraction(num, den)
            rad = int(m.group("rad1")) if m.group("rad1") else None
        if rad is not None and rad > 1:
            if not is_square_free(rad):
                raise ScalarParseError(f"radicand {rad} is not square-free", pos)
            if radicand is not None and radicand != rad:
                raise ScalarParseError(
                    f"mixed radicands {radicand} and {rad}", pos
                )
            radicand = rad
            coeff += sign * value
        elif rad == 0:
            pass  # c*sqrt(0) contributes nothing
        elif rad == 1:
            rational += sign * value
        else:
            rational += sign * value
        pos = m.end()
        first = False
    if first:
        raise ScalarParseError("empty scalar", 0)
    if radicand is None or coeff == 0:
        return QuadExt(rational)
    return QuadExt(rational, coeff, radicand)
