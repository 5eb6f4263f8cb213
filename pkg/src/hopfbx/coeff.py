"""Exact coefficient semirings.

Two semirings are supported:

* ``Q`` -- nonnegative rationals, represented multiplicatively as prime
  factorizations so that rational powers (formal roots such as 3**(1/2))
  stay exact.  Addition is only defined between true rationals; adding
  two formal powers raises :class:`FormalAdditionError`.
* ``B`` -- the two-element Boolean semiring with 1 + 1 = 1.

Everything here is immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, str, Fraction]

SEMIRING_Q = "Q"
SEMIRING_B = "B"


class FormalAdditionError(ArithmeticError):
    """Raised when adding coefficients that are not both plain rationals."""


class FormalPowerError(ArithmeticError):
    """Raised when converting a non-rational factored value to a Fraction."""


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not a rational: {value!r}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FactoredPositive:
    """A positive real of the form prod(p ** e_p) with rational exponents e_p.

    The empty product is 1.  Values with all-integer exponents are exactly
    the positive rationals; other values are formal rational powers (e.g.
    the rescaling outputs tau may be square roots of rationals).
    """

    __slots__ = ("_exp",)

    def __init__(self, exponents: dict[int, Fraction] | None = None):
        items = []
        for p, e in sorted((exponents or {}).items()):
            e = _as_fraction(e)
            if e == 0:
                continue
            if p < 2 or factorize(p) != {p: 1}:
                raise ValueError(f"exponent key {p} is not prime")
            items.append((p, e))
        self._exp = tuple(items)

    @classmethod
    def from_rational(cls, value: RationalLike) -> "FactoredPositive":
        q = _as_fraction(value)
        if q <= 0:
            raise ValueError(f"expected a positive rational, got {q}")
        exps: dict[int, Fraction] = {}
        for p, e in factorize(q.numerator).items():
            exps[p] = Fraction(e)
        for p, e in factorize(q.denominator).items():
            exps[p] = exps.get(p, Fraction(0)) - e
        return cls(exps)

    def exponents(self) -> dict[int, Fraction]:
        return dict(self._exp)

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for _, e in self._exp)

    def to_fraction(self) -> Fraction:
        q = Fraction(1)
        for p, e in self._exp:
            if e.denominator != 1:
                raise FormalPowerError(f"{self} is not rational")
            q *= Fraction(p) ** int(e)
        return q

    def __mul__(self, other: "FactoredPositive") -> "FactoredPositive":
        exps = dict(self._exp)
        for p, e in other._exp:
            exps[p] = exps.get(p, Fraction(0)) + e
        return FactoredPositive(exps)

    def inv(self) -> "FactoredPositive":
        return FactoredPositive({p: -e for p, e in self._exp})

    def __truediv__(self, other: "FactoredPositive") -> "FactoredPositive":
        return self * other.inv()

    def pow(self, q: RationalLike) -> "FactoredPositive":
        q = _as_fraction(q)
        return FactoredPositive({p: e * q for p, e in self._exp})

    def is_one(self) -> bool:
        return not self._exp

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FactoredPositive) and self._exp == other._exp

    def __hash__(self) -> int:
        return hash(self._exp)

    def __repr__(self) -> str:
        if not self._exp:
            return "FP(1)"
        if self.is_rational():
            return f"FP({self.to_fraction()})"
        body = "*".join(f"{p}^({e})" for p, e in self._exp)
        return f"FP({body})"


FP_ONE = FactoredPositive()


def fp_from_rational(value: RationalLike) -> FactoredPositive:
    return FactoredPositive.from_rational(value)


def fp_to_rational(fp: FactoredPositive) -> Fraction:
    return fp.to_fraction()


def fp_mul(a: FactoredPositive, b: FactoredPositive) -> FactoredPositive:
    return a * b


def fp_pow(a: FactoredPositive, q: RationalLike) -> FactoredPositive:
    return a.pow(q)


class Coeff:
    """A nonnegative coefficient of the rational semiring: zero or a
    FactoredPositive.  Supports + and * with semiring semantics."""

    __slots__ = ("fp",)

    def __init__(self, fp: FactoredPositive | None):
        self.fp = fp

    @classmethod
    def zero(cls) -> "Coeff":
        return _Q_ZERO

    @classmethod
    def one(cls) -> "Coeff":
        return _Q_ONE

    @classmethod
    def from_rational(cls, value: RationalLike) -> "Coeff":
        q = _as_fraction(value)
        if q == 0:
            return _Q_ZERO
        return cls(FactoredPositive.from_rational(q))

    def is_zero(self) -> bool:
        return self.fp is None

    def is_one(self) -> bool:
        return self.fp is not None and self.fp.is_one()

    def to_fraction(self) -> Fraction:
        if self.fp is None:
            return Fraction(0)
        return self.fp.to_fraction()

    def __add__(self, other: "Coeff") -> "Coeff":
        if not isinstance(other, Coeff):
            return NotImplemented
        if self.fp is None:
            return other
        if other.fp is None:
            return self
        if not (self.fp.is_rational() and other.fp.is_rational()):
            raise FormalAdditionError(
                f"cannot add formal powers {self!r} + {other!r}"
            )
        return Coeff.from_rational(self.fp.to_fraction() + other.fp.to_fraction())

    def __mul__(self, other: "Coeff") -> "Coeff":
        if not isinstance(other, Coeff):
            return NotImplemented
        if self.fp is None or other.fp is None:
            return _Q_ZERO
        return Coeff(self.fp * other.fp)

    def inverse(self) -> "Coeff":
        if self.fp is None:
            raise ZeroDivisionError("zero coefficient has no inverse")
        return Coeff(self.fp.inv())

    def __truediv__(self, other: "Coeff") -> "Coeff":
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Coeff) and self.fp == other.fp

    def __hash__(self) -> int:
        return hash(("Q", self.fp))

    def __repr__(self) -> str:
        if self.fp is None:
            return "Coeff(0)"
        if self.fp.is_rational():
            return f"Coeff({self.fp.to_fraction()})"
        return f"Coeff({self.fp!r})"


_Q_ZERO = Coeff(None)
_Q_ONE = Coeff(FP_ONE)


class Bool:
    """Element of the Boolean semiring B = {0, 1} with 1 + 1 = 1."""

    __slots__ = ("value",)

    def __init__(self, value: int):
        if value not in (0, 1):
            raise ValueError(f"Boolean semiring element must be 0 or 1, got {value}")
        self.value = value

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __add__(self, other: "Bool") -> "Bool":
        if not isinstance(other, Bool):
            return NotImplemented
        return B_ONE if (self.value or other.value) else B_ZERO

    def __mul__(self, other: "Bool") -> "Bool":
        if not isinstance(other, Bool):
            return NotImplemented
        return B_ONE if (self.value and other.value) else B_ZERO

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Bool) and self.value == other.value

    def __hash__(self) -> int:
        return hash(("B", self.value))

    def __bool__(self) -> bool:
        return self.value == 1

    def __repr__(self) -> str:
        return f"Bool({self.value})"


B_ZERO = Bool(0)
B_ONE = Bool(1)

SemiringElement = Union[Coeff, Bool]


def semiring_zero(semiring: str) -> SemiringElement:
    if semiring == SEMIRING_Q:
        return _Q_ZERO
    if semiring == SEMIRING_B:
        return B_ZERO
    raise ValueError(f"unknown semiring {semiring!r}")


def semiring_one(semiring: str) -> SemiringElement:
    if semiring == SEMIRING_Q:
        return _Q_ONE
    if semiring == SEMIRING_B:
        return B_ONE
    raise ValueError(f"unknown semiring {semiring!r}")


def semiring_add(a: SemiringElement, b: SemiringElement) -> SemiringElement:
    return a + b


def semiring_mul(a: SemiringElement, b: SemiringElement) -> SemiringElement:
    return a * b


# --- serialization ---------------------------------------------------------
#
# Rationals are encoded as strings "num/den" or "int"; formal powers as
# {"factors": {"<prime>": "<exponent>", ...}}; the Boolean 1 as "1"
# (zero entries are never serialized -- absence means 0).


def coeff_to_json(c: SemiringElement):
    if isinstance(c, Bool):
        if c.is_zero():
            raise ValueError("zero coefficients are omitted, not serialized")
        return "1"
    if c.fp is None:
        raise ValueError("zero coefficients are omitted, not serialized")
    if c.fp.is_rational():
        return str(c.fp.to_fraction())
    return {"factors": {str(p): str(e) for p, e in sorted(c.fp.exponents().items())}}


def coeff_from_json(obj, semiring: str) -> SemiringElement:
    if semiring == SEMIRING_B:
        if obj != "1":
            raise ValueError(f"Boolean coefficient must be \"1\", got {obj!r}")
        return B_ONE
    if semiring != SEMIRING_Q:
        raise ValueError(f"unknown semiring {semiring!r}")
    if isinstance(obj, str):
        value = Fraction(obj)
        if value <= 0:
            raise ValueError(f"coefficient must be positive, got {obj!r}")
        return Coeff.from_rational(value)
    if isinstance(obj, dict) and set(obj) == {"factors"}:
        exps = {int(p): Fraction(e) for p, e in obj["factors"].items()}
        return Coeff(FactoredPositive(exps))
    raise ValueError(f"bad coefficient encoding: {obj!r}")
