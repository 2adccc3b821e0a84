"""Exact base fields.

Two fields are supported behind one small protocol: the rationals (elements
are ``fractions.Fraction``, so lowest terms and positive denominators come
for free) and prime fields GF(p) with canonical representatives in [0, p).
A field handle knows how to build, parse and format its elements; all
arithmetic goes through the elements' own operators, so the linear algebra
layer never needs to know which field it is working over.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FormatError


class PrimeFieldElement:
    """An element of GF(p), stored as its canonical representative."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _check(self, other: "PrimeFieldElement") -> None:
        if not isinstance(other, PrimeFieldElement) or other.p != self.p:
            raise TypeError(f"mixed-field arithmetic: GF({self.p}) vs {other!r}")

    def __add__(self, other):
        self._check(other)
        return PrimeFieldElement(self.p, self.v + other.v)

    def __sub__(self, other):
        self._check(other)
        return PrimeFieldElement(self.p, self.v - other.v)

    def __mul__(self, other):
        self._check(other)
        return PrimeFieldElement(self.p, self.v * other.v)

    def __truediv__(self, other):
        self._check(other)
        if other.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return PrimeFieldElement(self.p, self.v * pow(other.v, self.p - 2, self.p))

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.v)

    def __eq__(self, other):
        return (
            isinstance(other, PrimeFieldElement)
            and other.p == self.p
            and other.v == self.v
        )

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class RationalField:
    """The field of rationals; elements are Fraction instances."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, n) -> Fraction:
        return Fraction(n)

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(str(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"cannot parse rational coefficient {s!r}") from exc

    def format(self, x: Fraction) -> str:
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FormatError(f"{p} is not prime")
        self.p = p
        self.zero = PrimeFieldElement(p, 0)
        self.one = PrimeFieldElement(p, 1)

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def of(self, n) -> PrimeFieldElement:
        return PrimeFieldElement(self.p, int(n))

    def parse(self, s: str) -> PrimeFieldElement:
        try:
            return PrimeFieldElement(self.p, int(str(s), 10))
        except ValueError as exc:
            raise FormatError(f"cannot parse GF({self.p}) coefficient {s!r}") from exc

    def format(self, x: PrimeFieldElement) -> str:
        return str(x.v)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def field_by_name(name: str):
    """Resolve a field tag such as "Q" or "GF(7)" to a field handle."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        try:
            p = int(name[3:-1])
        except ValueError as exc:
            raise FormatError(f"bad field tag {name!r}") from exc
        return PrimeField(p)
    raise FormatError(f"unknown field tag {name!r}")
