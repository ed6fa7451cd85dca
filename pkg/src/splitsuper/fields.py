"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Scalars are plain Python values (fractions.Fraction over the rationals,
canonical residues in range(p) over a prime field); the field object
supplies the operations, parsing and canonical formatting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Largest prime admitted for brute-force spectral scans.  Eigenvalue search
# over F_p enumerates all p candidates, so the bound keeps it trivially fast.
EXHAUSTIVE_SCAN_BOUND = 65521


class FieldError(ValueError):
    """Malformed field descriptor or unparseable scalar."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rationals:
    """The rational field; scalars are fractions.Fraction values."""

    @property
    def characteristic(self) -> int:
        return 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, s: str):
        try:
            return Fraction(str(s).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse rational scalar {s!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def to_json(self):
        return "Q"

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The field with p elements; scalars are ints in range(p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise FieldError(f"{self.p!r} is not a prime")
        if self.p > EXHAUSTIVE_SCAN_BOUND:
            raise FieldError(
                f"prime {self.p} exceeds the exhaustive scan bound {EXHAUSTIVE_SCAN_BOUND}"
            )

    @property
    def characteristic(self) -> int:
        return self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def parse(self, s: str):
        text = str(s).strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return self.div(int(num) % self.p, int(den) % self.p)
            return int(text) % self.p
        except ZeroDivisionError as exc:
            raise FieldError(f"scalar {s!r} has denominator divisible by {self.p}") from exc
        except ValueError as exc:
            raise FieldError(f"cannot parse scalar {s!r} over F_{self.p}") from exc

    def format(self, a) -> str:
        return str(a % self.p)

    def to_json(self):
        return {"Fp": self.p}

    def __str__(self) -> str:
        return f"F_{self.p}"


Field = Rationals | PrimeField


def field_from_json(obj) -> Field:
    """Decode "Q" or {"Fp": p} into a field object."""
    if obj == "Q":
        return Rationals()
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        p = obj["Fp"]
        if not isinstance(p, int):
            raise FieldError(f"Fp modulus must be an integer, got {p!r}")
        return PrimeField(p)
    raise FieldError(f"unknown field descriptor {obj!r}")


def parse_field_spec(text: str) -> Field:
    """Decode the command line form: "Q" or "Fp:5"."""
    text = text.strip()
    if text == "Q":
        return Rationals()
    if text.startswith("Fp:"):
        try:
            return PrimeField(int(text[3:]))
        except ValueError as exc:
            raise FieldError(f"bad field spec {text!r}") from exc
    raise FieldError(f"bad field spec {text!r} (expected Q or Fp:p)")
