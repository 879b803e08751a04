"""
Coefficient rings: the integers, the rationals and prime fields.

Each ring knows how to move between plain Python values (``int`` for the
integers and prime fields, ``Fraction`` for the rationals) and the sympy
domain elements used for the heavy linear algebra.
"""

import re
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from sympy import GF, QQ, ZZ, isprime

logger = logging.getLogger(__name__)

INTEGERS = "Integers"
RATIONALS = "Rationals"
PRIME_FIELD = "PrimeField"

Scalar = Union[int, Fraction]

_PRIME_FIELD_NAME = re.compile(r"^(?:GF|F)\(?(\d+)\)?$", re.IGNORECASE)


@lru_cache(maxsize=None)
def _prime_field_domain(p: int):
    return GF(p, symmetric=False)


@dataclass(frozen=True)
class Ring:
    """An exact coefficient ring.

    Args:
        kind: One of ``Integers``, ``Rationals`` or ``PrimeField``
        characteristic: The prime p for prime fields, 0 otherwise
    """
    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise ValueError(f"Unknown ring kind: {self.kind}")
        if self.kind == PRIME_FIELD:
            if not isprime(self.characteristic):
                raise ValueError(f"Prime field characteristic must be prime, got {self.characteristic}")
        elif self.characteristic != 0:
            raise ValueError(f"{self.kind} has characteristic 0, got {self.characteristic}")

    @classmethod
    def integers(cls) -> "Ring":
        return cls(INTEGERS)

    @classmethod
    def rationals(cls) -> "Ring":
        return cls(RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "Ring":
        return cls(PRIME_FIELD, int(p))

    @classmethod
    def parse(cls, name: str) -> "Ring":
        """Parse a short ring name such as ``ZZ``, ``QQ``, ``GF2`` or ``GF(97)``.

        Raises:
            ValueError: If the name is not recognised
        """
        text = str(name).strip()
        if text.upper() in ("ZZ", "Z", INTEGERS.upper()):
            return cls.integers()
        if text.upper() in ("QQ", "Q", RATIONALS.upper()):
            return cls.rationals()
        match = _PRIME_FIELD_NAME.match(text)
        if match:
            return cls.prime_field(int(match.group(1)))
        raise ValueError(f"Unknown ring name: {name}")

    @property
    def name(self) -> str:
        if self.kind == INTEGERS:
            return "ZZ"
        if self.kind == RATIONALS:
            return "QQ"
        return f"GF{self.characteristic}"

    @property
    def symbol(self) -> str:
        """Symbol used when printing modules, e.g. ``Z`` or ``F_2``."""
        if self.kind == INTEGERS:
            return "Z"
        if self.kind == RATIONALS:
            return "Q"
        return f"F_{self.characteristic}"

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    @property
    def domain(self):
        """The sympy domain backing this ring."""
        if self.kind == INTEGERS:
            return ZZ
        if self.kind == RATIONALS:
            return QQ
        return _prime_field_domain(self.characteristic)

    def normalize(self, value: Any) -> Scalar:
        """Reduce a Python value to this ring's canonical representative.

        Raises:
            ValueError: If the value has no image in the ring (e.g. 1/2 in ZZ,
                or 1/p in GF(p))
        """
        if isinstance(value, int):
            if self.kind == INTEGERS:
                return int(value)
            if self.kind == PRIME_FIELD:
                return int(value) % self.characteristic
            return Fraction(int(value))
        if isinstance(value, str):
            value = Fraction(value.strip())
        value = Fraction(value)
        if self.kind == RATIONALS:
            return value
        if self.kind == INTEGERS:
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return int(value.numerator)
        p = self.characteristic
        if value.denominator % p == 0:
            raise ValueError(f"{value} has no image in GF({p})")
        return (value.numerator * pow(value.denominator, -1, p)) % p

    def to_domain(self, value: Scalar):
        """Convert a canonical Python value to a sympy domain element."""
        if self.kind == RATIONALS:
            value = Fraction(value)
            return QQ(value.numerator, value.denominator)
        return self.domain(int(value))

    def from_domain(self, element) -> Scalar:
        """Convert a sympy domain element back to a canonical Python value."""
        if self.kind == INTEGERS:
            return int(element)
        if self.kind == RATIONALS:
            return Fraction(int(QQ.numer(element)), int(QQ.denom(element)))
        return int(self.domain.to_int(element)) % self.characteristic

    def is_unit(self, value: Scalar) -> bool:
        if self.kind == INTEGERS:
            return value in (1, -1)
        return value != 0

    def divides(self, a: Scalar, b: Scalar) -> bool:
        """Whether a divides b."""
        if a == 0:
            return b == 0
        if self.kind == INTEGERS:
            return b % a == 0
        return True

    def divide(self, b: Scalar, a: Scalar) -> Scalar:
        """Exact quotient b / a, assuming a divides b."""
        if self.kind == INTEGERS:
            return b // a
        if self.kind == RATIONALS:
            return Fraction(b) / Fraction(a)
        p = self.characteristic
        return (b * pow(a, -1, p)) % p

    def reduce_mod(self, value: Scalar, modulus: Scalar) -> Scalar:
        """Canonical representative of value modulo an invariant factor."""
        if self.kind == INTEGERS and modulus not in (0, 1, -1):
            return value % abs(modulus)
        if self.is_unit(modulus):
            return 0
        return value

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a + b) if self.kind == PRIME_FIELD else a + b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a * b) if self.kind == PRIME_FIELD else a * b

    def neg(self, a: Scalar) -> Scalar:
        return self.normalize(-a) if self.kind == PRIME_FIELD else -a

    def __str__(self) -> str:
        return self.name
