"""Exact coefficient fields: prime fields F_p and the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Keeps p**2 * (inner dimension) inside int64 for every matrix product we form.
MAX_PRIME = 1 << 20


class CharacteristicError(ValueError):
    """Raised when an operation needs 1/2 but the field has characteristic 2."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A prime field ``F_p`` (``characteristic = p``) or ``Q`` (``characteristic = 0``).

    Elements of ``F_p`` are Python ints in ``[0, p)``; elements of ``Q`` are
    :class:`fractions.Fraction`.  Vectors and matrices are numpy arrays of
    dtype int64 (``F_p``) or object (``Q``).
    """

    characteristic: int = 101

    def __post_init__(self):
        p = self.characteristic
        if p != 0:
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            if p >= MAX_PRIME:
                raise ValueError(f"prime {p} too large (limit {MAX_PRIME})")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime"

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    @property
    def dtype(self):
        return np.int64 if self.characteristic else object

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator % p) * pow(x.denominator % p, -1, p) % p
        return int(x) % p

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.characteristic if self.characteristic else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.characteristic else a - b

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.characteristic else a * b

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return pow(int(a), -1, p) if p else 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def half(self):
        """``1/2``; refuses characteristic 2."""
        self.require_odd("division by 2")
        return self.inv(self(2))

    def require_odd(self, what: str = "this operation"):
        if self.characteristic == 2:
            raise CharacteristicError(f"{what} requires characteristic != 2")

    # -- arrays -------------------------------------------------------------

    def zeros(self, shape) -> np.ndarray:
        if self.characteristic:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def array(self, values) -> np.ndarray:
        """Coerce nested integers/fractions into a field array."""
        p = self.characteristic
        arr = np.array(values, dtype=object)
        if p:
            flat = [self(x) for x in arr.ravel()]
            return np.array(flat, dtype=np.int64).reshape(arr.shape)
        flat = np.empty(arr.size, dtype=object)
        flat[:] = [Fraction(x) for x in arr.ravel()]
        return flat.reshape(arr.shape)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.characteristic if self.characteristic else arr

    def to_json(self) -> dict:
        if self.characteristic == 0:
            return {"kind": "rationals"}
        return {"kind": "prime", "p": self.characteristic}

    @classmethod
    def from_json(cls, data) -> "Field":
        if isinstance(data, (int, str)):
            data = {"kind": "prime", "p": int(data)} if str(data) not in ("0", "QQ") else {"kind": "rationals"}
        kind = data.get("kind", "prime")
        if kind in ("rationals", "QQ", "rational"):
            return cls(0)
        p = data.get("p", data.get("characteristic"))
        if p is None:
            raise ValueError("prime field needs 'p'")
        return cls(int(p))


QQ = Field(0)
GF101 = Field(101)
