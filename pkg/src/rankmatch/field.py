"""Prime fields GF(p).

Matrices and polynomials store plain ``int`` residues for speed and carry a
:class:`FieldSpec`; :class:`FieldElem` is the boxed scalar returned by
determinants, Pfaffians and coefficient queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

MAX_MODULUS = 1 << 15


class FieldMismatchError(ValueError):
    """Raised when elements of different prime fields are combined."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"field modulus must be an int, got {self.p!r}")
        if not _is_prime(self.p):
            raise ValueError(f"field modulus {self.p} is not prime")
        if self.p >= MAX_MODULUS:
            raise ValueError(f"field modulus {self.p} exceeds {MAX_MODULUS - 1}")

    def __call__(self, value: int) -> FieldElem:
        return FieldElem(value % self.p, self)

    @property
    def zero(self) -> FieldElem:
        return FieldElem(0, self)

    @property
    def one(self) -> FieldElem:
        return FieldElem(1, self)

    def elements(self) -> list[FieldElem]:
        return [FieldElem(v, self) for v in range(self.p)]

    def inv(self, value: int) -> int:
        """Inverse of a raw residue."""
        value %= self.p
        if value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(value, -1, self.p)

    def neg(self, value: int) -> int:
        return (-value) % self.p

    @cached_property
    def inverse_table(self) -> tuple[int, ...]:
        # entry 0 is a placeholder; callers must never look it up
        return (0,) + tuple(pow(v, -1, self.p) for v in range(1, self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True, eq=False)
class FieldElem:
    value: int
    spec: FieldSpec

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.spec.p:
            raise ValueError(f"{self.value} is not a reduced residue mod {self.spec.p}")

    def _coerce(self, other: FieldElem | int) -> int:
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec} elements")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: FieldElem | int) -> FieldElem:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem((self.value + v) % self.spec.p, self.spec)

    __radd__ = __add__

    def __sub__(self, other: FieldElem | int) -> FieldElem:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem((self.value - v) % self.spec.p, self.spec)

    def __rsub__(self, other: int) -> FieldElem:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem((v - self.value) % self.spec.p, self.spec)

    def __mul__(self, other: FieldElem | int) -> FieldElem:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElem((self.value * v) % self.spec.p, self.spec)

    __rmul__ = __mul__

    def __neg__(self) -> FieldElem:
        return FieldElem((-self.value) % self.spec.p, self.spec)

    def __pow__(self, exponent: int) -> FieldElem:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElem(pow(self.value, exponent, self.spec.p), self.spec)

    def __truediv__(self, other: FieldElem | int) -> FieldElem:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * self.spec.inv(v)

    def inverse(self) -> FieldElem:
        return FieldElem(self.spec.inv(self.value), self.spec)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElem):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.spec.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.spec.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.spec.p})"


def inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def arith(a: FieldElem, b: FieldElem, kind: str) -> FieldElem:
    """Apply ``kind`` in {"add", "sub", "mul"}; both operands must share a field."""
    if a.spec != b.spec:
        raise FieldMismatchError(f"cannot combine {a.spec} and {b.spec} elements")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")
