"""Sparse multivariate polynomials over GF(p)."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..field import FieldElem, FieldMismatchError, FieldSpec

Monomial = tuple[int, ...]


class Polynomial:
    """Map from exponent vectors to nonzero residues; immutable by convention."""

    __slots__ = ("spec", "nvars", "terms")

    def __init__(self, spec: FieldSpec, nvars: int, terms: dict[Monomial, int] | None = None):
        self.spec = spec
        self.nvars = nvars
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has {len(mono)} exponents, expected {nvars}")
            c %= spec.p
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def constant(cls, spec: FieldSpec, nvars: int, c: int) -> Polynomial:
        return cls(spec, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, spec: FieldSpec, nvars: int, index: int) -> Polynomial:
        mono = [0] * nvars
        mono[index] = 1
        return cls(spec, nvars, {tuple(mono): 1})

    @classmethod
    def linear(cls, spec: FieldSpec, const: int, coeffs: Sequence[int]) -> Polynomial:
        """``const + sum(coeffs[i] * x_i)``."""
        nvars = len(coeffs)
        terms = {(0,) * nvars: const}
        for i, c in enumerate(coeffs):
            if c % spec.p:
                mono = [0] * nvars
                mono[i] = 1
                terms[tuple(mono)] = c
        return cls(spec, nvars, terms)

    def _check(self, other: Polynomial) -> None:
        if self.spec != other.spec:
            raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec} polynomials")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, FieldElem):
            other = other.value
        return Polynomial.constant(self.spec, self.nvars, other)

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = self._lift(other)
        p = self.spec.p
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = (out.get(mono, 0) + c) % p
        return Polynomial(self.spec, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.spec, self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> Polynomial:
        return self._lift(other) - self

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        other = self._lift(other)
        p = self.spec.p
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = (out.get(mono, 0) + c1 * c2) % p
        return Polynomial(self.spec, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.spec, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.spec, self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.spec, self.nvars, self.terms) == (other.spec, other.nvars, other.terms)

    def __hash__(self) -> int:
        return hash((self.spec.p, self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Iterable[int]) -> FieldElem:
        mono = tuple(mono)
        if len(mono) != self.nvars:
            raise ValueError(f"monomial {mono} has {len(mono)} exponents, expected {self.nvars}")
        return self.spec(self.terms.get(mono, 0))

    def evaluate(self, point: Sequence[int | FieldElem]) -> FieldElem:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        p = self.spec.p
        xs = [int(x) % p for x in point]
        total = 0
        for mono, c in self.terms.items():
            term = c
            for x, e in zip(xs, mono):
                if e:
                    term = term * pow(x, e, p) % p
            total += term
        return self.spec(total)

    __call__ = evaluate

    def __repr__(self) -> str:
        return f"Polynomial(GF({self.spec.p}), {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
            c = self.terms[mono]
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)
