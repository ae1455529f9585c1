"""Exact arithmetic on monomials and monomial ideals.

A monomial in n variables is an exponent vector of n naturals; a monomial
ideal is stored as its unique minimal generating antichain, kept in
canonical form (distinct rows, lexicographically sorted) at every operation
boundary, so two ideals are equal iff their generator matrices are equal.

Exponents are int64 throughout; operations that could overflow (Frobenius
powers, products) check their inputs and refuse rather than wrap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import AmbientMismatch, ResourceLimit

Exponents = Sequence[int]

# int64 headroom: reject results that could reach 2^62
_MAX_EXPONENT = 1 << 62

_DEFAULT_GEN_BUDGET = 100_000


def generator_budget() -> int:
    """Cap on intermediate generator counts (env FROBLOC_MAX_GENS)."""
    raw = os.environ.get("FROBLOC_MAX_GENS", "")
    try:
        return int(raw) if raw else _DEFAULT_GEN_BUDGET
    except ValueError:
        return _DEFAULT_GEN_BUDGET


def _check_budget(count: int) -> None:
    budget = generator_budget()
    if count > budget:
        raise ResourceLimit(
            f"intermediate generator count {count} exceeds the bound {budget}"
        )


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    """q = p^e with p prime and e >= 1."""

    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"e={self.e} must be >= 1 (q = p^e >= 2)")

    @property
    def q(self) -> int:
        return self.p**self.e

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        if q < 2:
            raise ValueError(f"q={q} is not a prime power >= 2")
        p = 2
        while p * p <= q:
            if q % p == 0:
                break
            p += 1
        else:
            p = q
        e = 0
        rest = q
        while rest % p == 0:
            rest //= p
            e += 1
        if rest != 1:
            raise ValueError(f"q={q} is not a prime power")
        return cls(p, e)


def _coerce_power(q: "int | PrimePower") -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.from_q(q)


# ---------------------------------------------------------------------------
# monomial-level helpers


def unit_monomial(n: int) -> tuple[int, ...]:
    return (0,) * n


def divides(a: Exponents, b: Exponents) -> bool:
    """True iff a_i <= b_i for all i."""
    if len(a) != len(b):
        raise AmbientMismatch(f"monomials in {len(a)} and {len(b)} variables")
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Exponents, b: Exponents) -> tuple[int, ...]:
    """Componentwise max."""
    if len(a) != len(b):
        raise AmbientMismatch(f"monomials in {len(a)} and {len(b)} variables")
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a: Exponents, b: Exponents) -> tuple[int, ...]:
    """Componentwise sum."""
    if len(a) != len(b):
        raise AmbientMismatch(f"monomials in {len(a)} and {len(b)} variables")
    return tuple(x + y for x, y in zip(a, b))


def format_monomial(exps: Exponents, power_suffix: str = "") -> str:
    """Render an exponent vector as x1^2*x3; the unit monomial is "1"."""
    parts = []
    for i, c in enumerate(exps, start=1):
        if c == 0:
            continue
        parts.append(f"x{i}" if c == 1 else f"x{i}^{c}")
    if not parts:
        return "1"
    return "*".join(parts) + power_suffix


def as_matrix(mons: Iterable[Exponents], n: "int | None" = None) -> np.ndarray:
    """Stack exponent vectors into an (m, n) int64 matrix, validating shape."""
    rows = [tuple(int(c) for c in m) for m in mons]
    if n is None:
        if not rows:
            raise ValueError("ambient variable count required for an empty set")
        n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise AmbientMismatch(f"expected {n} exponents, got {len(r)}")
        if any(c < 0 for c in r):
            raise ValueError(f"negative exponent in {r}")
        if any(c >= _MAX_EXPONENT for c in r):
            raise OverflowError(f"exponent too large in {r}")
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


# ---------------------------------------------------------------------------
# ideals


class MonomialIdeal:
    """Monomial ideal given by its minimal generating antichain.

    The zero ideal has no generators; the unit ideal is generated by the
    all-zero vector.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, gens: Iterable[Exponents], n: "int | None" = None):
        matrix = as_matrix(gens, n)
        self._install(_minimal_rows(matrix), matrix.shape[1])

    def _install(self, gens: np.ndarray, n: int) -> None:
        gens.setflags(write=False)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_hash", hash((n, gens.tobytes())))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def _from_canonical(cls, gens: np.ndarray, n: int) -> "MonomialIdeal":
        ideal = cls.__new__(cls)
        ideal._install(gens, n)
        return ideal

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, n: int) -> "MonomialIdeal":
        matrix = np.asarray(matrix, dtype=np.int64).reshape(-1, n)
        if matrix.size and matrix.min() < 0:
            raise ValueError("negative exponent")
        return cls._from_canonical(_minimal_rows(matrix), n)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls._from_canonical(np.empty((0, n), dtype=np.int64), n)

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls._from_canonical(np.zeros((1, n), dtype=np.int64), n)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.gens.shape[0] == 0

    def is_unit(self) -> bool:
        return self.gens.shape[0] == 1 and not self.gens.any()

    def generators(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(c) for c in row) for row in self.gens)

    def num_generators(self) -> int:
        return self.gens.shape[0]

    def contains(self, mono: Exponents) -> bool:
        """True iff some generator divides the monomial."""
        row = as_matrix([mono], self.n)
        return bool(_kernels.divides_any(self.gens, row)[0])

    def contains_each(self, matrix: np.ndarray) -> np.ndarray:
        return _kernels.divides_any(self.gens, matrix)

    def __contains__(self, mono: Exponents) -> bool:
        return self.contains(mono)

    def is_subideal_of(self, other: "MonomialIdeal") -> bool:
        self._same_ambient(other)
        if self.is_zero():
            return True
        return bool(other.contains_each(self.gens).all())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.gens, other.gens)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MonomialIdeal({list(self.generators())}, n={self.n})"

    def render(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.generators()) + ")"

    def _same_ambient(self, other: "MonomialIdeal") -> None:
        if self.n != other.n:
            raise AmbientMismatch(f"ideals in {self.n} and {other.n} variables")

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same_ambient(other)
        stacked = np.vstack([self.gens, other.gens])
        return MonomialIdeal.from_matrix(stacked, self.n)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._same_ambient(other)
        a, b = self.gens, other.gens
        if a.shape[0] == 0 or b.shape[0] == 0:
            return MonomialIdeal.zero(self.n)
        _check_budget(a.shape[0] * b.shape[0])
        hi = int(a.max(initial=0)) + int(b.max(initial=0))
        if hi >= _MAX_EXPONENT:
            raise OverflowError("product exponent exceeds the int64 guard")
        prods = (a[:, None, :] + b[None, :, :]).reshape(-1, self.n)
        return MonomialIdeal.from_matrix(prods, self.n)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection: pairwise lcms, minimalized."""
        self._same_ambient(other)
        a, b = self.gens, other.gens
        if a.shape[0] == 0 or b.shape[0] == 0:
            return MonomialIdeal.zero(self.n)
        _check_budget(a.shape[0] * b.shape[0])
        lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, self.n)
        return MonomialIdeal.from_matrix(lcms, self.n)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self & other

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(self : other) = {m | m*g in self for every generator g of other}.

        Computed as the intersection over generators g of (self : g), where
        (self : x^g) is generated by lcm(h, x^g)/x^g over generators h.
        """
        self._same_ambient(other)
        if other.is_zero():
            raise ValueError("colon by the zero ideal is undefined here")
        result: "MonomialIdeal | None" = None
        for g in other.gens:
            quotients = np.maximum(self.gens, g) - g
            single = MonomialIdeal.from_matrix(quotients, self.n)
            result = single if result is None else result & single
        assert result is not None
        return result

    def frobenius_power(self, q: "int | PrimePower") -> "MonomialIdeal":
        """Generated by the q-th powers of the generators, q = p^e."""
        power = _coerce_power(q)
        qv = power.q
        if self.gens.size and int(self.gens.max()) * qv >= _MAX_EXPONENT:
            raise OverflowError(f"exponent * {qv} exceeds the int64 guard")
        if qv >= _MAX_EXPONENT:
            raise OverflowError(f"q={qv} exceeds the int64 guard")
        # scaling an antichain is an antichain; rows stay sorted
        return MonomialIdeal._from_canonical(self.gens * np.int64(qv), self.n)


def _minimal_rows(matrix: np.ndarray) -> np.ndarray:
    """Canonical minimal generating set: unique rows, antichain, lex order."""
    if matrix.shape[0] == 0:
        return matrix.astype(np.int64)
    unique = np.unique(matrix, axis=0)
    keep = _kernels.minimal_mask(unique)
    return np.ascontiguousarray(unique[keep])


def minimalize(gens: Iterable[Exponents], n: "int | None" = None) -> MonomialIdeal:
    """Drop redundant generators; {} yields the zero ideal (needs explicit n)."""
    return MonomialIdeal(gens, n)


def frobenius_power(ideal: MonomialIdeal, q: "int | PrimePower") -> MonomialIdeal:
    return ideal.frobenius_power(q)


def colon(j: MonomialIdeal, i: MonomialIdeal) -> MonomialIdeal:
    return j.colon(i)
