"""Exact linear algebra over the prime field F_p.

Vectors are :class:`FpVector`; subspaces are :class:`Subspace` values kept in
reduced row-echelon form (RREF) so that equal subspaces have identical bases.
Everything is immutable and built from plain Python ints.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatchError, DomainError

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

# Subspaces of ambient size above this skip the element bitset fast path.
_MASK_LIMIT = 1 << 16


@functools.lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_modulus(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise DomainError(f"modulus must be an integer >= 2, got {p!r}")
    if p <= 1 << 16 and not is_prime(p):
        raise DomainError(f"modulus {p} is not prime")


def _digit(c: int) -> str:
    return DIGITS[c]


def _parse_digits(s: str, p: int) -> tuple[int, ...]:
    if p > len(DIGITS):
        raise DomainError(f"digit strings support p <= {len(DIGITS)}")
    try:
        coords = tuple(DIGITS.index(ch) for ch in s.strip().lower())
    except ValueError:
        raise DomainError(f"bad digit string {s!r}") from None
    if any(c >= p for c in coords):
        raise DomainError(f"digit string {s!r} has a digit >= {p}")
    return coords


@dataclass(frozen=True)
class FpVector:
    """An element of (Z_p)^k."""

    coords: tuple[int, ...]
    p: int

    def __post_init__(self):
        check_modulus(self.p)
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise DomainError("vectors need k >= 1 coordinates")
        if any(c < 0 or c >= self.p for c in coords):
            raise DomainError(f"coordinates must lie in [0, {self.p}): {coords}")
        object.__setattr__(self, "coords", coords)

    @property
    def k(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, k: int, p: int) -> FpVector:
        return cls((0,) * k, p)

    @classmethod
    def from_string(cls, s: str, p: int) -> FpVector:
        """Parse a base-p digit string such as ``"011"``."""
        return cls(_parse_digits(s, p), p)

    @classmethod
    def from_index(cls, index: int, k: int, p: int) -> FpVector:
        return cls(index_to_coords(index, k, p), p)

    @property
    def index(self) -> int:
        """Position of this vector in the canonical (lexicographic) order."""
        return coords_to_index(self.coords, self.p)

    def _check(self, other: FpVector) -> None:
        if self.p != other.p or self.k != other.k:
            raise DimensionMismatchError(
                f"ambient mismatch: (p={self.p}, k={self.k}) vs (p={other.p}, k={other.k})")

    def __add__(self, other: FpVector) -> FpVector:
        self._check(other)
        return FpVector(tuple((a + b) % self.p for a, b in zip(self.coords, other.coords)), self.p)

    def __sub__(self, other: FpVector) -> FpVector:
        self._check(other)
        return FpVector(tuple((a - b) % self.p for a, b in zip(self.coords, other.coords)), self.p)

    def __neg__(self) -> FpVector:
        return FpVector(tuple(-a % self.p for a in self.coords), self.p)

    def scale(self, c: int) -> FpVector:
        return FpVector(tuple(a * c % self.p for a in self.coords), self.p)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "".join(_digit(c) for c in self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def coords_to_index(coords: Sequence[int], p: int) -> int:
    idx = 0
    for c in coords:
        idx = idx * p + c
    return idx


def index_to_coords(index: int, k: int, p: int) -> tuple[int, ...]:
    out = [0] * k
    for i in range(k - 1, -1, -1):
        index, out[i] = divmod(index, p)
    return tuple(out)


def all_vectors(k: int, p: int) -> Iterator[FpVector]:
    """Every vector of (Z_p)^k in canonical order."""
    for i in range(p**k):
        yield FpVector.from_index(i, k, p)


def _row_reduce(rows: Iterable[Sequence[int]], p: int, k: int) -> list[tuple[int, ...]]:
    """Gauss-Jordan elimination mod p; returns the nonzero RREF rows."""
    work = [[c % p for c in r] for r in rows]
    out_rows = 0
    for col in range(k):
        pivot = None
        for r in range(out_rows, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[out_rows], work[pivot] = work[pivot], work[out_rows]
        prow = work[out_rows]
        inv = pow(prow[col], -1, p)
        if inv != 1:
            prow[:] = [c * inv % p for c in prow]
        for r in range(len(work)):
            if r != out_rows:
                f = work[r][col]
                if f:
                    row = work[r]
                    work[r] = [(a - f * b) % p for a, b in zip(row, prow)]
        out_rows += 1
        if out_rows == len(work):
            break
    return [tuple(r) for r in work[:out_rows]]


def _pivot(row: Sequence[int]) -> int:
    for i, c in enumerate(row):
        if c:
            return i
    raise ValueError("zero row has no pivot")


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class Subspace:
    """A subspace (subgroup) of (Z_p)^k held by its canonical RREF basis.

    Construct through :func:`rref` or :meth:`from_string`; the constructor
    only validates that ``basis`` is already canonical.
    """

    p: int
    k: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_modulus(self.p)
        if self.k < 1:
            raise DomainError("ambient dimension must be >= 1")
        basis = tuple(tuple(int(c) for c in r) for r in self.basis)
        object.__setattr__(self, "basis", basis)
        if any(len(r) != self.k for r in basis):
            raise DimensionMismatchError("basis rows must have length k")
        if list(basis) != _row_reduce(basis, self.p, self.k):
            raise DomainError(f"basis is not in canonical RREF: {basis}")

    @classmethod
    def trivial(cls, k: int, p: int) -> Subspace:
        return cls(p, k, ())

    @classmethod
    def full(cls, k: int, p: int) -> Subspace:
        return cls(p, k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    @classmethod
    def from_string(cls, s: str, p: int) -> Subspace:
        """Parse ``"100;011"``; zero rows are allowed and the span is canonicalised."""
        parts = [x for x in s.strip().split(";")]
        rows = [_parse_digits(x, p) for x in parts]
        k = len(rows[0])
        if not k or any(len(r) != k for r in rows):
            raise DimensionMismatchError(f"rows of {s!r} differ in length")
        return rref(rows, p=p, k=k)

    def __str__(self) -> str:
        if not self.basis:
            return "0" * self.k
        return ";".join("".join(_digit(c) for c in r) for r in self.basis)

    def __repr__(self) -> str:
        return f"Subspace(p={self.p}, '{self}')"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.p, self.k)

    @property
    def order(self) -> int:
        return self.p**self.dim

    @property
    def index_in_group(self) -> int:
        """[G : S] = p^(k - dim)."""
        return self.p ** (self.k - self.dim)

    def is_trivial(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.k

    @functools.cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot(r) for r in self.basis)

    @functools.cached_property
    def free_columns(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(c for c in range(self.k) if c not in piv)

    @property
    def key(self) -> tuple:
        """Sort key of the canonical total order: dimension, then flattened basis."""
        return (self.dim, tuple(c for r in self.basis for c in r))

    def __lt__(self, other: Subspace) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.p, self.k) + self.key < (other.p, other.k) + other.key

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        """Eliminate the pivot coordinates of ``v``; the result represents v + S."""
        p = self.p
        out = list(v)
        for piv, row in zip(self.pivots, self.basis):
            f = out[piv]
            if f:
                out = [(a - f * b) % p for a, b in zip(out, row)]
        return tuple(out)

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All p^dim elements, as coordinate tuples."""
        p, k = self.p, self.k
        for idx in range(p**self.dim):
            coeffs = index_to_coords(idx, self.dim, p) if self.dim else ()
            v = [0] * k
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, row)]
            yield tuple(v)

    @functools.cached_property
    def element_mask(self) -> int:
        """Bitset over canonical vector indices of the nonzero elements."""
        mask = 0
        for v in self.elements():
            idx = coords_to_index(v, self.p)
            if idx:
                mask |= 1 << idx
        return mask


def _coerce_rows(rows, p, k):
    out = []
    for r in rows:
        if isinstance(r, FpVector):
            if p is None:
                p, k = r.p, r.k
            elif (r.p, r.k) != (p, k):
                raise DimensionMismatchError(
                    f"mixed ambient parameters: (p={p}, k={k}) vs (p={r.p}, k={r.k})")
            out.append(r.coords)
        else:
            r = tuple(int(c) for c in r)
            if k is None:
                k = len(r)
            elif len(r) != k:
                raise DimensionMismatchError(f"row {r} does not have length {k}")
            out.append(r)
    return out, p, k


def rref(rows: Iterable, p: int | None = None, k: int | None = None) -> Subspace:
    """Canonical span of ``rows``.

    ``rows`` may hold :class:`FpVector` values or plain integer sequences; in
    the latter case (or when ``rows`` is empty) ``p`` and ``k`` must be given.
    """
    out, p, k = _coerce_rows(list(rows), p, k)
    if p is None or k is None:
        raise DomainError("p and k are required for an empty or untyped row list")
    check_modulus(p)
    return Subspace(p, k, tuple(_row_reduce(out, p, k)))


def span(*vectors: FpVector) -> Subspace:
    return rref(vectors)


def _same_ambient(*spaces: Subspace) -> None:
    first = spaces[0]
    for s in spaces[1:]:
        if (s.p, s.k) != (first.p, first.k):
            raise DimensionMismatchError(
                f"ambient mismatch: (p={first.p}, k={first.k}) vs (p={s.p}, k={s.k})")


def contains(s: Subspace, v: FpVector | Sequence[int]) -> bool:
    coords = v.coords if isinstance(v, FpVector) else tuple(v)
    if isinstance(v, FpVector) and v.p != s.p or len(coords) != s.k:
        raise DimensionMismatchError("vector and subspace live in different spaces")
    return not any(s.reduce(coords))


def sum_subspaces(s1: Subspace, s2: Subspace) -> Subspace:
    """S1 + S2, the span of both bases."""
    _same_ambient(s1, s2)
    return rref(s1.basis + s2.basis, p=s1.p, k=s1.k)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """S1 ∩ S2 by the Zassenhaus construction.

    Row-reduce [[A, A], [B, 0]]; the rows whose left half vanishes carry a
    basis of the intersection in their right half.
    """
    _same_ambient(s1, s2)
    p, k = s1.p, s1.k
    if s1.is_trivial() or s2.is_trivial():
        return Subspace.trivial(k, p)
    block = [r + r for r in s1.basis] + [r + (0,) * k for r in s2.basis]
    reduced = _row_reduce(block, p, 2 * k)
    rows = [r[k:] for r in reduced if not any(r[:k])]
    return rref(rows, p=p, k=k)


def intersect_all(spaces: Sequence[Subspace]) -> Subspace:
    if not spaces:
        raise DomainError("cannot intersect an empty family")
    acc = spaces[0]
    for s in spaces[1:]:
        if acc.is_trivial():
            break
        acc = intersect(acc, s)
    return acc


def meets_trivially(s1: Subspace, s2: Subspace) -> bool:
    """True iff S1 ∩ S2 = {0}."""
    _same_ambient(s1, s2)
    if s1.dim + s2.dim > s1.k:
        return False
    if s1.p**s1.k <= _MASK_LIMIT:
        return not (s1.element_mask & s2.element_mask)
    return sum_subspaces(s1, s2).dim == s1.dim + s2.dim


def gaussian_binomial(k: int, m: int, p: int) -> int:
    """Number of m-dimensional subspaces of F_p^k, exactly."""
    if m < 0 or m > k:
        raise DomainError(f"gaussian_binomial needs 0 <= m <= k, got k={k}, m={m}")
    num = 1
    den = 1
    for i in range(1, m + 1):
        num *= p ** (k - i + 1) - 1
        den *= p**i - 1
    q, r = divmod(num, den)
    assert r == 0
    return q
