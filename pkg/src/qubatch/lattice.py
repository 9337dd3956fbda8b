"""Subspace lattice of (Z_p)^k: enumeration, complements, superspaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, DomainError
from .fplinalg import Subspace, check_modulus, gaussian_binomial, rref

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class LatticeSlice:
    """All m-dimensional subspaces of (Z_p)^k in canonical order."""

    p: int
    k: int
    dim: int
    subspaces: tuple[Subspace, ...]

    def __len__(self):
        return len(self.subspaces)

    def __iter__(self):
        return iter(self.subspaces)

    def __getitem__(self, i):
        return self.subspaces[i]

    def index(self, s: Subspace) -> int:
        return self.subspaces.index(s)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "dim": self.dim,
            "count": len(self.subspaces),
            "subspaces": [str(s) for s in self.subspaces],
        }


def _rref_matrices(k: int, m: int, p: int):
    """Yield every m x k RREF matrix of rank m exactly once."""
    for pivots in itertools.combinations(range(k), m):
        pivot_set = set(pivots)
        free_slots = [(r, c) for r, piv in enumerate(pivots)
                      for c in range(piv + 1, k) if c not in pivot_set]
        for values in itertools.product(range(p), repeat=len(free_slots)):
            rows = [[0] * k for _ in range(m)]
            for r, piv in enumerate(pivots):
                rows[r][piv] = 1
            for (r, c), val in zip(free_slots, values):
                rows[r][c] = val
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(k: int, m: int, p: int, cap: int = DEFAULT_CAP) -> LatticeSlice:
    """Every m-dimensional subspace of (Z_p)^k, built directly from RREF patterns."""
    check_modulus(p)
    if k < 1:
        raise DomainError("k must be >= 1")
    if m < 0 or m > k:
        raise DomainError(f"dimension {m} out of range 0..{k}")
    count = gaussian_binomial(k, m, p)
    if count > cap:
        raise CapExceededError(f"{count} subspaces of dimension {m} exceed cap {cap}")
    spaces = sorted(Subspace(p, k, basis) for basis in _rref_matrices(k, m, p))
    return LatticeSlice(p, k, m, tuple(spaces))


def lattice_size(k: int, p: int) -> int:
    """Number of nontrivial proper subspaces of (Z_p)^k."""
    return sum(gaussian_binomial(k, m, p) for m in range(1, k))


def enumerate_lattice(k: int, p: int, cap: int = DEFAULT_CAP) -> list[LatticeSlice]:
    """Slices for m = 1..k-1."""
    if k < 2:
        raise DomainError("the nontrivial lattice needs k >= 2")
    check_modulus(p)
    total = lattice_size(k, p)
    if total > cap:
        raise CapExceededError(f"lattice of (Z_{p})^{k} has {total} subspaces, cap is {cap}")
    return [enumerate_subspaces(k, m, p, cap) for m in range(1, k)]


def complements_of(s: Subspace) -> list[Subspace]:
    """All complements U of S (S ∩ U = 0, S + U = everything), canonical order.

    Extend the basis w_1..w_m of S by the unit vectors on its free columns
    v_1..v_{k-m}. Each m x (k-m) matrix A gives U_A spanned by
    v_j + sum_i A[i][j] w_i, and A -> U_A is a bijection onto the complements.
    """
    if s.is_trivial() or s.is_full():
        raise DomainError("complements are only enumerated for 0 < dim S < k")
    p, k, m = s.p, s.k, s.dim
    free = s.free_columns
    out = []
    for entries in itertools.product(range(p), repeat=m * (k - m)):
        rows = []
        for j, col in enumerate(free):
            v = [0] * k
            v[col] = 1
            for i, w in enumerate(s.basis):
                a = entries[i * (k - m) + j]
                if a:
                    v = [(x + a * y) % p for x, y in zip(v, w)]
            rows.append(v)
        out.append(rref(rows, p=p, k=k))
    return sorted(out)


def superspaces_containing(s: Subspace, m: int) -> list[Subspace]:
    """All m-dimensional subspaces containing S, canonical order.

    Uses the correspondence with (m - dim S)-dimensional subspaces of the
    quotient, realised on the free columns of S.
    """
    d, k, p = s.dim, s.k, s.p
    if m < d or m > k:
        raise DomainError(f"need dim S = {d} <= m <= {k}, got m = {m}")
    free = s.free_columns
    out = []
    for q in enumerate_subspaces(k - d, m - d, p) if k > d else [None]:
        rows = list(s.basis)
        if q is not None:
            for r in q.basis:
                v = [0] * k
                for col, c in zip(free, r):
                    v[col] = c
                rows.append(tuple(v))
        out.append(rref(rows, p=p, k=k))
    return sorted(out)
