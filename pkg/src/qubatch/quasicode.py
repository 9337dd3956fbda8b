"""Quasi-uniform codes from subgroups of (Z_p)^k.

Position i of a codeword is the coset g + G_i of the information vector g.
Cosets are labelled canonically: reduce g by the RREF basis of G_i and read
the remaining free coordinates, in increasing column order, as base-p digits
(most significant first). The coset G_i itself gets label 0, and labels add
digit-wise mod p, so the code is a subgroup of the product of the quotients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (AmbiguousDecodeError, CapExceededError, DimensionMismatchError,
                     DomainError, NontrivialIntersectionError, NotACodewordError)
from .fplinalg import (DIGITS, FpVector, Subspace, _row_reduce, all_vectors,
                       check_modulus, coords_to_index, index_to_coords, intersect_all)

TABLE_CAP = 1 << 16

Codeword = tuple[int, ...]


@dataclass(frozen=True)
class SubgroupSystem:
    """Ordered subgroups G_1..G_n of (Z_p)^k."""

    p: int
    k: int
    positions: tuple[Subspace, ...]
    allow_duplicates: bool = False

    def __post_init__(self):
        check_modulus(self.p)
        positions = tuple(self.positions)
        object.__setattr__(self, "positions", positions)
        if not positions:
            raise DomainError("a subgroup system needs at least one position")
        for s in positions:
            if (s.p, s.k) != (self.p, self.k):
                raise DimensionMismatchError(
                    f"subgroup {s} is not in (Z_{self.p})^{self.k}")
        if not self.allow_duplicates and len(set(positions)) != len(positions):
            raise DomainError("duplicate subgroups; pass allow_duplicates=True to permit")

    @classmethod
    def of(cls, spaces: Sequence[Subspace], allow_duplicates: bool = False) -> SubgroupSystem:
        spaces = list(spaces)
        if not spaces:
            raise DomainError("a subgroup system needs at least one position")
        return cls(spaces[0].p, spaces[0].k, tuple(spaces), allow_duplicates)

    @property
    def n(self) -> int:
        return len(self.positions)

    def total_intersection(self) -> Subspace:
        return intersect_all(self.positions)


def _coords(g, p: int, k: int) -> tuple[int, ...]:
    if isinstance(g, FpVector):
        if (g.p, g.k) != (p, k):
            raise DimensionMismatchError(f"vector {g} is not in (Z_{p})^{k}")
        return g.coords
    if isinstance(g, str):
        return _coords(FpVector.from_string(g, p), p, k)
    coords = tuple(int(c) for c in g)
    if len(coords) != k or any(c < 0 or c >= p for c in coords):
        raise DimensionMismatchError(f"{coords} is not a vector of (Z_{p})^{k}")
    return coords


@dataclass(frozen=True)
class QuasiUniformCode:
    """A quasi-uniform code with the canonical coset labelling.

    Build with :func:`build_code`.
    """

    system: SubgroupSystem
    alphabet_sizes: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet_sizes",
                           tuple(s.index_in_group for s in self.system.positions))

    @property
    def p(self) -> int:
        return self.system.p

    @property
    def k(self) -> int:
        return self.system.k

    @property
    def n(self) -> int:
        return self.system.n

    @property
    def positions(self) -> tuple[Subspace, ...]:
        return self.system.positions

    @property
    def size(self) -> int:
        """Number of codewords, |G| / |G_N| = p^k."""
        return self.p**self.k

    @property
    def total_alphabet_size(self) -> int:
        return sum(self.alphabet_sizes)

    # labels -----------------------------------------------------------

    def label(self, i: int, g) -> int:
        """Label of the coset g + G_i."""
        s = self.positions[i]
        reduced = s.reduce(_coords(g, self.p, self.k))
        return coords_to_index([reduced[c] for c in s.free_columns], self.p)

    def label_digits(self, i: int, label: int) -> tuple[int, ...]:
        s = self.positions[i]
        self._check_label(i, label)
        return index_to_coords(label, len(s.free_columns), self.p)

    def format_symbol(self, i: int, label: int) -> str:
        """Packed base-p digit view of a symbol, e.g. ``"10"``."""
        return "".join(DIGITS[d] for d in self.label_digits(i, label))

    def coset_representative(self, i: int, label: int) -> tuple[int, ...]:
        """The reduced representative of the coset carrying ``label``."""
        s = self.positions[i]
        v = [0] * self.k
        for col, d in zip(s.free_columns, self.label_digits(i, label)):
            v[col] = d
        return tuple(v)

    def coset_preimage(self, i: int, label: int) -> frozenset[tuple[int, ...]]:
        """All elements of the coset of G_i carrying ``label``."""
        rep = self.coset_representative(i, label)
        p = self.p
        return frozenset(tuple((a + b) % p for a, b in zip(rep, e))
                         for e in self.positions[i].elements())

    def _check_label(self, i: int, label: int) -> None:
        if not 0 <= label < self.alphabet_sizes[i]:
            raise NotACodewordError(
                f"symbol {label} at position {i} outside alphabet of size {self.alphabet_sizes[i]}")

    # encode / decode ----------------------------------------------------

    def encode(self, g) -> Codeword:
        coords = _coords(g, self.p, self.k)
        return tuple(self.label(i, coords) for i in range(self.n))

    def decode_full(self, word: Sequence[int]) -> FpVector:
        return self.decode_subset(word, range(self.n))

    def decode_subset(self, word: Sequence[int], subset: Iterable[int]) -> FpVector:
        """Recover g from the symbols at ``subset`` by intersecting their cosets.

        ``word`` is either a full codeword (length n) or a mapping-like
        sequence indexed by position; only entries in ``subset`` are read.
        """
        subset = sorted(set(subset))
        if not subset:
            raise AmbiguousDecodeError("no positions given", Subspace.full(self.k, self.p))
        if len(word) != self.n:
            raise DomainError(f"word has length {len(word)}, code length is {self.n}")
        residual = intersect_all([self.positions[i] for i in subset])
        if not residual.is_trivial():
            raise AmbiguousDecodeError(
                f"positions {subset} leave the subgroup {residual} undetermined", residual)
        return FpVector(self._solve(word, subset), self.p)

    def _solve(self, word, subset) -> tuple[int, ...]:
        # Coset condition at position i: for each free column c of G_i,
        #   g[c] - sum_r g[pivot_r] * row_r[c] = digit_c.
        p, k = self.p, self.k
        equations = []
        for i in subset:
            label = int(word[i])
            self._check_label(i, label)
            s = self.positions[i]
            for col, d in zip(s.free_columns, self.label_digits(i, label)):
                eq = [0] * (k + 1)
                eq[col] = 1
                for piv, row in zip(s.pivots, s.basis):
                    eq[piv] = (eq[piv] - row[col]) % p
                eq[k] = d
                equations.append(eq)
        reduced = _row_reduce(equations, p, k + 1)
        g = [0] * k
        for row in reduced:
            lead = next(c for c, x in enumerate(row) if x)
            if lead == k:
                raise NotACodewordError(
                    f"symbols at positions {list(subset)} have no common preimage")
            g[lead] = row[k]
        if len(reduced) < k:
            raise AmbiguousDecodeError("underdetermined system", Subspace.full(self.k, self.p))
        return tuple(g)

    # tables ---------------------------------------------------------------

    def code_table(self, cap: int = TABLE_CAP) -> list[tuple[FpVector, Codeword]]:
        """All (g, encode(g)) rows in canonical vector order."""
        if self.p**self.k > cap:
            raise CapExceededError(f"p^k = {self.p ** self.k} exceeds table cap {cap}")
        return [(g, self.encode(g)) for g in all_vectors(self.k, self.p)]

    def minimum_distance(self, cap: int = TABLE_CAP) -> int:
        """Minimum weight over nonzero codewords (the code is a group)."""
        if self.p**self.k < 2:
            raise DomainError("minimum distance needs at least two codewords")
        return min(sum(1 for x in w if x) for g, w in self.code_table(cap) if not g.is_zero())

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "positions": [str(s) for s in self.positions],
            "alphabets": list(self.alphabet_sizes),
        }

    @classmethod
    def from_json(cls, data: dict) -> QuasiUniformCode:
        p, k = int(data["p"]), int(data["k"])
        spaces = []
        for text in data["positions"]:
            s = Subspace.from_string(text, p)
            if s.k != k:
                raise DimensionMismatchError(f"position {text!r} is not in (Z_{p})^{k}")
            spaces.append(s)
        code = build_code(SubgroupSystem(p, k, tuple(spaces),
                                         allow_duplicates=bool(data.get("allow_duplicates"))))
        if "alphabets" in data and list(data["alphabets"]) != list(code.alphabet_sizes):
            raise DomainError("descriptor alphabets disagree with its subgroups")
        return code


def build_code(system: SubgroupSystem) -> QuasiUniformCode:
    """Quasi-uniform code of a system whose subgroups meet only in 0."""
    residual = system.total_intersection()
    if not residual.is_trivial():
        raise NontrivialIntersectionError(
            f"subgroups share the nontrivial subgroup {residual}; choose subgroups "
            "with trivial total intersection", residual)
    return QuasiUniformCode(system)


def parse_word(text: str) -> Codeword:
    """``"3,1,2"`` -> (3, 1, 2)."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"bad codeword {text!r}") from None


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(x) for x in word)


def dumps_descriptor(code: QuasiUniformCode, **extra) -> str:
    data = code.to_json()
    data.update(extra)
    return json.dumps(data, indent=2, sort_keys=False)
