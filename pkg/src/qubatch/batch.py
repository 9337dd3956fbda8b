"""Quasi-uniform batch codes: recovery plans, request service, symbol repair.

Code positions are 0-based. Information-symbol indices in a request are
1-based, i.e. they range over [k] = {1, ..., k}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (CapacityExceededError, DomainError, InvalidPlanError,
                     IrreparableError)
from .fplinalg import FpVector, gaussian_binomial, meets_trivially
from .lattice import DEFAULT_CAP, enumerate_lattice
from .quasicode import QuasiUniformCode, SubgroupSystem, build_code
from .recovery import (bipartite_from_subspaces, build_halfdim_graph, connected_components,
                       graph_from_subspaces, max_bipartite_matching, max_general_matching)

RECOVERY_SET_SIZE = 2


@dataclass(frozen=True)
class RecoveryPlan:
    """Pairwise disjoint position pairs, each decoding the whole vector."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        used = [x for pair in pairs for x in pair]
        if len(set(used)) != len(used):
            raise InvalidPlanError(f"recovery pairs overlap: {pairs}")

    @property
    def t(self) -> int:
        return len(self.pairs)

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class BatchParams:
    n: int
    k: int
    t: int
    r: int

    @property
    def rho(self) -> int:
        return self.n - self.k

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.t, self.r)


@dataclass(frozen=True)
class BatchCode:
    code: QuasiUniformCode
    plan: RecoveryPlan

    @property
    def params(self) -> BatchParams:
        return BatchParams(self.code.n, self.code.k, self.plan.t, RECOVERY_SET_SIZE)

    def bound_gaps(self) -> dict[int, int]:
        """n - (2t - r) for each r in [1, min(t, k)]."""
        t, k, n = self.plan.t, self.code.k, self.code.n
        return {r: n - length_bound(t, r) for r in range(1, min(t, k) + 1)}

    def report(self) -> dict:
        prm = self.params
        return {
            "n": prm.n,
            "k": prm.k,
            "t": prm.t,
            "r": prm.r,
            "rho": prm.rho,
            "pairs": [list(pr) for pr in self.plan.pairs],
            "bound_gaps": {str(r): gap for r, gap in self.bound_gaps().items()},
        }

    def to_json(self) -> dict:
        data = self.code.to_json()
        data["plan"] = [list(pr) for pr in self.plan.pairs]
        data["params"] = self.report()
        return data

    @classmethod
    def from_json(cls, data: dict) -> BatchCode:
        code = QuasiUniformCode.from_json(data)
        return build_batch_code(code, RecoveryPlan(tuple(tuple(x) for x in data.get("plan", []))))


@dataclass(frozen=True)
class ServiceAssignment:
    requests: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    decoded: tuple[FpVector, ...]
    values: tuple[int, ...]


def build_batch_code(system: SubgroupSystem | QuasiUniformCode, plan: RecoveryPlan) -> BatchCode:
    """Attach ``plan`` to the code of ``system`` after checking every pair."""
    code = system if isinstance(system, QuasiUniformCode) else build_code(system)
    for a, b in plan.pairs:
        if not (0 <= a < code.n and 0 <= b < code.n) or a == b:
            raise InvalidPlanError(f"pair ({a}, {b}) is not a pair of positions of a length-{code.n} code")
        if not meets_trivially(code.positions[a], code.positions[b]):
            raise InvalidPlanError(
                f"positions {a} and {b} share a nontrivial subgroup; the pair cannot decode")
    return BatchCode(code, plan)


def build_full_lattice_batch_code(k: int, p: int = 2, cap: int = DEFAULT_CAP) -> BatchCode:
    """All nontrivial subgroups of (Z_p)^k as positions.

    The plan matches dimension m with dimension k - m for every m < k/2 by a
    perfect bipartite matching; for even k the k/2 slice is matched within
    itself by a maximum general matching.
    """
    if k < 2:
        raise DomainError("the full-lattice construction needs k >= 2")
    slices = enumerate_lattice(k, p, cap)
    positions = [s for sl in slices for s in sl]
    offset = {}
    acc = 0
    for sl in slices:
        offset[sl.dim] = acc
        acc += len(sl)

    pairs = []
    for m in range(1, (k + 1) // 2):
        if 2 * m == k:
            continue
        left, right = slices[m - 1], slices[k - m - 1]
        g = bipartite_from_subspaces(left.subspaces, right.subspaces)
        nl = len(left)
        for u, v in max_bipartite_matching(g).pairs:
            pairs.append((offset[m] + u, offset[k - m] + (v - nl)))
    if k % 2 == 0:
        half = slices[k // 2 - 1]
        g = graph_from_subspaces(half.subspaces)
        for u, v in max_general_matching(g).pairs:
            pairs.append((offset[k // 2] + u, offset[k // 2] + v))

    system = SubgroupSystem(p, k, tuple(positions))
    return build_batch_code(system, RecoveryPlan(tuple(pairs)))


def build_from_positions(system: SubgroupSystem) -> BatchCode:
    """Batch code on arbitrary positions, plan = maximum matching of their
    trivial-intersection graph."""
    code = build_code(system)
    g = graph_from_subspaces(code.positions)
    return build_batch_code(code, RecoveryPlan(max_general_matching(g).pairs))


def full_lattice_parameters(k: int, p: int = 2, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """(n, t) from the closed formulas, with half-slice components computed."""
    if k % 2:
        n = sum(2 * gaussian_binomial(k, m, p) for m in range(1, (k - 1) // 2 + 1))
        t = sum(gaussian_binomial(k, m, p) for m in range(1, (k - 1) // 2 + 1))
        return n, t
    n = sum(gaussian_binomial(k, m, p) for m in range(1, k))
    comps = connected_components(build_halfdim_graph(k, p, cap))
    t = sum(gaussian_binomial(k, m, p) for m in range(1, k // 2)) + sum(len(c) // 2 for c in comps)
    return n, t


# service ---------------------------------------------------------------------


def parse_request(text: str) -> tuple[int, ...]:
    """``"1,2,2"`` -> (1, 2, 2)."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"bad request {text!r}") from None


def serve_request(bc: BatchCode, word: Sequence[int], request: Iterable[int]) -> ServiceAssignment:
    """Serve request l from plan pair l; each pair decodes the full vector."""
    request = tuple(int(i) for i in request)
    k = bc.code.k
    if any(not 1 <= i <= k for i in request):
        raise DomainError(f"request indices must lie in 1..{k}: {request}")
    if len(request) > bc.plan.t:
        raise CapacityExceededError(
            f"request of size {len(request)} exceeds the {bc.plan.t} recovery pairs")
    pairs = bc.plan.pairs[: len(request)]
    decoded = tuple(bc.code.decode_subset(word, pr) for pr in pairs)
    values = tuple(g[i - 1] for g, i in zip(decoded, request))
    return ServiceAssignment(request, pairs, decoded, values)


def length_bound(t: int, r: int) -> int:
    """2t - r, the length bound for a batch of t requests with r distinct symbols."""
    if not 1 <= r <= t:
        raise DomainError(f"need 1 <= r <= t, got t={t}, r={r}")
    return 2 * t - r


# repair ----------------------------------------------------------------------


def intact_pairs(bc: BatchCode, erased: Iterable[int]) -> list[tuple[int, int]]:
    erased = set(erased)
    return [pr for pr in bc.plan.pairs if pr[0] not in erased and pr[1] not in erased]


def repair_symbol(bc: BatchCode, word: Sequence[int], erased: Iterable[int], position: int) -> int:
    """Rebuild the symbol at an erased ``position`` from the first intact pair.

    Entries of ``word`` at erased positions are ignored.
    """
    erased = frozenset(erased)
    if position not in erased:
        raise DomainError(f"position {position} is not in the erasure set")
    pairs = intact_pairs(bc, erased)
    if not pairs:
        raise IrreparableError(f"no recovery pair avoids the erasures {sorted(erased)}", erased)
    g = bc.code.decode_subset(word, pairs[0])
    return bc.code.label(position, g)


def repair_availability(bc: BatchCode, erased: Iterable[int]) -> dict[int, int]:
    """For each erased position, the number of intact disjoint pairs able to repair it."""
    erased = sorted(set(erased))
    count = len(intact_pairs(bc, erased))
    return {e: count for e in erased}


def dumps_report(bc: BatchCode) -> str:
    return json.dumps(bc.report(), indent=2)
