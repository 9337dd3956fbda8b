"""Brute-force verifiers.

These deliberately avoid the row-reduction machinery: subspaces are handled
as explicit element sets and codeword symbols as explicit cosets, so that an
agreement with the main modules is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass
from typing import Sequence

from .batch import serve_request
from .errors import CapExceededError, DomainError, QubatchError
from .fplinalg import Subspace, intersect_all

DEFAULT_SEED = 0x5EED
EXHAUSTIVE_MAX_N = 20

Vec = tuple[int, ...]


def _add(a: Vec, b: Vec, p: int) -> Vec:
    return tuple((x + y) % p for x, y in zip(a, b))


def _vectors(k: int, p: int) -> list[Vec]:
    return list(itertools.product(range(p), repeat=k))


def span_elements(gens: Sequence[Vec], p: int, k: int) -> frozenset[Vec]:
    """Closure of ``gens`` under addition (scalar multiples are repeated sums)."""
    elems = {(0,) * k}
    frontier = list(elems)
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                s = _add(e, tuple(g), p)
                if s not in elems:
                    elems.add(s)
                    new.append(s)
        frontier = new
    return frozenset(elems)


def brute_subspaces(k: int, m: int, p: int) -> list[frozenset[Vec]]:
    """Every m-dimensional subspace as an element set, by spanning all m-sets of vectors."""
    if not 0 <= m <= k:
        raise DomainError(f"dimension {m} out of range")
    if p**k > 256:
        raise CapExceededError("brute subspace enumeration is limited to p^k <= 256")
    nonzero = [v for v in _vectors(k, p) if any(v)]
    seen = set()
    for gens in itertools.combinations(nonzero, m):
        s = span_elements(gens, p, k)
        if len(s) == p**m:
            seen.add(s)
    return sorted(seen, key=lambda s: sorted(s))


def brute_complement_count(s: Subspace) -> int:
    """Number of (k - dim S)-dimensional subspaces meeting S only in 0."""
    if s.is_trivial() or s.is_full():
        raise DomainError("complements are counted only for 0 < dim S < k")
    zero = (0,) * s.k
    elems = span_elements(s.basis, s.p, s.k)
    return sum(1 for u in brute_subspaces(s.k, s.k - s.dim, s.p) if elems & u == {zero})


def brute_max_matching(graph) -> int:
    """Exact maximum matching size by exhaustive search (at most 12 vertices).

    ``graph`` is an IntersectionGraph or a plain adjacency list.
    """
    adj = getattr(graph, "adjacency", graph)
    n = len(adj)
    if n > 12:
        raise CapExceededError("brute_max_matching handles at most 12 vertices")
    nbrs = [frozenset(a) for a in adj]

    def best(free: frozenset) -> int:
        if not free:
            return 0
        u = min(free)
        rest = free - {u}
        result = best(rest)
        for v in nbrs[u] & rest:
            result = max(result, 1 + best(rest - {v}))
        return result

    return best(frozenset(range(n)))


def _coset_table(code) -> list[tuple[Vec, tuple[frozenset, ...]]]:
    p, k = code.p, code.k
    groups = [span_elements(s.basis, p, k) for s in code.positions]
    return [(g, tuple(frozenset(_add(g, h, p) for h in grp) for grp in groups))
            for g in _vectors(k, p)]


def brute_min_distance(code) -> int:
    """Minimum number of differing cosets over all pairs of distinct information vectors."""
    if code.p**code.k > 1024:
        raise CapExceededError("brute_min_distance is limited to p^k <= 1024")
    rows = _coset_table(code)
    return min(sum(1 for x, y in zip(a, b) if x != y)
               for (_, a), (_, b) in itertools.combinations(rows, 2))


@dataclass(frozen=True)
class UniformityReport:
    subset: tuple[int, ...]
    support_size: int
    expected_support: int
    multiplicities: tuple[int, ...]
    uniform: bool

    @property
    def ok(self) -> bool:
        return self.uniform and self.support_size == self.expected_support


def _subsets(n: int, max_size: int, sample: bool, samples: int, seed: int):
    if n <= EXHAUSTIVE_MAX_N:
        for size in range(0, min(max_size, n) + 1):
            yield from itertools.combinations(range(n), size)
        return
    if not sample:
        raise CapExceededError(
            f"n = {n} > {EXHAUSTIVE_MAX_N}; pass sample=True for seeded sampling")
    rng = random.Random(seed)
    yield ()
    for _ in range(samples):
        size = rng.randint(1, min(max_size, n))
        yield tuple(sorted(rng.sample(range(n), size)))


def check_quasi_uniform(code, max_subset_size: int = 3, sample: bool = False,
                        samples: int = 256, seed: int = DEFAULT_SEED) -> list[UniformityReport]:
    """Project all codewords onto each subset A and test uniformity over the support.

    The expected support size is |G| / |G_A|.
    """
    if code.p**code.k > 4096:
        raise CapExceededError("check_quasi_uniform is limited to p^k <= 4096")
    words = [w for _, w in code.code_table()]
    order = code.p**code.k
    out = []
    for a in _subsets(code.n, max_subset_size, sample, samples, seed):
        counts: dict[tuple, int] = {}
        for w in words:
            key = tuple(w[i] for i in a)
            counts[key] = counts.get(key, 0) + 1
        if a:
            expected = order // intersect_all([code.positions[i] for i in a]).order
        else:
            expected = 1
        mult = tuple(sorted(set(counts.values())))
        out.append(UniformityReport(a, len(counts), expected, mult, len(mult) == 1))
    return out


def brute_serveability(bc, t: int) -> bool:
    """Every size-t multiset request is served correctly for every information vector."""
    code = bc.code
    if code.k > 4 or t > 8:
        raise CapExceededError("brute_serveability is limited to k <= 4 and t <= 8")
    rows = _coset_table(code)
    for request in itertools.combinations_with_replacement(range(1, code.k + 1), t):
        for g, cosets in rows:
            word = code.encode(g)
            try:
                got = serve_request(bc, word, request)
            except QubatchError:
                # capacity exceeded or the word failed to decode
                return False
            used = [x for pr in got.pairs for x in pr]
            if len(set(used)) != len(used):
                return False
            for (i, j), value, idx in zip(got.pairs, got.values, request):
                # the pair alone must pin down g
                if cosets[i] & cosets[j] != {g}:
                    return False
                if value != g[idx - 1]:
                    return False
    return True


# report ------------------------------------------------------------------------


def _check(name: str, passed: bool, detail: str = "", counterexample=None) -> dict:
    out = {"name": name, "passed": bool(passed), "detail": detail}
    if counterexample is not None:
        out["counterexample"] = counterexample
    return out


def _decodes(code, g: Vec, subset) -> bool:
    try:
        return code.decode_subset(code.encode(g), subset).coords == g
    except QubatchError:
        return False


def run_verification(bc, max_subset_size: int = 3, sample: bool = False,
                     samples: int = 256, seed: int = DEFAULT_SEED) -> dict:
    """Run the oracle suite on a batch code and return a JSON-ready report."""
    code = bc.code
    checks = []

    try:
        reports = check_quasi_uniform(code, max_subset_size, sample, samples, seed)
        bad = next((r for r in reports if not r.ok), None)
        checks.append(_check(
            "quasi_uniform", bad is None,
            f"{len(reports)} subsets, sampled={code.n > EXHAUSTIVE_MAX_N}",
            asdict(bad) if bad else None))
    except QubatchError as exc:
        checks.append(_check("quasi_uniform", False, str(exc)))

    vectors = _vectors(code.k, code.p)
    bad_rt = next((g for g in vectors if not _decodes(code, g, range(code.n))), None)
    checks.append(_check("round_trip", bad_rt is None, f"{len(vectors)} vectors",
                         list(bad_rt) if bad_rt else None))

    bad_pair = None
    for pr in bc.plan.pairs:
        g = next((g for g in vectors if not _decodes(code, g, pr)), None)
        if g is not None:
            bad_pair = {"pair": list(pr), "vector": list(g)}
            break
    checks.append(_check("pair_decoding", bad_pair is None,
                         f"{bc.plan.t} pairs x {len(vectors)} vectors", bad_pair))

    if code.p**code.k <= 1024 and code.p**code.k > 1:
        d_main, d_brute = code.minimum_distance(), brute_min_distance(code)
        checks.append(_check("min_distance", d_main == d_brute,
                             f"main={d_main} brute={d_brute}"))

    if code.k <= 4 and 0 < bc.plan.t <= 8 and len(vectors) * code.k ** bc.plan.t <= 200_000:
        checks.append(_check("serveability", brute_serveability(bc, bc.plan.t),
                             f"all multisets of size {bc.plan.t}"))

    return {
        "params": bc.report(),
        "seed": seed,
        "sampled": code.n > EXHAUSTIVE_MAX_N,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
