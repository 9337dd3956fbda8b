"""Trivial-intersection graphs on lattice slices and their matchings.

Each matched edge is a pair of subgroups meeting only in 0, i.e. a recovery
set of size two. Vertices are integer indices into ``IntersectionGraph.vertices``
and every algorithm visits vertices and neighbours in increasing index order,
so results are reproducible.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .fplinalg import Subspace, meets_trivially, rref
from .lattice import DEFAULT_CAP, enumerate_subspaces

BIPARTITE = "bipartite"
GENERAL = "general"


@dataclass(frozen=True)
class IntersectionGraph:
    """Subspaces joined by an edge when they intersect trivially.

    For the bipartite kind, vertices ``0..n_left-1`` are the left side.
    """

    kind: str
    vertices: tuple[Subspace, ...]
    adjacency: tuple[tuple[int, ...], ...]
    n_left: int = 0

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def to_json(self, matching: Matching | None = None) -> dict:
        data = {
            "kind": self.kind,
            "vertices": [str(s) for s in self.vertices],
            "edges": [list(e) for e in self.edges],
        }
        if matching is not None:
            data["matching"] = [list(e) for e in matching.pairs]
        return data

    def to_dot(self, matching: Matching | None = None) -> str:
        matched = set(matching.pairs) if matching else set()
        lines = ["graph G {"]
        for i, s in enumerate(self.vertices):
            lines.append(f'  {i} [label="{s}"];')
        for u, v in self.edges:
            style = " [style=bold]" if (u, v) in matched else ""
            lines.append(f"  {u} -- {v}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def __len__(self):
        return len(self.pairs)


def graph_from_subspaces(spaces: Sequence[Subspace]) -> IntersectionGraph:
    """General trivial-intersection graph on an arbitrary list of subspaces."""
    spaces = tuple(spaces)
    adj: list[list[int]] = [[] for _ in spaces]
    for i, a in enumerate(spaces):
        for j in range(i + 1, len(spaces)):
            if meets_trivially(a, spaces[j]):
                adj[i].append(j)
                adj[j].append(i)
    return IntersectionGraph(GENERAL, spaces, tuple(tuple(sorted(n)) for n in adj))


def build_bipartite_graph(k: int, m: int, p: int = 2, cap: int = DEFAULT_CAP) -> IntersectionGraph:
    """Left: m-dimensional subspaces; right: (k-m)-dimensional; edge iff trivial meet."""
    if not 1 <= m < k:
        raise DomainError(f"need 1 <= m < k, got k={k}, m={m}")
    if 2 * m == k:
        raise DomainError("m = k/2 gives a single slice; use build_halfdim_graph")
    return bipartite_from_subspaces(enumerate_subspaces(k, m, p, cap).subspaces,
                                    enumerate_subspaces(k, k - m, p, cap).subspaces)


def bipartite_from_subspaces(left: Sequence[Subspace], right: Sequence[Subspace]) -> IntersectionGraph:
    left, right = tuple(left), tuple(right)
    nl = len(left)
    adj: list[list[int]] = [[] for _ in range(nl + len(right))]
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            if meets_trivially(a, b):
                adj[i].append(nl + j)
                adj[nl + j].append(i)
    return IntersectionGraph(BIPARTITE, left + right, tuple(tuple(n) for n in adj), nl)


def build_halfdim_graph(k: int, p: int = 2, cap: int = DEFAULT_CAP) -> IntersectionGraph:
    """The graph on k/2-dimensional subspaces of (Z_p)^k."""
    if k < 2 or k % 2:
        raise DomainError(f"half-dimension graph needs even k >= 2, got {k}")
    return graph_from_subspaces(enumerate_subspaces(k, k // 2, p, cap).subspaces)


# matchings -------------------------------------------------------------------


def max_bipartite_matching(g: IntersectionGraph) -> Matching:
    """Hopcroft-Karp. Pairs are (left, right) sorted by left index."""
    if g.kind != BIPARTITE:
        raise DomainError("max_bipartite_matching needs a bipartite graph")
    nl = g.n_left
    INF = float("inf")
    mate = [-1] * len(g)
    dist = [INF] * nl

    def bfs() -> bool:
        queue = deque()
        for u in range(nl):
            if mate[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                w = mate[v]
                if w < 0:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        # iterative to stay clear of the recursion limit on large slices
        stack = [(u, iter(g.adjacency[u]))]
        path = []
        while stack:
            x, it = stack[-1]
            advanced = False
            for v in it:
                w = mate[v]
                if w < 0:
                    path.append((x, v))
                    for a, b in path:
                        mate[a], mate[b] = b, a
                    return True
                if dist[w] == dist[x] + 1:
                    path.append((x, v))
                    stack.append((w, iter(g.adjacency[w])))
                    advanced = True
                    break
            if not advanced:
                dist[x] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in range(nl):
            if mate[u] < 0:
                dfs(u)
    return Matching(tuple((u, mate[u]) for u in range(nl) if mate[u] >= 0))


def max_general_matching(g: IntersectionGraph) -> Matching:
    """Maximum-cardinality matching by Edmonds' blossom algorithm.

    Pairs are (u, v) with u < v, sorted.
    """
    n = len(g)
    adj = g.adjacency
    mate = [-1] * n

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] < 0:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        # augment along the alternating path ending at `to`
                        while to >= 0:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to], mate[pv] = pv, to
                            to = nxt
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    # greedy start, then grow by augmenting paths
    for u in range(n):
        if mate[u] < 0:
            for v in adj[u]:
                if mate[v] < 0:
                    mate[u], mate[v] = v, u
                    break
    for u in range(n):
        if mate[u] < 0:
            augment_from(u)
    return Matching(tuple((u, mate[u]) for u in range(n) if mate[u] > u))


def is_valid_matching(g: IntersectionGraph, m: Matching) -> bool:
    seen = set()
    for u, v in m.pairs:
        if u == v or u in seen or v in seen or not g.has_edge(u, v):
            return False
        seen.update((u, v))
    return True


# structure -------------------------------------------------------------------


def degree_profile(g: IntersectionGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(n) for n in g.adjacency).items()))


def connected_components(g: IntersectionGraph) -> list[list[int]]:
    seen = [False] * len(g)
    out = []
    for s in range(len(g)):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        out.append(sorted(comp))
    return out


def _unit_max_flow(adj: Sequence[Sequence[int]], s: int, t: int, limit: int) -> int:
    """Max flow between s and t when every undirected edge has capacity one."""
    flow: dict[tuple[int, int], int] = {}
    total = 0
    while total < limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v in adj[u]:
                if v not in parent and flow.get((u, v), 0) < 1:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            break
        v = t
        while v != s:
            u = parent[v]
            # undirected unit edge: pushing u->v cancels any v->u flow first
            if flow.get((v, u), 0) > 0:
                flow[(v, u)] -= 1
            else:
                flow[(u, v)] = flow.get((u, v), 0) + 1
            v = u
        total += 1
    return total


def edge_connectivity(g: IntersectionGraph, max_vertices: int = 200) -> int:
    """Minimum over t of the unit-capacity max flow from vertex 0 to t."""
    n = len(g)
    if n > max_vertices:
        raise DomainError(f"edge connectivity is limited to {max_vertices} vertices")
    if n <= 1:
        return 0
    if len(connected_components(g)) > 1:
        return 0
    best = min(len(a) for a in g.adjacency)
    for t in range(1, n):
        best = min(best, _unit_max_flow(g.adjacency, 0, t, best))
    return best


def find_triangle(g: IntersectionGraph) -> tuple[int, int, int] | None:
    """Lexicographically first triangle, or None."""
    nbr = [set(a) for a in g.adjacency]
    for u in range(len(g)):
        for v in g.adjacency[u]:
            if v <= u:
                continue
            for w in g.adjacency[v]:
                if w > v and w in nbr[u]:
                    return (u, v, w)
    return None


def constructive_triangle(s: int, p: int = 2) -> tuple[Subspace, Subspace, Subspace]:
    """H, K and L = {h + phi(h)} in (Z_p)^(2s) with phi: e_i -> e_(s+i).

    The three s-dimensional subspaces pairwise meet only in 0.
    """
    k = 2 * s
    unit = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    h = rref(unit[:s], p=p, k=k)
    kk = rref(unit[s:], p=p, k=k)
    l = rref([tuple((a + b) % p for a, b in zip(unit[i], unit[s + i])) for i in range(s)], p=p, k=k)
    return h, kk, l
