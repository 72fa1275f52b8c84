"""Ordered graphs, colourings, list assignments and brute-force verifiers.

Vertices are the integers ``0..n-1`` and the fixed vertex ordering is the
integer order.  A colouring is a plain list of non-negative ints, one per
vertex, where ``0`` means *uncoloured*.  Paths are tuples of vertex ids.
"""
from __future__ import annotations

import json
import random
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InputError

Path = tuple
Colouring = list


class Graph:
    """A simple undirected graph on ``0..n-1`` with sorted adjacency."""

    __slots__ = ("n", "adj", "_adjset", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._adjset = tuple(frozenset(s) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

    @property
    def m(self) -> int:
        return self._m

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"unknown vertex {v!r}")

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(G[S], ids)`` where ``ids[i]`` is the original id of new vertex ``i``."""
        ids = sorted(set(vertices))
        index = {v: i for i, v in enumerate(ids)}
        edges = [(index[u], index[v]) for u, v in self.edges()
                 if u in index and v in index]
        return Graph(len(ids), edges), ids

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_path(self, p: Sequence[int]) -> bool:
        """True iff ``p`` is a sequence of distinct, consecutively adjacent vertices."""
        if len(set(p)) != len(p):
            return False
        return all(self.has_edge(a, b) for a, b in zip(p, p[1:]))

    # text format: "n m" then m lines "u v"
    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        tokens = text.split()
        if len(tokens) < 2:
            raise InputError("graph file needs a header line 'n m'")
        n, m = int(tokens[0]), int(tokens[1])
        body = [int(x) for x in tokens[2:]]
        if len(body) != 2 * m:
            raise InputError(f"expected {m} edges, found {len(body) / 2:g}")
        return cls(n, zip(body[0::2], body[1::2]))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


class ListAssignment:
    """Per-vertex lists of distinct positive colours, kept in increasing order."""

    __slots__ = ("lists",)

    def __init__(self, lists: Iterable[Iterable[int]]):
        out = []
        for v, lst in enumerate(lists):
            lst = tuple(lst)
            if not lst:
                raise InputError(f"empty list at vertex {v}")
            if len(set(lst)) != len(lst):
                raise InputError(f"repeated colour in list of vertex {v}")
            if any((not isinstance(c, int)) or c <= 0 for c in lst):
                raise InputError(f"list of vertex {v} has a non-positive colour")
            out.append(tuple(sorted(lst)))
        self.lists = tuple(out)

    def __len__(self):
        return len(self.lists)

    def __getitem__(self, v):
        return self.lists[v]

    def __iter__(self):
        return iter(self.lists)

    def __eq__(self, other):
        return isinstance(other, ListAssignment) and self.lists == other.lists

    def __repr__(self):
        return f"ListAssignment(n={len(self)}, size={self.size})"

    @property
    def size(self) -> int:
        """The common usable list size (the smallest list length)."""
        return min((len(lst) for lst in self.lists), default=0)

    @classmethod
    def uniform(cls, n: int, size: int) -> "ListAssignment":
        return cls([range(1, size + 1)] * n)

    @classmethod
    def random(cls, n: int, size: int, rng: random.Random,
               palette: int | None = None) -> "ListAssignment":
        palette = palette or 2 * size
        if palette < size:
            raise InputError("palette smaller than list size")
        return cls([rng.sample(range(1, palette + 1), size) for _ in range(n)])

    def to_json(self) -> str:
        return json.dumps({str(v): list(lst) for v, lst in enumerate(self.lists)})

    @classmethod
    def from_json(cls, text: str) -> "ListAssignment":
        data = json.loads(text)
        n = len(data)
        return cls([data[str(v)] for v in range(n)])


def colouring_to_json(colour: Sequence[int]) -> str:
    return json.dumps({str(v): c for v, c in enumerate(colour)})


def colouring_from_json(text: str) -> list[int]:
    data = json.loads(text)
    return [int(data[str(v)]) for v in range(len(data))]


def respects_lists(colour: Sequence[int], lists: ListAssignment) -> bool:
    return all(c in lst for c, lst in zip(colour, lists))


def ordered_neighbours(g: Graph, v: int, excluded: Iterable[int] = ()) -> tuple[int, ...]:
    """N(v) minus ``excluded`` in the fixed order.

    The index of ``u`` in ``N(v) - X`` used by path codes is ``1 +`` its position in
    this tuple.
    """
    g.check_vertex(v)
    ex = excluded if isinstance(excluded, (set, frozenset)) else set(excluded)
    return tuple(u for u in g.adj[v] if u not in ex)


def enumerate_even_paths(g: Graph, max_order: int, through: int | None = None) -> Iterator[Path]:
    """Yield every path of even order ``<= max_order``, once up to reversal.

    Each path is yielded in the orientation whose first vertex is smaller
    than its last.  With ``through`` only paths containing that vertex are
    produced.
    """
    if max_order < 2 or max_order % 2:
        raise InputError("max_order must be even and at least 2")
    if through is not None:
        g.check_vertex(through)
    adj = g.adj
    for s in range(g.n):
        path = [s]
        on = [False] * g.n
        on[s] = True
        # iterative DFS over simple paths starting at s
        stack = [iter(adj[s])]
        while stack:
            u = next(stack[-1], None)
            if u is None:
                stack.pop()
                on[path.pop()] = False
                continue
            if on[u]:
                continue
            path.append(u)
            on[u] = True
            k = len(path)
            if k % 2 == 0 and s < u and (through is None or on[through]):
                yield tuple(path)
            if k < max_order:
                stack.append(iter(adj[u]))
            else:
                on[path.pop()] = False


def is_repetitive(path: Sequence[int], colour: Sequence[int]) -> bool:
    """True iff ``path`` has even order and its halves carry equal colour words."""
    k = len(path)
    if k == 0 or k % 2:
        return False
    t = k // 2
    return all(colour[path[i]] == colour[path[t + i]] for i in range(t))


def _canonical(path: Sequence[int]) -> Path:
    fwd = tuple(path)
    rev = fwd[::-1]
    return fwd if fwd <= rev else rev


def _brute_force_witness(g: Graph, colour: Sequence[int], through: int | None) -> Path | None:
    # Exhaustive DFS over simple paths of coloured vertices; keeps the best
    # (shortest, then lexicographically smallest) repetitive one.
    adj = g.adj
    n = g.n
    best_len = n + (n % 2) + 2
    best: Path | None = None
    for s in range(n):
        if colour[s] == 0:
            continue
        path = [s]
        on = [False] * n
        on[s] = True
        stack = [iter(adj[s])]
        while stack:
            u = next(stack[-1], None)
            if u is None:
                stack.pop()
                on[path.pop()] = False
                continue
            if on[u] or colour[u] == 0:
                continue
            path.append(u)
            on[u] = True
            k = len(path)
            if k % 2 == 0 and k <= best_len and (through is None or on[through]):
                t = k // 2
                i = 0
                while i < t and colour[path[i]] == colour[path[t + i]]:
                    i += 1
                if i == t:
                    cand = _canonical(path)
                    if k < best_len or cand < best:
                        best_len, best = k, cand
            if k < best_len:
                stack.append(iter(adj[u]))
            else:
                on[path.pop()] = False
    return best


def _ext_paths(adj, colour, start, targets, avoid):
    """All simple continuations from ``start`` whose i-th vertex has colour targets[i].

    Returns a list of vertex tuples (the empty tuple included), none of which
    touch ``avoid``.
    """
    out = [()]
    depth = len(targets)
    if depth == 0:
        return out
    path = []
    stack = [iter(adj[start])]
    while stack:
        u = next(stack[-1], None)
        if u is None:
            stack.pop()
            if path:
                path.pop()
            continue
        if u in avoid or u in path or colour[u] != targets[len(path)]:
            continue
        path.append(u)
        out.append(tuple(path))
        if len(path) < depth:
            stack.append(iter(adj[u]))
        else:
            path.pop()
    return out


def _anchored_witness(g: Graph, colour: Sequence[int], v: int) -> Path | None:
    # Every repetitive path through v, oriented with v = u_{t+j} in the second
    # half, contains the walk v = u_{t+j}, u_{t+j-1}, ..., u_j of t steps whose
    # end has v's colour.  Enumerate such walks, then extend both ends with
    # colour-forced continuations.
    cv = colour[v]
    if cv == 0:
        return None
    adj = g.adj
    best_t = g.n // 2
    best: Path | None = None
    walk = [v]
    on = {v}
    stack = [iter(adj[v])]
    while stack:
        u = next(stack[-1], None)
        if u is None:
            stack.pop()
            if len(walk) > 1:
                on.discard(walk.pop())
            continue
        if u in on or colour[u] == 0:
            continue
        walk.append(u)
        on.add(u)
        t = len(walk) - 1
        if colour[u] == cv:
            wcol = [colour[w] for w in walk]
            left_all = _ext_paths(adj, colour, u, wcol[1:t], on)
            right_all = _ext_paths(adj, colour, v, wcol[t - 1:0:-1], on)
            by_len_r: dict[int, list] = {}
            for r in right_all:
                by_len_r.setdefault(len(r), []).append(r)
            for left in left_all:
                j = len(left) + 1
                for right in by_len_r.get(t - j, ()):
                    if set(left).isdisjoint(right):
                        p = left[::-1] + tuple(reversed(walk)) + right
                        cand = _canonical(p)
                        if t < best_t or best is None or cand < best:
                            best_t, best = t, cand
        if t < best_t:
            stack.append(iter(adj[u]))
        else:
            on.discard(walk.pop())
    return best


def find_repetitive_path(g: Graph, colour: Sequence[int], anchor: int | None = None) -> Path | None:
    """Canonical repetitively coloured path among coloured vertices, or None.

    Only paths whose vertices all have a non-zero colour count.  Among all
    such paths (containing ``anchor`` when given) the shortest wins, ties
    going to the lexicographically smallest vertex sequence over both
    orientations; the path is returned in that orientation.
    """
    if len(colour) != g.n:
        raise InputError("colouring length differs from vertex count")
    if anchor is None:
        return _brute_force_witness(g, colour, None)
    g.check_vertex(anchor)
    return _anchored_witness(g, colour, anchor)


def find_repetitive_path_exhaustive(g: Graph, colour: Sequence[int],
                                    through: int | None = None) -> Path | None:
    """Same contract as :func:`find_repetitive_path` but always by exhaustive search."""
    if through is not None:
        g.check_vertex(through)
    return _brute_force_witness(g, colour, through)


class Verdict(NamedTuple):
    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def _require_full(g: Graph, colour: Sequence[int]) -> None:
    if len(colour) != g.n:
        raise InputError("colouring length differs from vertex count")
    for v, c in enumerate(colour):
        if c == 0:
            raise InputError(f"vertex {v} is uncoloured")


def is_nonrepetitive(g: Graph, colour: Sequence[int]) -> Verdict:
    """Exhaustively decide whether no path of ``g`` is repetitively coloured."""
    _require_full(g, colour)
    w = _brute_force_witness(g, colour, None)
    return Verdict(w is None, w)


def is_almost_repetitive(path: Sequence[int], colour: Sequence[int]) -> bool:
    """Shifted-half match used for caterpillars.

    Order ``2p``: ``c(v_i) == c(v_{p+i+1})`` for ``i`` in ``1..p-1``.
    Order ``2p+1``: the same for ``i`` in ``1..p``.
    """
    k = len(path)
    if k < 3:
        raise InputError("almost-repetitive paths have order at least 3")
    p = k // 2
    top = p - 1 if k % 2 == 0 else p
    # 0-based: v_i -> path[i-1], v_{p+i+1} -> path[p+i]
    return all(colour[path[i - 1]] == colour[path[p + i]] for i in range(1, top + 1))


def verify_star(g: Graph, colour: Sequence[int]) -> Verdict:
    """Proper colouring with no 2-coloured path on four vertices."""
    _require_full(g, colour)
    for u, v in g.edges():
        if colour[u] == colour[v]:
            return Verdict(False, (u, v))
    adj = g.adj
    for b in range(g.n):
        for c in adj[b]:
            for a in adj[b]:
                if a == c or colour[a] != colour[c]:
                    continue
                for d in adj[c]:
                    if d != b and d != a and colour[d] == colour[b]:
                        return Verdict(False, (a, b, c, d))
    return Verdict(True, None)
