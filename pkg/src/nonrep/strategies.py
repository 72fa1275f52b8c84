"""Colouring strategies driven by the entropy-compression engine.

* bounded degree: lists of size ``ceil((1 + 1/(D^(1/3)-1) + 1/D^(1/3)) D^2)``
  with the lexicographic priority and no precolouring;
* subdivisions: originals precoloured, division-vertex lists cut to four
  colours, and a priority that keeps the uncoloured set *nice*.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import mpmath

from .engine import RunResult, lexicographic_priority, run_random
from .errors import ExhaustionError, InputError, InvariantError
from .graph import Graph, ListAssignment, is_nonrepetitive, respects_lists


def ceil_c_log2(c: int, r: int) -> int:
    """Exact ``ceil(c * log2(r))`` for integers ``c >= 0``, ``r >= 1``."""
    if r < 1 or c < 0:
        raise InputError("need r >= 1 and c >= 0")
    if r == 1 or c == 0:
        return 0
    # smallest z with r**c <= 2**z
    return (r ** c - 1).bit_length()


def _icbrt(n: int) -> int | None:
    a = round(n ** (1 / 3))
    for b in (a - 1, a, a + 1):
        if b >= 0 and b ** 3 == n:
            return b
    return None


def list_size_for_degree(delta: int) -> int:
    """Smallest list size the bounded-degree guarantee asks for."""
    if not isinstance(delta, int) or delta < 2:
        raise InputError("delta must be an integer >= 2")
    a = _icbrt(delta)
    if a is not None:
        # rational case: exact arithmetic
        val = (1 + Fraction(1, a - 1) + Fraction(1, a)) * delta ** 2
        return -((-val.numerator) // val.denominator)
    with mpmath.workdps(60):
        a = mpmath.cbrt(delta)
        val = (1 + 1 / (a - 1) + 1 / a) * delta ** 2
        out = int(mpmath.ceil(val))
        if abs(val - mpmath.nint(val)) < mpmath.mpf(10) ** -40:
            raise InvariantError("list size too close to an integer to round safely")
    return out


def colour_bounded_degree(g: Graph, lists: ListAssignment, seed: int | None = 0,
                          max_steps: int = 10**5, enforce_bound: bool = True,
                          keep_trace: bool = False) -> RunResult:
    """Colour ``g`` from ``lists`` with the lexicographic priority.

    Returns the engine's :class:`RunResult`; its colouring has been checked
    by the exhaustive verifier.  Raises :class:`ExhaustionError` at the step
    cap.
    """
    if g.n == 0:
        raise InputError("graph is empty")
    delta = g.max_degree()
    if enforce_bound and delta >= 2 and lists.size < list_size_for_degree(delta):
        raise InputError(f"lists of size {lists.size} are below the bound "
                         f"{list_size_for_degree(delta)} for max degree {delta}")
    res = run_random(g, lists, lexicographic_priority, None, max_steps, seed, keep_trace)
    if not res.success:
        raise ExhaustionError(f"no colouring within {max_steps} steps (seed {seed})")
    _certify(g, lists, res.colouring)
    return res


def _certify(g, lists, colour):
    verdict = is_nonrepetitive(g, colour)
    if not verdict:
        raise InvariantError(f"engine output has repetitive path {verdict.witness}")
    if not respects_lists(colour, lists):
        raise InvariantError("engine output leaves the lists")


def required_subdivisions(h: Graph, edge: tuple[int, int], constant_c: int = 10**5) -> int:
    """``ceil(c log(deg v + 1)) + ceil(c log(deg w + 1)) + 2`` for edge ``vw``."""
    v, w = edge
    if not h.has_edge(v, w):
        raise InputError(f"{edge} is not an edge")
    return ceil_c_log2(constant_c, h.degree(v) + 1) + ceil_c_log2(constant_c, h.degree(w) + 1) + 2


@dataclass(frozen=True)
class SubdividedGraph:
    """A subdivision ``G`` of a base graph ``H`` with ownership data.

    Division vertices get ids ``0..D-1`` (edge by edge, along each path's
    orientation) and original vertex ``a`` of ``H`` gets id ``D + a``, so the
    division vertices precede the originals in the vertex order.
    """

    graph: Graph
    base: Graph
    originals: frozenset
    edge_paths: dict          # base edge (a, b), a < b -> division ids from a's side
    edge_order: tuple
    ownership: dict           # division id -> owning original id or None
    radii: dict               # original id -> g(v)
    constant_c: int

    def original_id(self, a: int) -> int:
        return self.graph.n - self.base.n + a

    def path_of(self) -> dict:
        """Map each division vertex to the base edge it subdivides."""
        return {u: e for e, p in self.edge_paths.items() for u in p}

    def regions(self) -> dict:
        out = {q: set() for q in self.originals}
        for u, q in self.ownership.items():
            if q is not None:
                out[q].add(u)
        return out

    def metadata_json(self) -> str:
        return json.dumps({
            "constant_c": self.constant_c,
            "base_n": self.base.n,
            "originals": {str(a): self.original_id(a) for a in range(self.base.n)},
            "edge_paths": {f"{a}-{b}": list(p) for (a, b), p in self.edge_paths.items()},
            "radii": {str(v): r for v, r in sorted(self.radii.items())},
        })

    @classmethod
    def from_metadata(cls, text: str) -> "SubdividedGraph":
        """Rebuild from :meth:`metadata_json` output."""
        data = json.loads(text)
        try:
            counts = {}
            for key, path in data["edge_paths"].items():
                a, b = map(int, key.split("-"))
                counts[(a, b)] = len(path)
            base = Graph(int(data["base_n"]), counts)
            sg = subdivide(base, counts, int(data["constant_c"]))
        except (KeyError, ValueError) as exc:
            raise InputError(f"bad subdivision metadata: {exc}") from None
        if sg.metadata_json() != json.dumps(data):
            raise InputError("metadata does not match a canonical subdivision")
        return sg


def subdivide(h: Graph, counts: Mapping[tuple, int] | int | None = None,
              constant_c: int = 10**5) -> SubdividedGraph:
    """Replace each edge of ``h`` by a path through ``counts[e]`` new vertices.

    ``counts`` may be a mapping, a single int for every edge, or ``None`` for
    :func:`required_subdivisions`.  Paths are oriented from the smaller base
    endpoint.  A division vertex belongs to the original vertex within
    distance ``g(v) + 1``; if two originals qualify the nearer one wins
    (smaller id on ties), which only happens below the required counts.
    """
    edges = h.edges()
    if counts is None:
        counts = {e: required_subdivisions(h, e, constant_c) for e in edges}
    elif isinstance(counts, int):
        counts = {e: counts for e in edges}
    else:
        counts = {tuple(sorted(e)): k for e, k in counts.items()}
    total = 0
    edge_paths = {}
    for e in edges:
        k = counts.get(e)
        if k is None or k < 1:
            raise InputError(f"edge {e} needs a subdivision count >= 1")
        edge_paths[e] = tuple(range(total, total + k))
        total += k
    orig = {a: total + a for a in range(h.n)}
    g_edges = []
    for (a, b), p in edge_paths.items():
        seq = (orig[a],) + p + (orig[b],)
        g_edges += list(zip(seq, seq[1:]))
    g = Graph(total + h.n, g_edges)
    radii = {orig[a]: ceil_c_log2(constant_c, h.degree(a) + 1) for a in range(h.n)}
    ownership = {u: None for u in range(total)}
    best = {}
    for (a, b), p in edge_paths.items():
        k = len(p)
        for i, u in enumerate(p):
            for q, d in ((orig[a], i + 1), (orig[b], k - i)):
                if d <= radii[q] + 1 and (u not in best or (d, q) < best[u]):
                    best[u] = (d, q)
    for u, (_, q) in best.items():
        ownership[u] = q
    return SubdividedGraph(g, h, frozenset(orig.values()), edge_paths, tuple(edges),
                           ownership, radii, constant_c)


def regions_overlap(sg: SubdividedGraph) -> bool:
    """True if some division vertex is within reach of two originals."""
    for (a, b), p in sg.edge_paths.items():
        ra = sg.radii[sg.original_id(a)] + 1
        rb = sg.radii[sg.original_id(b)] + 1
        if ra + rb >= len(p) + 1:
            return True
    return False


def _check_division_set(sg, x):
    x = frozenset(x)
    if not x.isdisjoint(sg.originals):
        raise InputError("set contains original vertices")
    return x


def _nice_on_path(path, x) -> bool:
    # the vertices of the path outside x must form one contiguous run (or none)
    state = 0   # 0: before run, 1: inside run, 2: after run
    for u in path:
        if u in x:
            if state == 1:
                state = 2
        else:
            if state == 2:
                return False
            state = 1
    return True


def is_nice(sg: SubdividedGraph, x: Iterable[int]) -> bool:
    x = _check_division_set(sg, x)
    if not x:
        return False
    return all(_nice_on_path(p, x) for p in sg.edge_paths.values())


def boundary(sg: SubdividedGraph, x: Iterable[int]) -> frozenset:
    """Members ``y`` of a nice set whose removal leaves it nice or empty."""
    x = _check_division_set(sg, x)
    if not is_nice(sg, x):
        raise InputError("boundary is only defined for nice sets")
    out = set()
    for y in x:
        rest = x - {y}
        if not rest or is_nice(sg, rest):
            out.add(y)
    return frozenset(out)


class SubdivisionPriority:
    """Priority function keeping the uncoloured set nice.

    Takes the first base edge whose path meets ``X``.  If the whole path is
    in ``X`` the smallest id is chosen; otherwise the member of ``X`` just
    before the coloured run of that path, or failing that the one just after.
    """

    def __init__(self, sg: SubdividedGraph):
        self.paths = [sg.edge_paths[e] for e in sg.edge_order]

    def __call__(self, x) -> int:
        for p in self.paths:
            inside = [u in x for u in p]
            if not any(inside):
                continue
            if all(inside):
                return min(p)
            first_out = inside.index(False)
            if first_out > 0:
                return p[first_out - 1]
            last_out = len(p) - 1 - inside[::-1].index(False)
            if any(inside[first_out:last_out + 1]):
                raise InvariantError("priority called on a set that is not nice")
            return p[last_out + 1]
        raise InvariantError("priority called on a set without division vertices")


def subdivision_priority(sg: SubdividedGraph) -> SubdivisionPriority:
    return SubdivisionPriority(sg)


def precolour_originals(sg: SubdividedGraph, lists5: ListAssignment) -> list[int]:
    """Give every original its smallest list colour; division vertices stay 0."""
    pre = [0] * sg.graph.n
    for q in sg.originals:
        pre[q] = lists5[q][0]
    return pre


def adjust_lists(sg: SubdividedGraph, lists5: ListAssignment, pre) -> ListAssignment:
    """Cut each division vertex's list by one colour.

    An owned vertex loses its owner's colour if present; every other
    division vertex loses its largest colour.  Originals keep their lists.
    """
    if len(lists5) != sg.graph.n or len(pre) != sg.graph.n:
        raise InputError("lists or precolouring do not match the subdivision")
    for q in sg.originals:
        if pre[q] not in lists5[q]:
            raise InputError(f"precolour of original {q} is not in its list")
    out = []
    for u in range(sg.graph.n):
        lst = list(lists5[u])
        if u not in sg.originals:
            owner = sg.ownership.get(u)
            if owner is not None and pre[owner] in lst:
                lst.remove(pre[owner])
            else:
                lst.pop()
        out.append(lst)
    return ListAssignment(out)


def colour_subdivision(sg: SubdividedGraph, lists5: ListAssignment, seed: int | None = 0,
                       max_steps: int = 10**5, keep_trace: bool = True) -> RunResult:
    """Nonrepetitively colour a subdivision from lists of size five.

    The returned run carries the record and (optionally) the trace, so its
    certificates can be inspected; the colouring has been verified
    exhaustively and lies in the original lists.
    """
    if len(lists5) != sg.graph.n:
        raise InputError("lists do not match the subdivision")
    if lists5.size < 5:
        raise InputError("subdivision colouring needs lists of size 5")
    pre = precolour_originals(sg, lists5)
    lists = adjust_lists(sg, lists5, pre)
    res = run_random(sg.graph, lists, SubdivisionPriority(sg), pre, max_steps, seed, keep_trace)
    if not res.success:
        raise ExhaustionError(f"no colouring within {max_steps} steps (seed {seed})")
    _certify(sg.graph, lists5, res.colouring)
    return res


def spread_transform(code) -> tuple[int, ...]:
    """Drop the -1, reverse the prefix before it, and set the old first entry to 1."""
    p = list(code).index(-1) + 1
    prefix = [1] + list(code[1:p - 1])
    return tuple(prefix[::-1]) + tuple(code[p:])
