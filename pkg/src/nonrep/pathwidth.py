"""Colourings built from a path decomposition.

``colour_pathwidth`` peels off anchor bags as in the block lemma and
recurses into the blocks with a fresh palette; ``star_colour_pathwidth``
recurses on the interval supergraph, peeling a minimum interval cover at
each level.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConstructionError, InputError, InvariantError, ValidationError
from .graph import Graph, find_repetitive_path, is_nonrepetitive, verify_star


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple

    def __init__(self, bags: Iterable[Iterable[int]]):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self):
        return len(self.bags)

    def to_text(self) -> str:
        return "".join(" ".join(map(str, sorted(b))) + "\n" for b in self.bags)

    @classmethod
    def from_text(cls, text: str) -> "PathDecomposition":
        try:
            return cls([int(t) for t in line.split()] for line in text.splitlines())
        except ValueError as exc:
            raise InputError(f"bad path decomposition file: {exc}") from None


def validate_pd(g: Graph, pd: PathDecomposition) -> int:
    """Check coverage, edge and contiguity axioms; return the width."""
    seen: dict[int, list[int]] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            if not (0 <= v < g.n):
                raise ValidationError(f"bag {i + 1} holds unknown vertex {v}")
            seen.setdefault(v, []).append(i)
    missing = [v for v in range(g.n) if v not in seen]
    if missing:
        raise ValidationError(f"vertex coverage: {missing[0]} is in no bag")
    for u, v in g.edges():
        if not any(u in b and v in b for b in pd.bags):
            raise ValidationError(f"edge coverage: no bag holds edge ({u}, {v})")
    for v, idx in seen.items():
        if idx[-1] - idx[0] + 1 != len(idx):
            raise ValidationError(f"contiguity: bags holding {v} are not consecutive")
    return pd.width


# ---------------------------------------------------------------- block lemma

@dataclass
class AttackDecomposition:
    anchors: list                # X_1..X_m as frozensets
    anchor_index: list           # bag index of each anchor
    blocks: list                 # B_1..B_m as frozensets
    block_pds: list              # per block: PathDecomposition in global ids
    quotient: Graph              # H on the global vertex ids (blocks isolated)
    layer_of: dict               # vertex of H -> anchor index (0-based)

    @property
    def h_vertices(self) -> list[int]:
        return sorted(self.layer_of)


def attack_decompose(g: Graph, pd: PathDecomposition) -> AttackDecomposition:
    """Anchor bags, blocks between them, and the quotient graph.

    Each anchor is the first bag after the previous anchor that is disjoint
    from it; a block is everything living strictly between two anchors (or
    after the last one).  The quotient deletes the blocks and makes each
    block's neighbourhood a clique.
    """
    validate_pd(g, pd)
    if not pd.bags:
        raise InputError("empty decomposition")
    bags = pd.bags
    idx = [0]
    for i in range(1, len(bags)):
        if bags[i].isdisjoint(bags[idx[-1]]):
            idx.append(i)
    anchors = [bags[i] for i in idx]
    layer_of = {v: j for j, a in enumerate(anchors) for v in a}
    if len(layer_of) != sum(len(a) for a in anchors):
        raise InvariantError("anchors are not pairwise disjoint")
    blocks, block_pds = [], []
    for j, start in enumerate(idx):
        stop = idx[j + 1] if j + 1 < len(idx) else len(bags)
        inner = bags[start + 1:stop]
        inside = set().union(*inner) if inner else set()
        before = set().union(*bags[:start + 1])
        after = set().union(*bags[stop:]) if stop < len(bags) else set()
        block = frozenset(inside - before - after)
        blocks.append(block)
        block_pds.append(PathDecomposition(b & block for b in inner if b & block))
    edges = {e for e in g.edges() if e[0] in layer_of and e[1] in layer_of}
    for block in blocks:
        nbrs = sorted({u for v in block for u in g.adj[v]} - block)
        edges |= {(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1:]}
    quotient = Graph(g.n, edges)
    for u, v in edges:
        if u not in layer_of or v not in layer_of or abs(layer_of[u] - layer_of[v]) > 1:
            raise InvariantError(f"quotient edge ({u}, {v}) breaks the layered structure")
    covered = set(layer_of).union(*blocks)
    if len(covered) != g.n:
        raise InvariantError("anchors and blocks do not cover the graph")
    for i, a in enumerate(blocks):
        for b in blocks[i + 1:]:
            if any(u in b for v in a for u in g.adj[v]):
                raise InvariantError("edge between distinct blocks")
    return AttackDecomposition(anchors, idx, blocks, block_pds, quotient, layer_of)


def blocks_combine(n: int, h_vertices: Iterable[int], colour_h: Sequence[int],
                   block_colourings: Iterable[tuple[Iterable[int], Sequence[int]]]) -> list[int]:
    """Union of a quotient colouring and per-block colourings on disjoint palettes.

    ``colour_h`` and each block colouring are indexed by global vertex id.
    """
    out = [0] * n
    h_vertices = list(h_vertices)
    palette_h = set()
    for v in h_vertices:
        out[v] = colour_h[v]
        palette_h.add(colour_h[v])
    for vertices, colour in block_colourings:
        for v in vertices:
            if colour[v] in palette_h:
                raise InputError(f"block colour {colour[v]} is also used on the quotient")
            if out[v]:
                raise InputError(f"vertex {v} is coloured twice")
            out[v] = colour[v]
    return out


def colour_layered(h: Graph, layers: Sequence[Iterable[int]], k: int,
                   offset: int = 0) -> list[int]:
    """Nonrepetitive colouring of a layered graph from ``4 (k + 1)`` colours.

    Every vertex gets ``offset + (symbol - 1)(k + 1) + rank``, with rank its
    position in the layer and one symbol in 1..4 per layer, found by
    backtracking.  Vertices outside the layers stay 0.
    """
    layers = [sorted(layer) for layer in layers]
    if any(len(layer) > k + 1 for layer in layers):
        raise InputError(f"a layer has more than {k + 1} vertices")
    colour = [0] * h.n
    symbols = [0] * len(layers)

    def place(i, sym):
        for rank, v in enumerate(layers[i], 1):
            colour[v] = offset + (sym - 1) * (k + 1) + rank

    def clear(i):
        for v in layers[i]:
            colour[v] = 0

    def ok(i):
        return all(find_repetitive_path(h, colour, anchor=v) is None for v in layers[i])

    # iterative backtracking; recursion depth would follow the number of layers
    i = 0
    while i < len(layers):
        sym = symbols[i] + 1
        clear(i)
        while sym <= 4:
            place(i, sym)
            if ok(i):
                break
            clear(i)
            sym += 1
        if sym > 4:
            symbols[i] = 0
            i -= 1
            if i < 0:
                raise ConstructionError("no layered colouring within four symbols")
            continue
        symbols[i] = sym
        i += 1
    return colour


def pathwidth_colour_bound(k: int) -> int:
    return 2 * k * k + 6 * k + 1


def _colour_pw(g: Graph, pd: PathDecomposition, offset: int) -> list[int]:
    k = pd.width
    if g.m == 0 or k <= 0:
        return [offset + 1] * g.n
    att = attack_decompose(g, pd)
    colour_h = colour_layered(att.quotient, att.anchors, k, offset)
    parts = []
    for block, bpd in zip(att.blocks, att.block_pds):
        if not block:
            continue
        sub, ids = g.induced(sorted(block))
        local = {v: i for i, v in enumerate(ids)}
        sub_pd = PathDecomposition({local[v] for v in b} for b in bpd.bags)
        if sub_pd.width > k - 1:
            raise InvariantError("block decomposition is not narrower")
        sub_colour = _colour_pw(sub, sub_pd, offset + 4 * (k + 1))
        glob = [0] * g.n
        for i, v in enumerate(ids):
            glob[v] = sub_colour[i]
        parts.append((ids, glob))
    return blocks_combine(g.n, att.h_vertices, colour_h, parts)


def colour_pathwidth(g: Graph, pd: PathDecomposition, verify: bool = True) -> list[int]:
    """Nonrepetitive colouring with at most ``2k^2 + 6k + 1`` colours.

    ``verify`` runs the exhaustive checker on the result.
    """
    k = max(validate_pd(g, pd), 0)
    colour = _colour_pw(g, pd, 0)
    if len(set(colour)) > pathwidth_colour_bound(k):
        raise InvariantError("colour count exceeds the pathwidth bound")
    if verify:
        verdict = is_nonrepetitive(g, colour)
        if not verdict:
            raise InvariantError(f"repetitive path {verdict.witness}")
    return colour


# ---------------------------------------------------------------- star colouring

def interval_rep(g: Graph, pd: PathDecomposition) -> dict[int, tuple[int, int]]:
    """``v -> (first, last)`` 1-based bag indices holding ``v``."""
    validate_pd(g, pd)
    rep: dict[int, list[int]] = {}
    for i, bag in enumerate(pd.bags, 1):
        for v in bag:
            if v in rep:
                rep[v][1] = i
            else:
                rep[v] = [i, i]
    return {v: (lo, hi) for v, (lo, hi) in sorted(rep.items())}


def interval_graph(rep: dict) -> Graph:
    n = max(rep, default=-1) + 1
    items = sorted(rep.items(), key=lambda kv: kv[1])
    edges = []
    for i, (u, (lo_u, hi_u)) in enumerate(items):
        for v, (lo_v, _) in items[i + 1:]:
            if lo_v > hi_u:
                break
            edges.append((u, v))
    return Graph(n, edges)


def _interval_components(rep: dict) -> list[list[int]]:
    comps, cur, reach = [], [], None
    for v, (lo, hi) in sorted(rep.items(), key=lambda kv: (kv[1][0], kv[0])):
        if cur and lo > reach:
            comps.append(cur)
            cur, reach = [], None
        cur.append(v)
        reach = hi if reach is None else max(reach, hi)
    if cur:
        comps.append(cur)
    return comps


def minimal_cover(rep: dict) -> list[list[int]]:
    """Per component, a minimum set of intervals whose union covers all of them.

    Greedy by farthest right end among the intervals touching the covered
    prefix; ties go to the smaller vertex.  Consecutive members overlap and
    members two apart do not, so each cover induces a path.
    """
    out = []
    for comp in _interval_components(rep):
        left = min(rep[v][0] for v in comp)
        right = max(rep[v][1] for v in comp)
        order = sorted(comp, key=lambda v: (rep[v][0], -rep[v][1], v))
        cover = []
        reach = left - 1
        i = 0
        best = None
        while reach < right:
            # first member must contain the left end; later ones overlap the covered part
            limit = left if not cover else reach
            while i < len(order) and rep[order[i]][0] <= limit:
                v = order[i]
                if best is None or (rep[v][1], -v) > (rep[best][1], -best):
                    best = v
                i += 1
            if best is None or rep[best][1] <= reach:
                raise InvariantError("interval component is not connected")
            cover.append(best)
            reach = rep[best][1]
            best = None
        out.append(cover)
    return out


def covers(rep: dict, cover: Iterable[int], vertices: Iterable[int]) -> bool:
    """Whether the union of the cover's intervals contains every listed interval."""
    spans = sorted(rep[v] for v in cover)
    merged = []
    for lo, hi in spans:
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return all(any(a <= rep[v][0] and rep[v][1] <= b for a, b in merged) for v in vertices)


def star_colour_bound(k: int) -> int:
    return 3 * k + 1


def star_colour_pathwidth(g: Graph, pd: PathDecomposition, verify: bool = True) -> list[int]:
    """Star colouring from at most ``3k + 1`` colours.

    Level ``d`` of the recursion uses colours ``3d + 1 .. 3d + 3``; the cover
    path ``x_1 x_2 ...`` gets ``3d + 1 + (i mod 3)``.  An edgeless remainder
    takes ``3d + 1``.
    """
    k = max(validate_pd(g, pd), 0)
    rep = interval_rep(g, pd)
    colour = [0] * g.n
    remaining = dict(rep)
    depth = 0
    while remaining:
        sup = interval_graph(remaining)
        if all(not sup.adj[v] for v in remaining):
            for v in remaining:
                colour[v] = 3 * depth + 1
            break
        for cover in minimal_cover(remaining):
            for i, x in enumerate(cover, 1):
                colour[x] = 3 * depth + 1 + i % 3
                del remaining[x]
        depth += 1
    if len(set(colour)) > star_colour_bound(k) or max(colour) > star_colour_bound(k):
        raise InvariantError("colour count exceeds the star bound")
    if verify:
        verdict = verify_star(interval_graph(rep), colour)
        if not verdict:
            raise InvariantError(f"bichromatic path {verdict.witness} in the interval supergraph")
    return colour
