"""Local-lemma numerics and the two sampling colourers that rest on them.

Both colourers are Las Vegas: sample, verify exhaustively, retry.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import mpmath

from .errors import ExhaustionError, InputError, InvariantError
from .graph import (Graph, ListAssignment, is_almost_repetitive, is_nonrepetitive,
                    is_repetitive)
from .strategies import SubdividedGraph, ceil_c_log2, subdivide

SUBDIVISION_LIST_SIZE = 23
CATERPILLAR_LIST_SIZE = 148
SUBDIVISION_THRESHOLD = Fraction(958, 1000)


# ---------------------------------------------------------------- weighted local lemma

@dataclass
class LLLInstance:
    """Events with integer weights and, per event, ``{weight: count}`` of its dependents."""

    p: Fraction
    weights: list
    dependents: list

    def __post_init__(self):
        self.p = Fraction(self.p)
        if not (0 < self.p <= Fraction(1, 4)):
            raise InputError("p must lie in (0, 1/4]")
        if len(self.weights) != len(self.dependents):
            raise InputError("one dependency profile per event")
        if any(int(t) != t or t < 1 for t in self.weights):
            raise InputError("weights must be integers >= 1")


@dataclass
class LLLReport:
    ok: bool
    slacks: list          # t_i - 2 sum (2p)^{t_j}, exact
    worst: Fraction = field(default=None)


def lll_check(inst: LLLInstance) -> LLLReport:
    """Evaluate ``2 sum_{j in D_i} (2p)^{t_j} <= t_i`` for every event exactly.

    The probability condition ``Pr(A_i) <= p^{t_i}`` is the caller's to
    guarantee; only the dependency condition is computed.
    """
    q = 2 * inst.p
    slacks = []
    for t, prof in zip(inst.weights, inst.dependents):
        lhs = 2 * sum((Fraction(cnt) * q ** int(w) for w, cnt in prof.items()), Fraction(0))
        slacks.append(Fraction(t) - lhs)
    worst = min(slacks, default=Fraction(0))
    return LLLReport(worst >= 0, slacks, worst)


@dataclass
class LLLConstant:
    """A dependency-condition constant that must stay below ``threshold``."""

    name: str
    exact: Fraction            # exact value or rigorous upper bound
    closed_form: float
    partial_sum: float
    threshold: Fraction

    @property
    def holds(self) -> bool:
        return self.exact < self.threshold

    def as_dict(self) -> dict:
        return {"name": self.name, "exact": str(self.exact), "exact_float": float(self.exact),
                "closed_form": self.closed_form, "partial_sum": self.partial_sum,
                "threshold": str(self.threshold), "holds": self.holds}


def _sum_t_ct(c: float, tol: float = 1e-17) -> float:
    total, t, term = 0.0, 1, c
    while term > tol:
        total += term
        t += 1
        term = t * c ** t
    return total


def _upper_root2_100(digits: int = 30) -> Fraction:
    """A rational ``u`` with ``u^100 >= 2`` and ``u - 2^(1/100) < 10^-digits``."""
    with mpmath.workdps(digits + 20):
        scaled = mpmath.ceil(mpmath.mpf(2) ** (mpmath.mpf(1) / 100) * 10 ** digits)
    u = Fraction(int(scaled), 10 ** digits)
    while u ** 100 < 2:
        u += Fraction(1, 10 ** digits)
    return u


def subdivision_lll_constant() -> LLLConstant:
    """``2 (200/99)^2 sum_t t c^t`` with ``c = (2/21) 2^(1/100)``.

    ``c / (1 - c)^2`` increases in ``c``, so an upper bound on ``2^(1/100)``
    gives a rigorous upper bound.
    """
    lead = 2 * Fraction(200, 99) ** 2
    c_up = Fraction(2, 21) * _upper_root2_100()
    exact = lead * c_up / (1 - c_up) ** 2
    c = 2 / 21 * 2 ** (1 / 100)
    return LLLConstant("subdivision", exact, float(lead) * c / (1 - c) ** 2,
                       float(lead) * _sum_t_ct(c), SUBDIVISION_THRESHOLD)


def caterpillar_lll_constant() -> LLLConstant:
    """``72 sum_t t 74^-t = 72 * 74 / 73^2``."""
    exact = Fraction(72 * 74, 73 ** 2)
    return LLLConstant("caterpillar", exact, 72 * 74 / 73 ** 2, 72 * _sum_t_ct(1 / 74),
                       Fraction(1))


LLL_PRESETS = {"subdivision": subdivision_lll_constant, "caterpillar": caterpillar_lll_constant}


# ---------------------------------------------------------------- subdivisions with 23 colours

def lll_subdivision_count(delta: int) -> int:
    """``3 + ceil(400 log delta)`` division vertices per edge."""
    if delta < 1:
        raise InputError("delta must be at least 1")
    return 3 + ceil_c_log2(400, delta)


@dataclass
class SamplingRun:
    graph: Graph
    colouring: list
    attempts: int
    subdivision: SubdividedGraph | None = None


def lll_colour_subdivision(h: Graph, lists23: ListAssignment | None = None,
                           r_override: int | None = None, seed: int | None = 0,
                           max_retries: int = 100, method: str = "retry") -> SamplingRun:
    """Subdivide ``h`` and colour the result by independent sampling.

    ``lists23`` is indexed by the subdivided graph (division vertices first);
    ``None`` gives every vertex ``1..23``.  Originals take their smallest
    colour, division vertices drop both endpoint colours and are sampled
    uniformly until the exhaustive verifier accepts.

    ``method="resample"`` instead redraws only the division vertices of the
    witness path the verifier reports; ``max_retries`` then caps the number
    of redraws.
    """
    if method not in ("retry", "resample"):
        raise InputError(f"unknown method {method!r}")
    if h.m == 0:
        raise InputError("base graph has no edges")
    r = lll_subdivision_count(h.max_degree()) if r_override is None else r_override
    if r < 1:
        raise InputError("need at least one division vertex per edge")
    sg = subdivide(h, r, constant_c=1)
    g = sg.graph
    if lists23 is None:
        lists23 = ListAssignment.uniform(g.n, SUBDIVISION_LIST_SIZE)
    if len(lists23) != g.n:
        raise InputError(f"lists cover {len(lists23)} vertices, the subdivision has {g.n}")
    colour = [0] * g.n
    for q in sg.originals:
        colour[q] = lists23[q][0]
    pruned = {}
    for (a, b), path in sg.edge_paths.items():
        banned = {colour[sg.original_id(a)], colour[sg.original_id(b)]}
        for u in path:
            pruned[u] = [c for c in lists23[u] if c not in banned]
            if not pruned[u]:
                raise InputError(f"list of division vertex {u} is exhausted by its endpoints")
    rng = random.Random(seed)
    for u, lst in pruned.items():
        colour[u] = rng.choice(lst)
    for attempt in range(1, max_retries + 1):
        verdict = is_nonrepetitive(g, colour)
        if verdict:
            return SamplingRun(g, list(colour), attempt, sg)
        redraw = pruned if method == "retry" else [u for u in verdict.witness if u in pruned]
        for u in redraw:
            colour[u] = rng.choice(pruned[u])
    raise ExhaustionError(f"no nonrepetitive sample in {max_retries} attempts")


# ---------------------------------------------------------------- caterpillars

def caterpillar_spine(t: Graph) -> list[int]:
    """Spine of a caterpillar in path order; raises on anything else.

    A path is its own spine; otherwise the spine is the tree minus its leaves.
    """
    if t.n == 0 or t.m != t.n - 1 or len(t.components()) != 1:
        raise InputError("not a tree")
    if t.n == 1:
        return [0]
    if t.max_degree() <= 2:
        start = min(v for v in range(t.n) if t.degree(v) == 1)
        return _walk(t, start, set(range(t.n)))
    inner = {v for v in range(t.n) if t.degree(v) > 1}
    ends = [v for v in inner if sum(u in inner for u in t.adj[v]) <= 1]
    if any(sum(u in inner for u in t.adj[v]) > 2 for v in inner) or len(ends) not in (1, 2):
        raise InputError("not a caterpillar")
    return _walk(t, min(ends), inner)


def _walk(t, start, allowed):
    order, prev, cur = [start], None, start
    while True:
        nxt = [u for u in t.adj[cur] if u in allowed and u != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def spine_ok(spine: Sequence[int], colour: Sequence[int]) -> bool:
    """No subpath of the spine is repetitively or almost repetitively coloured."""
    s = len(spine)
    for i in range(s):
        for j in range(i + 2, s + 1):
            sub = spine[i:j]
            if len(sub) % 2 == 0 and is_repetitive(sub, colour):
                return False
            if len(sub) >= 3 and is_almost_repetitive(sub, colour):
                return False
    return True


def colour_caterpillar(t: Graph, lists148: ListAssignment | None = None,
                       seed: int | None = 0, max_retries: int = 100) -> SamplingRun:
    """Sample a spine colouring that passes :func:`spine_ok`, then colour the leaves.

    A leaf takes its smallest colour avoiding its spine neighbour ``w`` and
    the spine neighbours of ``w``.
    """
    spine = caterpillar_spine(t)
    if lists148 is None:
        lists148 = ListAssignment.uniform(t.n, CATERPILLAR_LIST_SIZE)
    if len(lists148) != t.n:
        raise InputError("lists do not match the caterpillar")
    on_spine = set(spine)
    pos = {v: i for i, v in enumerate(spine)}
    rng = random.Random(seed)
    colour = [0] * t.n
    for attempt in range(1, max_retries + 1):
        for v in spine:
            colour[v] = rng.choice(lists148[v])
        if spine_ok(spine, colour):
            break
    else:
        raise ExhaustionError(f"no acceptable spine colouring in {max_retries} attempts")
    for x in range(t.n):
        if x in on_spine:
            continue
        (w,) = t.adj[x]
        i = pos[w]
        banned = {colour[w]} | {colour[spine[j]] for j in (i - 1, i + 1) if 0 <= j < len(spine)}
        free = [c for c in lists148[x] if c not in banned]
        if not free:
            raise InputError(f"list of leaf {x} has fewer than four colours")
        colour[x] = free[0]
    verdict = is_nonrepetitive(t, colour)
    if not verdict:
        raise InvariantError(f"caterpillar colouring has repetitive path {verdict.witness}")
    return SamplingRun(t, colour, attempt)


def dependency_profile(counts: Mapping[int, int]) -> dict:
    """Normalise a ``{weight: count}`` mapping for :class:`LLLInstance`."""
    return {int(w): c for w, c in counts.items() if c}
