"""Random and named instance generators used by tests, demos and the CLI."""
from __future__ import annotations

import random

from .errors import InputError
from .graph import (Graph, complete_graph, cycle_graph, path_graph, petersen_graph,
                    star_graph)


def named_graph(name: str) -> Graph:
    """``k4``, ``p10``, ``c5``, ``star3`` (K_{1,3}), ``petersen``."""
    name = name.lower()
    if name == "petersen":
        return petersen_graph()
    for prefix, make in (("star", star_graph), ("k", complete_graph),
                         ("p", path_graph), ("c", cycle_graph)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return make(int(name[len(prefix):]))
    raise InputError(f"unknown graph name {name!r}")


def random_pathwidth_graph(n: int, k: int, rng: random.Random, p_edge: float = 0.6,
                           p_forget: float = 0.4):
    """Random graph with a path decomposition of width at most ``k``.

    Walks a bag along the path: each step either forgets a random bag
    member or introduces a new vertex joined to a random part of the bag.
    Returns ``(graph, bags)``.
    """
    if n < 1 or k < 0:
        raise InputError("need n >= 1 and k >= 0")
    bag: list[int] = []
    bags: list[frozenset] = []
    edges = []
    nxt = 0
    while nxt < n:
        if bag and (len(bag) == k + 1 or rng.random() < p_forget):
            bag.remove(rng.choice(bag))
            continue
        v = nxt
        nxt += 1
        edges += [(u, v) for u in bag if rng.random() < p_edge]
        bag.append(v)
        bags.append(frozenset(bag))
    return Graph(n, edges), bags


def caterpillar(spine: int, leaves: list[int] | int) -> Graph:
    """Path ``0..spine-1`` with ``leaves[i]`` pendant vertices on spine vertex ``i``."""
    if spine < 1:
        raise InputError("spine must have at least one vertex")
    if isinstance(leaves, int):
        leaves = [leaves] * spine
    if len(leaves) != spine or min(leaves) < 0:
        raise InputError("need one nonnegative leaf count per spine vertex")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, c in enumerate(leaves):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def random_caterpillar(rng: random.Random, max_spine: int = 12, max_leaves: int = 3) -> Graph:
    s = rng.randint(1, max_spine)
    return caterpillar(s, [rng.randint(0, max_leaves) for _ in range(s)])
