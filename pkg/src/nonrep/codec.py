"""Invertible encoding of a triple (path, excluded set, vertex) as an integer code.

The code for an even path ``P`` of order ``2k``, a set ``X`` disjoint from
``P`` and a vertex ``v`` of ``P`` records the walk from ``v`` to the far
endpoint ``x`` and then from ``v`` to the near endpoint ``y`` as 1-based
neighbour indices, with a single ``-1`` marking arrival at ``x``.
"""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import DecodeError, InputError
from .graph import Graph

PathCode = tuple


def _index(g: Graph, at: int, target: int, excluded, prev: int = -1) -> int:
    i = 0
    for u in g.adj[at]:
        if u == prev or u in excluded:
            continue
        i += 1
        if u == target:
            return i
    raise InputError(f"{target} is not an eligible neighbour of {at}")


def _pick(g: Graph, at: int, index: int, excluded, prev: int = -1) -> int:
    if index < 1:
        raise DecodeError(f"index {index} is not positive")
    i = 0
    for u in g.adj[at]:
        if u == prev or u in excluded:
            continue
        i += 1
        if i == index:
            return u
    raise DecodeError(f"vertex {at} has fewer than {index} eligible neighbours")


def encode_path(g: Graph, path: Sequence[int], x: Iterable[int], v: int) -> PathCode:
    path = tuple(path)
    xs = set(x)
    k2 = len(path)
    if k2 == 0 or k2 % 2:
        raise InputError("path must have even order")
    if not g.is_path(path):
        raise InputError(f"{path} is not a path of the graph")
    if v not in path:
        raise InputError(f"vertex {v} is not on the path")
    if not xs.isdisjoint(path):
        raise InputError("excluded set meets the path")
    pos = path.index(v)
    # v is strictly closer to one endpoint since the order is even
    if pos >= k2 - 1 - pos:
        to_x = path[pos::-1]          # v ... path[0]
        to_y = path[pos:]             # v ... path[-1]
    else:
        to_x = path[pos:]
        to_y = path[pos::-1]
    return _encode(g, to_x, to_y, xs)


def _encode(g, to_x, to_y, xs):
    s = [_index(g, to_x[0], to_x[1], xs)]
    for i in range(1, len(to_x) - 1):
        s.append(_index(g, to_x[i], to_x[i + 1], xs, to_x[i - 1]))
    s.append(-1)
    if len(to_y) > 1:
        s.append(_index(g, to_y[0], to_y[1], xs, to_x[1]))
        for i in range(1, len(to_y) - 1):
            s.append(_index(g, to_y[i], to_y[i + 1], xs, to_y[i - 1]))
    return tuple(s)


def check_code(s: Sequence[int]) -> int:
    """Validate the shape of a code and return the 1-based position of its -1."""
    if len(s) < 2 or len(s) % 2:
        raise DecodeError("code length must be even and positive")
    marks = [i for i, e in enumerate(s) if e == -1]
    if len(marks) != 1:
        raise DecodeError("code must contain exactly one -1")
    p = marks[0] + 1
    if p < 2:
        raise DecodeError("-1 cannot be the first entry")
    if any(e < 1 for i, e in enumerate(s) if i != p - 1):
        raise DecodeError("code entries other than -1 must be positive")
    return p


def decode_path(g: Graph, s: Sequence[int], x: Iterable[int], v: int) -> tuple[int, ...]:
    """Recover the path from its code, oriented from the far endpoint to the near one."""
    g.check_vertex(v)
    s = tuple(s)
    xs = set(x)
    p = check_code(s)
    k2 = len(s)
    if p <= k2 // 2:
        raise DecodeError("-1 must sit in the second half: v is nearer the other end")
    u = [None] * (k2 + 1)       # 1-based
    u[p] = v
    u[p - 1] = _pick(g, v, s[0], xs)
    for i in range(p - 2, 0, -1):
        u[i] = _pick(g, u[i + 1], s[p - i - 1], xs, u[i + 2])
    for j in range(p + 1, k2 + 1):
        u[j] = _pick(g, u[j - 1], s[j - 1], xs, u[j - 2])
    path = tuple(u[1:])
    if len(set(path)) != k2:
        raise DecodeError("code does not describe a simple path")
    # u[1] is the far endpoint, u[p] = v; re-encoding rejects non-canonical codes
    if _encode(g, path[p - 1::-1], path[p - 1:], xs) != s:
        raise DecodeError("code is not the canonical code of the path it describes")
    return path


def code_to_json(s: Sequence[int]) -> str:
    return json.dumps(list(s))


def code_from_json(text: str) -> PathCode:
    return tuple(int(e) for e in json.loads(text))
