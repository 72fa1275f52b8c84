"""The entropy-compression list-colouring algorithm and its certificates.

One run consumes a vector of list indices ``c_1, c_2, ...``.  At each step
the priority function picks an uncoloured vertex ``v``, which receives the
``c_i``-th colour of its list.  If that creates a repetitively coloured path
``P`` (necessarily through ``v``), the half of ``P`` containing ``v`` is
uncoloured, except for precoloured vertices, and the step's record entry is
the code of ``P``; otherwise the entry is empty.

From the record alone one can replay the sequence of uncoloured sets
(:func:`trace_of_record`), and together with the final colouring the whole
input vector (:func:`reconstruct_input`).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .codec import decode_path, encode_path
from .errors import DecodeError, InputError, InvariantError, ReconstructionError
from .graph import (Graph, ListAssignment, find_repetitive_path,
                    find_repetitive_path_exhaustive)

Priority = Callable[[frozenset], int]


def lexicographic_priority(x) -> int:
    """Smallest vertex id in ``x``."""
    return min(x)


@dataclass
class RunResult:
    colouring: list
    record: list                 # entry i-1 is R(i): a code tuple or None
    trace: list | None           # X_1..X_t as frozensets, when kept
    success: bool
    steps: int = field(default=0)

    @property
    def dyck(self) -> str:
        return dyck_of_record(self.record)


def _split_halves(path, v):
    """Orient ``path`` so that ``v`` lies in the second half; return (P1, P2)."""
    k = len(path) // 2
    if v in path[:k]:
        path = path[::-1]
    return path[:k], path[k:]


class Algorithm:
    """Step-by-step executor of the colouring algorithm.

    ``paranoid=True`` re-verifies, after every step, that no repetitive path
    survives anywhere (exhaustive and slow; meant for tests).
    """

    def __init__(self, g: Graph, lists: ListAssignment, priority: Priority = lexicographic_priority,
                 pre: Sequence[int] | None = None, keep_trace: bool = True,
                 paranoid: bool = False):
        if len(lists) != g.n:
            raise InputError("list assignment does not match the graph")
        pre = list(pre) if pre is not None else [0] * g.n
        if len(pre) != g.n:
            raise InputError("precolouring does not match the graph")
        for v, c in enumerate(pre):
            if c != 0 and c not in lists[v]:
                raise InputError(f"precolour {c} of vertex {v} is not in its list")
        self.g = g
        self.lists = lists
        self.ell = lists.size
        self.priority = priority
        self.pre = tuple(pre)
        self.q = frozenset(v for v, c in enumerate(pre) if c != 0)
        self.phi = list(pre)
        self.x = set(range(g.n)) - self.q
        self.record: list = []
        self.trace: list | None = [] if keep_trace else None
        self.paranoid = paranoid

    @property
    def done(self) -> bool:
        return not self.x

    def step(self, c: int) -> None:
        if not (1 <= c <= self.ell):
            raise InputError(f"input entry {c} outside [1, {self.ell}]")
        if not self.x:
            raise InvariantError("step called after success")
        xs = frozenset(self.x)
        if self.trace is not None:
            self.trace.append(xs)
        v = self.priority(xs)
        if v not in xs:
            raise InvariantError(f"priority returned {v}, not a member of X")
        self.phi[v] = self.lists[v][c - 1]
        path = find_repetitive_path(self.g, self.phi, anchor=v)
        if path is None:
            self.record.append(None)
            self.x.discard(v)
        else:
            code = encode_path(self.g, path, xs - {v}, v)
            _, p2 = _split_halves(path, v)
            for w in p2:
                if w not in self.q:
                    self.phi[w] = 0
                    self.x.add(w)
            self.record.append(code)
        if self.paranoid:
            w = find_repetitive_path_exhaustive(self.g, self.phi)
            if w is not None:
                raise InvariantError(f"repetitive path {w} survived a step")

    def result(self) -> RunResult:
        return RunResult(list(self.phi), list(self.record), self.trace,
                         not self.x, len(self.record))


def run(g: Graph, lists: ListAssignment, priority: Priority = lexicographic_priority,
        pre: Sequence[int] | None = None, inputs: Iterable[int] = (),
        keep_trace: bool = True, paranoid: bool = False) -> RunResult:
    """Execute the algorithm on an explicit input vector.

    Stops early, successfully, once every vertex is coloured.  A run that
    exhausts its input with uncoloured vertices left is a failure.
    """
    alg = Algorithm(g, lists, priority, pre, keep_trace, paranoid)
    inputs = list(inputs)
    for c in inputs:
        if not (1 <= c <= alg.ell):
            raise InputError(f"input entry {c} outside [1, {alg.ell}]")
    for c in inputs:
        if alg.done:
            break
        alg.step(c)
    return alg.result()


def run_random(g: Graph, lists: ListAssignment, priority: Priority = lexicographic_priority,
               pre: Sequence[int] | None = None, max_steps: int = 10**5,
               seed: int | None = 0, keep_trace: bool = True) -> RunResult:
    """Las Vegas driver: uniform random inputs until success or ``max_steps``."""
    if max_steps < 1:
        raise InputError("max_steps must be at least 1")
    rng = random.Random(seed)
    alg = Algorithm(g, lists, priority, pre, keep_trace)
    while not alg.done and len(alg.record) < max_steps:
        alg.step(rng.randint(1, alg.ell))
    return alg.result()


def is_dyck(word: str) -> bool:
    depth = 0
    for b in word:
        depth += 1 if b == "0" else -1
        if depth < 0:
            return False
    return depth == 0


def dyck_of_record(record: Sequence) -> str:
    """``0 1^{r_1} 0 1^{r_2} ... 0 1^{r_t} 1^z`` with ``r_i`` half the code length.

    ``z = t - sum(r_i)``, the number of coloured vertices at the end of a run
    without precoloured vertices.
    """
    t = len(record)
    if t == 0:
        raise InputError("empty record")
    parts = []
    total = 0
    for i, code in enumerate(record, 1):
        r = 0 if code is None else len(code) // 2
        total += r
        if total > i:
            raise InvariantError(f"record prefix {i} uncolours more than it coloured")
        parts.append("0" + "1" * r)
    z = t - total
    if z < 1:
        raise InvariantError("record leaves no coloured vertex")
    return "".join(parts) + "1" * z


def trace_of_record(g: Graph, priority: Priority, pre: Sequence[int] | None,
                    record: Sequence) -> list[frozenset]:
    """Replay the uncoloured sets ``X_1..X_t`` from a record alone."""
    pre = pre if pre is not None else [0] * g.n
    q = frozenset(v for v, c in enumerate(pre) if c != 0)
    x = frozenset(range(g.n)) - q
    out = []
    for i, code in enumerate(record, 1):
        if not x:
            raise DecodeError(f"record continues after success at step {i}")
        out.append(x)
        v = priority(x)
        if code is None:
            x = x - {v}
        else:
            path = decode_path(g, code, x - {v}, v)
            _, p2 = _split_halves(path, v)
            x = x | (frozenset(p2) - q)
    return out


def reconstruct_input(g: Graph, lists: ListAssignment, priority: Priority,
                      pre: Sequence[int] | None, final: Sequence[int],
                      record: Sequence) -> list[int]:
    """Recover the unique input vector that produced ``(final, record)``.

    Works backwards from the last step: an empty entry means the chosen
    vertex kept the colour it was given; a code means the chosen vertex was
    given its twin's colour on the decoded path, and the uncoloured half had
    the colours of the first half.
    """
    pre = list(pre) if pre is not None else [0] * g.n
    q = frozenset(v for v, c in enumerate(pre) if c != 0)
    try:
        trace = trace_of_record(g, priority, pre, record)
    except DecodeError as exc:
        raise ReconstructionError(str(exc)) from exc
    phi = list(final)
    if len(phi) != g.n:
        raise ReconstructionError("colouring does not match the graph")
    inputs = [0] * len(record)
    for i in range(len(record) - 1, -1, -1):
        x = trace[i]
        v = priority(x)
        code = record[i]
        if code is None:
            colour = phi[v]
            phi[v] = 0
        else:
            path = decode_path(g, code, x - {v}, v)
            p1, p2 = _split_halves(path, v)
            j = p2.index(v)
            colour = phi[p1[j]]
            for a, b in zip(p1, p2):
                if b in q:
                    continue
                if phi[b] != 0:
                    raise ReconstructionError(f"vertex {b} should be uncoloured after step {i + 1}")
                phi[b] = phi[a]
            phi[v] = 0
        try:
            inputs[i] = lists[v].index(colour) + 1
        except ValueError:
            raise ReconstructionError(
                f"colour {colour} of vertex {v} at step {i + 1} is not in its list") from None
    if phi != pre:
        raise ReconstructionError("undoing every step does not return to the precolouring")
    replay = run(g, lists, priority, pre, inputs, keep_trace=False)
    if replay.record != list(record) or replay.colouring != list(final):
        raise ReconstructionError("recovered vector does not reproduce the pair")
    return inputs


def record_to_json(record: Sequence) -> str:
    return json.dumps([{"step": i, "code": None if c is None else list(c)}
                       for i, c in enumerate(record, 1)])


def record_from_json(text: str) -> list:
    rows = sorted(json.loads(text), key=lambda r: r["step"])
    if [r["step"] for r in rows] != list(range(1, len(rows) + 1)):
        raise InputError("record steps must be 1..t without gaps")
    return [None if r["code"] is None else tuple(r["code"]) for r in rows]


def trace_to_json(trace: Sequence[Iterable[int]]) -> str:
    return json.dumps([sorted(x) for x in trace])
