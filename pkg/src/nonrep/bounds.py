"""Counting machinery behind the colouring bounds.

Exact integers or rationals everywhere a count is compared; floats only for
the characteristic root and growth rates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np
from scipy.optimize import bisect

from .errors import InputError, ResourceError
from .strategies import ceil_c_log2

THUE_MORPHISM = {1: (1, 2, 3, 1, 2), 2: (1, 3, 1, 2, 3, 2), 3: (1, 3, 2, 3, 1, 3, 2)}
SPECIAL_PATTERN = "0110110"
SPECIAL_DYCK_BASE = 3.992

DYCK_CAP = 12
SPREAD_CAP = 14


def thue_word(n: int) -> list[int]:
    """Prefix of length ``n`` of the fixed point of the Thue morphism."""
    if n < 1:
        raise InputError("n must be at least 1")
    word = [1]
    while len(word) < n:
        word = [b for a in word for b in THUE_MORPHISM[a]]
    return word[:n]


def is_square_free(word) -> bool:
    w = list(word)
    n = len(w)
    for half in range(1, n // 2 + 1):
        for i in range(n - 2 * half + 1):
            if w[i:i + half] == w[i + half:i + 2 * half]:
                return False
    return True


# ---------------------------------------------------------------- c-spread

@dataclass(frozen=True)
class SpreadParams:
    c: int
    eps: Fraction

    def __post_init__(self):
        if self.c < 1 or self.eps <= 0:
            raise InputError("need c >= 1 and eps > 0")
        object.__setattr__(self, "eps", Fraction(self.eps))

    @property
    def w(self) -> float:
        return float((1 + self.eps) ** -0.5)

    def first_hypothesis(self) -> bool:
        # 2^(2/c) <= 1 + eps  <=>  4 <= (1 + eps)^c
        return 4 <= (1 + self.eps) ** self.c

    def second_hypothesis(self) -> bool:
        with mpmath.workdps(50):
            eps = mpmath.mpf(self.eps.numerator) / self.eps.denominator
            w = (1 + eps) ** mpmath.mpf(-0.5)
            return bool(w ** self.c <= eps / 2 * (1 - w))

    def holds(self) -> bool:
        return self.first_hypothesis() and self.second_hypothesis()


def _spread_need(r: int, c: int) -> int:
    return ceil_c_log2(c, r)


def is_c_spread(s, c: int) -> bool:
    """Decide c-spreadness.

    Each big entry picks a side; the ones it claims must sit right next to
    it, so the only interaction is between consecutive big entries sharing
    a run of ones.  A two-state scan over the big entries decides it.
    """
    s = list(s)
    if any(e < 1 for e in s):
        raise InputError("entries must be positive")
    if c < 1:
        raise InputError("c must be positive")
    bigs = [i for i, e in enumerate(s) if e >= 2]
    if not bigs:
        return True
    needs = [_spread_need(s[i], c) for i in bigs]
    gaps = [bigs[0]] + [b - a - 1 for a, b in zip(bigs, bigs[1:])] + [len(s) - 1 - bigs[-1]]
    # ok[side]: feasible so far with the current big entry claiming that side
    ok = {"before": needs[0] <= gaps[0], "after": True}
    for j in range(1, len(bigs)):
        gap = gaps[j]
        new = {}
        for side in ("before", "after"):
            mine = needs[j] if side == "before" else 0
            new[side] = any(ok[prev] and mine + (needs[j - 1] if prev == "after" else 0) <= gap
                            for prev in ("before", "after"))
        ok = new
    return ok["before"] or (ok["after"] and needs[-1] <= gaps[-1])


def _needs_histogram(q: int, c: int) -> dict:
    """``{m: #{r >= 2 : ceil(c log r) = m}}`` for ``m <= q - 1``."""
    hist = {}
    r = 2
    while True:
        m = _spread_need(r, c)
        if m > q - 1:
            return hist
        hist[m] = hist.get(m, 0) + 1
        r += 1


def count_c_spread(q: int, c: int, cap: int = SPREAD_CAP) -> int:
    """Exact number of c-spread sequences of length ``q``.

    Counts words over {1} and big entries (grouped by their need) through
    the subset construction of the side-choosing automaton; a state is
    ``(owed, free)``: ones still owed to the last big entry, and unclaimed
    ones since it.
    """
    if q < 1 or c < 1:
        raise InputError("need q >= 1 and c >= 1")
    if q > cap:
        raise ResourceError(f"q = {q} exceeds the cap {cap}")
    hist = _needs_histogram(q, c)
    top = max(hist, default=0)

    def read_one(states):
        return frozenset((o - 1, 0) if o > 0 else (0, min(f + 1, top)) for o, f in states)

    def read_big(states, m):
        out = set()
        for o, f in states:
            if o:
                continue
            if f >= m:
                out.add((0, 0))
            out.add((m, 0))
        return frozenset(out)

    layer = {frozenset({(0, 0)}): 1}
    for _ in range(q):
        nxt = {}
        for states, cnt in layer.items():
            for st, mult in [(read_one(states), 1)] + [(read_big(states, m), k) for m, k in hist.items()]:
                if st:
                    nxt[st] = nxt.get(st, 0) + cnt * mult
        layer = nxt
    return sum(cnt for states, cnt in layer.items() if any(o == 0 for o, _ in states))


def count_c_spread_brute(q: int, c: int) -> int:
    """Count by testing every sequence over ``[1, rmax]``; small q only."""
    rmax = max([1] + [r for r in range(2, 2 ** q + 2) if _spread_need(r, c) <= q - 1])
    if rmax ** q > 5 * 10 ** 6:
        raise ResourceError("brute-force spread count too large")
    return sum(is_c_spread(s, c) for s in itertools.product(range(1, rmax + 1), repeat=q))


def spread_recurrence_bound(q: int, c: int, relaxed: bool = False):
    """Evaluate the induction recurrence for the number of c-spread sequences.

    ``f(q) = f(q-1) + 2 sum_{z=c}^{q-1} N(z) f(q-z-1)`` with ``f = 1`` up to
    ``c`` and ``f(0) = 1``.  ``N(z)`` is the exact number of ``r >= 2`` with
    ``ceil(c log r) = z``; ``relaxed=True`` uses the float bound ``2^(z/c)``
    instead.
    """
    if q < 1 or c < 1:
        raise InputError("need q >= 1 and c >= 1")
    hist = _needs_histogram(q, c)
    f = [1] * (q + 1)
    for n in range(c + 1, q + 1):
        tot = f[n - 1]
        for z in range(c, n):
            weight = 2 ** (z / c) if relaxed else hist.get(z, 0)
            tot += 2 * weight * f[n - z - 1]
        f[n] = tot
    return f[q]


# ---------------------------------------------------------------- Dyck words

def is_special(word: str) -> bool:
    return SPECIAL_PATTERN not in word


def dyck_words(t: int):
    """All Dyck words of length ``2t`` in lexicographic order."""
    def rec(prefix, zeros, ones):
        if zeros == t and ones == t:
            yield prefix
            return
        if zeros < t:
            yield from rec(prefix + "0", zeros + 1, ones)
        if ones < zeros:
            yield from rec(prefix + "1", zeros, ones + 1)
    yield from rec("", 0, 0)


def count_special_dyck(t: int, cap: int = DYCK_CAP) -> int:
    """Number of Dyck words of length ``2t`` without ``0110110``, by enumeration."""
    if t < 1:
        raise InputError("t must be at least 1")
    if t > cap:
        raise ResourceError(f"t = {t} exceeds the enumeration cap {cap}")
    return sum(1 for d in dyck_words(t) if is_special(d))


def primitive_dyck_words(t: int):
    """Dyck words whose proper nonempty prefixes all have more zeros than ones."""
    for d in dyck_words(t - 1) if t > 1 else [""]:
        yield "0" + d + "1"


def alpha_bound(k: int, delta: int) -> int:
    if k < 1 or delta < 1:
        raise InputError("need k >= 1 and delta >= 1")
    return k * delta ** (2 * k - 1)


def dyck_runs(d: str) -> list[tuple[int, int]]:
    """Split ``0^{l_1} 1^{k_1} ... 0^{l_q} 1^{k_q} 1`` into ``[(l_i, k_i)]``.

    The lone word ``01`` has ``q = 0``.
    """
    if not d or set(d) - {"0", "1"} or not d.endswith("1") or not d.startswith("0"):
        raise InputError(f"{d!r} does not have the run form")
    body = d[:-1]
    if body == "0":
        return []
    groups = [(bit, len(list(grp))) for bit, grp in itertools.groupby(body)]
    if groups[-1][0] != "1":
        raise InputError(f"{d!r} does not have the run form")
    return [(groups[i][1], groups[i + 1][1]) for i in range(0, len(groups), 2)]


def dyck_weight(d: str, delta: int) -> Fraction:
    """``k_1 ... k_q / delta^q``."""
    runs = dyck_runs(d)
    w = Fraction(1)
    for _, k in runs:
        w *= Fraction(k, delta)
    return w


def sum_dyck_weights(t: int, delta: int, cap: int = DYCK_CAP) -> Fraction:
    """Total weight of the Dyck words of length ``2t`` that can be realised.

    Realisable words have every proper prefix strictly unbalanced, so the
    sum runs over primitive Dyck words.
    """
    if t < 1:
        raise InputError("t must be at least 1")
    if t > cap:
        raise ResourceError(f"t = {t} exceeds the enumeration cap {cap}")
    return sum((dyck_weight(d, delta) for d in primitive_dyck_words(t)), Fraction(0))


# ---------------------------------------------------------------- D' words

def dprime_words(t: int):
    """Explicit D' words with ``t`` zeros: no ``21``/``02``, strict prefixes, ``t - 1`` nonzeros."""
    def rec(w, zeros, nonzeros):
        if zeros == t and nonzeros == t - 1:
            yield w
            return
        last = w[-1] if w else ""
        for a in "012":
            if (last, a) in (("2", "1"), ("0", "2")):
                continue
            z, nz = (zeros + 1, nonzeros) if a == "0" else (zeros, nonzeros + 1)
            if z > t or nz > t - 1 or nz >= z:
                continue
            yield from rec(w + a, z, nz)
    yield from rec("", 0, 0)


def count_01(w: str) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a == "0" and b == "1")


def enumerate_Dprime(t: int, cap: int = DYCK_CAP) -> dict[int, int]:
    """``{q: F_{t,q}}``: D' words with ``t`` zeros bucketed by ``01`` count.

    Memoised walk over the word automaton (zeros, nonzeros, last letter);
    ``dprime_words`` lists the same set explicitly.
    """
    if t < 1:
        raise InputError("t must be at least 1")
    if t > cap:
        raise ResourceError(f"t = {t} exceeds the enumeration cap {cap}")

    @lru_cache(maxsize=None)
    def rec(zeros, nonzeros, last):
        if zeros == t and nonzeros == t - 1:
            return {0: 1}
        out = {}
        for a in "012":
            if (last, a) in (("2", "1"), ("0", "2")):
                continue
            z, nz = (zeros + 1, nonzeros) if a == "0" else (zeros, nonzeros + 1)
            if z > t or nz > t - 1 or nz >= z:
                continue
            bump = 1 if (last, a) == ("0", "1") else 0
            for q, n in rec(z, nz, a).items():
                out[q + bump] = out.get(q + bump, 0) + n
        return out

    return dict(sorted(rec(0, 0, "").items()))


def decompose_dprime(d: str) -> tuple:
    """Split a D' word other than ``0`` into ``("0", firsts, rest)``.

    ``d = prefix 0 1^a 2^b``; the prefix splits at the last visits of levels
    ``1..a+b`` into D' words, the first ``a`` of which form ``firsts``.
    """
    if d == "0":
        raise InputError("the word 0 has no decomposition")
    core = d.rstrip("12")
    tail = d[len(core):]
    a = len(tail) - len(tail.lstrip("1"))
    p = len(tail)
    if not core.endswith("0") or a == 0 or tail != "1" * a + "2" * (p - a):
        raise InputError(f"{d!r} is not a D' word")
    prefix = core[:-1]
    level = 0
    last_visit = {0: -1}
    for i, ch in enumerate(prefix):
        level += 1 if ch == "0" else -1
        last_visit[level] = i
    if level != p:
        raise InputError(f"{d!r} is not a D' word")
    parts = [prefix[last_visit[i - 1] + 1:last_visit[i] + 1] for i in range(1, p + 1)]
    return ("0", tuple(parts[:a]), tuple(parts[a:]))


# ---------------------------------------------------------------- series

def _mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Truncated product of bivariate series stored as ``[t, q]`` arrays."""
    T, Q = a.shape
    out = np.zeros((T, Q), dtype=object)
    for i, j in zip(*np.nonzero(a)):
        out[i:, j:] += a[i, j] * b[:T - i, :Q - j]
    return out


@dataclass
class SeriesTable:
    coefficients: np.ndarray     # [t, q] exact integers

    def __getitem__(self, tq):
        return self.coefficients[tq]

    def row(self, t: int) -> dict:
        return {q: int(v) for q, v in enumerate(self.coefficients[t]) if v}

    def substitute_y(self, y: Fraction) -> list[Fraction]:
        """Coefficients ``[z^t] F(z, y)`` for a rational ``y``."""
        out = []
        for row in self.coefficients:
            out.append(sum((Fraction(int(v)) * y ** q for q, v in enumerate(row)), Fraction(0)))
        return out


def series_F(T: int, Q_max: int | None = None) -> SeriesTable:
    """Solve ``F = z + z y F / (1 - F)^2`` by fixed-point iteration up to ``z^T``."""
    if T < 1:
        raise InputError("T must be at least 1")
    Q_max = T - 1 if Q_max is None else Q_max
    if Q_max < 0:
        raise InputError("Q_max must be nonnegative")
    shape = (T + 1, Q_max + 1)
    z = np.zeros(shape, dtype=object)
    z[1, 0] = 1
    zy = np.zeros(shape, dtype=object)
    if Q_max >= 1:
        zy[1, 1] = 1
    f = np.zeros(shape, dtype=object)
    for _ in range(T + 1):
        # (1 - F)^-2 = sum (i + 1) F^i; F has no constant term
        inv = np.zeros(shape, dtype=object)
        inv[0, 0] = 1
        power = inv.copy()
        for i in range(1, T + 1):
            power = _mul(power, f)
            if not power.any():
                break
            inv = inv + (i + 1) * power
        new = z + _mul(zy, _mul(f, inv))
        if np.array_equal(new, f):
            break
        f = new
    return SeriesTable(f)


def series_B(delta: int, T: int) -> list[Fraction]:
    """``[z^t] B(z)`` for ``t = 0..T`` as exact rationals, from ``F(z, 1/delta)``."""
    if delta < 2:
        raise InputError("delta must be at least 2")
    return series_F(T).substitute_y(Fraction(1, delta))


def series_B_direct(delta: int, T: int) -> np.ndarray:
    """``[z^t] B(z)`` in floating point from ``B = z (1 + B / (delta (1 - B)^2))``."""
    if delta < 2:
        raise InputError("delta must be at least 2")
    n = T + 1

    def mul(a, b):
        return np.convolve(a, b)[:n]

    b = np.zeros(n)
    for _ in range(n + 1):
        inv = np.zeros(n)
        inv[0] = 1.0
        power = inv.copy()
        for i in range(1, n):
            power = mul(power, b)
            inv += (i + 1) * power
        new = np.zeros(n)
        new[1] = 1.0
        new[1:] += mul(b, inv)[:n - 1] / delta
        if np.array_equal(new, b):
            break
        b = new
    return b


def phi(u, delta):
    return 1 + u / (delta * (1 - u) ** 2)


def characteristic_root(delta: int) -> tuple[float, float]:
    """``(tau, rho)``: the root of ``phi(u) = u phi'(u)`` in (0, 1) and ``tau / phi(tau)``."""
    if delta < 2:
        raise InputError("delta must be at least 2")

    def g(u):
        return 1 - 2 * u * u / (delta * (1 - u) ** 3)

    tau = bisect(g, 1e-15, 1 - 1e-9, xtol=1e-14, rtol=4 * np.finfo(float).eps)
    return tau, tau / phi(tau, delta)


def growth_rate(delta: int) -> float:
    """``phi(tau') / tau'`` at ``tau' = 1 - delta^(-1/3)``."""
    if delta < 2:
        raise InputError("delta must be at least 2")
    tau = 1 - 1 / np.cbrt(delta)
    return float(phi(tau, delta) / tau)


def growth_closed_form(delta: int) -> float:
    a = np.cbrt(delta)
    return float(1 + 1 / (a - 1) + 1 / a)
