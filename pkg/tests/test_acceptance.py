"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line; the lines are printed in the
pytest terminal summary and also when this file is run as a script.
"""
import itertools
import math
import random
import time
from decimal import Decimal, getcontext
from fractions import Fraction

import networkx as nx

from nonrep.bounds import (SPECIAL_DYCK_BASE, SpreadParams, count_01, count_c_spread,
                           count_c_spread_brute, count_special_dyck, dprime_words,
                           growth_rate, is_special, series_B, series_F,
                           spread_recurrence_bound, sum_dyck_weights)
from nonrep.codec import decode_path, encode_path
from nonrep.engine import (dyck_of_record, lexicographic_priority, reconstruct_input, run,
                           run_random)
from nonrep.generators import random_caterpillar, random_pathwidth_graph
from nonrep.graph import (Graph, ListAssignment, complete_graph, enumerate_even_paths,
                          is_nonrepetitive, path_graph, random_graph, respects_lists,
                          star_graph, verify_star)
from nonrep.pathwidth import (PathDecomposition, colour_pathwidth, pathwidth_colour_bound,
                              star_colour_bound, star_colour_pathwidth)
from nonrep.probabilistic import (CATERPILLAR_LIST_SIZE, caterpillar_lll_constant,
                                  colour_caterpillar, subdivision_lll_constant)
from nonrep.errors import ExhaustionError
from nonrep.strategies import colour_subdivision, is_nice, list_size_for_degree, subdivide

RESULTS = []


def report(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


# ---------------------------------------------------------------- 1 codec round trip

def _round_trips(g, x_candidates):
    """Round-trip every even path, every X from ``x_candidates(path)``, every v."""
    ops = fails = 0
    n = g.n
    if n < 2:
        return 0, 0
    for path in enumerate_even_paths(g, n - n % 2):
        pool = x_candidates(path)
        for size in range(len(pool) + 1):
            for xs in itertools.combinations(pool, size):
                xs = frozenset(xs)
                for v in path:
                    q = decode_path(g, encode_path(g, path, xs, v), xs, v)
                    ops += 1
                    if q != path and q[::-1] != path:
                        fails += 1
    return ops, fails


def test_criterion_01_codec_round_trip():
    start = time.perf_counter()
    ops = fails = 0
    for h in nx.graph_atlas_g():
        g = Graph(h.number_of_nodes(), h.edges())
        o, f = _round_trips(g, lambda p, g=g: [u for u in range(g.n) if u not in p])
        ops, fails = ops + o, fails + f
    atlas_ops = ops
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(2, 12)
        g = random_graph(n, min(1.0, 2.5 / (n - 1)), rng)

        # codes only consult neighbours of path vertices, so X ∩ N(P) decides everything
        def near(p, g=g):
            on = set(p)
            return sorted({u for w in p for u in g.adj[w]} - on)
        o, f = _round_trips(g, near)
        ops, fails = ops + o, fails + f
    elapsed = time.perf_counter() - start
    report(1, fails == 0 and elapsed < 120,
           f"{ops} round trips ({atlas_ops} on all graphs <= 7 vertices), "
           f"{fails} failures, {elapsed:.1f}s (limit 120s)")


# ---------------------------------------------------------------- 2 losslessness

def test_criterion_02_losslessness():
    f = lexicographic_priority
    checked = bad = collisions = 0
    for n in (3, 4):
        g, la = path_graph(n), ListAssignment.uniform(n, 2)
        seen = {}
        for t in range(1, 7):
            for vec in itertools.product((1, 2), repeat=t):
                res = run(g, la, f, None, vec, keep_trace=False)
                if res.steps < t:
                    continue
                checked += 1
                if reconstruct_input(g, la, f, None, res.colouring, res.record) != list(vec):
                    bad += 1
                key = (tuple(res.colouring), tuple(res.record))
                if key in seen:
                    collisions += 1
                seen[key] = vec
    report(2, bad == 0 and collisions == 0,
           f"{checked} vectors on P_3/P_4, {bad} mismatches, {collisions} collisions")


# ---------------------------------------------------------------- 3 engine on P_50

def test_criterion_03_paths_four_lists():
    g = path_graph(50)
    wins = verified = 0
    for seed in range(100):
        la = ListAssignment.random(50, 4, random.Random(seed))
        res = run_random(g, la, max_steps=10**5, seed=seed, keep_trace=False)
        if res.success:
            wins += 1
            verified += bool(is_nonrepetitive(g, res.colouring)) and respects_lists(res.colouring, la)
    report(3, wins >= 95 and verified == wins,
           f"{wins}/100 seeds succeeded, {verified} verified nonrepetitive")


# ---------------------------------------------------------------- 4 list sizes

def _decimal_list_size(delta):
    getcontext().prec = 80
    d = Decimal(delta)
    a = d ** (Decimal(1) / Decimal(3))
    for _ in range(5):            # Newton polish of the cube root
        a = a - (a ** 3 - d) / (3 * a * a)
    val = (1 + 1 / (a - 1) + 1 / a) * d * d
    n = int(val.to_integral_value(rounding="ROUND_CEILING"))
    # a perfect cube can land a hair above an integer
    return n - 1 if abs(val - (n - 1)) < Decimal(10) ** -60 else n


def test_criterion_04_list_sizes():
    named = {d: list_size_for_degree(d) for d in (2, 3, 8)}
    oracle = {d: _decimal_list_size(d) for d in (2, 3, 8)}
    ok = named == {2: 23, 3: 36, 8: 160} == oracle
    mismatched = [d for d in range(2, 101)
                  if math.ceil(growth_rate(d) * d * d - 1e-9) != list_size_for_degree(d)
                  or list_size_for_degree(d) != _decimal_list_size(d)]
    report(4, ok and not mismatched,
           f"sizes {named}, decimal oracle {oracle}, growth mismatches for delta in [2,100]: {mismatched}")


# ---------------------------------------------------------------- 5 series

def test_criterion_05_series():
    table = series_F(9)
    bad_rows = []
    for t in range(1, 10):
        hist = {}
        for w in dprime_words(t):
            hist[count_01(w)] = hist.get(count_01(w), 0) + 1
        if table.row(t) != hist:
            bad_rows.append(t)
    spot = (table[3, 1], table[3, 2])
    over = []
    for delta in (2, 3, 4):
        b = series_B(delta, 10)
        for t in range(1, 11):
            w = sum_dyck_weights(t, delta)
            if not (isinstance(w, Fraction) and w <= b[t]):
                over.append((delta, t))
    report(5, not bad_rows and spot == (2, 1) and not over,
           f"F rows differing from enumeration (t<=9): {bad_rows}; F_3,1/F_3,2 = {spot}; "
           f"weight excesses: {over}")


# ---------------------------------------------------------------- 6 spread sequences

def test_criterion_06_spread():
    params = SpreadParams(6, Fraction(1))
    counts = [count_c_spread_brute(q, 6) for q in range(1, 13)]
    fast = [count_c_spread(q, 6) for q in range(1, 13)]
    within = all(n <= 2 ** q for q, n in enumerate(counts, 1))
    rec_fail = [(q, c) for c in range(1, 7) for q in range(1, 13)
                if count_c_spread(q, c) > spread_recurrence_bound(q, c)]
    report(6, params.holds() and counts == fast and within and not rec_fail,
           f"hypotheses {params.holds()}; counts q=1..12: {counts}; "
           f"recurrence violations: {rec_fail}")


# ---------------------------------------------------------------- 7 special Dyck words

def test_criterion_07_special_dyck():
    counts = [count_special_dyck(t) for t in range(1, 11)]
    ok = all(n <= SPECIAL_DYCK_BASE ** (t + 1) for t, n in enumerate(counts, 1)) and counts[2] == 5
    report(7, ok, f"counts t=1..10: {counts}")


# ---------------------------------------------------------------- 8 subdivision strategy

def test_criterion_08_subdivision():
    bases = {"K_2": complete_graph(2), "K_1,3": star_graph(3), "K_4": complete_graph(4)}
    worst = 100
    problems = []
    for c in (3, 4, 5):
        for name, h in bases.items():
            sg = subdivide(h, None, constant_c=c)
            wins = 0
            for seed in range(100):
                rng = random.Random(seed * 7 + c)
                lists = ListAssignment.random(sg.graph.n, 5, rng, palette=8)
                try:
                    res = colour_subdivision(sg, lists, seed=seed, max_steps=10**5)
                except ExhaustionError:
                    continue
                wins += 1
                if not respects_lists(res.colouring, lists):
                    problems.append((c, name, seed, "lists"))
                if not all(is_nice(sg, x) for x in res.trace):
                    problems.append((c, name, seed, "nice"))
                if not is_special(dyck_of_record(res.record)):
                    problems.append((c, name, seed, "dyck"))
                if not is_nonrepetitive(sg.graph, res.colouring):
                    problems.append((c, name, seed, "repetitive"))
            worst = min(worst, wins)
    report(8, worst >= 90 and not problems,
           f"fewest successes over 9 (c, base) pairs: {worst}/100; certificate problems: {problems[:5]}")


# ---------------------------------------------------------------- 9 pathwidth

def test_criterion_09_pathwidth():
    rng = random.Random(9)
    over = unverified = 0
    for i in range(200):
        dense = (0.95, 0.2) if i % 2 else (0.6, 0.4)
        g, bags = random_pathwidth_graph(rng.randint(1, 14), 2, rng, *dense)
        pd = PathDecomposition(bags)
        colour = colour_pathwidth(g, pd, verify=False)
        k = max(pd.width, 0)
        over += len(set(colour)) > pathwidth_colour_bound(k)
        unverified += not is_nonrepetitive(g, colour)
    star_over = star_bad = 0
    for i in range(200):
        dense = (0.95, 0.2) if i % 2 else (0.6, 0.4)
        g, bags = random_pathwidth_graph(rng.randint(1, 40), 3, rng, *dense)
        pd = PathDecomposition(bags)
        colour = star_colour_pathwidth(g, pd, verify=False)
        star_over += len(set(colour)) > star_colour_bound(max(pd.width, 0))
        star_bad += not verify_star(g, colour)
    report(9, over == unverified == star_over == star_bad == 0,
           f"nonrepetitive: 200 graphs, {over} over bound, {unverified} failed the oracle; "
           f"star: 200 graphs, {star_over} over bound, {star_bad} failed verify_star")


# ---------------------------------------------------------------- 10 local lemma numerics

def test_criterion_10_lll():
    sub = subdivision_lll_constant()
    cat = caterpillar_lll_constant()
    ok = (sub.exact < Fraction(958, 1000) and cat.exact == Fraction(5328, 5329) < 1
          and abs(sub.closed_form - sub.partial_sum) < 1e-3
          and abs(cat.closed_form - cat.partial_sum) < 1e-3
          and abs(float(sub.exact) - sub.closed_form) < 1e-3)
    report(10, ok, f"subdivision {float(sub.exact):.10f} < 0.958; caterpillar {cat.exact} "
                   f"= {float(cat.exact):.6f} < 1")


# ---------------------------------------------------------------- 11 caterpillars

def test_criterion_11_caterpillars():
    rng = random.Random(11)
    wins = verified = 0
    for i in range(50):
        t = random_caterpillar(rng, max_spine=12, max_leaves=3)
        lists = ListAssignment.random(t.n, CATERPILLAR_LIST_SIZE, rng)
        try:
            res = colour_caterpillar(t, lists, seed=i, max_retries=100)
        except ExhaustionError:
            continue
        wins += 1
        verified += bool(is_nonrepetitive(t, res.colouring)) and respects_lists(res.colouring, lists)
    report(11, wins >= 49 and verified == wins, f"{wins}/50 caterpillars coloured, {verified} verified")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
