import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nonrep.bounds import (SPECIAL_DYCK_BASE, SpreadParams, alpha_bound, characteristic_root,
                           count_01, count_c_spread, count_c_spread_brute, count_special_dyck,
                           decompose_dprime, dprime_words, dyck_runs, dyck_weight, dyck_words,
                           enumerate_Dprime, growth_closed_form, growth_rate, is_c_spread,
                           is_square_free, phi, primitive_dyck_words, series_B,
                           series_B_direct, series_F, spread_recurrence_bound, sum_dyck_weights,
                           thue_word)
from nonrep.errors import InputError, ResourceError
from nonrep.graph import is_nonrepetitive, path_graph
from nonrep.strategies import list_size_for_degree


# ---------------------------------------------------------------- Thue

def test_thue_examples():
    assert thue_word(5) == [1, 2, 3, 1, 2]
    assert thue_word(1) == [1]
    with pytest.raises(InputError):
        thue_word(0)


def test_thue_prefixes_square_free():
    w = thue_word(200)
    for n in range(1, 201):
        assert is_square_free(w[:n])


@pytest.mark.parametrize("n", [6, 17, 40])
def test_thue_prefix_nonrepetitive_on_path(n):
    assert is_nonrepetitive(path_graph(n), thue_word(n))


# ---------------------------------------------------------------- c-spread

def brute_spread(s, c):
    """Try every side assignment and check the claimed ones are disjoint and all ones."""
    bigs = [i for i, e in enumerate(s) if e >= 2]
    for sides in itertools.product((-1, 1), repeat=len(bigs)):
        used = set()
        ok = True
        for i, side in zip(bigs, sides):
            need = math.ceil(c * math.log2(s[i]) - 1e-12)
            cells = [i + side * j for j in range(1, need + 1)]
            if any(not (0 <= x < len(s)) or s[x] != 1 or x in used for x in cells):
                ok = False
                break
            used.update(cells)
        if ok:
            return True
    return False


def test_spread_examples():
    assert is_c_spread((1, 1, 1), 5)
    assert is_c_spread((1, 1, 2), 2)
    assert not is_c_spread((1, 1, 2), 3)
    with pytest.raises(InputError):
        is_c_spread((0, 1), 2)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=9), st.integers(1, 4))
def test_spread_matches_assignment_search(s, c):
    assert is_c_spread(s, c) == brute_spread(s, c)


@pytest.mark.parametrize("q,c", [(q, c) for c in (1, 2, 3, 4) for q in range(1, 8)
                                 if (q, c) not in ((5, 1), (6, 1), (7, 1), (7, 2))])
def test_spread_count_matches_brute_force(q, c):
    assert count_c_spread(q, c) == count_c_spread_brute(q, c)


@pytest.mark.parametrize("c", [2, 3, 6])
def test_spread_base_case(c):
    for q in range(1, c + 1):
        assert count_c_spread(q, c) == 1


def test_spread_bounds_c6():
    p = SpreadParams(6, Fraction(1))
    assert p.holds()
    for q in range(1, 13):
        n = count_c_spread(q, 6)
        assert n <= 2 ** q
        assert n <= spread_recurrence_bound(q, 6)
        assert spread_recurrence_bound(q, 6) <= spread_recurrence_bound(q, 6, relaxed=True)


@pytest.mark.parametrize("c,eps", [(2, Fraction(2)), (3, Fraction(3, 2)), (8, Fraction(1)), (10, Fraction(3, 4))])
def test_spread_lemma_where_hypotheses_hold(c, eps):
    assert SpreadParams(c, eps).holds()
    for q in range(1, 13):
        assert count_c_spread(q, c) <= (1 + eps) ** q


def test_spread_hypotheses_can_fail():
    assert not SpreadParams(1, Fraction(1)).first_hypothesis()


def test_spread_cap():
    with pytest.raises(ResourceError):
        count_c_spread(99, 6)


# ---------------------------------------------------------------- Dyck words

def test_special_dyck_examples():
    assert count_special_dyck(3) == 5
    assert count_special_dyck(1) == 1
    with pytest.raises(ResourceError):
        count_special_dyck(50)


def test_special_dyck_below_lemma_bound():
    for t in range(1, 11):
        assert count_special_dyck(t) <= SPECIAL_DYCK_BASE ** (t + 1)


def test_dyck_words_are_catalan():
    for t in range(1, 9):
        assert len(list(dyck_words(t))) == math.comb(2 * t, t) // (t + 1)


def test_primitive_dyck_words():
    for t in range(1, 8):
        words = list(primitive_dyck_words(t))
        brute = [d for d in dyck_words(t)
                 if all(d[:i].count("0") > d[:i].count("1") for i in range(1, 2 * t))]
        assert sorted(words) == sorted(brute)


def test_weight_examples():
    assert alpha_bound(1, 3) == 3
    assert dyck_runs("001011") == [(2, 1), (1, 1)]
    assert dyck_weight("001011", 3) == Fraction(1, 9)
    assert dyck_weight("01", 5) == 1
    with pytest.raises(InputError):
        dyck_weight("0110", 3)
    with pytest.raises(InputError):
        dyck_weight("", 3)


@pytest.mark.parametrize("delta", [2, 3, 4])
def test_length_two_codes_counted_by_alpha(delta):
    codes = [(s1, -1) for s1 in range(1, delta + 1)]
    assert len(codes) <= alpha_bound(1, delta)


@pytest.mark.parametrize("delta", [2, 3, 4])
def test_weights_below_series(delta):
    b = series_B(delta, 10)
    for t in range(1, 11):
        assert sum_dyck_weights(t, delta) <= b[t]


# ---------------------------------------------------------------- D' words and series

def test_dprime_examples():
    assert enumerate_Dprime(1) == {0: 1}
    assert enumerate_Dprime(2) == {1: 1}
    assert enumerate_Dprime(3) == {1: 2, 2: 1}
    assert sorted(dprime_words(3)) == ["00011", "00012", "00101"]


def test_dprime_dp_matches_explicit_words():
    for t in range(1, 9):
        hist = {}
        for w in dprime_words(t):
            hist[count_01(w)] = hist.get(count_01(w), 0) + 1
        assert enumerate_Dprime(t) == dict(sorted(hist.items()))


def test_series_examples():
    f = series_F(4)
    assert f[1, 0] == 1 and f[2, 1] == 1
    assert f[3, 1] == 2 and f[3, 2] == 1
    assert all(v == 0 for v in f.coefficients[0])


def test_series_matches_enumeration():
    f = series_F(9)
    for t in range(1, 10):
        assert f.row(t) == enumerate_Dprime(t)


def test_decomposition_is_bijective_and_shifts_q():
    words = {t: list(dprime_words(t)) for t in range(1, 9)}
    zeros = lambda w: w.count("0")
    for t in range(2, 9):
        images = set()
        for d in words[t]:
            head, firsts, rest = decompose_dprime(d)
            assert head == "0" and firsts
            parts = firsts + rest
            assert all(p in words[zeros(p)] for p in parts)
            assert 1 + sum(zeros(p) for p in parts) == t
            assert sum(count_01(p) for p in parts) == count_01(d) - 1
            images.add((firsts, rest))
        assert len(images) == len(words[t])


def _triples(t, words):
    # all elements of D'' with t zeros, built directly
    def seqs(total, min_len):
        if total == 0:
            if min_len == 0:
                yield ()
            return
        for z in range(1, total + 1):
            for w in words.get(z, []):
                for tail in seqs(total - z, max(0, min_len - 1)):
                    yield (w,) + tail
    for split in range(1, t):
        for a in seqs(split, 1):
            for b in seqs(t - 1 - split, 0):
                yield a, b


def test_triple_counts_shift_series():
    words = {t: list(dprime_words(t)) for t in range(1, 8)}
    f = series_F(8)
    for t in range(2, 8):
        c = {}
        for a, b in _triples(t, words):
            q = sum(count_01(w) for w in a + b)
            c[q] = c.get(q, 0) + 1
        assert {q + 1: n for q, n in c.items()} == f.row(t)


@pytest.mark.parametrize("delta", [2, 3, 5])
def test_b_coefficients(delta):
    b = series_B(delta, 3)
    assert b[1] == 1
    assert b[2] == Fraction(1, delta)
    assert b[3] == Fraction(2, delta) + Fraction(1, delta ** 2)


@pytest.mark.parametrize("delta", [2, 3, 4, 10])
def test_b_routes_agree(delta):
    exact = series_B(delta, 30)
    direct = series_B_direct(delta, 30)
    for t in range(31):
        assert abs(float(exact[t]) - direct[t]) <= 1e-12 * max(1.0, float(exact[t]))


# ---------------------------------------------------------------- growth

def test_growth_examples():
    assert growth_rate(8) == pytest.approx(2.5, abs=1e-12)
    for delta in range(2, 101):
        assert growth_rate(delta) == pytest.approx(growth_closed_form(delta), rel=1e-12)
        assert math.ceil(growth_rate(delta) * delta ** 2 - 1e-9) == list_size_for_degree(delta)


@pytest.mark.parametrize("delta", [2, 3, 8, 50])
def test_tau_minimises(delta):
    tau, rho = characteristic_root(delta)
    h = 1e-6
    dphi = (phi(tau + h, delta) - phi(tau - h, delta)) / (2 * h)
    assert phi(tau, delta) - tau * dphi == pytest.approx(0, abs=1e-6)
    assert rho == pytest.approx(tau / phi(tau, delta))
    grid = np.linspace(0.01, 0.99, 400)
    assert phi(tau, delta) / tau <= min(phi(u, delta) / u for u in grid) + 1e-12
    tp = 1 - delta ** (-1 / 3)
    assert phi(tau, delta) / tau <= phi(tp, delta) / tp + 1e-12


def test_scaled_coefficients_stay_bounded():
    delta = 3
    tau, rho = characteristic_root(delta)
    b = series_B_direct(delta, 200)
    scaled = [b[t] * rho ** t for t in range(1, 201)]
    assert max(scaled) < 1.0
    # ratios settle: the tail varies slowly
    assert abs(scaled[-1] / scaled[-2] - 1) < 0.01
