"""Counting sequences and the list sizes they imply."""
import numpy as np

from nonrep.bounds import (count_c_spread, count_special_dyck, growth_rate, series_B,
                           sum_dyck_weights)
from nonrep.strategies import list_size_for_degree

print("special Dyck words, t = 1..10:", [count_special_dyck(t) for t in range(1, 11)])
print("6-spread sequences, q = 1..12:", [count_c_spread(q, 6) for q in range(1, 13)])

# Weighted Dyck sums stay below the coefficients of the bounding series.
delta = 3
b = series_B(delta, 8)
for t in range(1, 9):
    w = sum_dyck_weights(t, delta)
    print(f" t={t}: weight sum {float(w):12.4f}  series {float(b[t]):12.4f}")

# The list size is the growth rate times delta^2; the rate tends to 1 as delta grows.
degrees = np.array([2, 3, 8, 20, 100, 1000])
rates = np.array([growth_rate(int(d)) for d in degrees])
for d, r in zip(degrees, rates):
    print(f" delta={d:5d}  rate={r:.4f}  list size={list_size_for_degree(int(d))}")
