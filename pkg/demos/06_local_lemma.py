"""Local-lemma constants and the two sampling colourers."""
import random

from nonrep.generators import random_caterpillar
from nonrep.graph import ListAssignment, complete_graph, is_nonrepetitive
from nonrep.probabilistic import (CATERPILLAR_LIST_SIZE, caterpillar_lll_constant,
                                  colour_caterpillar, lll_colour_subdivision,
                                  lll_subdivision_count, subdivision_lll_constant)

for const in (subdivision_lll_constant(), caterpillar_lll_constant()):
    print(f"{const.name}: {float(const.exact):.10f} < {float(const.threshold)}  holds={const.holds}")

print("division vertices per edge for max degree 3:", lll_subdivision_count(3))

# The full count is large, so sample on a shorter subdivision; the verifier still decides.
for method in ("retry", "resample"):
    run = lll_colour_subdivision(complete_graph(4), r_override=12, seed=2, method=method)
    print(f"K_4, 12 per edge, {method}: {run.attempts} attempts,"
          f" verified {bool(is_nonrepetitive(run.graph, run.colouring))}")

rng = random.Random(6)
t = random_caterpillar(rng, max_spine=10, max_leaves=3)
lists = ListAssignment.random(t.n, CATERPILLAR_LIST_SIZE, rng)
run = colour_caterpillar(t, lists, seed=6)
print(f"caterpillar n={t.n}: {run.attempts} spine attempts,"
      f" verified {bool(is_nonrepetitive(t, run.colouring))}")
