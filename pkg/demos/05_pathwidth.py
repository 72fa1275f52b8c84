"""Nonrepetitive and star colourings of random graphs of bounded pathwidth."""
import random

from nonrep.generators import random_pathwidth_graph
from nonrep.graph import is_nonrepetitive, verify_star
from nonrep.pathwidth import (PathDecomposition, colour_pathwidth, pathwidth_colour_bound,
                              star_colour_bound, star_colour_pathwidth)

rng = random.Random(5)
for k in range(4):
    g, bags = random_pathwidth_graph(30, k, rng)
    pd = PathDecomposition(bags)
    colour = colour_pathwidth(g, pd)
    star = star_colour_pathwidth(g, pd)
    print(f"width {pd.width}: n={g.n} m={g.m}")
    print(f"  nonrepetitive {len(set(colour))} colours (bound {pathwidth_colour_bound(k)}),"
          f" verified {bool(is_nonrepetitive(g, colour))}")
    print(f"  star {len(set(star))} colours (bound {star_colour_bound(k)}),"
          f" verified {bool(verify_star(g, star))}")
