"""Colouring a subdivided K_4 from random lists of size five."""
import random

from nonrep.bounds import is_special
from nonrep.engine import dyck_of_record
from nonrep.graph import ListAssignment, complete_graph, is_nonrepetitive, respects_lists
from nonrep.strategies import colour_subdivision, is_nice, subdivide

sg = subdivide(complete_graph(4), None, constant_c=4)
print("subdivided K_4:", sg.graph.n, "vertices,", sg.graph.m, "edges")
for edge, path in sorted(sg.edge_paths.items()):
    print(" edge", edge, "->", len(path), "division vertices")

lists = ListAssignment.random(sg.graph.n, 5, random.Random(1), palette=8)
res = colour_subdivision(sg, lists, seed=1)
print("steps:", res.steps, "colours used:", sorted(set(res.colouring)))
print("respects lists:", respects_lists(res.colouring, lists),
      "nonrepetitive:", bool(is_nonrepetitive(sg.graph, res.colouring)))

# Certificates: every uncoloured set along the way is nice, and the Dyck word is special.
print("all trace sets nice:", all(is_nice(sg, x) for x in res.trace))
print("dyck word special:", is_special(dyck_of_record(res.record)))
