"""One run of the colouring engine, its record, Dyck word and lossless replay."""
from nonrep.engine import lexicographic_priority, reconstruct_input, run, run_random
from nonrep.graph import ListAssignment, is_nonrepetitive, path_graph

g = path_graph(12)
lists = ListAssignment.uniform(g.n, 4)
res = run_random(g, lists, seed=3)
print("success:", res.success, "steps:", res.steps)
print("colouring:", res.colouring, "verified:", bool(is_nonrepetitive(g, res.colouring)))

# Each step records None (nothing undone) or the code of the repetitive path it erased.
codes = [r for r in res.record if r is not None]
print("backtracks:", len(codes), "first code:", codes[0] if codes else None)
print("dyck word:", res.dyck)

# The final colouring plus the record determine the whole input vector.
inputs = reconstruct_input(g, lists, lexicographic_priority, None, res.colouring, res.record)
replay = run(g, lists, lexicographic_priority, None, inputs)
print("replayed colouring matches:", replay.colouring == res.colouring)
print("replayed record matches:", replay.record == res.record)
