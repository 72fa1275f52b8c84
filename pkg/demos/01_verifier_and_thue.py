"""Square-free words and the repetition verifier on small graphs."""
from nonrep.bounds import is_square_free, thue_word
from nonrep.graph import cycle_graph, is_nonrepetitive, path_graph, petersen_graph

# A square-free ternary word colours a path nonrepetitively.
word = thue_word(20)
print("thue word:", "".join(map(str, word)), "square-free:", is_square_free(word))
print("on P_20:", bool(is_nonrepetitive(path_graph(20), word)))

# Swapping two letters usually breaks it, and the verdict names a witness path.
broken = list(word)
broken[3], broken[4] = broken[4], broken[3]
verdict = is_nonrepetitive(path_graph(20), broken)
print("after a swap:", bool(verdict), "witness", verdict.witness)

# Cycles: C_5 needs four colours, while a 3-colouring of C_6 by repeating 1 2 3 fails.
print("C_5 with 1 2 1 2 3:", bool(is_nonrepetitive(cycle_graph(5), [1, 2, 1, 2, 3])))
print("C_5 with 1 2 3 1 4:", bool(is_nonrepetitive(cycle_graph(5), [1, 2, 3, 1, 4])))
print("C_6 with 1 2 3 1 2 3:", bool(is_nonrepetitive(cycle_graph(6), [1, 2, 3, 1, 2, 3])))

# Distinct colours are always fine.
pet = petersen_graph()
print("Petersen, all distinct:", bool(is_nonrepetitive(pet, list(range(1, pet.n + 1)))))
