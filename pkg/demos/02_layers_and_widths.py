"""Shortest-distance layers, exact-length layers and the union digraph."""

from pafp import PafpInstance, exact_length_profile, layer_profile, union_digraph
from pafp.generators import gen_backward_augmented, gen_ladder

inst = PafpInstance.build(6, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)], 1, 6, [(3, 6)])

prof = layer_profile(inst.graph, inst.source)
for d, layer in enumerate(prof.layers):
    print(f"distance {d}: {sorted(layer)}")
print("BFS width:", prof.bfsw)

# On a DAG a vertex may sit on several exact lengths
ex = exact_length_profile(inst.graph, inst.source)
print("exact-length layers:", [sorted(x) for x in ex.layers if x])
print("exact-length width:", ex.elw)

# The pair {3,6} becomes an arc 3 -> 6, which pulls t one layer closer
h = union_digraph(inst)
print("union arcs added:", sorted(h.arcs - inst.graph.arcs))
print("union layers:", [sorted(x) for x in layer_profile(h, inst.source).layers])

# Ladders have two vertices per inner layer, so both widths stay at 2
ladder = gen_ladder(6)
print("ladder widths:", layer_profile(ladder.graph, 1).bfsw, exact_length_profile(ladder.graph, 1).elw)

# Arcs into earlier layers are counted but leave distances alone
aug = gen_backward_augmented(8, 3, seed=1)
aug_prof = layer_profile(aug.graph, aug.source)
print("backward arcs:", sorted(aug_prof.backward), "width still", aug_prof.bfsw)
