"""Path decompositions built from BFS layers of the union digraph."""

from pafp import PafpInstance, normalize
from pafp.decomposition import (
    PathDecomposition,
    build_bfs_bags,
    reachable_union_graph,
    verify_decomposition,
    width_bound,
)

inst = PafpInstance.build(6, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)], 1, 6, [(3, 6)])
decomp = build_bfs_bags(inst)
for d, bag in enumerate(decomp.bags):
    print(f"bag {d}: {sorted(bag)}")
print("width", decomp.width, "bound", width_bound(inst))
print("verify:", verify_decomposition(reachable_union_graph(inst), decomp))

# Dropping the middle bag loses an edge
print("without bag 1:", verify_decomposition(reachable_union_graph(inst), PathDecomposition(decomp.bags[::2])))

# After normalizing, all backward-arc endpoints sit in every bag
out = normalize(inst).instance
big = build_bfs_bags(out)
print(f"normal form: {len(big.bags)} bags, width {big.width}, bound {width_bound(out)}")
print("verify:", verify_decomposition(reachable_union_graph(out), big))
