"""Rewriting an acyclic instance into a width-2 form with the same answer."""

from pafp import PafpInstance, check_path, layer_profile, normalize, solve_exact, union_digraph
from pafp.normalize import backward_arcs_of_normal_form, check_level_function, lift_path, project_path

inst = PafpInstance.build(6, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)], 1, 6, [(3, 6)])
norm = normalize(inst)
out = norm.instance

print("core vertices, sinks first:", norm.r_list)
print("new source:", norm.source_prime)
print("spine:", norm.spine)
print("detours:", norm.detours)
print("trap pairs:", sorted(norm.booby_traps()))
print(f"size {inst.n} -> {out.n} vertices, {len(inst.graph.arcs)} -> {len(out.graph.arcs)} arcs")

h = union_digraph(out)
print("union digraph width from the new source:", layer_profile(h, out.source).bfsw)
print("levels agree with BFS distances:", check_level_function(norm) is None)
print("arcs into earlier layers:", len(backward_arcs_of_normal_form(norm)))

# Safe paths move back and forth between the two instances
path = solve_exact(inst)
lifted = lift_path(norm, path)
print("original:", path)
print("lifted:  ", lifted, check_path(out, lifted))
print("back:    ", project_path(norm, lifted))
