"""The solver for BFS width 2 with k backward arcs: one formula per subset of those arcs."""

import time

import numpy as np

from pafp import PafpInstance, solve_exact
from pafp.generators import InfeasibleError, gen_backward_augmented, with_random_pairs
from pafp.solver_bfsw2k import Bfsw2kSolver

# The only safe route uses the arc 6 -> 4, which points back one layer
inst = PafpInstance.build(7, [(1, 2), (1, 3), (2, 4), (3, 5), (5, 6), (6, 4), (4, 7)], 1, 7, [(2, 7)])
solver = Bfsw2kSolver(inst)
print("path:", solver.solve(), "via", solver.accepting_subset, f"({solver.formulas_built} formulas)")

# Agreement with the oracle on random instances
checked = 0
for seed in range(300):
    try:
        base = gen_backward_augmented(6, seed % 5, seed)
    except InfeasibleError:
        continue
    inst = with_random_pairs(base, 8, seed)
    assert (Bfsw2kSolver(inst).solve() is None) == (solve_exact(inst) is None)
    checked += 1
print(f"{checked} random instances agree with the oracle")



def _feasible(s):
    try:
        gen_backward_augmented(12, 10, s)
        return True
    except InfeasibleError:
        return False


# Each extra backward arc doubles the work
seed = next(s for s in range(100) if _feasible(s))
times = []
for k in range(11):
    inst = gen_backward_augmented(12, k, seed)
    t0 = time.perf_counter()
    solver = Bfsw2kSolver(inst)
    solver.solve()
    times.append(time.perf_counter() - t0)
    print(f"k={k:>2}: {solver.formulas_built:>5} formulas, {times[-1]:.4f}s")
print("fitted growth per extra arc:", round(float(np.exp(np.polyfit(range(11), np.log(times), 1)[0])), 2))
