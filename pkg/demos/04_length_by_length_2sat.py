"""The polynomial solver for exact-length width 2: one 2-SAT formula per length."""

import time

from pafp import check_path, solve_exact
from pafp.generators import gen_ladder, with_random_pairs
from pafp.layering import exact_length_profile
from pafp.solver_elw2 import Elw2Solver, build_formula_ell
from pafp.twosat import solve

ladder = gen_ladder(5)
prof = exact_length_profile(ladder.graph, ladder.source)
enc = build_formula_ell(ladder, prof, 5)
print(f"length 5: {enc.formula.var_count} variables, {len(enc.formula.clauses)} clauses")
print("decoded path:", enc.decode(solve(enc.formula)))

# With pairs, compare against the exhaustive search
yes = 0
for seed in range(200):
    inst = with_random_pairs(gen_ladder(8, 0.7, seed), 10, seed)
    path = Elw2Solver(inst).solve()
    assert (path is None) == (solve_exact(inst) is None)
    if path is not None:
        assert check_path(inst, path).is_safe
        yes += 1
print(f"200 ladders with 10 random pairs: {yes} YES, all agree with the oracle")

# Running time grows gently with the ladder length
for ell in (10, 20, 40, 80):
    inst = with_random_pairs(gen_ladder(ell), ell, 0)
    t0 = time.perf_counter()
    solver = Elw2Solver(inst)
    solver.solve()
    print(f"length {ell:>3}: {solver.clauses_built:>7} clauses, {time.perf_counter() - t0:.3f}s")
