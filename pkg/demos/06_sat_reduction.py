"""Encoding 3-CNF formulas as layered instances, and checking the encoding."""

from pafp import solve_exact
from pafp.cli import measure
from pafp.generators import gen_gmo, parse_dimacs_cnf, random_cnf3, sat_brute

cnf = parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")
inst = gen_gmo(cnf)
print("clauses:", cnf.clauses)
print("pairs:", sorted(inst.pairs))
path = solve_exact(inst)
print("path:", path)

# Reading an assignment off the path: the middle vertices name literal occurrences
occ = {3 * i + 2 + j: lit for i, clause in enumerate(cnf.clauses) for j, lit in enumerate(clause)}
print("chosen literals:", [occ[v] for v in path[1:-1]])

# A short clause is padded by repeating its last literal
contradiction = parse_dimacs_cnf("p cnf 1 2\n1 0\n-1 0\n")
print(contradiction.clauses, "->", solve_exact(gen_gmo(contradiction)))

# Two variables keep unsatisfiable formulas common
agree = sat = 0
for seed in range(300):
    cnf = random_cnf3(2, 8, seed)
    s = sat_brute(cnf)
    agree += s == (solve_exact(gen_gmo(cnf)) is not None)
    sat += s
print(f"300 random formulas: {sat} satisfiable, {agree} agree")
print(measure(gen_gmo(random_cnf3(6, 8, 0))))
