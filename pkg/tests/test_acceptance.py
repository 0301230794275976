"""Exit criteria, each run at its full stated size.

Every test records one PASS/FAIL line, printed in the pytest terminal summary.
"""

import statistics
import time

import numpy as np
import pytest

from pafp import check_path, count_paths, normalize, parse_instance, serialize_instance, solve_exact
from pafp.cli import measure
from pafp.decomposition import build_bfs_bags, reachable_union_graph, verify_decomposition, width_bound
from pafp.generators import (
    InfeasibleError,
    gen_backward_augmented,
    gen_gmo,
    gen_ladder,
    random_cnf3,
    random_dag_instance,
    random_digraph_instance,
    sat_brute,
    with_random_pairs,
)
from pafp.layering import exact_length_profile, is_dag, layer_profile, union_digraph
from pafp.normalize import backward_arcs_of_normal_form, check_level_function
from pafp.solver_bfsw2k import Bfsw2kSolver
from pafp.solver_elw2 import Elw2Solver
from pafp.twosat import TwoSatFormula, solve

from .conftest import brute_distances
from .test_twosat import truth_table_sat

pytestmark = pytest.mark.acceptance


def _dag_corpus(size=2000):
    rng = np.random.default_rng(20261015)
    for seed in range(size):
        n = int(rng.integers(2, 13))
        p = float(rng.uniform(0.1, 0.6))
        yield random_dag_instance(n, p, int(rng.integers(0, 8)), seed)


@pytest.fixture(scope="module")
def normalized_corpus():
    start = time.perf_counter()
    corpus = [(inst, normalize(inst)) for inst in _dag_corpus()]
    return corpus, time.perf_counter() - start


def test_normal_form_correctness(normalized_corpus, acceptance_report):
    corpus, build_time = normalized_corpus
    failures = []
    start = time.perf_counter()
    for i, (inst, norm) in enumerate(corpus):
        out = norm.instance
        g = out.graph
        checks = {
            "valid": parse_instance(serialize_instance(out)) == out,
            "dag": is_dag(g),
            "union-closed": union_digraph(out).arcs == g.arcs,
            "width": layer_profile(union_digraph(out), out.source).bfsw <= 2,
            "equisat": (solve_exact(inst) is None) == (solve_exact(out) is None),
            "levels": brute_distances(g.n, g.arcs, out.source) == dict(norm.level),
            "level check": check_level_function(norm) is None,
        }
        failures += [(i, name) for name, ok in checks.items() if not ok]
    elapsed = build_time + time.perf_counter() - start
    ok = not failures and elapsed < 60
    acceptance_report(
        "1 normal form",
        ok,
        f"{len(corpus)} instances, {len(failures)} violations, {elapsed:.1f}s",
    )
    assert not failures, failures[:10]
    assert elapsed < 60


def test_backward_arcs_of_normal_form(normalized_corpus, acceptance_report):
    corpus, _ = normalized_corpus
    violations = 0
    for _, norm in corpus:
        out = norm.instance
        h = union_digraph(out)
        dist = brute_distances(h.n, h.arcs, out.source)
        backward = {
            (u, v)
            for u, v in h.arcs
            if dist[u] is not None and dist[v] is not None and dist[v] < dist[u]
        }
        if backward != norm.core_arcs or len(backward) < norm.q - 1:
            violations += 1
        backward_arcs_of_normal_form(norm)
    acceptance_report("2 backward arcs", violations == 0, f"{len(corpus)} instances, {violations} violations")
    assert violations == 0


def test_elw2_solver(acceptance_report):
    rng = np.random.default_rng(3)
    disagreements = bad_certs = over_bound = yes = 0
    total = 1000
    for seed in range(total):
        ell = int(rng.integers(1, 11))
        density = None if seed % 4 == 0 else float(rng.uniform(0.3, 1.0))
        inst = with_random_pairs(gen_ladder(ell, density, seed), int(rng.integers(0, 3 * ell + 1)), seed)
        assert inst.n <= 20 and exact_length_profile(inst.graph, inst.source).elw <= 2
        solver = Elw2Solver(inst)
        path = solver.solve()
        yes += path is not None
        if (path is None) != (solve_exact(inst) is None):
            disagreements += 1
        if path is not None and not check_path(inst, path).is_safe:
            bad_certs += 1
        n, f = inst.n, len(inst.pairs)
        if solver.clauses_built > 16 * (n * n + f * n**3):
            over_bound += 1
    full = gen_ladder(10)
    paths, elw = count_paths(full), exact_length_profile(full.graph, full.source).elw
    ok = disagreements == bad_certs == over_bound == 0 and paths == 512 and elw == 2
    acceptance_report(
        "3 elw2 solver",
        ok,
        f"{total} instances ({yes} YES), {disagreements} disagreements, {bad_certs} bad certificates, "
        f"{over_bound} over clause bound; full ladder: {paths} paths, elw {elw}",
    )
    assert ok


def _nested_seed(ell, k_max):
    for seed in range(100):
        try:
            gen_backward_augmented(ell, k_max, seed)
            return seed
        except InfeasibleError:
            continue
    raise AssertionError("no seed admits the requested backward arcs")


def test_bfsw2k_solver(acceptance_report):
    rng = np.random.default_rng(4)
    disagreements = wrong_counts = skipped = checked = yes = 0
    seed = 0
    while checked < 1000:
        seed += 1
        ell, k = int(rng.integers(2, 10)), int(rng.integers(0, 7))
        try:
            base = gen_backward_augmented(ell, k, seed)
        except InfeasibleError:
            skipped += 1
            continue
        inst = with_random_pairs(base, int(rng.integers(0, 3 * ell + 1)), seed)
        assert inst.n <= 18
        solver = Bfsw2kSolver(inst)
        assert solver.k == k and layer_profile(inst.graph, inst.source).bfsw <= 2
        path = solver.solve()
        yes += path is not None
        if (path is None) != (solve_exact(inst) is None):
            disagreements += 1
        if solver.formulas_built != 2**k:
            wrong_counts += 1
        checked += 1

    timing_seed = _nested_seed(12, 10)
    medians = []
    for k in range(11):
        inst = gen_backward_augmented(12, k, timing_seed)
        runs = []
        for _ in range(5):
            t0 = time.perf_counter()
            Bfsw2kSolver(inst).solve()
            runs.append(time.perf_counter() - t0)
        medians.append(statistics.median(runs))
    growth = float(np.exp(np.polyfit(np.arange(11), np.log(medians), 1)[0]))

    ok = disagreements == wrong_counts == 0 and 1.5 <= growth <= 3.0
    acceptance_report(
        "4 bfsw2k solver",
        ok,
        f"{checked} instances ({yes} YES, {skipped} infeasible draws skipped), {disagreements} disagreements, "
        f"{wrong_counts} wrong formula counts; time growth per unit k {growth:.2f}",
    )
    assert disagreements == 0 and wrong_counts == 0
    assert 1.5 <= growth <= 3.0, medians


def test_gmo_reduction(acceptance_report):
    rng = np.random.default_rng(5)
    mismatches = width_violations = unsat = 0
    total = 500
    for seed in range(total):
        cnf = random_cnf3(int(rng.integers(1, 11)), int(rng.integers(1, 9)), seed)
        inst = gen_gmo(cnf)
        satisfiable = sat_brute(cnf)
        unsat += not satisfiable
        if satisfiable != (solve_exact(inst) is not None):
            mismatches += 1
        values = measure(inst)
        if values["bfsw_input"] > 3 or values["elw_input"] > 3 or values["backward_input"] != 0:
            width_violations += 1
    ok = mismatches == width_violations == 0
    acceptance_report("5 3-SAT reduction", ok, f"{total} formulas ({unsat} unsatisfiable), {mismatches} mismatches, {width_violations} width violations")
    assert ok


def test_decomposition(fig1, acceptance_report):
    rng = np.random.default_rng(6)
    violations = 0
    total = 1000
    for seed in range(total):
        n = int(rng.integers(2, 11))
        if seed % 3 == 0:
            inst = random_digraph_instance(n, float(rng.uniform(0.1, 0.4)), int(rng.integers(0, 6)), seed)
        else:
            inst = random_dag_instance(n, float(rng.uniform(0.1, 0.6)), int(rng.integers(0, 6)), seed)
            if seed % 3 == 2:
                inst = normalize(inst).instance
        decomp = build_bfs_bags(inst)
        if verify_decomposition(reachable_union_graph(inst), decomp) is not None or decomp.width > width_bound(inst):
            violations += 1
    spot = build_bfs_bags(fig1)
    spot_ok = (
        verify_decomposition(reachable_union_graph(fig1), spot) is None
        and max(len(b) for b in spot.bags) <= 6
        and spot.width <= 5
    )
    ok = violations == 0 and spot_ok
    acceptance_report("6 decomposition", ok, f"{total} instances, {violations} violations; example width {spot.width}")
    assert ok


def test_twosat_engine(acceptance_report):
    rng = np.random.default_rng(7)
    disagreements = bad_models = 0
    total = 5000
    for _ in range(total):
        n = int(rng.integers(1, 13))
        m = int(rng.integers(0, 4 * n + 1))
        clauses = [tuple(int(x) for x in rng.integers(0, 2 * n, size=2)) for _ in range(m)]
        f = TwoSatFormula(n)
        for a, b in clauses:
            f.add_clause(a, b)
        model = solve(f)
        if (model is not None) != truth_table_sat(n, clauses):
            disagreements += 1
        if model is not None and not f.satisfied_by(model):
            bad_models += 1
    ok = disagreements == bad_models == 0
    acceptance_report("7 2-SAT engine", ok, f"{total} formulas, {disagreements} disagreements, {bad_models} bad models")
    assert ok
