"""The ten headline acceptance checks, one test each.

Every test prints a single "criterion N: PASS/FAIL - detail" line (run with
-s to see them live) and enforces the stated exactness and runtime bounds.
"""

import random
import time
from fractions import Fraction

from conftest import mobius_cyclotomic

from cycloschur import linalg
from cycloschur.cyclotomic import cyclotomic_poly, euler_phi
from cycloschur.reduction import condition_star, coprime_split, prime_power_split, z_n_system
from cycloschur.symfunc import (
    Partition,
    box_size,
    partitions_in_box,
    schur_at_roots,
    schur_at_roots_bialternant,
    schur_box_scan,
)
from cycloschur.unimodular import (
    NetworkInstance,
    RationalMatrix,
    VectorSystem,
    augment_identity,
    bipartite_construction,
    disjoint_sum,
    find_nonunimodular_witness,
    is_totally_unimodular,
    is_unimodular_system,
    maximal_circuit,
    network_matrix,
    tensor_product,
)


def report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_1_cyclotomic_baseline():
    t0 = time.time()
    flat = all(abs(c) <= 1
               for n in range(1, 105)
               for c in cyclotomic_poly(n).coeffs)
    p105 = cyclotomic_poly(105)
    exceptional = p105.coefficient(7) == -2
    cross = list(p105.coeffs) == mobius_cyclotomic(105)
    elapsed = time.time() - t0
    ok = flat and exceptional and cross and elapsed < 10
    report(1, ok, f"n<=104 flat={flat}, Phi_105[x^7]={p105.coefficient(7)}, "
                  f"oracle match={cross}, {elapsed:.1f}s")
    assert flat and exceptional and cross
    assert elapsed < 10, f"{elapsed:.1f}s exceeds the 10s bound"


def test_criterion_2_theorem_desk_scale():
    t0 = time.time()
    total = 0
    bad = []
    for n in range(2, 31):
        rep = schur_box_scan(n, 8)
        total += rep.total
        assert rep.total == box_size(euler_phi(n), 8)
        if rep.violations:
            bad.append((n, rep.first_violation))
    elapsed = time.time() - t0
    ok = not bad and elapsed < 180
    report(2, ok, f"{total} partitions over n=2..30, violations={bad}, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 180, f"{elapsed:.1f}s exceeds the 3min bound"


def test_criterion_3_counterexample_regression():
    t0 = time.time()
    value = schur_at_roots(105, (1,) * 7)
    star = condition_star(105)
    elapsed = time.time() - t0
    ok = abs(value) == 2 and not star.satisfied and elapsed < 5
    report(3, ok, f"|s_(1^7)(105)|={abs(value)}, condition(*)={star.satisfied}, "
                  f"{elapsed:.1f}s")
    assert abs(value) == 2
    assert not star.satisfied
    assert elapsed < 5, f"{elapsed:.1f}s exceeds the 5s bound"


def test_criterion_4_oracle_equivalence():
    t0 = time.time()
    checked = 0
    for n in range(2, 13):
        for lam in partitions_in_box(euler_phi(n), 5):
            assert schur_at_roots_bialternant(n, lam) == schur_at_roots(n, lam), (n, lam)
            checked += 1
    elapsed = time.time() - t0
    ok = elapsed < 120
    report(4, ok, f"{checked} routes agreed over n=2..12, {elapsed:.1f}s")
    assert elapsed < 120, f"{elapsed:.1f}s exceeds the 2min bound"


def test_criterion_5_tensor_circuits_unimodular():
    t0 = time.time()
    results = {}
    for da, db in ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3)):
        system = tensor_product(maximal_circuit(da), maximal_circuit(db))
        rep = is_unimodular_system(system)
        assert rep.mode == "exhaustive"
        results[(da, db)] = rep.verdict
    elapsed = time.time() - t0
    ok = all(v is True for v in results.values()) and elapsed < 120
    report(5, ok, f"verdicts={results}, {elapsed:.1f}s")
    assert all(v is True for v in results.values())
    assert elapsed < 120, f"{elapsed:.1f}s exceeds the 2min bound"


DISPLAYED_2_3 = (
    (1, -1, 0, 0, -1, 0),
    (1, -1, 0, 0, 0, -1),
    (1, 0, -1, 0, -1, 0),
    (1, 0, -1, 0, 0, -1),
    (1, 0, 0, -1, -1, 0),
    (1, 0, 0, -1, 0, -1),
)


def test_criterion_6_bipartite_construction():
    a23, inst23 = bipartite_construction(2, 3)
    matrix_ok = a23.entries == DISPLAYED_2_3
    transpose_ok = all(
        bipartite_construction(m, n)[0].transpose()
        == network_matrix(bipartite_construction(m, n)[1])
        for m in range(1, 5) for n in range(1, 5))
    tu = is_totally_unimodular(a23)
    tu_ok = tu.is_totally_unimodular and tu.mode == "exhaustive"
    ok = matrix_ok and transpose_ok and tu_ok
    report(6, ok, f"matrix={matrix_ok}, transpose(m,n<=4)={transpose_ok}, "
                  f"exhaustive TU={tu_ok}")
    assert matrix_ok
    assert transpose_ok
    assert tu_ok


def _seeded_tu_network(rng) -> RationalMatrix:
    nv = rng.randint(2, 5)
    vertices = tuple(f"v{i}" for i in range(nv))
    tree = []
    for i in range(1, nv):
        j = rng.randrange(i)
        tree.append((f"v{i}", f"v{j}") if rng.random() < 0.5 else (f"v{j}", f"v{i}"))
    arcs = []
    for _ in range(rng.randint(1, 4)):
        u, v = rng.sample(range(nv), 2)
        arcs.append((f"v{u}", f"v{v}"))
    return network_matrix(NetworkInstance(vertices, tuple(tree), tuple(arcs)))


def test_criterion_7_lemma_suite():
    rng = random.Random(4153)
    failures = []

    pool = [maximal_circuit(1), maximal_circuit(2), maximal_circuit(3),
            z_n_system(4), z_n_system(6),
            tensor_product(maximal_circuit(2), maximal_circuit(1))]
    for trial in range(12):
        x, y = rng.choice(pool), rng.choice(pool)
        if is_unimodular_system(disjoint_sum(x, y)).verdict is not True:
            failures.append(("disjoint_sum", trial))

    signs = maximal_circuit(1)
    sign_pool = pool + [VectorSystem(2, ((1, 0), (0, 1), (1, 2)))]
    for i, x in enumerate(sign_pool):
        before = is_unimodular_system(x).verdict
        after = is_unimodular_system(tensor_product(signs, x)).verdict
        if before != after:
            failures.append(("sign_tensor", i, before, after))

    for trial in range(10):
        a = _seeded_tu_network(rng)
        base = is_totally_unimodular(a)
        aug = is_totally_unimodular(augment_identity(a))
        if not (base.is_totally_unimodular and aug.is_totally_unimodular
                and base.mode == aug.mode == "exhaustive"):
            failures.append(("augment_identity", trial))

    ok = not failures
    report(7, ok, f"failures={failures or 'none'}")
    assert not failures


def test_criterion_8_reduction_certificates():
    t0 = time.time()
    c35 = coprime_split(3, 5)
    pp23 = prime_power_split(2, 3)
    c29 = coprime_split(2, 9)
    pp32 = prime_power_split(3, 2)
    # composed map: phi(2) = 1, so the left identity factor is trivial and the
    # composition is a plain 6x6 product carrying {1,-1} (x) three Z_3 copies
    # onto Z_18
    composed = c29.matrix @ pp32.matrix
    source = tensor_product(z_n_system(2), pp32.source)
    target = z_n_system(18)
    det = linalg.bareiss_det_int([list(r) for r in composed.entries])
    image = {tuple(sum(composed.entries[i][j] * v[j] for j in range(composed.cols))
                   for i in range(composed.rows))
             for v in source.vectors}
    composition_ok = det != 0 and image == set(target.vectors)
    elapsed = time.time() - t0
    ok = c35.ok and pp23.ok and c29.ok and pp32.ok and composition_ok and elapsed < 30
    report(8, ok, f"(3,5)={c35.ok}, (2,9)={c29.ok}, (3,2)={pp32.ok}, "
                  f"(2,3)={pp23.ok}, composition={composition_ok}, {elapsed:.1f}s")
    assert c35.ok and pp23.ok and c29.ok and pp32.ok
    assert composition_ok
    assert elapsed < 30, f"{elapsed:.1f}s exceeds the 30s bound"


def test_criterion_9_witness_search():
    system = tensor_product(tensor_product(maximal_circuit(2), maximal_circuit(4)),
                            maximal_circuit(6))
    outcomes = {}
    for seed in range(5):
        w = find_nonunimodular_witness(system, seed=seed)
        if w is not None:
            assert w.abs_det_a != w.abs_det_b
            outcomes[seed] = (str(w.abs_det_a), str(w.abs_det_b), w.moves_used)
        else:
            outcomes[seed] = None
    found = {s: o for s, o in outcomes.items() if o}
    ok = bool(found)
    report(9, ok, f"found on seeds {sorted(found)} of 0..4, outcomes={outcomes}"
           if found else
           f"no witness on any of seeds 0..4 within the default budget; "
           f"outcomes={outcomes}")
    assert found, ("the randomized search failed on all five fixed seeds within "
                   "the default budget; a witness exists in this system, so "
                   "raise the budget or revisit the walk")


def test_criterion_10_bialternant_integrality():
    rng = random.Random(20105)
    checked = 0
    for _ in range(200):
        n = rng.randint(2, 20)
        max_len = min(euler_phi(n), 5)
        length = rng.randint(0, max_len)
        lam = Partition(tuple(sorted((rng.randint(1, 5) for _ in range(length)),
                                     reverse=True)))
        value = schur_at_roots_bialternant(n, lam)
        assert isinstance(value, int)
        assert value == schur_at_roots(n, lam), (n, lam)
        checked += 1
    for _ in range(10):
        length = rng.randint(1, 4)
        lam = Partition(tuple(sorted((rng.randint(1, 4) for _ in range(length)),
                                     reverse=True)))
        value = schur_at_roots_bialternant(105, lam)
        assert isinstance(value, int)
        assert value == schur_at_roots(105, lam), lam
        checked += 1
    report(10, True, f"{checked} integer extractions, all matching the "
                     f"determinant route")
    assert checked == 210
