"""Root systems Z_n, the two split certificates, and the theorem verifier.

Frozen values fixed in advance: Z_2 = {(1),(-1)}, Z_3 = {(1,0),(0,1),(-1,-1)},
Z_4 = {(1,0),(0,1),(-1,0),(0,-1)}; the coprime (2,3) matrix is
[[1,-1],[0,1]]; prime_power_split(2,3) is the 4x4 identity onto Z_8 and
(3,2) hits the exponents 0,3,1,4,2,5 in column order.
"""

import doctest
from math import gcd

import pytest

import cycloschur.reduction as reduction
from cycloschur.cyclotomic import CycloElement, euler_phi
from cycloschur.reduction import (
    condition_star,
    coprime_split,
    factor_shape,
    omega_n_system,
    prime_power_split,
    verify_theorem,
    z_n_system,
)
from cycloschur.unimodular import (
    is_maximal_circuit,
    is_unimodular_system,
    maximal_circuit,
    tensor_product,
)


def test_module_doctests():
    failures, _ = doctest.testmod(reduction)
    assert failures == 0


def test_condition_star_frozen_cases():
    r = condition_star(104)
    assert r.satisfied and r.odd_prime_factors == (13,)
    r = condition_star(105)
    assert not r.satisfied and r.odd_prime_factors == (3, 5, 7)
    assert condition_star(1).satisfied
    assert condition_star(1).odd_prime_factors == ()
    assert condition_star(2 ** 10).satisfied
    assert bool(condition_star(15)) is True
    with pytest.raises(ValueError):
        condition_star(0)


def test_factor_shape():
    s = factor_shape(360)
    assert (s.two_exponent, s.odd_parts) == (3, ((3, 2), (5, 1)))
    assert factor_shape(1) == reduction.FactorShape(1, 0, ())
    assert factor_shape(13).odd_parts == ((13, 1),)
    with pytest.raises(ValueError):
        factor_shape(105)
    with pytest.raises(ValueError):
        reduction.FactorShape(12, 1, ((3, 1),))    # 2 * 3 != 12


def test_z_n_frozen_systems():
    assert z_n_system(2).vectors == ((1,), (-1,))
    assert z_n_system(3).vectors == ((1, 0), (0, 1), (-1, -1))
    assert z_n_system(4).vectors == ((1, 0), (0, 1), (-1, 0), (0, -1))
    assert z_n_system(3).vectors == maximal_circuit(2).vectors
    with pytest.raises(ValueError):
        z_n_system(1)


def test_z_n_matches_field_powers():
    for n in (5, 8, 12, 20):
        sys_ = z_n_system(n)
        assert len(sys_) == n
        for k, vec in enumerate(sys_.vectors):
            coords = CycloElement.zeta_power(n, k).coeffs
            assert vec == tuple(int(c) for c in coords)


def test_omega_alias():
    for n in (2, 3, 6, 12):
        assert omega_n_system(n).vectors == z_n_system(n).vectors


def test_z_n_unimodular_exhaustively_through_20():
    for n in range(2, 21):
        rep = is_unimodular_system(z_n_system(n))
        assert rep.mode == "exhaustive"
        assert rep.verdict is True, n
        assert rep.common_abs_det >= 1


def test_z_p_is_a_maximal_circuit_for_odd_primes():
    for p in (3, 5, 7, 11, 13):
        assert is_maximal_circuit(z_n_system(p)), p
    assert not is_maximal_circuit(z_n_system(4))


def test_coprime_split_frozen_2_3():
    cert = coprime_split(2, 3)
    assert cert.matrix.entries == ((1, -1), (0, 1))
    assert cert.ok


def test_coprime_split_all_desk_scale_instances():
    pairs = [(a, b) for a in range(2, 19) for b in range(a + 1, 19)
             if a * b <= 36 and gcd(a, b) == 1]
    assert (3, 5) in pairs and (2, 9) in pairs
    for a, b in pairs:
        cert = coprime_split(a, b)
        assert cert.matrix.rows == euler_phi(a * b)
        assert cert.invertible and cert.image_matches, (a, b)


def test_coprime_split_rejections():
    with pytest.raises(ValueError):
        coprime_split(3, 3)
    with pytest.raises(ValueError):
        coprime_split(2, 4)
    with pytest.raises(ValueError):
        coprime_split(1, 5)


def test_prime_power_split_frozen_cases():
    ident = prime_power_split(3, 1)
    assert ident.matrix.entries == ((1, 0), (0, 1))
    assert ident.ok
    two_cubed = prime_power_split(2, 3)
    assert two_cubed.matrix.entries == tuple(
        tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    assert two_cubed.ok
    # (3,2): column (j, t) carries zeta_9^(j + 3t); exponent order 0,3,1,4,2,5
    cert = prime_power_split(3, 2)
    assert cert.ok
    for col, e in enumerate((0, 3, 1, 4, 2, 5)):
        expect = tuple(int(c) for c in CycloElement.zeta_power(9, e).coeffs)
        got = tuple(cert.matrix.entries[r][col] for r in range(6))
        assert got == expect, col


def test_prime_power_split_all_desk_scale_instances():
    cases = [(p, l) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23) for l in (1, 2, 3, 4)
             if p ** l <= 27]
    for p, l in cases:
        cert = prime_power_split(p, l)
        assert cert.invertible and cert.image_matches, (p, l)
        assert len(cert.source) == p ** (l - 1) * p
        assert len(cert.target) == p ** l


def test_prime_power_split_rejections():
    with pytest.raises(ValueError):
        prime_power_split(4, 2)
    with pytest.raises(ValueError):
        prime_power_split(3, 0)


def test_sign_extension_coherence():
    # {1,-1} (x) Z_p must land exactly on Z_2p under the coprime certificate,
    # and the unimodularity verdict must survive the trip
    for p in (3, 5, 7):
        cert = coprime_split(2, p)
        source = tensor_product(z_n_system(2), z_n_system(p))
        assert cert.source.vectors == source.vectors
        assert cert.image_matches
        assert is_unimodular_system(source).verdict \
            == is_unimodular_system(z_n_system(2 * p)).verdict is True


def test_determinant_ratio_bridge():
    # alternant ratios over a small exponent box take at most the three
    # values {a, 0, -a} with a the common basis determinant size (here 1)
    from fractions import Fraction

    from cycloschur.cyclotomic import cyclo_div, cyclo_is_rational_integer
    from cycloschur.symfunc import alternant_at_roots, partitions_in_box, schur_at_roots

    for n in (3, 4, 6, 8, 12):
        d = euler_phi(n)
        delta = tuple(range(d - 1, -1, -1))
        a_delta = alternant_at_roots(n, delta)
        values = set()
        for lam in partitions_in_box(d, 2):
            padded = list(lam.parts) + [0] * (d - len(lam))
            mu = tuple(padded[i] + delta[i] for i in range(d))
            ratio = cyclo_is_rational_integer(cyclo_div(alternant_at_roots(n, mu), a_delta))
            assert ratio == schur_at_roots(n, lam)
            values.add(ratio)
        if d > 1:
            # repeated exponents collapse the alternant to zero
            repeated = alternant_at_roots(n, (0,) * d)
            values.add(cyclo_is_rational_integer(cyclo_div(repeated, a_delta)))
        common = is_unimodular_system(z_n_system(n)).common_abs_det
        assert common == Fraction(1)
        assert {abs(v) for v in values} <= {0, 1}


def test_verify_theorem_desk_cases():
    r = verify_theorem(15, 6)
    assert r.star.satisfied
    assert r.direct_pass and r.direct_counterexample is None
    assert r.structural.verdict is True and r.structural.mode == "exhaustive"
    assert r.consistent

    r = verify_theorem(2, 5)
    assert r.direct_pass and r.structural.verdict is True and r.consistent


def test_verify_theorem_flags_105():
    r = verify_theorem(105, 7)
    assert not r.star.satisfied
    assert not r.direct_pass
    lam, value = r.direct_counterexample
    assert lam.parts == (1,) * 7 and value == 2
    assert r.direct_confirmed is True
    assert r.consistent        # the one-directional implication is not refuted
    d = r.to_json_dict()
    assert d["star"] is False
    assert d["direct"]["counterexample"]["partition"] == [1] * 7
    assert d["direct"]["counterexample"]["value"] == 2


def test_verify_theorem_reports_budget_fallback():
    r = verify_theorem(29, 2, structural_budget=10, sample_trials=8, seed=1)
    assert r.structural.mode == "sampled"
    assert r.structural.verdict in (None, True)    # sampling cannot prove; never False here
    assert r.direct_pass
    d = r.to_json_dict()
    assert d["structural"]["mode"] == "sampled"


def test_verify_theorem_json_shape():
    d = verify_theorem(6, 3).to_json_dict()
    assert set(d) >= {"n", "star", "direct", "structural", "consistent"}
    assert set(d["direct"]) == {"pass", "counterexample", "partitions_checked"}
    assert set(d["structural"]) >= {"pass", "mode", "a"}
    assert d["structural"]["a"] == "1"
