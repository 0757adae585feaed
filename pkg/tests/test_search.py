import pytest

from numsem import (
    BadRange,
    ConstraintViolation,
    SearchConfig,
    SpParameters,
    build,
    check_offset3,
    construct_sp,
    hilbert_function,
    is_symmetric,
    recover_sp_parameters,
    residue_admissible,
    residue_table,
    search_decreasing,
    search_results_csv,
    sp_generator_list,
    strata_tables,
)

import data


def test_residue_row_examples():
    assert residue_admissible(13, 4).admissible
    assert not residue_admissible(13, 5).admissible  # 3h lands on 2 mod 13
    assert not residue_admissible(13, 12).admissible  # h + 1 vanishes mod 13
    assert not residue_admissible(17, 1).admissible  # n_j = n_i
    with pytest.raises(BadRange):
        residue_admissible(13, 0)
    with pytest.raises(BadRange):
        residue_admissible(13, 13)


def test_residue_row_collision_detail():
    row = residue_admissible(13, 5)
    assert row.base_classes.count(2) == 2  # 2*n_i and 3*n_j collide


def test_residue_table_13():
    rows = residue_table(13)
    assert [r.h for r in rows if r.admissible] == [4, 10]


@pytest.mark.parametrize("e", [10, 11, 12])
def test_residue_table_small_moduli_all_fail(e):
    assert not [r.h for r in residue_table(e) if r.admissible]


def test_residue_table_range():
    with pytest.raises(BadRange):
        residue_table(9)


def test_sp_family_printed_lists():
    for p, (kprime, expected) in data.SP_FAMILY.items():
        params = SpParameters(p, 1, kprime, 2, 2, 3)
        assert sp_generator_list(params) == expected


def test_sp_family_members_validate():
    for p, (kprime, _) in data.SP_FAMILY.items():
        S = construct_sp(SpParameters(p, 1, kprime, 2, 2, 3))
        assert (S.e, S.v) == (13, 10)
        assert 2 in hilbert_function(S).decreasing_levels
        assert not is_symmetric(S)
        verdict = check_offset3(S)
        assert verdict.decreasing and verdict.pattern and verdict.consistent


def test_sp_parameter_constraints():
    with pytest.raises(ConstraintViolation):
        SpParameters(1, 1, 5, 2, 2, 3)  # k' beyond 4k - 2
    with pytest.raises(ConstraintViolation):
        SpParameters(1, 1, -2, 2, 2, 3)  # violates 4k' > 3k - p
    with pytest.raises(ConstraintViolation):
        SpParameters(13, 1, 0, 2, 2, 3)
    with pytest.raises(ConstraintViolation):
        SpParameters(6, 1, 0, 3, 2, 3)  # alpha must stay below gamma


def test_sp_parameter_recovery_round_trip():
    for p, (kprime, _) in data.SP_FAMILY.items():
        params = SpParameters(p, 1, kprime, 2, 2, 3)
        assert recover_sp_parameters(construct_sp(params)) == params


def test_sp_recovery_rejects_outsiders(e13):
    assert recover_sp_parameters(build([2, 3])) is None
    assert recover_sp_parameters(build(list(data.CHAIN_E17))) is None


def test_search_config_validation():
    with pytest.raises(BadRange):
        SearchConfig(e_range=(10, 12), v_offset=5, gen_bound_per_e=20)
    with pytest.raises(BadRange):
        SearchConfig(e_range=(10, 12), v_offset=3)
    cfg = SearchConfig(e_range=(10, 12), v_offset=3, gen_bound=20)
    with pytest.raises(BadRange):
        cfg.bound_for(10)  # 20 < 3 * 10


def test_search_empty_range():
    cfg = SearchConfig(e_range=(12, 10), v_offset=3, gen_bound_per_e=20)
    assert search_decreasing(cfg) == []


def test_search_small_moduli_empty():
    cfg = SearchConfig(e_range=(10, 12), v_offset=3, gen_bound_per_e=20)
    assert search_decreasing(cfg) == []


def test_search_e13_hits(sp_instances):
    cfg = SearchConfig(e_range=(13, 13), v_offset=3, gen_bound_per_e=6)
    results = search_decreasing(cfg)
    assert results
    found = {S.gens for S in results}
    # every family member whose generators fit under the bound is found
    expected_present = 0
    for S in sp_instances:
        if max(S.gens) <= 6 * 13:
            assert S.gens in found
            expected_present += 1
    assert expected_present == 9
    orbit_branches = set()
    for S in results:
        assert S.e == 13 and S.v == 10
        profile = hilbert_function(S)
        assert profile.is_decreasing
        verdict = check_offset3(S)
        assert verdict.pattern and verdict.consistent
        a, b = verdict.witnesses[0]
        assert b % 13 in ((4 * a) % 13, (10 * a) % 13)
        orbit_branches.add("4" if b % 13 == (4 * a) % 13 else "10")
        # the forced ten distinct elements of the decreasing skeleton
        tables = strata_tables(S)
        ten = {13, a, b, 3 * a - 13, 2 * a + b - 13, a + 2 * b - 13, 3 * b - 13}
        ten |= {2 * a, a + b, 2 * b}
        assert len(ten) == 10
        assert set(tables.c_sets[2]) == {2 * a, a + b, 2 * b}
        for x in ten:
            assert S.contains(x)
    assert orbit_branches == {"4", "10"}


def test_search_offset4_reproduces_known_instances():
    cfg = SearchConfig(e_range=(17, 17), v_offset=4, gen_bound=59)
    results = search_decreasing(cfg)
    found = {S.gens for S in results}
    assert data.AP24_E17_B in found
    assert data.CHAIN_E17 in found
    for S in results:
        assert S.v == S.e - 4
        assert hilbert_function(S).is_decreasing


def test_search_offset4_multi_modulus_range():
    cfg = SearchConfig(e_range=(15, 16), v_offset=4, gen_bound_per_e=3)
    for S in search_decreasing(cfg):
        assert S.v == S.e - 4
        assert hilbert_function(S).is_decreasing


def test_search_csv_shape(sp_instances):
    csv = search_results_csv(sp_instances[:1])
    lines = csv.splitlines()
    assert lines[0] == "e,v,generators,hilbert,decreasing_levels"
    assert lines[1] == "13,10,13;14;17;29;32;33;35;36;37;38,1;10;9;11;12;13,2"
    assert csv.endswith("\n")


def test_search_agrees_with_raw_enumeration():
    """Differential check: raw subset enumeration (no skeleton pruning) finds
    exactly what the pruned search finds."""
    import itertools

    from numsem.search import _candidate_is_hit

    brute = [
        tuple(sorted((10,) + combo))
        for combo in itertools.combinations(range(11, 29), 6)
        if _candidate_is_hit(10, (10,) + combo)
    ]
    cfg = SearchConfig(e_range=(10, 10), v_offset=3, gen_bound=30)
    assert sorted(brute) == sorted(S.gens for S in search_decreasing(cfg))
    assert brute == []


def test_search_worker_determinism():
    cfg1 = SearchConfig(e_range=(13, 13), v_offset=3, gen_bound_per_e=4, workers=1)
    cfg2 = SearchConfig(e_range=(13, 13), v_offset=3, gen_bound_per_e=4, workers=3)
    csv1 = search_results_csv(search_decreasing(cfg1))
    csv2 = search_results_csv(search_decreasing(cfg2))
    assert csv1 == csv2
