import pytest

from topolab import families as fam
from topolab import polyprops as pp
from topolab.errors import ParamOutOfRange, UnknownFamily
from topolab.topology import PartitionType, generate_from_subbasis, open_polynomial


def test_catalog_size_and_keys():
    keys = fam.catalog_keys()
    assert len(keys) >= 30
    assert len(set(keys)) == len(keys)
    assert {"counterexample", "partition", "tau1-P1", "nmi-1", "nm1-singletons"} <= set(keys)


def test_param_ranges():
    assert fam.get_family("tau1-P1").min_n == 3
    assert fam.get_family("tau1-P1").param_ranges(7) == {}
    assert fam.get_family("nmi-1").param_ranges(9) == {"i": (5, 7)}
    assert fam.get_family("nm2-j").min_n == 6


def test_unknown_family_and_bad_params():
    with pytest.raises(UnknownFamily):
        fam.instantiate("no-such", 5)
    with pytest.raises(ParamOutOfRange):
        fam.instantiate("nm1-singletons", 5, l=5)
    with pytest.raises(ParamOutOfRange):
        fam.instantiate("nm1-singletons", 5)
    with pytest.raises(ParamOutOfRange):
        fam.instantiate("nm2-j", 5)
    with pytest.raises(ParamOutOfRange):
        fam.instantiate("partition", 6, alpha=(1, 2))


def test_nm1_singletons_claim():
    inst = fam.instantiate("nm1-singletons", 5, l=1)
    # (x+1)^4 + x^2 (1+x)^3
    assert inst.claimed_poly == (1, 4, 7, 7, 4, 1)
    assert fam.check(inst).clean


def test_counterexample_n5():
    inst = fam.instantiate("counterexample", 5)
    r = fam.check(inst)
    assert r.computed == (1, 3, 3, 1, 2, 1)
    assert r.computed_card == 11 == 2 ** 3 + 3
    assert not r.unimodal


def test_counterexample_n6():
    r = fam.check(fam.instantiate("counterexample", 6))
    assert r.computed == (1, 4, 6, 4, 1, 2, 1)
    assert not r.unimodal


def test_partition_instance():
    inst = fam.instantiate("partition", 5, alpha=PartitionType((1, 2)))
    assert inst.claimed_poly == (1, 1, 2, 2, 1, 1)
    assert fam.check(inst).clean
    assert fam.instantiate("partition", alpha=(0, 1, 1)).claimed_poly == (1, 0, 1, 1, 0, 1)


def test_nm1_partition_log_concave():
    r = fam.check(fam.instantiate("nm1-partition", 5))
    assert r.poly_match and r.log_concave


def test_tau1_p3_reports_both_displays():
    for n in range(5, 9):
        r = fam.check(fam.instantiate("tau1-P3", n))
        assert set(r.variant_matches) == {"statement", "proof"}
        assert r.variant_matches["statement"] is True
        assert r.variant_matches["proof"] is False


def test_report_json_keys():
    r = fam.check(fam.instantiate("counterexample", 5))
    j = r.to_json()
    for key in ("family", "n", "params", "claimed", "computed", "claimed_card", "computed_card",
                "card_match", "poly_match", "diff_positions", "unimodal", "log_concave"):
        assert key in j
    assert j["computed"] == ["1", "3", "3", "1", "2", "1"]


# -- sweep invariants ----------------------------------------------------------


@pytest.fixture(scope="module")
def reports():
    return fam.sweep(4, 9)


def test_every_entry_instantiates(reports):
    covered = {r.family for r in reports}
    assert covered == {f.key for f in fam.catalog()}


def test_constructions_are_genuine_topologies(reports):
    for f in fam.catalog():
        for n in range(max(4, f.min_n), 8):
            for params in f.param_grid(n):
                t = fam.instantiate(f.key, n, **params).topology
                assert t.n == n
                assert generate_from_subbasis(n, t.opens) == t


def test_report_self_consistency(reports):
    for r in reports:
        assert sum(r.computed) == r.computed_card
        assert r.poly_match == (r.claimed == r.computed)
        assert r.unimodal == pp.is_unimodal(r.computed)


def test_known_discrepancies_are_exactly_these(reports):
    found = {}
    for r in reports:
        for kind, ok in (("card", r.card_match), ("poly", r.poly_match), ("minimal", r.minimal_match)):
            if not ok:
                found.setdefault(r.family, set()).add(kind)
    assert found == {
        "nm1-du-chain": {"minimal"},
        "nm2-f": {"card"},
        "nm3-six-6": {"poly"},
    }


def test_nm2_f_cardinality_follows_its_polynomial():
    for n in range(5, 10):
        for params in fam.get_family("nm2-f").param_grid(n):
            j = params["j"]
            r = fam.check(fam.instantiate("nm2-f", n, **params))
            assert r.computed_card == 6 * 2 ** (n - 4) + 3 * 2 ** (n - 3 - j)
            assert r.poly_match


def test_du_chain_log_concavity_by_n():
    verdicts = {n: fam.check(fam.instantiate("nm1-du-chain", n)).log_concave for n in range(4, 10)}
    assert verdicts == {4: False, 5: False, 6: True, 7: True, 8: True, 9: True}


def test_partition_family_all_types():
    for n in range(1, 8):
        for parts in pp.integer_partitions(n):
            alpha = PartitionType.from_block_sizes(parts)
            r = fam.check(fam.instantiate("partition", alpha=alpha))
            assert r.clean
            assert open_polynomial(fam.instantiate("partition", alpha=alpha).topology) == r.claimed
