import math
from itertools import combinations

import pytest

from partlat.core import (CapacityError, bottom, partition_list, top)
from partlat.measures import MeasureId, delta_ih, pd_distance, raw_distance
from partlat.oracle import (SIZE_TABLE, available_sizes, bell, claims_to_json,
                            d_by_definition, ih_extrema_by_d, pair_sweep,
                            pairs_with_d, render_claims_text, stirling2,
                            subset_hamming, verify_claims)

# claims refuted by their own brute force, per ground-set size
KNOWN_REFUTED = {
    1: set(),
    2: set(),
    3: {"MODFORMS"},
    4: {"C8", "MODFORMS"},
    5: {"C8", "C10", "MODFORMS"},
    6: {"C8", "C10", "MODFORMS"},
    7: {"C8", "C10", "C11", "MODFORMS"},
}


# -- definitional distance -------------------------------------------------------


def test_d_by_definition_values(lit):
    assert d_by_definition(lit("12|34"), lit("13|24")) == 2
    p = lit("134|26|5|7")
    assert d_by_definition(p, p) == 0
    # the four-element coincidence set {3,5,6,7} bounds this pair at 3
    assert d_by_definition(lit("134|26|5|7"), lit("15|27|3|4|6")) == 3


def test_d_by_definition_capacity(lit):
    from partlat.core import from_blocks
    p = from_blocks(17, [range(1, 18)])
    with pytest.raises(CapacityError):
        d_by_definition(p, p)
    assert d_by_definition(p, p, limit=17) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_definitional_equality_matches_induce(n):
    # the bit-mask coincidence criterion is exactly induced-partition equality
    parts = partition_list(n)
    elements = list(range(1, n + 1))
    subsets = [list(c) for size in range(1, n + 1)
               for c in combinations(elements, size)]
    from partlat.core import pair_index
    for i, p in enumerate(parts):
        for q in parts[i:]:
            x = p.pair_mask ^ q.pair_mask
            for a in subsets:
                mask = 0
                for ai in range(len(a)):
                    for bi in range(ai + 1, len(a)):
                        mask |= 1 << pair_index(n, a[ai], a[bi])
                by_mask = (x & mask) == 0
                by_induce = p.induce(a).partition == q.induce(a).partition
                assert by_mask == by_induce


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_definitional_matches_matching(n):
    parts = partition_list(n)
    for i, p in enumerate(parts):
        for q in parts[i:]:
            assert d_by_definition(p, q) == pd_distance(p, q)


# -- pair streams ------------------------------------------------------------------


def test_pairs_with_d_examples(lit):
    stream = list(pairs_with_d(4, 3))
    assert stream == [(top(4), bottom(4))]
    diag = list(pairs_with_d(3, 0))
    assert len(diag) == 5 and all(p == q for p, q in diag)
    assert (lit("12|34|5|6"), lit("1|2|3|4|56")) in set(pairs_with_d(6, 3))


def test_pairs_with_d_capacity_and_range():
    with pytest.raises(CapacityError):
        next(pairs_with_d(8, 1))
    with pytest.raises(ValueError):
        next(pairs_with_d(4, 4))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_stratification_completeness(n):
    total = sum(1 for k in range(n) for _ in pairs_with_d(n, k))
    b = bell(n)
    assert total == b * (b + 1) // 2


def test_sweep_counts_complete_at_6():
    sweep = pair_sweep(6)
    b = bell(6)
    assert sum(e.count for e in sweep.by_k.values()) == b * (b + 1) // 2
    assert set(sweep.by_k) == set(range(6))


# -- censuses -------------------------------------------------------------------------


def test_available_sizes_table():
    for n, expected in SIZE_TABLE.items():
        assert available_sizes(n) == expected


def test_available_sizes_embed_upward():
    for n in range(1, 8):
        assert set(available_sizes(n)) <= set(available_sizes(n + 1))


def test_stirling_values():
    assert stirling2(4, 2) == 7
    assert stirling2(9, 9) == 1
    assert stirling2(9, 1) == 1
    assert stirling2(7, 3) == 301
    with pytest.raises(ValueError):
        stirling2(4, 0)
    with pytest.raises(ValueError):
        stirling2(4, 5)


def test_bell_values():
    assert [bell(n) for n in range(1, 9)] == [1, 2, 5, 15, 52, 203, 877, 4140]
    with pytest.raises(ValueError):
        bell(0)


def test_subset_hamming():
    assert subset_hamming({1, 2}, {1, 3}, 4) == 2
    assert subset_hamming({2, 4}, {2, 4}, 4) == 0
    assert subset_hamming({1, 2, 3}, set(), 3) == 3
    with pytest.raises(ValueError):
        subset_hamming({1, 9}, {1}, 4)


# -- sweep extrema ----------------------------------------------------------------------


def test_extrema_reference_values():
    assert ih_extrema_by_d(6)[3] == (3, 12)
    assert ih_extrema_by_d(6)[5] == (15, 15)
    assert ih_extrema_by_d(7)[5] == (9, 20)
    assert ih_extrema_by_d(7)[0] == (0, 0)


def test_sweep_capacity():
    with pytest.raises(CapacityError):
        pair_sweep(8)


# -- claim verification --------------------------------------------------------------


@pytest.mark.parametrize("n", sorted(KNOWN_REFUTED))
def test_verify_claims_refutation_pattern(n):
    reports = verify_claims(n)
    assert {r.claim_id for r in reports if not r.verified} == KNOWN_REFUTED[n]
    for r in reports:
        if not r.verified and r.claim_id != "C11":
            assert r.counterexample is not None


def test_verify_claims_capacity():
    with pytest.raises(CapacityError):
        verify_claims(8)
    with pytest.raises(CapacityError):
        verify_claims(0)


def test_refuted_counterexamples_recheck(lit):
    reports = {r.claim_id: r for r in verify_claims(6)}
    # C10: the pair is at the stated distance but below the stated minimum
    c10 = reports["C10"]
    p, q = (lit(s) for s in c10.counterexample)
    k = d_by_definition(p, q)
    assert 1 <= k <= 2 * (6 - k)
    assert delta_ih(p, q) == ih_extrema_by_d(6)[k][0] < k + 3
    assert delta_ih(p, q) > k
    # C8: no maximum coincidence set carries the meet's size
    c8 = reports["C8"]
    p, q = (lit(s) for s in c8.counterexample)
    meet_size = p.meet(q).size
    x = p.pair_mask ^ q.pair_mask
    from partlat.oracle import _max_coincidence, _pair_mask_table
    pm = _pair_mask_table(6)
    _, hits = _max_coincidence(6, x)
    assert all((p.pair_mask & pm[a]).bit_count() != meet_size for a in hits)


def test_verify_sampled_at_7_records_method():
    reports = verify_claims(7, seed=11, sample_pairs=400)
    assert {r.claim_id for r in reports if not r.verified} == KNOWN_REFUTED[7]
    methods = {r.claim_id: r.method for r in reports}
    assert methods["C1"] == "sampled(seed=11,pairs=400)"
    assert methods["C12"] == "exhaustive"  # bound sweep stays exhaustive


def test_claim_c3_detail_names_smallest_failures():
    c3 = next(r for r in verify_claims(3) if r.claim_id == "C3")
    assert c3.verified
    assert "pd fails first at n=3" in c3.detail
    assert "sd fails first at n=4" in c3.detail


def test_report_rendering_and_json():
    reports = verify_claims(4)
    text = render_claims_text(reports)
    assert "C7" in text and "verified" in text
    assert "REFUTED" in text  # C8 at n=4
    data = claims_to_json(reports)
    assert len(data) == 15
    by_id = {d["claim"]: d for d in data}
    assert by_id["C8"]["verified"] is False
    assert by_id["C8"]["counterexample"] is not None
    assert by_id["C1"]["verified"] is True


def test_constrained_bound_report_rows():
    from partlat.oracle import constrained_bound_report
    rows = constrained_bound_report(5)
    assert all({"base_sizes", "k", "oracle_min", "oracle_max", "greedy_min"}
               <= set(r) for r in rows)
    # feasibility findings: strata where the stated maximum overshoots
    over = [(r["base_sizes"], r["k"]) for r in rows
            if "formula_max" in r and r["formula_max"] > r["oracle_max"]]
    print(f"constrained max overshoot strata at n=5: {over}")
    assert (((1, 1), 3)) in over
