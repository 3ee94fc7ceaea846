import pytest

from latcount import formulas, oracle
from latcount.canon import canonical_certificate, decode_certificate
from latcount.oracle import (
    SizeLimitExceeded,
    all_lattices,
    block_census,
    census,
    enumerate_all_lattices,
    enumerate_by_reducible,
    reducible_class,
    three_block_fibers,
    verification_ok,
    verify,
)
from latcount.poset import as_lattice, classify_elements, dual, is_dismantlable
from latcount.reduction import FbbClass, classify_fbb

FULL_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}


class TestFullSearch:
    def test_counts_up_to_seven(self):
        for n in range(1, 8):
            assert len(enumerate_all_lattices(n)) == FULL_COUNTS[n]

    def test_members_are_valid_lattices(self):
        for cert, lat in all_lattices(6).items():
            assert canonical_certificate(lat.digraph) == cert
            assert as_lattice(lat.digraph).n == 6

    def test_size_guard(self):
        with pytest.raises(SizeLimitExceeded):
            enumerate_all_lattices(9)


class TestClassSearch:
    def test_spot_counts(self):
        assert len(enumerate_by_reducible(4, 2)) == 1
        assert len(enumerate_by_reducible(6, 3)) == 2
        assert len(enumerate_by_reducible(5, 3)) == 0

    def test_members_have_claimed_reducible_count(self):
        for n, r in [(7, 2), (7, 3), (8, 3)]:
            for lat in reducible_class(n, r).values():
                assert lat.n == n
                assert len(classify_elements(lat).red) == r

    def test_matches_full_search_fibers(self):
        for n in range(4, 8):
            full = census(n)
            assert full.classes.get(2, frozenset()) == enumerate_by_reducible(n, 2)
            assert full.classes.get(3, frozenset()) == enumerate_by_reducible(n, 3)

    def test_duality_closure_and_fiber_swap(self):
        members = reducible_class(7, 3)
        certs = set(members)
        swap = {FbbClass.F1: FbbClass.F2, FbbClass.F2: FbbClass.F1}
        for cert, lat in members.items():
            mirrored = as_lattice(dual(lat.digraph))
            mirror_cert = canonical_certificate(mirrored.digraph)
            assert mirror_cert in certs
            tag = classify_fbb(lat)
            assert classify_fbb(mirrored) is swap.get(tag, tag)

    def test_worker_count_does_not_change_output(self):
        solo = enumerate_by_reducible(8, 3, workers=1)
        duo = enumerate_by_reducible(8, 3, workers=2)
        assert solo == duo

    def test_size_guard(self):
        with pytest.raises(SizeLimitExceeded):
            enumerate_by_reducible(13, 2)
        with pytest.raises(ValueError):
            enumerate_by_reducible(6, 4)


class TestCensus:
    def test_n5(self):
        c = census(5)
        assert {r: len(v) for r, v in c.classes.items()} == {0: 1, 2: 4}
        assert c.total() == 5

    def test_n6(self):
        c = census(6)
        assert {r: len(v) for r, v in c.classes.items()} == {0: 1, 2: 11, 3: 2, 4: 1}
        assert {t: len(v) for t, v in c.fbb_fibers.items()} == {
            FbbClass.F1: 1,
            FbbClass.F2: 1,
        }

    def test_n7_fibers(self):
        c = census(7)
        fibers = {t: len(v) for t, v in c.fbb_fibers.items()}
        assert fibers == {FbbClass.F1: 7, FbbClass.F2: 7, FbbClass.F3: 1}
        assert sum(fibers.values()) == len(c.classes[3]) == 15

    def test_classes_are_disjoint(self):
        c = census(6)
        seen = set()
        for certs in c.classes.values():
            assert not certs & seen
            seen |= certs

    def test_no_single_reducible_class(self):
        for n in range(1, 8):
            assert 1 not in census(n).classes


class TestBlockCensus:
    def test_two_reducible_strata(self):
        for m in range(4, 9):
            strata = block_census(m, 2)
            for k in range(0, m - 3):
                assert len(strata.get(k, {})) == formulas.two_reducible_blocks(m, k)

    def test_blocks_have_reducible_extremes(self):
        for k, members in block_census(7, 3).items():
            for lat in members.values():
                cls = classify_elements(lat)
                assert lat.bottom in cls.red and lat.top in cls.red
                assert len(lat.covers) == 7 + k

    def test_three_reducible_fibers(self):
        fibers = three_block_fibers(8)
        assert fibers[(FbbClass.F1, 1)] == formulas.b1_blocks(8, 1)
        assert fibers[(FbbClass.F4, 2)] == formulas.b4_blocks(8, 2) == 1


class TestVerify:
    def test_small_run_agrees(self):
        reports = verify(6)
        assert verification_ok(reports)
        assert len(reports) == 12  # one formula + one oracle report per size
        by_source = {(r.n, r.source) for r in reports}
        assert (6, "formula") in by_source and (6, "oracle") in by_source

    def test_report_cells(self):
        reports = verify(6)
        formula6 = next(r for r in reports if r.n == 6 and r.source == "formula")
        oracle6 = next(r for r in reports if r.n == 6 and r.source == "oracle")
        assert formula6.per_class["two_reducible"] == 11
        assert oracle6.per_class["three_reducible"] == 2
        assert oracle6.per_class["total"] == 15
        assert formula6.block_strata["two_reducible_blocks[k=0]"] == 2
        assert formula6.agreement["search_three_reducible"]

    def test_oracle_class_cells_sum_to_total(self):
        for report in verify(7):
            if report.source == "oracle" and "total" in report.per_class:
                cells = ("chains", "two_reducible", "three_reducible", "other")
                assert all(report.per_class[c] >= 0 for c in cells)
                assert sum(report.per_class[c] for c in cells) == report.per_class[
                    "total"
                ]

    def test_injected_fault_is_flagged_with_witness(self, monkeypatch):
        healthy = formulas.two_reducible_lattices

        def wrong(n, form="block_first"):
            value = healthy(n, form)
            return value + 1 if n == 5 else value

        monkeypatch.setattr(formulas, "two_reducible_lattices", wrong)
        reports = verify(5)
        assert not verification_ok(reports)
        bad = next(r for r in reports if r.n == 5 and r.source == "formula")
        assert not bad.agreement["two_reducible"]
        assert bad.witnesses["two_reducible"]  # a cover list is attached

    def test_size_guard(self):
        with pytest.raises(SizeLimitExceeded):
            verify(42)


def test_certificates_decode_to_members():
    for cert in enumerate_by_reducible(6, 3):
        lat = as_lattice(decode_certificate(cert))
        assert is_dismantlable(lat)
        assert len(classify_elements(lat).red) == 3
