import itertools

from hypothesis import given, settings, strategies as st

from latcount.canon import (
    canonical_certificate,
    canonical_digraph,
    canonical_labeling,
    decode_certificate,
)
from latcount.poset import as_lattice, build_poset, chain, dual, relabel
from latcount.reduction import f1, f2, f3, f4, m2


def test_all_diamond_relabelings_agree():
    base = canonical_certificate(m2().digraph)
    for perm in itertools.permutations(range(4)):
        assert canonical_certificate(relabel(m2().digraph, perm)) == base


def test_f1_f2_distinct():
    assert canonical_certificate(f1().digraph) != canonical_certificate(f2().digraph)


def test_f2_is_dual_of_f1():
    assert canonical_certificate(dual(f1().digraph)) == canonical_certificate(
        f2().digraph
    )


def test_same_size_different_shape():
    five = chain(5)
    bumped = build_poset(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])
    assert canonical_certificate(five.digraph) != canonical_certificate(bumped)


@settings(deadline=None, max_examples=60)
@given(st.data())
def test_random_relabeling_invariance(data):
    lat = data.draw(
        st.sampled_from([chain(6).digraph, m2().digraph, f1().digraph,
                         f3().digraph, f4().digraph])
    )
    perm = data.draw(st.permutations(range(lat.n)))
    assert canonical_certificate(relabel(lat, perm)) == canonical_certificate(lat)


def test_certificate_decodes_to_isomorphic_digraph():
    for lat in (chain(4), m2(), f3(), f4()):
        cert = canonical_certificate(lat.digraph)
        rebuilt = decode_certificate(cert)
        assert canonical_certificate(rebuilt) == cert


def test_canonical_labeling_is_permutation():
    perm = canonical_labeling(f4().digraph)
    assert sorted(perm) == list(range(8))


def test_canonical_form_is_linear_extension():
    for lat in (m2(), f1(), f2(), f3(), f4()):
        canon = canonical_digraph(lat.digraph)
        assert all(a < b for a, b in canon.covers)
        as_lattice(canon)  # stays a valid lattice
