"""Independent brute-force enumeration of lattices, and the verification
driver comparing every closed-form count against it.

Two deliberately separate generation paths:

* a breadth-first extension search that grows bounded-below posets one
  element at a time (each new element brings its full down-set) and keeps a
  join-consistency invariant, harvesting every unlabeled lattice on up to 8
  elements, and
* a constructive path that realizes adjunct-of-chains recipes for the classes
  with exactly 2 or 3 reducible elements, which stays feasible past the full
  search limit.

Where the paths overlap they must produce identical certificate sets; the
verify driver checks that, plus every formula cell, and reports witnesses on
any disagreement.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from . import formulas
from .adjunct import AdjunctPair, AdjunctRep, direct_sum, realize
from .canon import Certificate, certificate_from_key, _canonical
from .partitions import enumerate_partitions
from .poset import (
    CoverDigraph,
    Lattice,
    LatticeError,
    as_lattice,
    build_poset,
    classify_elements,
)
from .reduction import FbbClass, classify_fbb

FULL_SEARCH_LIMIT = 8
CLASS_SEARCH_LIMIT = 12


class SizeLimitExceeded(LatticeError):
    pass


# ---------------------------------------------------------------------------
# Path one: exhaustive extension search.
#
# A state is (downs, ups, joins):
#   downs[i]  strict down-set of element i as a bitmask (insertion order is a
#             linear extension, so down-sets only reference earlier elements);
#   ups[i]    strict up-set mask, maintained incrementally;
#   joins     flat k*k tuple; joins[x*k + y] is the least upper bound of the
#             incomparable pair (x, y) if one exists yet, else -1.
#
# Invariant: every pair with a common upper bound has a unique minimal one.
# New elements arrive maximal, so a pair that once has two minimal upper
# bounds can never be repaired; pruning on the invariant loses nothing.
# ---------------------------------------------------------------------------

_LEVELS: dict[int, dict[tuple[int, ...], tuple]] = {
    1: {(1, 0): ((0,), (0,), (-1,))}
}


def _level(n: int) -> dict[tuple[int, ...], tuple]:
    if n > FULL_SEARCH_LIMIT:
        raise SizeLimitExceeded(
            f"full lattice search capped at {FULL_SEARCH_LIMIT} elements"
        )
    top = max(_LEVELS)
    while top < n:
        nxt: dict[tuple[int, ...], tuple] = {}
        for downs, ups, joins in _LEVELS[top].values():
            _expand(downs, ups, joins, nxt)
        top += 1
        _LEVELS[top] = nxt
    return _LEVELS[n]


def _expand(downs, ups, joins, out: dict) -> None:
    k = len(downs)
    for d_mask in range(1, 1 << k, 2):  # always contains the bottom, bit 0
        bits = []
        m = d_mask
        closed = True
        while m:
            low = m & -m
            j = low.bit_length() - 1
            if downs[j] & ~d_mask:
                closed = False
                break
            bits.append(j)
            m ^= low
        if not closed:
            continue
        # joins of pairs below the new element must come along
        ok = True
        for ix, x in enumerate(bits):
            for y in bits[ix + 1 :]:
                if downs[y] >> x & 1:
                    continue
                w = joins[x * k + y]
                if w >= 0 and not d_mask >> w & 1:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        # every old element must get a unique meet with the new one
        for x in range(k):
            if d_mask >> x & 1:
                continue
            common = (downs[x] | 1 << x) & d_mask
            count = 0
            mm = common
            while mm:
                low = mm & -mm
                j = low.bit_length() - 1
                if ups[j] & common == 0:
                    count += 1
                    if count > 1:
                        break
                mm ^= low
            if count != 1:
                ok = False
                break
        if not ok:
            continue
        new_bit = 1 << k
        nd = downs + (d_mask,)
        nu = tuple(
            ups[j] | (new_bit if d_mask >> j & 1 else 0) for j in range(k)
        ) + (0,)
        nj = [-1] * ((k + 1) * (k + 1))
        for x in range(k):
            row = x * k
            nrow = x * (k + 1)
            for y in range(k):
                nj[nrow + y] = joins[row + y]
        for ix, x in enumerate(bits):
            for y in bits[ix + 1 :]:
                if downs[y] >> x & 1:
                    continue
                if nj[x * (k + 1) + y] < 0:
                    nj[x * (k + 1) + y] = k
                    nj[y * (k + 1) + x] = k
        key = _canon_key_of_state(nd, nu)
        if key not in out:
            out[key] = (nd, nu, tuple(nj))


def _canon_key_of_state(downs, ups) -> tuple[int, ...]:
    n = len(downs)
    upadj = [0] * n
    for i in range(n):
        di = downs[i]
        m = di
        while m:
            low = m & -m
            j = low.bit_length() - 1
            if ups[j] & di == 0:  # j is maximal below i: a lower cover
                upadj[j] |= 1 << i
            m ^= low
    rows, _ = _canonical(n, tuple(upadj))
    return (n, *rows)


def _state_covers(downs, ups) -> list[tuple[int, int]]:
    covers = []
    for i in range(len(downs)):
        di = downs[i]
        m = di
        while m:
            low = m & -m
            j = low.bit_length() - 1
            if ups[j] & di == 0:
                covers.append((j, i))
            m ^= low
    return covers


def _lattice_states(n: int) -> list[tuple[tuple[int, ...], tuple]]:
    """(certificate key, state) for every n-element state with a unique top."""
    out = []
    for key, state in _level(n).items():
        ups = state[1]
        if sum(1 for u in ups if u == 0) == 1:
            out.append((key, state))
    out.sort(key=lambda item: item[0])
    return out


def enumerate_all_lattices(n: int) -> frozenset[Certificate]:
    """Certificates of all unlabeled lattices on ``n`` elements (n <= 8)."""
    return frozenset(
        certificate_from_key(key) for key, _ in _lattice_states(n)
    )


def all_lattices(n: int) -> dict[Certificate, Lattice]:
    """The full census with validated Lattice values (n <= 8)."""
    out: dict[Certificate, Lattice] = {}
    for key, (downs, ups, _) in _lattice_states(n):
        lat = as_lattice(build_poset(n, _state_covers(downs, ups)))
        out[certificate_from_key(key)] = lat
    return out


# ---------------------------------------------------------------------------
# Path two: constructive generation from adjunct-of-chains recipes.
# ---------------------------------------------------------------------------


def _two_reducible_block_reps(m: int):
    """Adjunct recipes for blocks on m elements with exactly 2 reducibles.

    One spine from bottom to top plus k + 1 parallel chains at the
    bottom/top pair; chain sizes sweep the partitions of the m - 2
    non-extreme elements.
    """
    for k in range(0, m - 3):
        for parts in enumerate_partitions(m - 2, k + 2):
            spine = parts[0] + 2
            pair = AdjunctPair(0, spine - 1)
            yield AdjunctRep(
                chains=(spine, *parts[1:]), pairs=(pair,) * (k + 1)
            )


def _three_reducible_block_reps(m: int):
    """Adjunct recipes for blocks on m elements with exactly 3 reducibles.

    The reducibles sit on a spine bottom < mid < top.  A recipe is three
    bundles of parallel chains: ``low`` between bottom and mid, ``high``
    between mid and top, ``outer`` from bottom to top avoiding mid.  A bundle
    of one chain may be a bare cover (size 0); a bundle with parallel routes
    needs every route non-empty.  Four shapes arise: mid meet-reducible only,
    join-reducible only, both without outer chains, and both with them.
    """
    budget = m - 3
    for low_total in range(0, budget + 1):
        for high_total in range(0, budget - low_total + 1):
            outer_total = budget - low_total - high_total
            for low in _bundles(low_total):
                for high in _bundles(high_total):
                    for outer in _outer_bundles(outer_total):
                        # two of the three "parallel routes here" flags must
                        # hold, else mid or an extreme stays irreducible
                        if (len(low) > 1) + (len(high) > 1) + bool(outer) < 2:
                            continue
                        yield _bundle_rep(low, high, outer)


def _bundles(total: int):
    """Chain bundles between consecutive reducibles: sizes of the routes.

    A single route may be empty (a bare cover); two or more parallel routes
    must each carry at least one element.
    """
    yield (total,)
    for width in range(2, total + 1):
        yield from enumerate_partitions(total, width)


def _outer_bundles(total: int):
    """Bundles of bottom-to-top chains (possibly none)."""
    if total == 0:
        yield ()
        return
    for width in range(1, total + 1):
        yield from enumerate_partitions(total, width)


def _bundle_rep(low, high, outer) -> AdjunctRep:
    low_spine, low_rest = low[0], low[1:]
    high_spine, high_rest = high[0], high[1:]
    bottom = 0
    mid = low_spine + 1
    top = low_spine + high_spine + 2
    chains = [top + 1]
    pairs = []
    for size in low_rest:
        chains.append(size)
        pairs.append(AdjunctPair(bottom, mid))
    for size in high_rest:
        chains.append(size)
        pairs.append(AdjunctPair(mid, top))
    for size in outer:
        chains.append(size)
        pairs.append(AdjunctPair(bottom, top))
    return AdjunctRep(tuple(chains), tuple(pairs))


def _padded_members(n: int, r: int) -> dict[Certificate, Lattice]:
    """All n-element lattices of the r-reducible class from one padding slice
    per j, merged."""
    out: dict[Certificate, Lattice] = {}
    for j in range(0, n):
        for cert, lat in _padding_slice((n, r, j)):
            out.setdefault(cert, lat)
    return out


def _padding_slice(args: tuple[int, int, int]) -> list[tuple[Certificate, Lattice]]:
    """Members whose maximal block has n - j elements; one worker unit."""
    n, r, j = args
    m = n - j
    reps = {2: _two_reducible_block_reps, 3: _three_reducible_block_reps}[r]
    if m < {2: 4, 3: 6}[r]:
        return []
    found: dict[Certificate, Lattice] = {}
    for rep in reps(m):
        block = realize(rep)
        for below in range(j + 1):
            lat = _pad(block, below, j - below)
            if len(classify_elements(lat).red) != r:
                continue
            key = _canon_key_of_lattice(lat)
            found.setdefault(certificate_from_key(key), lat)
    return sorted(found.items(), key=lambda kv: kv[0])


def _pad(block: Lattice, below: int, above: int) -> Lattice:
    digraph = block.digraph
    if below:
        digraph = direct_sum(_chain_digraph(below), digraph)
    if above:
        digraph = direct_sum(digraph, _chain_digraph(above))
    return as_lattice(digraph) if (below or above) else block


def _chain_digraph(k: int) -> CoverDigraph:
    return build_poset(k, [(i, i + 1) for i in range(k - 1)])


def _canon_key_of_lattice(lat: Lattice) -> tuple[int, ...]:
    rows, _ = _canonical(lat.n, lat.digraph.up_adjacency())
    return (lat.n, *rows)


def reducible_class(n: int, r: int, workers: int = 1) -> dict[Certificate, Lattice]:
    """All unlabeled n-element lattices with exactly r in {2, 3} reducibles.

    ``workers`` > 1 fans the padding slices out over processes; the merged
    result does not depend on the worker count.
    """
    if r not in (2, 3):
        raise ValueError(f"reducible count must be 2 or 3, got {r}")
    if n > CLASS_SEARCH_LIMIT:
        raise SizeLimitExceeded(
            f"class search capped at {CLASS_SEARCH_LIMIT} elements"
        )
    if n < 1:
        return {}
    if workers <= 1:
        return _padded_members(n, r)
    args = [(n, r, j) for j in range(0, n)]
    out: dict[Certificate, Lattice] = {}
    with multiprocessing.get_context("fork").Pool(workers) as pool:
        for slice_result in pool.map(_padding_slice, args):
            for cert, lat in slice_result:
                out.setdefault(cert, lat)
    return out


def enumerate_by_reducible(n: int, r: int, workers: int = 1) -> frozenset[Certificate]:
    """Certificates of the exactly-r-reducible class on n elements."""
    return frozenset(reducible_class(n, r, workers=workers))


def block_census(m: int, r: int) -> dict[int, dict[Certificate, Lattice]]:
    """Blocks with exactly r reducibles on m elements, keyed by edge surplus k."""
    if r not in (2, 3):
        raise ValueError(f"reducible count must be 2 or 3, got {r}")
    if m > CLASS_SEARCH_LIMIT:
        raise SizeLimitExceeded(
            f"class search capped at {CLASS_SEARCH_LIMIT} elements"
        )
    reps = {2: _two_reducible_block_reps, 3: _three_reducible_block_reps}[r]
    out: dict[int, dict[Certificate, Lattice]] = {}
    if m < {2: 4, 3: 6}[r]:
        return out
    for rep in reps(m):
        block = realize(rep)
        if len(classify_elements(block).red) != r:
            continue
        k = len(block.covers) - m
        cert = certificate_from_key(_canon_key_of_lattice(block))
        out.setdefault(k, {}).setdefault(cert, block)
    return out


def three_block_fibers(m: int) -> dict[tuple[FbbClass, int], int]:
    """Counts of 3-reducible blocks on m elements by (class, edge surplus)."""
    fibers: dict[tuple[FbbClass, int], int] = {}
    for k, members in block_census(m, 3).items():
        for lat in members.values():
            tag = classify_fbb(lat)
            fibers[(tag, k)] = fibers.get((tag, k), 0) + 1
    return fibers


# ---------------------------------------------------------------------------
# Census and verification driver.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleCensus:
    """Certificates of all n-element lattices, split by reducible count,
    with the 3-reducible class further split by fundamental basic block."""

    n: int
    classes: dict[int, frozenset[Certificate]]
    fbb_fibers: dict[FbbClass, frozenset[Certificate]]

    def total(self) -> int:
        return sum(len(v) for v in self.classes.values())


def census(n: int) -> OracleCensus:
    """Full census by exhaustive search (n <= 8)."""
    classes: dict[int, set[Certificate]] = {}
    fibers: dict[FbbClass, set[Certificate]] = {}
    for cert, lat in all_lattices(n).items():
        r = len(classify_elements(lat).red)
        classes.setdefault(r, set()).add(cert)
        if r == 3:
            fibers.setdefault(classify_fbb(lat), set()).add(cert)
    return OracleCensus(
        n,
        {r: frozenset(v) for r, v in classes.items()},
        {tag: frozenset(v) for tag, v in fibers.items()},
    )


@dataclass(frozen=True)
class CensusReport:
    """One size's exact counts from one source, with agreement flags.

    ``agreement`` and ``witnesses`` are shared between the paired formula and
    oracle reports; a witness is the sorted cover list of one oracle member
    of a disagreeing cell, when the cell has members.
    """

    n: int
    source: str
    per_class: dict[str, int] = field(default_factory=dict)
    block_strata: dict[str, int] = field(default_factory=dict)
    agreement: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, list[list[int]]] = field(default_factory=dict)


def verify(n_max: int, workers: int = 1) -> list[CensusReport]:
    """Compare every formula cell against the oracle for all n <= n_max."""
    if n_max > CLASS_SEARCH_LIMIT:
        raise SizeLimitExceeded(
            f"verification capped at {CLASS_SEARCH_LIMIT} elements"
        )
    reports: list[CensusReport] = []
    for n in range(1, n_max + 1):
        reports.extend(_verify_one(n, workers))
    return reports


def _verify_one(n: int, workers: int) -> list[CensusReport]:
    formula_classes: dict[str, int] = {}
    oracle_classes: dict[str, int] = {}
    formula_blocks: dict[str, int] = {}
    oracle_blocks: dict[str, int] = {}
    agreement: dict[str, bool] = {}
    witnesses: dict[str, list[list[int]]] = {}

    two = reducible_class(n, 2, workers=workers)
    three = reducible_class(n, 3, workers=workers)
    fibers: dict[FbbClass, list[Lattice]] = {}
    for lat in three.values():
        fibers.setdefault(classify_fbb(lat), []).append(lat)

    def cell(name, formula_value, oracle_value, members=()):
        formula_classes[name] = formula_value
        oracle_classes[name] = oracle_value
        agreement[name] = formula_value == oracle_value
        if not agreement[name]:
            witnesses[name] = [
                [list(c) for c in lat.covers] for lat in list(members)[:1]
            ]

    cell("two_reducible", formulas.two_reducible_lattices(n), len(two), two.values())
    cell(
        "two_reducible_thakare",
        formulas.two_reducible_lattices(n, "thakare"),
        len(two),
        two.values(),
    )
    cell(
        "three_reducible",
        formulas.three_reducible_lattices(n),
        len(three),
        three.values(),
    )
    for name, func, tag in (
        ("f1", formulas.l1_lattices, FbbClass.F1),
        ("f2", formulas.l2_lattices, FbbClass.F2),
        ("f3", formulas.l3_lattices, FbbClass.F3),
        ("f4", formulas.l4_lattices, FbbClass.F4),
    ):
        members = fibers.get(tag, [])
        cell(name, func(n), len(members), members)

    if n <= FULL_SEARCH_LIMIT:
        full = census(n)
        cell("chains", 1, len(full.classes.get(0, ())))
        other = sum(len(v) for r, v in full.classes.items() if r not in (0, 2, 3))
        formula_classes["other"] = other  # no closed form; recorded only
        oracle_classes["other"] = other
        formula_classes["total"] = full.total()
        oracle_classes["total"] = full.total()
        agreement["search_two_reducible"] = full.classes.get(
            2, frozenset()
        ) == frozenset(two)
        agreement["search_three_reducible"] = full.classes.get(
            3, frozenset()
        ) == frozenset(three)

    def block_cell(name, formula_value, oracle_members):
        formula_blocks[name] = formula_value
        oracle_blocks[name] = len(oracle_members)
        agreement[name] = formula_value == len(oracle_members)
        if not agreement[name]:
            witnesses[name] = [
                [list(c) for c in lat.covers]
                for lat in list(oracle_members.values())[:1]
            ]

    strata2 = block_census(n, 2) if n >= 4 else {}
    for k in range(0, max(n - 3, 1)):
        block_cell(
            f"two_reducible_blocks[k={k}]",
            formulas.two_reducible_blocks(n, k),
            strata2.get(k, {}),
        )
    if n >= 6:
        strata3 = block_census(n, 3)
        split: dict[tuple[FbbClass, int], dict[Certificate, Lattice]] = {}
        for k, members in strata3.items():
            for cert, lat in members.items():
                split.setdefault((classify_fbb(lat), k), {})[cert] = lat
        for name, func, tag in (
            ("b1", formulas.b1_blocks, FbbClass.F1),
            ("b2", formulas.b2_blocks, FbbClass.F2),
            ("b3", formulas.b3_blocks, FbbClass.F3),
            ("b4", formulas.b4_blocks, FbbClass.F4),
        ):
            for k in range(0, max(n - 3, 1)):
                block_cell(
                    f"{name}_blocks[k={k}]",
                    func(n, k),
                    split.get((tag, k), {}),
                )

    return [
        CensusReport(n, "formula", formula_classes, formula_blocks, agreement, witnesses),
        CensusReport(n, "oracle", oracle_classes, oracle_blocks, agreement, witnesses),
    ]


def verification_ok(reports: list[CensusReport]) -> bool:
    return all(all(r.agreement.values()) for r in reports)
