"""Finite posets and lattices represented by their cover (Hasse) relation.

Elements are dense integer labels ``0..n-1``.  A :class:`CoverDigraph` is a
validated, irredundant cover relation; a :class:`Lattice` additionally carries
the full order relation as bitmask rows, plus its bottom and top.  Everything
is immutable after construction, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class LatticeError(Exception):
    """Base class for all structural errors raised by this package."""


class LabelOutOfRange(LatticeError):
    pass


class CycleDetected(LatticeError):
    pass


class RedundantCover(LatticeError):
    """A listed cover pair is already implied by a longer directed path."""


class NotALattice(LatticeError):
    """Some pair of elements has no unique meet or join.

    ``witness`` is one offending pair, ``kind`` is ``"meet"`` or ``"join"``.
    """

    def __init__(self, witness: tuple[int, int], kind: str):
        super().__init__(f"no unique {kind} for pair {witness}")
        self.witness = witness
        self.kind = kind


class NotComparable(LatticeError):
    pass


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CoverDigraph:
    """An irredundant, acyclic cover relation on labels ``0..n-1``.

    ``covers`` is sorted ascending; ``(lo, hi)`` means ``lo`` is covered by
    ``hi``.  Construct through :func:`build_poset`, which validates.
    """

    n: int
    covers: tuple[tuple[int, int], ...]

    def up_adjacency(self) -> tuple[int, ...]:
        """Bitmask rows of upper covers: bit ``j`` of row ``i`` iff ``i`` is covered by ``j``."""
        rows = [0] * self.n
        for a, b in self.covers:
            rows[a] |= 1 << b
        return tuple(rows)

    def down_adjacency(self) -> tuple[int, ...]:
        """Bitmask rows of lower covers."""
        rows = [0] * self.n
        for a, b in self.covers:
            rows[b] |= 1 << a
        return tuple(rows)

    def degree(self, x: int) -> int:
        """Total cover-graph degree of ``x``."""
        up = self.up_adjacency()
        dn = self.down_adjacency()
        return bin(up[x]).count("1") + bin(dn[x]).count("1")


@dataclass(frozen=True)
class Lattice:
    """A validated lattice: cover digraph plus order matrix and bounds.

    ``leq`` holds reflexive up-set bitmasks: bit ``j`` of ``leq[i]`` iff
    ``i <= j``.
    """

    digraph: CoverDigraph
    leq: tuple[int, ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return self.digraph.n

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self.digraph.covers

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x] >> y & 1)

    def geq_mask(self, x: int) -> int:
        """Reflexive up-set of ``x`` as a bitmask."""
        return self.leq[x]

    def leq_mask(self, x: int) -> int:
        """Reflexive down-set of ``x`` as a bitmask."""
        mask = 0
        for i in range(self.n):
            if self.leq[i] >> x & 1:
                mask |= 1 << i
        return mask


@dataclass(frozen=True)
class ElementClassification:
    """Reducible / doubly irreducible split of a lattice's elements."""

    red: frozenset[int]
    irr: frozenset[int]
    irr_star: frozenset[int]


def build_poset(n: int, covers: Iterable[tuple[int, int]]) -> CoverDigraph:
    """Validate and freeze a cover relation on ``n`` elements.

    Raises :class:`LabelOutOfRange`, :class:`CycleDetected` or
    :class:`RedundantCover` when the input is not an irredundant acyclic
    cover set.
    """
    if n < 1:
        raise LabelOutOfRange(f"need at least one element, got n={n}")
    pairs = sorted(set((int(a), int(b)) for a, b in covers))
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise LabelOutOfRange(f"cover ({a}, {b}) outside 0..{n - 1}")
        if a == b:
            raise CycleDetected(f"self-loop at {a}")
    up = [0] * n
    for a, b in pairs:
        up[a] |= 1 << b
    order = _strict_up_order(n, up)
    if order is None:
        raise CycleDetected("cover relation contains a directed cycle")
    # (a, b) is redundant when b is reachable from some other upper cover of a
    for a, b in pairs:
        for c in _bits(up[a] & ~(1 << b)):
            if order[c] >> b & 1:
                raise RedundantCover(f"cover ({a}, {b}) implied through {c}")
    return CoverDigraph(n, tuple(pairs))


def _strict_up_order(n: int, up: list[int] | tuple[int, ...]) -> list[int] | None:
    """Strict reachability masks over a cover adjacency, or None on a cycle."""
    indeg = [0] * n
    for a in range(n):
        for b in _bits(up[a]):
            indeg[b] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    topo = []
    while queue:
        v = queue.pop()
        topo.append(v)
        for w in _bits(up[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(topo) != n:
        return None
    order = [0] * n
    for v in reversed(topo):
        acc = 0
        for w in _bits(up[v]):
            acc |= (1 << w) | order[w]
        order[v] = acc
    return order


def as_lattice(p: CoverDigraph) -> Lattice:
    """Check that every pair has a unique meet and join; return the lattice.

    Raises :class:`NotALattice` with a witness pair otherwise.
    """
    n = p.n
    up = list(p.up_adjacency())
    strict = _strict_up_order(n, up)
    assert strict is not None  # p is validated
    geq = [strict[i] | (1 << i) for i in range(n)]
    leqm = [0] * n  # reflexive down-sets
    for i in range(n):
        for j in _bits(geq[i]):
            leqm[j] |= 1 << i
    strict_dn = [leqm[i] & ~(1 << i) for i in range(n)]
    for x, y in combinations(range(n), 2):
        ub = geq[x] & geq[y]
        if _unique_extreme(ub, strict_dn) is None:
            raise NotALattice((x, y), "join")
        lb = leqm[x] & leqm[y]
        if _unique_extreme(lb, strict) is None:
            raise NotALattice((x, y), "meet")
    bottom = next(i for i in range(n) if leqm[i] == 1 << i)
    top = next(i for i in range(n) if geq[i] == 1 << i)
    return Lattice(p, tuple(geq), bottom, top)


def _unique_extreme(mask: int, strict_below: list[int] | tuple[int, ...]) -> int | None:
    """The unique element of ``mask`` with nothing of ``mask`` below it, if any."""
    found = None
    for v in _bits(mask):
        if strict_below[v] & mask == 0:
            if found is not None:
                return None
            found = v
    return found


def meet_join(l: Lattice, x: int, y: int) -> tuple[int, int]:
    """Return ``(x meet y, x join y)``; total on a lattice."""
    n = l.n
    geq = l.leq
    strict_dn = [l.leq_mask(i) & ~(1 << i) for i in range(n)]
    strict_up = [geq[i] & ~(1 << i) for i in range(n)]
    ub = geq[x] & geq[y]
    lb = l.leq_mask(x) & l.leq_mask(y)
    join = _unique_extreme(ub, strict_dn)
    meet = _unique_extreme(lb, strict_up)
    assert join is not None and meet is not None
    return meet, join


def classify_elements(l: Lattice) -> ElementClassification:
    """Split a lattice's elements into reducible and doubly irreducible sets.

    In a finite lattice an element is join-reducible exactly when it has two
    or more lower covers, and meet-reducible exactly when it has two or more
    upper covers, so the split reads off the cover degrees.
    """
    return poset_classification(l.digraph)


def poset_classification(p: CoverDigraph) -> ElementClassification:
    """Degree-based Red/Irr split of an arbitrary poset (not only lattices)."""
    up = p.up_adjacency()
    dn = p.down_adjacency()
    red, irr, star = set(), set(), set()
    for x in range(p.n):
        nup = bin(up[x]).count("1")
        ndn = bin(dn[x]).count("1")
        if nup >= 2 or ndn >= 2:
            red.add(x)
        else:
            irr.add(x)
            if nup == 1 and ndn == 1:
                star.add(x)
    return ElementClassification(frozenset(red), frozenset(irr), frozenset(star))


def nullity(p: CoverDigraph) -> int:
    """Cycle rank of the cover graph: edges - vertices + components."""
    parent = list(range(p.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in p.covers:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    components = len({find(v) for v in range(p.n)})
    return len(p.covers) - p.n + components


def dual(p: CoverDigraph) -> CoverDigraph:
    """Reverse all covers, keeping labels."""
    return CoverDigraph(p.n, tuple(sorted((b, a) for a, b in p.covers)))


def relabel(p: CoverDigraph, perm: Iterable[int]) -> CoverDigraph:
    """Apply a permutation (``perm[old] = new``) to the labels."""
    pi = list(perm)
    return CoverDigraph(p.n, tuple(sorted((pi[a], pi[b]) for a, b in p.covers)))


def chain(k: int) -> Lattice:
    """The k-element chain 0 < 1 < ... < k-1."""
    return as_lattice(build_poset(k, [(i, i + 1) for i in range(k - 1)]))


def induced_subposet(p: CoverDigraph, keep: Iterable[int]) -> CoverDigraph:
    """Induced subposet on ``keep``, relabeled densely in ascending label order."""
    kept = sorted(set(keep))
    index = {v: i for i, v in enumerate(kept)}
    up = p.up_adjacency()
    order = _strict_up_order(p.n, up)
    assert order is not None
    keep_mask = 0
    for v in kept:
        keep_mask |= 1 << v
    covers = []
    for v in kept:
        above = order[v] & keep_mask
        for w in _bits(above):
            # w covers v in the induced order iff nothing kept lies between
            between = order[v] & keep_mask & ~(1 << w)
            if not any(order[u] >> w & 1 for u in _bits(between)):
                covers.append((index[v], index[w]))
    return CoverDigraph(len(kept), tuple(sorted(covers)))


def is_dismantlable(l: Lattice) -> bool:
    """Whether ``l`` shrinks to a point by deleting one doubly irreducible
    element at a time.

    Deleting a doubly irreducible element of a lattice always leaves a
    sublattice, and leaves crown-freeness intact, so a greedy deletion order
    never gets stuck when any order succeeds.
    """
    current = l.digraph
    while current.n > 1:
        cls = poset_classification(current)
        if not cls.irr:
            return False
        victim = min(cls.irr)
        current = induced_subposet(current, set(range(current.n)) - {victim})
    return True


def contains_crown(l: Lattice) -> bool:
    """Exhaustively search for a crown among the subposets of ``l``.

    A crown on 2s >= 6 elements is an alternating cycle of comparabilities
    with no further relations; the check below looks for a subset whose
    induced comparability graph is a single chordless cycle in which every
    vertex sits below both neighbours or above both neighbours.
    """
    n = l.n
    comp = [0] * n  # symmetric strict comparability masks
    for x in range(n):
        for y in range(n):
            if x != y and (l.le(x, y) or l.le(y, x)):
                comp[x] |= 1 << y
    # bottom and top are comparable to everything and can never take part
    pool = [v for v in range(n) if bin(comp[v]).count("1") < n - 1]
    for s in range(3, len(pool) // 2 + 1):
        for subset in combinations(pool, 2 * s):
            if _is_crown(subset, comp, l):
                return True
    return False


def _is_crown(subset: tuple[int, ...], comp: list[int], l: Lattice) -> bool:
    mask = 0
    for v in subset:
        mask |= 1 << v
    deg = {}
    for v in subset:
        inside = comp[v] & mask
        if bin(inside).count("1") != 2:
            return False
        below = sum(1 for w in _bits(inside) if l.le(v, w))
        if below not in (0, 2):
            return False
        deg[v] = inside
    # degree-2 everywhere with the right edge count leaves only disjoint
    # cycles; require a single cycle through the whole subset
    seen = {subset[0]}
    frontier = [subset[0]]
    while frontier:
        v = frontier.pop()
        for w in _bits(deg[v]):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(subset)


def maximal_chains_in_interval(l: Lattice, a: int, b: int) -> list[tuple[int, ...]]:
    """All maximal chains of the interval [a, b], as label sequences.

    Raises :class:`NotComparable` unless ``a < b``.
    """
    if a == b or not l.le(a, b):
        raise NotComparable(f"{a} < {b} required")
    up = l.digraph.up_adjacency()
    below_b = l.leq_mask(b)
    chains: list[tuple[int, ...]] = []
    stack: list[int] = [a]

    def walk(v: int) -> None:
        if v == b:
            chains.append(tuple(stack))
            return
        for w in _bits(up[v] & below_b):
            stack.append(w)
            walk(w)
            stack.pop()

    walk(a)
    return chains
