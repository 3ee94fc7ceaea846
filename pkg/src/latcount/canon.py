"""Canonical forms for cover digraphs, up to isomorphism.

The canonizer refines a vertex colouring seeded with (in-degree, out-degree,
height, depth), then backtracks over the remaining colour classes by
individualize-and-refine; the certificate is the lexicographically smallest
cover-adjacency encoding over all colour-respecting labelings.  Sizes stay at
desk scale, so no external dependency is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poset import CoverDigraph, _bits


@dataclass(frozen=True, order=True)
class Certificate:
    """Canonical byte string; equal exactly for isomorphic cover digraphs."""

    data: bytes


def canonical_certificate(p: CoverDigraph) -> Certificate:
    rows, _ = _canonical(p.n, p.up_adjacency())
    return Certificate(_encode(p.n, rows))


def canonical_labeling(p: CoverDigraph) -> tuple[int, ...]:
    """The labeling witnessing the certificate: position i holds the old label."""
    _, perm = _canonical(p.n, p.up_adjacency())
    return perm


def canonical_rank(p: CoverDigraph) -> tuple[int, ...]:
    """rank[old_label] = position of that element in the canonical order."""
    perm = canonical_labeling(p)
    rank = [0] * p.n
    for pos, old in enumerate(perm):
        rank[old] = pos
    return tuple(rank)


def canonical_digraph(p: CoverDigraph) -> CoverDigraph:
    """``p`` relabeled into its canonical form."""
    rows, _ = _canonical(p.n, p.up_adjacency())
    covers = tuple(sorted((i, j) for i in range(p.n) for j in _bits(rows[i])))
    return CoverDigraph(p.n, covers)


def certificate_key(n: int, up_adjacency: tuple[int, ...]) -> tuple[int, ...]:
    """Raw canonical row masks, cheap to use as a dedup key: (n, row0, row1, ...)."""
    rows, _ = _canonical(n, up_adjacency)
    return (n, *rows)


def certificate_from_key(key: tuple[int, ...]) -> Certificate:
    return Certificate(_encode(key[0], key[1:]))


def _encode(n: int, rows) -> bytes:
    width = (n + 7) // 8
    return n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "big") for r in rows)


def decode_certificate(cert: Certificate) -> CoverDigraph:
    """Rebuild the canonical cover digraph from its certificate bytes."""
    n = int.from_bytes(cert.data[:2], "big")
    width = (n + 7) // 8
    covers = []
    for i in range(n):
        row = int.from_bytes(cert.data[2 + i * width : 2 + (i + 1) * width], "big")
        covers.extend((i, j) for j in _bits(row))
    return CoverDigraph(n, tuple(sorted(covers)))


def _canonical(n: int, up: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if n == 1:
        return (0,), (0,)
    dn = [0] * n
    for v in range(n):
        for w in _bits(up[v]):
            dn[w] |= 1 << v
    height = _longest_paths(n, up, dn)
    depth = _longest_paths(n, tuple(dn), up)
    # height-major seeds make every canonical labeling a linear extension
    seeds = [
        (height[v], bin(dn[v]).count("1"), bin(up[v]).count("1"), depth[v])
        for v in range(n)
    ]
    ranking = {s: i for i, s in enumerate(sorted(set(seeds)))}
    colors = _refine(n, up, dn, [ranking[s] for s in seeds])

    best_rows: tuple[int, ...] | None = None
    best_perm: tuple[int, ...] | None = None

    def leaf(order: list[int]) -> None:
        nonlocal best_rows, best_perm
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = tuple(
            sum(1 << pos[w] for w in _bits(up[v])) for v in order
        )
        if best_rows is None or rows < best_rows:
            best_rows = rows
            best_perm = tuple(order)

    def descend(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        ordered = [cells[c] for c in sorted(cells)]
        target = next((cell for cell in ordered if len(cell) > 1), None)
        if target is None:
            leaf([cell[0] for cell in ordered])
            return
        for v in target:
            split = [2 * c for c in colors]
            split[v] -= 1
            descend(_refine(n, up, dn, split))

    descend(colors)
    assert best_rows is not None and best_perm is not None
    return best_rows, best_perm


def _refine(n: int, up, dn, colors: list[int]) -> list[int]:
    """Iterate neighbourhood-multiset colour refinement to a fixed point."""
    distinct = len(set(colors))
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in _bits(up[v]))),
                tuple(sorted(colors[w] for w in _bits(dn[v]))),
            )
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == distinct:
            return colors
        distinct = len(ranking)


def _longest_paths(n: int, up, dn) -> list[int]:
    """Longest cover-path length ending at each vertex, walking upward."""
    indeg = [bin(dn[v]).count("1") for v in range(n)]
    queue = [v for v in range(n) if indeg[v] == 0]
    dist = [0] * n
    while queue:
        v = queue.pop()
        for w in _bits(up[v]):
            if dist[v] + 1 > dist[w]:
                dist[w] = dist[v] + 1
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return dist
