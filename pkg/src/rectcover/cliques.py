"""Core engine: sweep-line maximum clique and the simplicial-vertex search.

Both routines exploit the Helly property of axis-parallel boxes: a set of
rectangles is a clique of the intersection graph exactly when all of them
share a common interior point, so a maximum clique is a deepest point of the
overlap arrangement and every clique can be stabbed by one point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Point, common_intersection
from .graph import IntersectionGraph, bit_indices
from .segtree import MaxAddSegmentTree

__all__ = [
    "CliqueWitness",
    "SimplicialWitness",
    "SimplicialSearchStats",
    "max_clique_sweep",
    "find_simplicial",
    "is_clique",
]


@dataclass(frozen=True)
class CliqueWitness:
    """A clique given by member indices and a point interior to all members."""

    members: tuple[int, ...]
    stab: Point

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SimplicialWitness:
    """A simplicial vertex, its closed neighborhood, and a shared stab point."""

    vertex: int
    neighborhood: tuple[int, ...]
    stab: Point


@dataclass
class SimplicialSearchStats:
    """Diagnostics from one simplicial search call.

    ``entry_accesses`` counts adjacency-matrix entry touches: one per single
    entry test, one per entry of a whole-row operation. ``marked_mask`` is
    the bitset of vertices ruled out during the search.
    """

    entry_accesses: int = 0
    marked_mask: int = 0


def max_clique_sweep(rects) -> CliqueWitness:
    """Maximum clique of a rectangle list by top-to-bottom line sweep.

    The x-axis is discretized into elementary intervals between the sorted
    distinct x-coordinates. Sweeping y downward, each rectangle's top edge
    adds +1 and its bottom edge -1 over its open x-span in a range-add /
    range-max tree; after each batch of equal-y events the tree's global
    maximum gives the deepest cell for the y-gap below. The reported stab
    point is the midpoint of the winning elementary cell, so it is interior
    to every member. Ties keep the first maximum in sweep order (decreasing
    y, then increasing x).
    """
    rects = list(rects)
    if not rects:
        raise ValueError("max_clique_sweep needs at least one rectangle")

    xs = sorted({r.lo.x for r in rects} | {r.hi.x for r in rects})
    x_id = {x: i for i, x in enumerate(xs)}
    tree = MaxAddSegmentTree(len(xs) - 1)

    TOP, BOTTOM = 0, 1  # tops first at equal y; the gap query follows the batch
    events = []
    for r in rects:
        events.append((-r.hi.y, TOP, x_id[r.lo.x], x_id[r.hi.x]))
        events.append((-r.lo.y, BOTTOM, x_id[r.lo.x], x_id[r.hi.x]))
    events.sort()

    best_depth = 0
    best_cell = -1
    best_gap = (0.0, 0.0)

    i = 0
    m = len(events)
    while i < m:
        neg_y = events[i][0]
        while i < m and events[i][0] == neg_y:
            _, kind, a, b = events[i]
            tree.add(a, b, 1 if kind == TOP else -1)
            i += 1
        if i == m:
            break  # below the last event nothing is active
        depth, cell = tree.peek_max()
        if depth > best_depth:
            best_depth = depth
            best_cell = cell
            best_gap = (-events[i][0], -neg_y)  # (lower y, upper y)

    stab = Point(
        (xs[best_cell] + xs[best_cell + 1]) / 2.0,
        (best_gap[0] + best_gap[1]) / 2.0,
    )
    members = tuple(i for i, r in enumerate(rects) if r.contains_point_open(stab))
    if len(members) != best_depth:
        raise AssertionError(
            f"sweep depth {best_depth} disagrees with {len(members)} members at {stab}"
        )
    return CliqueWitness(members, stab)


def find_simplicial(
    g: IntersectionGraph,
    rects,
    stats: SimplicialSearchStats | None = None,
) -> SimplicialWitness | None:
    """Find a live vertex whose closed neighborhood is a clique, or None.

    Vertices are visited in increasing order of current degree (ties to the
    lowest id), skipping marked ones. When a candidate v fails, nothing in
    its closed neighborhood can be simplicial, so all of it is marked; and
    for every non-adjacent pair a, b in that neighborhood, every common
    neighbor of a and b is marked as well, since its neighborhood contains
    the non-adjacent pair. Each non-adjacent pair is processed at most once
    per call, which keeps the total matrix work quadratic.

    ``rects`` must be indexed by vertex id of the base graph. The witness
    stab point is the center of the common intersection of the neighborhood,
    interior to every member by the Helly property.
    """
    alive = g.alive_mask
    if alive == 0:
        return None
    rows = g.raw_adjacency()
    na = alive.bit_count()

    order = bit_indices(alive)
    degs = {}
    for v in order:
        degs[v] = (rows[v] & alive).bit_count()
    order.sort(key=lambda v: (degs[v], v))
    if stats is not None:
        stats.entry_accesses += na * na  # one degree pass over the live matrix

    marked = 0
    for v in order:
        if (marked >> v) & 1:
            continue
        closed = (rows[v] & alive) | (1 << v)
        members = bit_indices(closed)
        if stats is not None:
            stats.entry_accesses += na
        clique = True
        for a in members:
            if stats is not None:
                stats.entry_accesses += na
            if closed & ~(rows[a] | (1 << a)):
                clique = False
                break
        if clique:
            if stats is not None:
                stats.marked_mask = marked
            box = common_intersection([rects[i] for i in members])
            if box is None:
                raise AssertionError(f"clique neighborhood of {v} has no common interior")
            return SimplicialWitness(v, tuple(members), box.center())

        marked |= closed
        for idx, a in enumerate(members):
            row_a = rows[a]
            for b in members[idx + 1 :]:
                if stats is not None:
                    stats.entry_accesses += 1
                if not (row_a >> b) & 1:
                    marked |= row_a & rows[b] & alive
                    if stats is not None:
                        stats.entry_accesses += 2 * na
        if not (alive & ~marked):
            break

    if stats is not None:
        stats.marked_mask = marked
    return None


def is_clique(g: IntersectionGraph, vertices) -> bool:
    """True if the given live vertices are pairwise adjacent.

    The empty set and singletons count as cliques.
    """
    vs = list(vertices)
    mask = 0
    for v in vs:
        if not g.is_live(v):
            raise ValueError(f"vertex {v} is not a live vertex of this graph")
        mask |= 1 << v
    rows = g.raw_adjacency()
    for v in vs:
        if mask & ~(rows[v] | (1 << v)):
            return False
    return True
