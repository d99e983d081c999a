import math
import random

import pytest

from rectcover.geometry import (
    UNIT_SQUARE,
    DegenerateRectangleError,
    Instance,
    Point,
    Rectangle,
    Region,
    common_intersection,
    contains,
    filter_dominated,
    generate_instance,
    interiors_intersect,
    make_rectangle,
)

from conftest import inst_of, mk


# ---------------------------------------------------------------- rectangles


def test_rectangle_requires_positive_extent():
    with pytest.raises(ValueError):
        Rectangle(Point(1.0, 0.0), Point(0.0, 1.0))
    with pytest.raises(ValueError):
        Rectangle(Point(0.0, 0.0), Point(1.0, 0.0))


def test_point_rejects_non_finite():
    with pytest.raises(ValueError):
        Point(float("nan"), 0.0)
    with pytest.raises(ValueError):
        Point(0.0, float("inf"))


def test_make_rectangle_normalizes_corners():
    assert make_rectangle(Point(0.0, 0.0), Point(2.0, 3.0)) == mk(0, 0, 2, 3)
    assert make_rectangle(Point(2.0, 0.0), Point(0.0, 3.0)) == mk(0, 0, 2, 3)
    r = make_rectangle(Point(3.0, 1.0), Point(1.0, 4.0))
    assert r.lo == Point(1.0, 1.0)
    assert r.hi == Point(3.0, 4.0)
    assert r.width == 2.0 and r.height == 3.0
    assert r.center() == Point(2.0, 2.5)


def test_make_rectangle_rejects_degenerate():
    with pytest.raises(DegenerateRectangleError):
        make_rectangle(Point(0.0, 0.0), Point(0.0, 1.0))
    with pytest.raises(DegenerateRectangleError):
        make_rectangle(Point(2.0, 5.0), Point(7.0, 5.0))


def test_make_rectangle_order_invariant():
    rng = random.Random(2024)
    for _ in range(100):
        p = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
        q = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
        if p.x == q.x or p.y == q.y:
            continue
        assert make_rectangle(p, q) == make_rectangle(q, p)


def test_contains_point_open_excludes_boundary():
    r = mk(0, 0, 2, 2)
    assert r.contains_point_open(Point(1.0, 1.0))
    assert not r.contains_point_open(Point(0.0, 1.0))
    assert not r.contains_point_open(Point(1.0, 2.0))
    assert not r.contains_point_open(Point(2.0, 2.0))


# -------------------------------------------------------------- intersection


def test_interiors_intersect_examples():
    a = mk(0, 0, 2, 2)
    assert interiors_intersect(a, mk(1, 1, 3, 3))
    # shared edge only: open interiors are disjoint
    assert not interiors_intersect(a, mk(2, 0, 4, 2))
    # shared corner only
    assert not interiors_intersect(a, mk(2, 2, 3, 3))
    # fully disjoint
    assert not interiors_intersect(a, mk(5, 5, 6, 6))
    # nesting counts as intersecting
    assert interiors_intersect(a, mk(0.5, 0.5, 1.5, 1.5))
    assert interiors_intersect(a, a)


def test_interiors_intersect_symmetric():
    rng = random.Random(11)
    for _ in range(200):
        a = mk(rng.random(), rng.random(), 1 + rng.random(), 1 + rng.random())
        b = mk(rng.random(), rng.random(), 1 + rng.random(), 1 + rng.random())
        assert interiors_intersect(a, b) == interiors_intersect(b, a)


def test_contains_is_closed_and_strict():
    outer = mk(0, 0, 4, 4)
    assert contains(outer, mk(1, 1, 2, 2))
    assert contains(outer, mk(0, 0, 4, 2))  # shared boundary still contained
    assert not contains(outer, outer)  # equality is not containment
    assert not contains(mk(1, 1, 2, 2), outer)
    assert not contains(outer, mk(3, 3, 5, 5))


def test_common_intersection(triangle):
    box = common_intersection(triangle)
    assert box == mk(1, 1, 2, 2)
    assert common_intersection([mk(0, 0, 2, 2)]) == mk(0, 0, 2, 2)
    assert common_intersection([mk(0, 0, 2, 2), mk(1, 1, 3, 3)]) == mk(1, 1, 2, 2)
    assert common_intersection([mk(0, 0, 1, 1), mk(2, 0, 3, 1)]) is None
    # touching rectangles share no open interior
    assert common_intersection([mk(0, 0, 1, 1), mk(1, 0, 2, 1)]) is None
    with pytest.raises(ValueError):
        common_intersection([])


def test_common_intersection_matches_pairwise():
    # Helly property: pairwise overlapping boxes have a common point.
    rng = random.Random(97)
    for _ in range(300):
        rects = [
            mk(x, y, x + rng.uniform(0.2, 1.0), y + rng.uniform(0.2, 1.0))
            for x, y in ((rng.random(), rng.random()) for _ in range(4))
        ]
        pairwise = all(
            interiors_intersect(a, b)
            for i, a in enumerate(rects)
            for b in rects[i + 1 :]
        )
        box = common_intersection(rects)
        assert pairwise == (box is not None)
        if box is not None:
            c = box.center()
            assert all(r.contains_point_open(c) for r in rects)


# ----------------------------------------------------------------- instances


def test_generate_instance_deterministic():
    a = generate_instance(40, seed=123)
    b = generate_instance(40, seed=123)
    assert a == b
    c = generate_instance(40, seed=124)
    assert a != c


def test_generate_instance_invariants():
    region = Region(-2.0, 3.0, 1.0, 4.0)
    instance = generate_instance(250, region=region, seed=9)
    assert instance.n == 250
    assert instance.seed == 9
    for r in instance.rects:
        assert region.x_min <= r.lo.x < r.hi.x <= region.x_max
        assert region.y_min <= r.lo.y < r.hi.y <= region.y_max


def test_generate_instance_empty():
    instance = generate_instance(0, seed=1)
    assert instance.n == 0
    assert instance.rects == ()


def test_instance_rejects_rect_outside_region():
    with pytest.raises(ValueError):
        Instance(
            rects=(mk(0, 0, 2, 2),),
            seed=None,
            region=UNIT_SQUARE,
            n_requested=1,
        )


# ---------------------------------------------------------------- domination


def test_filter_dominated_examples():
    # outer contains inner: outer is dominated and removed
    kept, removed = filter_dominated(inst_of([mk(0, 0, 4, 4), mk(1, 1, 2, 2)]))
    assert kept == [1] and removed == [0]

    # the containing rectangle goes, unrelated ones stay
    kept, removed = filter_dominated(
        inst_of([mk(0, 0, 4, 4), mk(1, 1, 2, 2), mk(3, 0, 5, 2)])
    )
    assert kept == [1, 2] and removed == [0]

    # chain: a contains b contains c -> only c survives
    kept, removed = filter_dominated(
        inst_of([mk(0, 0, 9, 9), mk(1, 1, 5, 5), mk(2, 2, 3, 3)])
    )
    assert kept == [2] and removed == [0, 1]

    # overlap without containment keeps both
    kept, removed = filter_dominated(inst_of([mk(0, 0, 2, 2), mk(1, 1, 3, 3)]))
    assert kept == [0, 1] and removed == []


def test_filter_dominated_duplicates_survive():
    # identical rectangles do not dominate each other
    kept, removed = filter_dominated(inst_of([mk(0, 0, 1, 1), mk(0, 0, 1, 1)]))
    assert kept == [0, 1] and removed == []


def test_filter_dominated_idempotent():
    for seed in range(8):
        instance = generate_instance(150, seed=seed)
        kept, removed = filter_dominated(instance)
        assert sorted(kept + removed) == list(range(150))
        survivors = [instance.rects[i] for i in kept]
        kept2, removed2 = filter_dominated(survivors)
        assert removed2 == []
        assert kept2 == list(range(len(survivors)))


def test_filter_dominated_matches_naive():
    def naive(rects):
        removed = [
            i
            for i, outer in enumerate(rects)
            if any(j != i and contains(outer, inner) for j, inner in enumerate(rects))
        ]
        kept = [i for i in range(len(rects)) if i not in set(removed)]
        return kept, removed

    for seed in range(12):
        instance = generate_instance(90, seed=1000 + seed)
        assert filter_dominated(instance) == naive(instance.rects)


def test_filter_dominated_empty():
    assert filter_dominated(inst_of([])) == ([], [])
