from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from compactsets.completion import RegularFn, ball_locate_completion, unit
from compactsets.finite_enum import (
    FiniteEnum,
    fe_ball,
    fe_bind,
    fe_equiv,
    fe_locate,
    fe_map,
    fe_unit,
    format_points,
    hausdorff_dist,
    hausdorff_metric,
    hemi_dist,
    parse_points,
)
from compactsets.metric_core import POINT_METRIC, RAT_METRIC, LocateResult, Point2, locate
from conftest import positive_rationals, rationals
from oracles import naive_hausdorff, naive_sup

Q, P = RAT_METRIC, POINT_METRIC


def E(*pts):
    return FiniteEnum(F(p) if isinstance(p, int) else p for p in pts)


points = st.builds(Point2, rationals(), rationals())
point_sets = st.lists(points, min_size=1, max_size=8).map(FiniteEnum)
rat_sets = st.lists(rationals(), min_size=1, max_size=6).map(FiniteEnum)


def test_empty_rejected():
    with pytest.raises(ValueError):
        FiniteEnum([])


@pytest.mark.parametrize(
    ("a", "b", "expected"),
    [(E(0), E(1), 1), (E(0, 2), E(1), 1), (E(1), E(0, 2), 1)],
)
def test_hemi_examples(a, b, expected):
    assert hemi_dist(Q, a, b) == expected


def test_hausdorff_examples():
    assert hausdorff_dist(Q, E(0), E(1)) == 1
    assert hausdorff_dist(Q, E(0), E(0, 10)) == 10
    a = FiniteEnum([Point2(F(0), F(0)), Point2(F(1), F(1))])
    assert hausdorff_dist(P, a, FiniteEnum([Point2(F(0), F(0))])) == 1


def test_fe_ball_and_equiv_examples():
    assert fe_ball(Q, F(1), E(0), E(1))
    assert not fe_ball(Q, F(1, 2), E(0), E(1))
    assert fe_ball(Q, F(1, 10**9), E(3, 4), E(4, 3))
    assert fe_equiv(Q, E(0, 1), E(1, 0, 0))
    assert not fe_equiv(Q, E(0), E(0, 1))


@given(point_sets, point_sets)
def test_matches_naive_oracle(a, b):
    assert hausdorff_dist(P, a, b) == naive_hausdorff(naive_sup, list(a), list(b))


@given(point_sets, point_sets, point_sets)
def test_hausdorff_metric_axioms(a, b, c):
    assert hausdorff_dist(P, a, b) == hausdorff_dist(P, b, a)
    assert hausdorff_dist(P, a, c) <= hausdorff_dist(P, a, b) + hausdorff_dist(P, b, c)
    assert hemi_dist(P, a, c) <= hemi_dist(P, a, b) + hemi_dist(P, b, c)
    assert (hausdorff_dist(P, a, b) == 0) == fe_equiv(P, a, b)


@given(point_sets, st.data())
def test_subset_hemimetric_zero(a, data):
    sub = data.draw(st.lists(st.sampled_from(a.points), min_size=1))
    assert hemi_dist(P, FiniteEnum(sub), a) == 0
    assert fe_equiv(P, a, FiniteEnum(list(a.points) + sub))


@given(point_sets, positive_rationals())
def test_ball_closed(a, eps):
    b = FiniteEnum(Point2(p.x + eps, p.y) for p in a)
    assert hausdorff_dist(P, a, b) <= eps
    assert fe_ball(P, eps, a, b)


def test_fe_unit_and_bind():
    assert fe_unit(F(3)).points == (3,)
    x, y = Point2(F(1), F(2)), Point2(F(-1), F(5))
    assert hausdorff_dist(P, fe_unit(x), fe_unit(y)) == P.dist(x, y)
    assert fe_bind(fe_unit, E(1, 2)).points == (1, 2)
    assert fe_bind(lambda x: E(x, x + 10), E(0, 1)).points == (0, 10, 1, 11)


def shift_set(x):
    return FiniteEnum([x, x + 1, 2 * x])


def halve_set(x):
    return FiniteEnum([x / 2, -x])


@given(rat_sets, rationals())
def test_monad_laws(l, a):
    assert fe_equiv(Q, fe_bind(shift_set, fe_unit(a)), shift_set(a))
    assert fe_equiv(Q, fe_bind(fe_unit, l), l)
    lhs = fe_bind(halve_set, fe_bind(shift_set, l))
    rhs = fe_bind(lambda x: fe_bind(halve_set, shift_set(x)), l)
    assert fe_equiv(Q, lhs, rhs)
    assert fe_equiv(Q, fe_map(lambda x: x + 1, l), fe_bind(lambda x: fe_unit(x + 1), l))


def rat_locator(a, b, eps, delta):
    return locate(Q, a, b, eps, delta)


def test_fe_locate_examples():
    assert fe_locate(E(0), E(1), F(1, 2), F(2), rat_locator) is LocateResult.WITHIN
    assert fe_locate(E(0), E(1), F(1, 4), F(1, 2), rat_locator) is LocateResult.BEYOND
    a = E(0, 3, 7)
    assert fe_locate(a, a, F(1, 100), F(1, 50), rat_locator) is LocateResult.WITHIN
    with pytest.raises(ValueError):
        fe_locate(a, a, F(1), F(1), rat_locator)


@given(point_sets, point_sets, positive_rationals(), positive_rationals())
def test_fe_locate_sound(a, b, e1, e2):
    eps, delta = e1, e1 + e2
    answer = fe_locate(a, b, eps, delta, lambda x, y, e, d: locate(P, x, y, e, d))
    h = hausdorff_dist(P, a, b)
    if answer is LocateResult.WITHIN:
        assert h <= delta
    else:
        assert h > eps


@given(rat_sets, rat_sets)
def test_fe_locate_over_reals(a, b):
    # points of the completion, located only through ball_locate_completion
    reals_a = FiniteEnum(RegularFn(lambda e, q=q: q - e / 2) for q in a)
    reals_b = FiniteEnum(unit(q) for q in b)
    eps, delta = F(1, 3), F(1, 2)
    answer = fe_locate(reals_a, reals_b, eps, delta, ball_locate_completion)
    h = hausdorff_dist(Q, a, b)
    if answer is LocateResult.WITHIN:
        assert h <= delta
    else:
        assert h > eps


@given(point_sets)
def test_text_round_trip(a):
    text = format_points(a)
    assert parse_points(text).points == a.points
    assert format_points(parse_points(text)) == text


def test_parse_points_formats():
    text = "{\n1/2 -3\n# comment\n\n-1/3, 4 }\n"
    assert parse_points(text).points == (Point2(F(1, 2), F(-3)), Point2(F(-1, 3), F(4)))
    assert parse_points("5\n-7/2\n").points == (F(5), F(-7, 2))
    with pytest.raises(ValueError):
        parse_points("1 2 3\n")
    with pytest.raises(ValueError):
        parse_points("# nothing\n")


def test_hausdorff_metric_object():
    h = hausdorff_metric(Q)
    assert h.dist(E(0), E(0, 10)) == 10
    assert h.ball(F(10), E(0), E(0, 10))
