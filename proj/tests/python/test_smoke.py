import math

import pytest

import leastgrad as lg


def test_circle_tree_levels():
    arc = lg.circle_arc(0.05)
    tree = lg.build_tree(arc, 4)
    assert tree.depth == 4
    assert len(tree.level(4)) == 16
    assert tree.chord_sum(4) < tree.arc_sum(4)


def test_tree_round_trip():
    tree = lg.build_tree(lg.circle_arc(0.05), 3)
    again = lg.import_tree(tree.export())
    assert again.export() == tree.export()


def test_parabola_is_refused():
    arc = lg.parabola_arc(1.0)
    assert not lg.hypotheses_hold(arc)
    report = lg.verify_report(arc, depth=4)
    assert report["passed"] is False


def test_classify_and_field():
    regions = lg.Regions(lg.build_tree(lg.circle_arc(0.05), 3))
    tag, component = regions.classify(0.025, 1e-6, 3)
    assert tag == "outside" and component == 0
    tree = lg.build_tree(lg.circle_arc(0.05), 3)
    leaf = tree.level(3)[2]
    x = 0.5 * (leaf.a + leaf.b)
    arc = lg.circle_arc(0.05)
    tag, component = regions.classify(x, arc.f(x) - 1e-12, 3)
    assert (tag, component) == ("cap", 3)
    vx, vy = regions.v_field(x, arc.f(x) - 1e-12, 3)
    assert abs(math.hypot(vx, vy) - 1.0) < 1e-12


def test_small_disc_solve():
    rep = lg.solve_disc_arc(0.5, 64, tolerance=1e-3)
    assert rep.converged
    assert abs(rep.tv - 1.0) < 0.1


def test_bad_input_raises():
    with pytest.raises(lg.RefusedError):
        lg.build_tree(lg.circle_arc(0.05), -1)
    assert math.isfinite(lg.fatness_product(3))
