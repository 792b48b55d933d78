from itertools import combinations

from wimanedge.delpezzo import (K_S, ZERO, act_on_label, automorphisms, cycles_of_length, double_point_count,
                                euler_ledger, fiber_classes, girth, intersection_graph, line_classes,
                                log_cotangent_chern, pentagon_cubics, pentagon_quadrics, segre_degree,
                                sigma11_degree, solve_relation, virtual_normal_chern, ChernElement, PicardClass)


def test_exceptional_classes():
    lines = line_classes()
    assert len(lines) == 10
    assert all(c.square == -1 and c.dot(K_S) == -1 for c, _ in lines)
    assert sum((c for c, _ in lines), ZERO) == K_S * -2
    assert K_S.square == 5


def test_adjacency_is_label_disjointness():
    lines = line_classes()
    for (a, la), (b, lb) in combinations(lines, 2):
        assert (a.dot(b) == 1) == (not (la & lb))
        assert a.dot(b) in (0, 1)


def test_petersen_graph():
    verts, edges = intersection_graph()
    assert len(verts) == 10 and len(edges) == 15
    assert girth(verts, edges) == 5
    assert len(cycles_of_length(verts, edges, 5)) == 12
    assert len(automorphisms(verts, edges)) == 120


def test_s5_acts_by_relabelling():
    verts, edges = intersection_graph()
    p = (2, 3, 1, 5, 4)
    images = {v: act_on_label(p, v) for v in verts}
    assert all(frozenset(images[x] for x in e) in edges for e in edges)


def test_conic_bundles():
    fibs = fiber_classes()
    assert len(fibs) == 5
    assert all(f.square == 0 and f.dot(-K_S) == 2 for f in fibs)
    assert all(f.dot(g) == 1 for f, g in combinations(fibs, 2))


def test_chern_numbers():
    c = log_cotangent_chern()
    assert PicardClass(tuple(int(v) for v in c.c2)) == -K_S and c.c4 == 2
    assert sigma11_degree() == 18
    assert virtual_normal_chern() == ChernElement.of(1, K_S * -7, 103)
    assert double_point_count()[0] - double_point_count()[1] == -28
    assert segre_degree() == 20


def test_euler_ledger():
    led = euler_ledger()
    assert (led.left, led.reducible, led.irreducible) == (47, 35, 12)


def test_pentagon_cubics():
    f, fp = pentagon_cubics()
    prods = {a * b for a, b in zip(f, fp)}
    assert len(prods) == 1
    for g in fp:
        assert solve_relation(g, f) is not None


def test_pentagon_quadrics_vanish_on_image():
    f, _ = pentagon_cubics()
    for q in pentagon_quadrics():
        assert q.substitute(f).is_zero()
        assert q.homogeneous_degree() == 2


def test_cubics_span_the_cubics_through_the_points():
    # the six cubics vanish at the 4 points e_i plus (1:1:1)
    f, _ = pentagon_cubics()
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    for g in f:
        assert all(not g.evaluate(p) for p in pts)
