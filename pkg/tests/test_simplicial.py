"""Constructors, colimits and smash products of finite simplicial sets."""

import itertools

import pytest

from spectralcat.errors import BudgetExceededError
from spectralcat import simplicial as ss


def test_standard_complex_counts():
    assert ss.standard_simplex(2).size() == 7
    assert ss.boundary(2).size() == 6
    assert ss.horn(2, 1).size() == 5
    assert ss.standard_simplex(2).validate()
    assert ss.boundary(3).validate()
    for k in range(3):
        assert ss.horn(2, k).validate()


def test_horn_contains_faces_through_chosen_vertex():
    h = ss.horn(2, 1)
    assert set(h.nondeg(1)) == {(0, 1), (1, 2)}
    assert set(h.nondeg(0)) == {(0,), (1,), (2,)}
    with pytest.raises(ValueError):
        ss.horn(0, 0)


def test_circle_and_point():
    c = ss.circle()
    assert c.space.size() == 2
    assert c.space.validate()
    e = ((), (1, "e"))
    assert c.space.face(e, 0) == c.space.face(e, 1) == ((), (0, "*"))


def test_plus_adds_one_vertex():
    for space in [ss.EMPTY, ss.standard_simplex(0), ss.boundary(2)]:
        p = ss.plus(space)
        assert len(p.space.nondeg(0)) == len(space.nondeg(0)) + 1
        assert p.space.validate()
    # the two-point sphere is the point with a disjoint basepoint
    assert ss.plus(ss.standard_simplex(0)).space.size() == 2


def _delta1_product_count_oracle():
    # Simplices of D[1] x D[1] in dimension n are pairs of monotone 0/1
    # sequences of length n+1; nondegenerate when no consecutive repeat of
    # the combined pair.  Counted from scratch.
    total = 0
    for n in range(0, 3):
        seqs = [s for s in itertools.product((0, 1), repeat=n + 1) if all(s[i] <= s[i + 1] for i in range(n))]
        for a in seqs:
            for b in seqs:
                if all((a[i], b[i]) != (a[i + 1], b[i + 1]) for i in range(n)):
                    total += 1
    return total


def test_square_has_eleven_nondegenerate_simplices():
    expected = _delta1_product_count_oracle()
    assert expected == 11
    d1 = ss.standard_simplex(1)
    prod = ss.multi_product([d1, d1])
    assert prod.space.size() == 11
    assert len(prod.space.nondeg(0)) == 4
    assert len(prod.space.nondeg(1)) == 5
    assert len(prod.space.nondeg(2)) == 2
    assert prod.space.validate()


def test_product_with_point_is_isomorphic():
    x = ss.boundary(2)
    prod = ss.multi_product([x, ss.standard_simplex(0)])
    assert [len(prod.space.nondeg(n)) for n in range(3)] == [
        len(x.nondeg(n)) for n in range(3)
    ]
    assert prod.space.validate()


def test_discrete_product():
    two = ss.boundary(1)
    prod = ss.multi_product([two, two])
    assert prod.space.size() == 4
    assert prod.space.dim == 0


def test_product_projections_satisfy_universal_property():
    d1 = ss.standard_simplex(1)
    prod = ss.multi_product([d1, d1])
    for t in range(2):
        prod.projections[t].validate()
    # pairing a test map with itself lands on the diagonal
    diag = prod.pair([SSM_id(d1), SSM_id(d1)], d1)
    diag.validate()
    for t in range(2):
        assert diag.then(prod.projections[t]).images == SSM_id(d1).images


def SSM_id(space):
    return ss.SSetMap.identity(space)


def test_pushout_along_identities_returns_same_shape():
    x = ss.boundary(2)
    po = ss.pushout(SSM_id(x), SSM_id(x))
    assert po.space.size() == x.size()
    po.left.validate()
    assert po.left.images == po.right.images


def test_quotient_delta1_by_boundary_is_circle():
    d1 = ss.standard_simplex(1)
    q, proj = ss.quotient_subcomplex(d1, [(0, (0,)), (0, (1,))])
    assert len(q.space.nondeg(0)) == 1
    assert len(q.space.nondeg(1)) == 1
    assert q.space.validate()
    proj.validate()


def test_glue_two_intervals_at_a_vertex():
    d1 = ss.standard_simplex(1)
    pt = ss.standard_simplex(0)
    v0 = ss.SSetMap(pt, d1, {(0, (0,)): ((), (0, (0,)))})
    po = ss.pushout(v0, v0)
    assert len(po.space.nondeg(0)) == 3
    assert len(po.space.nondeg(1)) == 2
    assert po.space.validate()


def test_coequalize_collapse_makes_degenerate_classes():
    # collapsing the boundary of an interval forces both endpoints into one
    # class; the edge survives as a loop
    d1 = ss.standard_simplex(1)
    pairs = [(((), (0, (0,))), ((), (0, (1,))))]
    q = ss.coequalize(d1, pairs)
    assert len(q.space.nondeg(0)) == 1
    assert len(q.space.nondeg(1)) == 1
    q.proj.validate()


def test_wedge_of_circles():
    w = ss.wedge([ss.circle(), ss.circle()])
    assert len(w.pointed.space.nondeg(0)) == 1
    assert len(w.pointed.space.nondeg(1)) == 2
    assert w.pointed.space.validate()
    for inj in w.injections:
        inj.validate()


def test_smash_unit_and_zero():
    x = ss.plus(ss.boundary(2))
    unit = ss.smash_many([ss.sphere0(), x])
    assert unit.space.size() == x.space.size()
    zero = ss.smash_many([ss.pointed_point(), x])
    assert zero.space.size() == 1


def test_sphere_smash_structure():
    # the smash of two one-edge circles: one vertex, the diagonal edge, and
    # the two shuffle triangles (computed by hand from the torus)
    s2 = ss.sphere(2)
    assert [len(s2.space.nondeg(n)) for n in range(3)] == [1, 1, 2]
    assert s2.space.validate()
    assert ss.sphere(3).space.validate()


def test_smash_map_functorial():
    c = ss.circle()
    sq = ss.smash_many([c, c])
    ident = ss.smash_map([SSM_id(c.space), SSM_id(c.space)], sq, sq)
    assert ident.images == SSM_id(sq.space).images


def test_mapping_cylinder_of_identity():
    c = ss.circle()
    f = SSM_id(c.space)
    z, front, proj = ss.mapping_cylinder(f, c, c)
    assert front.then(proj).images == f.images
    assert front.is_injective()
    z.space.validate()
    front.validate()
    proj.validate()


def test_mapping_cylinder_of_collapse():
    s0 = ss.sphere0()
    pt = ss.pointed_point()
    f = ss.constant_map(s0.space, pt)
    z, front, proj = ss.mapping_cylinder(f, s0, pt)
    assert front.then(proj).images == f.images
    assert front.is_injective()
    z.space.validate()


def test_size_budget_aborts_blowups():
    old = ss.set_size_budget(30)
    try:
        with pytest.raises(BudgetExceededError):
            ss.multi_product([ss.standard_simplex(2), ss.standard_simplex(2)])
    finally:
        ss.set_size_budget(old)


def test_simplicial_identities_on_random_faces():
    # every constructed object satisfies the identities; validate() checks them
    for builder in [
        lambda: ss.multi_product([ss.standard_simplex(1), ss.boundary(2)]).space,
        lambda: ss.smash_many([ss.circle(), ss.sphere0()]).space,
        lambda: ss.sphere(2).space,
    ]:
        assert builder().validate()
