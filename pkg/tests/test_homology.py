"""Smith normal form and simplicial homology."""

from spectralcat import simplicial as ss
from spectralcat.homology import (
    HomologyResult,
    homology,
    homology_iso_upto,
    pi0,
    pi0_bijective,
    smith_invariant_factors,
)


def test_smith_hand_values():
    assert smith_invariant_factors([[2, 4], [6, 8]]) == [2, 4]
    assert smith_invariant_factors([[1, 0], [0, 1]]) == [1, 1]
    assert smith_invariant_factors([[0, 0], [0, 0]]) == []
    assert smith_invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariant_factors([[6]]) == [6]


def test_smith_determinant_and_gcd_invariants():
    # d_1 = gcd of entries, product of factors = gcd of maximal minors
    import itertools
    import math
    import random

    rng = random.Random(11)
    for _ in range(40):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        m = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)]
        fs = smith_invariant_factors(m)
        for i in range(len(fs) - 1):
            assert fs[i + 1] % fs[i] == 0 or fs[i + 1] == 0
        entries = [abs(v) for row in m for v in row if v]
        if entries:
            assert fs[0] == math.gcd(*entries) if len(entries) > 1 else entries[0]
        else:
            assert fs == []


def expect(*pairs):
    return HomologyResult({d: (b, tuple(t)) for d, (b, t) in enumerate(pairs)})


def test_boundary_of_tetrahedron_is_a_two_sphere():
    h = homology(ss.boundary(3), 2)
    assert h == expect((1, ()), (0, ()), (1, ()))


def test_simplices_are_contractible():
    for n in range(4):
        h = homology(ss.standard_simplex(n), 3)
        assert h.betti(0) == 1
        assert all(h.betti(d) == 0 and not h.torsion(d) for d in range(1, 4))


def test_two_points():
    h = homology(ss.boundary(1), 1)
    assert h.betti(0) == 2


def test_projective_plane_torsion():
    # triangulation with 6 vertices and 10 triangles
    tris = [
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
        (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5),
    ]
    simplices = {0: [(v,) for v in range(6)], 1: set(), 2: []}
    for t in tris:
        simplices[2].append(t)
        for i in range(3):
            simplices[1].add(t[:i] + t[i + 1:])
    simplices[1] = sorted(simplices[1])
    faces = {}
    for v in simplices[0]:
        faces[(0, v)] = ()
    for e in simplices[1]:
        faces[(1, e)] = (((), (0, e[1:])), ((), (0, e[:1])))
    for t in simplices[2]:
        faces[(2, t)] = tuple(((), (1, t[:i] + t[i + 1:])) for i in range(3))
    rp2 = ss.SimplicialSet(simplices, faces, validate=True)
    h = homology(rp2, 2)
    assert h == expect((1, ()), (0, (2,)), (0, ()))


def test_smash_spheres_have_sphere_homology():
    for n in range(1, 4):
        h = homology(ss.sphere(n).space, n)
        assert h.betti(0) == 1
        for d in range(1, n):
            assert h.betti(d) == 0 and not h.torsion(d)
        assert h.betti(n) == 1 and not h.torsion(n)


def test_quotient_simplex_by_boundary_matches_sphere():
    for n in range(1, 4):
        dn = ss.standard_simplex(n)
        gens = [(n - 1, lab) for lab in ss.boundary(n).nondeg(n - 1)]
        q, _ = ss.quotient_subcomplex(dn, gens)
        assert homology(q.space, n) == homology(ss.sphere(n).space, n)


def test_cylinder_of_collapse_is_contractible():
    s0 = ss.sphere0()
    pt = ss.pointed_point()
    f = ss.constant_map(s0.space, pt)
    z, front, proj = ss.mapping_cylinder(f, s0, pt)
    h = homology(z.space, 2)
    assert h.betti(0) == 1
    assert all(h.betti(d) == 0 and not h.torsion(d) for d in (1, 2))


def test_pi0_counts():
    assert len(set(pi0(ss.boundary(1)).values())) == 2
    for n in range(3):
        assert len(set(pi0(ss.standard_simplex(n)).values())) == 1
    assert len(set(pi0(ss.circle().space).values())) == 1


def test_pi0_bijective_detects_merges():
    two = ss.boundary(1)
    pt = ss.standard_simplex(0)
    assert pi0_bijective(ss.SSetMap.identity(two))
    collapse = ss.SSetMap(two, pt, {(0, lab): ((), (0, (0,))) for lab in two.nondeg(0)})
    assert not pi0_bijective(collapse)


def test_homology_iso_exact():
    # identity is an iso; collapsing the two-point space is not
    x = ss.boundary(2)
    assert homology_iso_upto(ss.SSetMap.identity(x), 2)
    two = ss.boundary(1)
    pt = ss.standard_simplex(0)
    collapse = ss.SSetMap(two, pt, {(0, lab): ((), (0, (0,))) for lab in two.nondeg(0)})
    assert not homology_iso_upto(collapse, 1)
    # a homotopy equivalence that is not an isomorphism of objects
    d1 = ss.standard_simplex(1)
    to_pt = ss.SSetMap(
        d1, pt, {ref: (ss.full_degeneracy(ref[0]), (0, (0,))) for ref in d1.refs()}
    )
    assert homology_iso_upto(to_pt, 2)
