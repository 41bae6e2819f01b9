"""Free spectra, smash products, cylinders and lifting censuses."""

import itertools
import math

import pytest

from spectralcat import spectra as sp
from spectralcat.errors import TruncationError
from spectralcat.homology import homology
from spectralcat.lifting import enumerate_maps, is_kan
from spectralcat.simplicial import (
    SSetMap,
    boundary,
    plus,
    standard_simplex,
)


def brute_spectrum_maps(D, X):
    """Oracle: all levelwise families of pointed maps, filtered by the axioms.

    Completely independent of the propagation-based enumerator: it takes
    the full cartesian product of levelwise map sets and keeps the families
    that commute with every action generator and structure map.
    """
    per_level = [
        enumerate_maps(D.levels[n].space, X.levels[n].space, pointed=(D.levels[n], X.levels[n]))
        for n in range(D.N + 1)
    ]
    out = []
    for family in itertools.product(*per_level):
        ok = True
        for n in range(D.N + 1):
            for gd, gx in zip(D.actions[n], X.actions[n]):
                if gd.then(family[n]).images != family[n].then(gx).images:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for n in range(D.N):
                sm = D.smash1(n)
                xsm = X.smash1(n)
                for ref in sm.space.refs():
                    if ref == sm.pointed.base:
                        continue
                    c, w = sm.resolve(ref)
                    lhs = family[n + 1].apply(D.structures[n].apply(((), ref)))
                    rhs = X.structures[n].apply(xsm.classify([c, family[n].apply(w)]))
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(family)
    return out


def test_free_sphere_levels_are_wedges_of_circles():
    # (F_m S^0)_{m+1} is a wedge of (m+1)! circles
    for m in (0, 1, 2):
        free = sp.free_spectrum(m, sp.S0, m + 1)
        lvl = free.spectrum.levels[m + 1].space
        assert len(lvl.nondeg(0)) == 1
        assert len(lvl.nondeg(1)) == math.factorial(m + 1)
        h = homology(lvl, 1)
        assert h.betti(1) == math.factorial(m + 1)


def test_free_level_two_of_f1():
    free = sp.free_spectrum(1, sp.S0, 2)
    lvl = free.spectrum.levels[2].space
    assert len(lvl.nondeg(1)) == 2  # two placements of the generating slot


def test_suspension_spectrum_levels():
    # m = 0: level n is seed ^ S^n; counts match the direct smash
    from spectralcat.simplicial import smash_many, circle

    seed = plus(boundary(1))
    free = sp.free_spectrum(0, seed, 2)
    for n in range(3):
        direct = smash_many([circle()] * n + [seed])
        assert free.spectrum.levels[n].space.size() == direct.space.size()


def test_constructors_pass_coherence_checks():
    assert sp.check_spectrum(sp.point_spectrum(3)) == []
    assert sp.check_spectrum(sp.sphere_spectrum(3)) == []
    for m in (0, 1, 2):
        assert sp.check_spectrum(sp.free_spectrum(m, sp.S0, 3).spectrum) == []
    assert sp.check_spectrum(sp.free_spectrum(1, plus(standard_simplex(1)), 2).spectrum) == []


def test_sphere_spectrum_homology():
    # reduced homology of level n is one copy of the integers in degree n
    S = sp.sphere_spectrum(3)
    h0 = homology(S.levels[0].space, 1)
    assert h0.betti(0) == 2  # two points; reduced rank one
    for n in range(1, 4):
        h = homology(S.levels[n].space, n)
        assert h.betti(0) == 1
        assert h.betti(n) == 1 and not h.torsion(n)
        for d in range(1, n):
            assert h.betti(d) == 0 and not h.torsion(d)


def test_sphere_agrees_with_free_unit():
    # canonical identification with F_0 S^0, levelwise
    S = sp.sphere_spectrum(2)
    F = sp.free_spectrum(0, sp.S0, 2).spectrum
    for n in range(3):
        assert S.levels[n].space.size() == F.levels[n].space.size()
    assert len(sp.enumerate_spectrum_maps(F, S)) == len(sp.enumerate_spectrum_maps(S, S))


def test_truncation_guard():
    S = sp.sphere_spectrum(2)
    with pytest.raises(TruncationError):
        S.level(3)
    with pytest.raises(TruncationError):
        sp.loop_comparison(2, 2)


def test_loop_comparison_levels():
    lam = sp.loop_comparison(0, 2)
    # source level 0 is the basepoint
    assert lam.source.levels[0].space.size() == 1
    # level 1: the circle sits inside (F_0 S^0)_1 injectively
    comp = lam.components[1]
    assert comp.is_injective()
    lam.validate()


def test_lambda_identity_summand():
    # level m+1 of the target restricted along the map contains an honest circle
    lam = sp.loop_comparison(1, 2)
    comp = lam.components[2]
    src = lam.source.levels[2].space
    hit = {comp.apply(((), ref)) for ref in src.refs()}
    assert all(img[0] == () for img in hit)  # injective placement, no collapse


def test_cylinder_factorization():
    lam = sp.loop_comparison(0, 2)
    z, front, proj = sp.cylinder_factorization(lam)
    assert front.then(proj) == lam
    assert front.is_injective()
    assert sp.check_spectrum(z) == []
    # the cylinder retracts onto the target
    h_z = homology(z.levels[1].space, 1)
    h_t = homology(lam.target.levels[1].space, 1)
    assert h_z == h_t


def test_cylinder_pushout_product_injective():
    k = sp.cylinder_pushout_product(0, 1, 2)
    assert k.is_injective()
    k.validate()


def test_pushout_product_at_zero_reduces_to_cylinder_front():
    k0 = sp.cylinder_pushout_product(0, 0, 2)
    lam = sp.loop_comparison(0, 2)
    z, front, _ = sp.cylinder_factorization(lam)
    for n in range(3):
        assert k0.source.levels[n].space.size() == front.source.levels[n].space.size()
        assert k0.target.levels[n].space.size() == front.target.levels[n].space.size()
    assert k0.is_injective()


def test_free_horn_inclusion_shape():
    f = sp.free_horn_inclusion(1, 1, 2, 2)
    assert f.source.levels[0].space.size() == 1
    # level m carries the horn inclusion on each placement summand
    assert f.is_injective()
    f.validate()


def test_adjunction_counts_against_brute_force():
    targets = [
        sp.free_spectrum(1, sp.S0, 2).spectrum,
        sp.sphere_spectrum(2),
        sp.point_spectrum(2),
    ]
    seeds = [sp.S0, plus(standard_simplex(0)), plus(boundary(1))]
    for m in (0, 1):
        for seed in seeds:
            D = sp.free_spectrum(m, seed, 2).spectrum
            for X in targets:
                fast = sp.enumerate_spectrum_maps(D, X)
                slow = brute_spectrum_maps(D, X)
                assert len(fast) == len(slow)
                expected = len(
                    enumerate_maps(seed.space, X.levels[m].space, pointed=(seed, X.levels[m]))
                )
                assert len(fast) == expected


def test_enumeration_is_deterministic():
    D = sp.free_spectrum(1, sp.S0, 2).spectrum
    X = sp.sphere_spectrum(2)
    a = [m.serialize() for m in sp.enumerate_spectrum_maps(D, X)]
    b = [m.serialize() for m in sp.enumerate_spectrum_maps(D, X)]
    assert a == b


def test_rlp_against_point_spectrum():
    pt = sp.point_spectrum(2)
    for m in (0, 1):
        for n in (1, 2):
            for k in range(n + 1):
                assert sp.spectrum_rlp(sp.free_horn_inclusion(m, k, n, 2), pt).ok


def test_omega_shape_census():
    pt = sp.point_spectrum(2)
    assert sp.is_omega_shape(pt, 1, 2).verdict
    bad = sp.free_spectrum(0, plus(standard_simplex(1)), 2).spectrum
    rep = sp.is_omega_shape(bad, 1, 2, include_cylinders=False)
    assert not rep.verdict
    assert rep.failures()[0][0][0] == "FI"


def test_omega_verdict_monotone_in_bounds():
    bad = sp.free_spectrum(0, plus(standard_simplex(1)), 2).spectrum
    small = sp.is_omega_shape(bad, 0, 2, include_cylinders=False)
    large = sp.is_omega_shape(bad, 1, 2, include_cylinders=False)
    if not small.verdict:
        assert not large.verdict


def test_horn_rlp_matches_level_kan():
    cases = [
        sp.point_spectrum(2),
        sp.sphere_spectrum(2),
        sp.free_spectrum(0, plus(standard_simplex(1)), 2).spectrum,
    ]
    for X in cases:
        for m in (0, 1):
            kan = is_kan(X.levels[m].space, 2).ok
            rlp = all(
                sp.spectrum_rlp(sp.free_horn_inclusion(m, k, n, 2), X).ok
                for n in (1, 2)
                for k in range(n + 1)
            )
            assert kan == rlp


def test_day_smash_level_two_cells():
    f1 = sp.free_spectrum(1, sp.S0, 2).spectrum
    day = sp.smash_spectra(f1, f1)
    lvl = day.spectrum.levels[2].space
    assert len(lvl.nondeg(0)) == 3  # basepoint plus two summand vertices
    assert lvl.dim == 0
    assert sp.check_spectrum(day.spectrum) == []


def test_day_unit_comparison_is_levelwise_bijection():
    S = sp.sphere_spectrum(2)
    for X in [sp.free_spectrum(1, sp.S0, 2).spectrum, sp.free_spectrum(0, plus(boundary(1)), 2).spectrum]:
        day = sp.smash_spectra(S, X)
        to_x, from_x = sp.unit_comparison(day, X)
        to_x.validate()
        from_x.validate()
        assert from_x.then(to_x) == sp.SpectrumMap.identity(X)
        for n in range(3):
            assert day.spectrum.levels[n].space.size() == X.levels[n].space.size()
        assert to_x.is_injective()


def test_day_symmetry_involution():
    S = sp.sphere_spectrum(2)
    X = sp.free_spectrum(1, sp.S0, 2).spectrum
    xy = sp.smash_spectra(S, X)
    yx = sp.smash_spectra(X, S)
    swap = sp.symmetry_comparison(xy, yx)
    swap.validate()
    back = sp.symmetry_comparison(yx, xy)
    assert swap.then(back) == sp.SpectrumMap.identity(xy.spectrum)
    assert swap.is_injective()
