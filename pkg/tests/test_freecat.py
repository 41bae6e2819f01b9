"""Free categories on graphs, factorization, and component categories."""

import random

import pytest

from spectralcat import enriched as en
from spectralcat import freecat as fc
from spectralcat import spectra as sp


def cycle_graph():
    # x -> y -> x with a loop at y
    return fc.Graph(
        ["x", "y"],
        [("e1", "x", "y"), ("e2", "y", "x"), ("e3", "y", "y")],
    )


def test_word_enumeration():
    g = cycle_graph()
    words = fc.free_category_words(g, "x", "x", 4)
    assert words == [
        (),
        ("e1", "e2"),
        ("e1", "e3", "e2"),
        ("e1", "e2", "e1", "e2"),
        ("e1", "e3", "e3", "e2"),
    ]
    assert fc.free_category_words(g, "x", "x", 0) == [()]
    two = fc.Graph(["x", "y"], [("a", "x", "y"), ("b", "x", "y")])
    assert len(fc.free_category_words(two, "x", "y", 1)) == 2


def test_primitive_loops():
    g = cycle_graph()
    loops = fc.primitive_loops(g, "x", 4)
    assert loops == [("e1", "e2"), ("e1", "e3", "e2"), ("e1", "e3", "e3", "e2")]
    single = fc.Graph(["x"], [("e", "x", "x")])
    assert fc.primitive_loops(single, "x", 3) == [("e",)]
    acyclic = fc.Graph(["x", "y"], [("a", "x", "y")])
    assert fc.primitive_loops(acyclic, "x", 4) == []


def test_factorize_single_block():
    g = cycle_graph()
    cert = fc.factorize(g, "x", ("e1", "e3", "e2"))
    assert cert.blocks == (("e1", "e3", "e2"),)
    assert cert.alternatives == 1


def test_factorize_two_blocks():
    g = cycle_graph()
    word = ("e1", "e2", "e1", "e3", "e2")
    cert = fc.factorize(g, "x", word)
    assert cert.blocks == (("e1", "e2"), ("e1", "e3", "e2"))
    assert cert.cuts == (2, 5)
    assert cert.alternatives == 1


def test_factorize_identity_word():
    g = cycle_graph()
    cert = fc.factorize(g, "x", ())
    assert cert.blocks == ()
    assert cert.alternatives == 1


def test_factorize_rejects_non_loops():
    g = cycle_graph()
    with pytest.raises(ValueError):
        fc.factorize(g, "x", ("e1",))


def random_graph(rng, max_v=5, max_e=8):
    nv = rng.randrange(1, max_v + 1)
    vertices = ["v%d" % i for i in range(nv)]
    edges = []
    for e in range(rng.randrange(0, max_e + 1)):
        edges.append(("g%d" % e, rng.choice(vertices), rng.choice(vertices)))
    return fc.Graph(vertices, edges)


def test_factorization_exists_and_unique_on_random_graphs():
    rng = random.Random(31)
    checked = 0
    for _ in range(12):
        g = random_graph(rng)
        x = rng.choice(g.vertices)
        for word in fc.free_category_words(g, x, x, 5):
            cert = fc.factorize(g, x, word)
            assert sum(cert.blocks, ()) == word
            assert cert.alternatives == 1
            checked += 1
    assert checked > 10


def test_generator_minimality():
    g = cycle_graph()
    loops = fc.primitive_loops(g, "x", 6)
    loop_set = set(loops)
    for w in loops:
        # no primitive loop is a concatenation of shorter primitive loops
        for cut in range(1, len(w)):
            assert not (w[:cut] in loop_set and w[cut:] in loop_set)


def two_object_iso_category():
    objects = ("p", "q")
    homs = {
        ("p", "p"): ("id_p",),
        ("q", "q"): ("id_q",),
        ("p", "q"): ("f",),
        ("q", "p"): ("g",),
    }
    comp = {}
    def set_comp(x, y, z, f, g, h):
        comp[(x, y, z, f, g)] = h
    for x in objects:
        for y in objects:
            for f in homs[(x, y)]:
                set_comp(x, x, y, "id_" + x, f, f)
                set_comp(x, y, y, f, "id_" + y, f)
    set_comp("p", "q", "p", "f", "g", "id_p")
    set_comp("q", "p", "q", "g", "f", "id_q")
    return fc.FiniteCategory(objects, homs, comp, {"p": "id_p", "q": "id_q"})


def test_essentially_surjective():
    cat = two_object_iso_category()
    assert cat.check().ok
    assert fc.essentially_surjective(fc.FiniteFunctor.identity(cat))
    # the inclusion of one object hits everything up to isomorphism
    sub = fc.FiniteCategory(("p",), {("p", "p"): ("id_p",)}, {("p", "p", "p", "id_p", "id_p"): "id_p"}, {"p": "id_p"})
    incl = fc.FiniteFunctor(sub, cat, {"p": "p"}, {("p", "p", "id_p"): "id_p"})
    assert fc.essentially_surjective(incl)
    # but not into a discrete two-object category
    disc = fc.FiniteCategory(
        ("p", "q"),
        {("p", "p"): ("id_p",), ("q", "q"): ("id_q",), ("p", "q"): (), ("q", "p"): ()},
        {
            ("p", "p", "p", "id_p", "id_p"): "id_p",
            ("q", "q", "q", "id_q", "id_q"): "id_q",
        },
        {"p": "id_p", "q": "id_q"},
    )
    incl2 = fc.FiniteFunctor(sub, disc, {"p": "p"}, {("p", "p", "id_p"): "id_p"})
    assert not fc.essentially_surjective(incl2)


def test_level0_and_pi0_category():
    V = en.TruncatedSpectra(2)
    a = en.unit_category(V)
    lvl0 = fc.level0_category(a)
    assert lvl0.V.kind == "ssets"
    # the sphere spectrum has the two-point set at level zero
    assert lvl0.hom("*", "*").space.size() == 2
    cat = fc.pi0_category(lvl0)
    assert cat.check().ok
    assert len(cat.hom("*", "*")) == 2  # base component and unit component


def test_pi0_composition_independent_of_representatives():
    # a hom with two vertices in one component: join them by an edge
    from spectralcat.simplicial import SimplicialSet, PointedSSet
    from spectralcat.enriched import Bimorphism, VCategory, PointedSimplicialSets
    from spectralcat.simplicial import full_degeneracy

    V = en.PointedSimplicialSets()
    space = SimplicialSet(
        {0: ["*", "1", "u"], 1: ["h"]},
        {(0, "*"): (), (0, "1"): (), (0, "u"): (), (1, "h"): (((), (0, "u")), ((), (0, "1")))},
    )
    hom = PointedSSet(space, (0, "*"))

    def fn(u, v):
        # unit vertex acts as identity on classes; everything stays put
        d = len(u[0]) + u[1][0]
        if u[1] == (0, "*") or v[1] == (0, "*"):
            return (full_degeneracy(d), (0, "*"))
        if u[1] == (0, "1"):
            return v
        if v[1] == (0, "1"):
            return u
        if u[1][0] == 0 and v[1][0] == 0:
            return (full_degeneracy(d), (0, "u")) if d else ((), (0, "u"))
        return u

    comp = Bimorphism(V, (hom, hom), hom, fn)
    a = VCategory(V, ["*"], {("*", "*"): hom}, {("*", "*", "*"): comp}, {"*": ((), (0, "1"))})
    cat = fc.pi0_category(a)
    assert cat.check().ok
    assert len(cat.hom("*", "*")) == 2  # the edge glues 1 and u


def test_bracket_category_requires_certificate():
    V = en.TruncatedSpectra(2)
    a = en.unit_category(V)
    good = sp.is_omega_shape(sp.point_spectrum(2), 0, 1)
    bad = sp.is_omega_shape(
        sp.free_spectrum(0, sp.plus(sp.standard_simplex(1)), 2).spectrum,
        0,
        2,
        include_cylinders=False,
    )
    with pytest.raises(ValueError):
        fc.bracket_category(a, {})
    with pytest.raises(ValueError):
        fc.bracket_category(a, {("*", "*"): bad})
    cat = fc.bracket_category(a, {("*", "*"): good})
    assert len(cat.hom("*", "*")) == 2


def test_level_surrogates_on_functors():
    V = en.TruncatedSpectra(2)
    a = en.unit_category(V)
    ident = en.VFunctor.identity(a)
    assert fc.check_level_equivalence_surrogate(ident, 2).ok
    assert fc.check_level_fibration(ident, 2).ok
    # collapsing the sphere to the point drops homology rank at level 0
    pt_cat = en.VCategory(
        V,
        ["*"],
        {("*", "*"): V.zero()},
        {("*", "*", "*"): en.zero_bimorphism(V, V.zero(), V.zero(), V.zero())},
        {"*": (0, ((), V.zero().levels[0].base))},
    )
    collapse = en.VFunctor(
        V, a, pt_cat, {"*": "*"}, {("*", "*"): V.constant(a.hom("*", "*"), V.zero())}
    )
    assert not fc.check_level_equivalence_surrogate(collapse, 1).ok
