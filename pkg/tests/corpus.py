"""Seeded random instance generators shared by the property and acceptance tests."""

import itertools
import random

from spectralcat import enriched as en
from spectralcat import filtration as fl
from spectralcat import spectra as sp
from spectralcat.enriched import (
    Bimorphism,
    PSet,
    PSetMap,
    VCategory,
    left_unit_bimorphism,
    right_unit_bimorphism,
    two_object_category,
    unit_category,
    unit_unit_bimorphism,
    zero_bimorphism,
)
from spectralcat.simplicial import (
    PointedSSet,
    SimplicialSet,
    SSetMap,
    boundary,
    horn,
    plus,
    standard_simplex,
)


# --- pointed sets ------------------------------------------------------------------


def transformation_monoid(rng, ground=3, generators=2, cap=5):
    """A small monoid of functions on a finite set, closed under composition."""
    fns = {tuple(range(ground))}
    gens = [
        tuple(rng.randrange(ground) for _ in range(ground)) for _ in range(generators)
    ]
    frontier = list(gens)
    fns.update(gens)
    while frontier and len(fns) <= cap:
        f = frontier.pop()
        for g in list(fns):
            for h in (tuple(g[f[i]] for i in range(ground)), tuple(f[g[i]] for i in range(ground))):
                if h not in fns:
                    fns.add(h)
                    frontier.append(h)
    if len(fns) > cap + 1:
        return None
    return fns


def monoid_category(V, fns):
    """A one-object category over pointed sets from a function monoid."""
    ident = tuple(range(len(next(iter(fns)))))
    elems = ["f%d" % i for i in range(len(fns))]
    order = sorted(fns)
    name = {f: "f%d" % i for i, f in enumerate(order)}
    hom = PSet(list(name.values()))
    back = {v: k for k, v in name.items()}

    def fn(u, v):
        if u == hom.base or v == hom.base:
            return hom.base
        f, g = back[u], back[v]
        return name[tuple(g[f[i]] for i in range(len(f)))]

    comp = Bimorphism(V, (hom, hom), hom, fn)
    return VCategory(V, ["*"], {("*", "*"): hom}, {("*", "*", "*"): comp}, {"*": name[ident]})


def square_zero_sets_category(rng, V, max_objects=2, max_extra=3):
    """Units plus square-zero composition on random pointed sets."""
    k = rng.randrange(1, max_objects + 1)
    objects = ["o%d" % i for i in range(k)]
    homs = {}
    units = {}
    for x in objects:
        for y in objects:
            extra = ["%s%s%d" % (x, y, i) for i in range(rng.randrange(0, max_extra + 1))]
            if x == y:
                homs[(x, y)] = PSet(["1" + x] + extra)
                units[x] = "1" + x
            else:
                homs[(x, y)] = PSet(extra)
    comps = {}
    for x in objects:
        for y in objects:
            for z in objects:
                hx, hy, hz = homs[(x, y)], homs[(y, z)], homs[(x, z)]

                def fn(u, v, x=x, y=y, z=z, hx=hx, hy=hy, hz=hz):
                    if u == hx.base or v == hy.base:
                        return hz.base
                    if x == y and u == "1" + x:
                        return v
                    if y == z and v == "1" + y:
                        return u
                    return hz.base

                comps[(x, y, z)] = Bimorphism(V, (hx, hy), hz, fn)
    return VCategory(V, objects, homs, comps, units)


def random_sets_category(rng, V):
    roll = rng.randrange(3)
    if roll == 0:
        fns = None
        while fns is None:
            fns = transformation_monoid(rng, ground=rng.randrange(2, 4), generators=rng.randrange(1, 3))
        return monoid_category(V, fns)
    if roll == 1:
        return square_zero_sets_category(rng, V)
    return two_object_category(V, PSet(["m%d" % i for i in range(rng.randrange(0, 4))]))


def random_sets_attachment(rng, V=None):
    """A random attachment over pointed finite sets within the stated caps."""
    V = V or en.PointedSets()
    A = random_sets_category(rng, V)
    n_k = rng.randrange(0, 3)
    n_l = rng.randrange(1, 3)
    K = PSet(["k%d" % i for i in range(n_k)])
    L = PSet(["l%d" % i for i in range(n_l)])
    j = PSetMap(K, L, {e: rng.choice(L.elements) for e in K.nonbase()})
    a = rng.choice(A.objects)
    b = rng.choice(A.objects)
    hom = A.hom(a, b)
    phi = PSetMap(K, hom, {e: rng.choice(hom.elements) for e in K.nonbase()})
    return fl.AttachmentData(V, A, j, a, b, phi, j_kind="other")


# --- pointed simplicial sets ---------------------------------------------------------


def random_pointed_sset(rng, max_vertices=3, max_edges=3, allow_triangle=False):
    """A small pointed simplicial set: base plus vertices, edges, rarely a 2-cell."""
    nv = rng.randrange(1, max_vertices + 1)
    simplices = {0: ["*"] + ["v%d" % i for i in range(nv)]}
    faces = {(0, lab): () for lab in simplices[0]}
    vertices = simplices[0]
    edges = []
    for e in range(rng.randrange(0, max_edges + 1)):
        a = rng.choice(vertices)
        b = rng.choice(vertices)
        lab = "e%d" % e
        edges.append(lab)
        faces[(1, lab)] = (((), (0, b)), ((), (0, a)))
    if edges:
        simplices[1] = edges
    space = SimplicialSet(simplices, faces)
    return PointedSSet(space, (0, "*"))


def square_zero_ssets_category(rng, V, max_objects=2, max_extra=2):
    """Discrete homs; units act, all other composites hit the basepoint."""
    from spectralcat.simplicial import full_degeneracy

    k = rng.randrange(1, max_objects + 1)
    objects = ["o%d" % i for i in range(k)]
    homs = {}
    units = {}
    for x in objects:
        for y in objects:
            n_extra = rng.randrange(0, max_extra + 1)
            labs = ["*"] + (["1"] if x == y else []) + ["c%d" % i for i in range(n_extra)]
            space = SimplicialSet({0: labs}, {(0, lab): () for lab in labs})
            homs[(x, y)] = PointedSSet(space, (0, "*"))
            if x == y:
                units[x] = ((), (0, "1"))
    comps = {}
    for x in objects:
        for y in objects:
            for z in objects:
                hx, hy, hz = homs[(x, y)], homs[(y, z)], homs[(x, z)]

                def fn(u, v, x=x, y=y, z=z, hx=hx, hy=hy, hz=hz):
                    d = len(u[0]) + u[1][0]
                    if u[1] == hx.base or v[1] == hy.base:
                        return (full_degeneracy(d), hz.base)
                    if x == y and u[1] == (0, "1"):
                        return v
                    if y == z and v[1] == (0, "1"):
                        return u
                    return (full_degeneracy(d), hz.base)

                comps[(x, y, z)] = Bimorphism(V, (hx, hy), hz, fn)
    return VCategory(V, objects, homs, comps, units)


def random_ssets_category(rng, V, max_extra=2):
    roll = rng.randrange(3)
    if roll == 0:
        return unit_category(V)
    if roll == 1:
        return square_zero_ssets_category(rng, V, max_extra=max_extra)
    return two_object_category(V, random_pointed_sset(rng))


def pointed_inclusion(sub, space):
    return SSetMap(sub.space, space.space, {ref: ((), ref) for ref in sub.space.refs()})


def horn_attachment(rng, V, A, k, n=2):
    """Attach the pointed horn inclusion along a random map into a random hom."""
    from spectralcat.lifting import enumerate_maps

    K = plus(horn(n, k))
    L = plus(standard_simplex(n))
    j = SSetMap(K.space, L.space, {ref: ((), ref) for ref in K.space.refs()})
    a = rng.choice(A.objects)
    b = rng.choice(A.objects)
    hom = A.hom(a, b)
    maps = enumerate_maps(K.space, hom.space, pointed=(K, hom))
    phi = maps[rng.randrange(len(maps))]
    return fl.AttachmentData(V, A, j, a, b, phi, j_kind="anodyne", K=K, L=L)


def boundary_attachment(rng, V, A, n):
    from spectralcat.lifting import enumerate_maps

    K = plus(boundary(n))
    L = plus(standard_simplex(n))
    j = SSetMap(K.space, L.space, {ref: ((), ref) for ref in K.space.refs()})
    a = rng.choice(A.objects)
    b = rng.choice(A.objects)
    hom = A.hom(a, b)
    maps = enumerate_maps(K.space, hom.space, pointed=(K, hom))
    phi = maps[rng.randrange(len(maps))]
    return fl.AttachmentData(V, A, j, a, b, phi, j_kind="cofibration", K=K, L=L)


# --- spectra ---------------------------------------------------------------------------


def random_spectrum(rng, N=3, cap=30):
    """Free spectra on small random seeds, occasionally special spectra."""
    roll = rng.randrange(6)
    if roll == 0:
        return sp.point_spectrum(N)
    if roll == 1:
        return sp.sphere_spectrum(N)
    for _ in range(20):
        m = rng.randrange(0, min(2, N) + 1)
        seed = random_pointed_sset(rng, max_vertices=2, max_edges=2)
        try:
            free = sp.free_spectrum(m, seed, N)
        except Exception:
            continue
        if all(l.space.size() <= cap for l in free.spectrum.levels):
            return free.spectrum
    return sp.sphere_spectrum(N)
