"""Categories enriched in a pluggable symmetric monoidal value category.

Three value categories are provided: pointed finite sets (an exact
testing ground), pointed simplicial sets, and truncated symmetric
spectra.  Each instance implements the same informal protocol: unit and
zero objects, identities and composition of maps, realized smash
products with resolve/classify access to their coordinate tokens,
pushouts with induced maps, injectivity tests, and a decidable
equivalence surrogate.

Compositions of enriched categories are stored as bimorphisms: functions
on pairs of same-degree cells of the hom objects, never as maps out of
realized smash products.
"""

import itertools

from . import permutations as pm
from . import spectra as sp
from .homology import homology_iso_upto, pi0_bijective
from .simplicial import (
    PointedSSet,
    SSetMap,
    boundary,
    full_degeneracy,
    labkey,
    plus,
    pointed_point,
    pushout,
    smash_many,
    smash_map,
    sphere0,
    standard_simplex,
)


# --- pointed finite sets ---------------------------------------------------------


class PSet:
    """A finite pointed set; elements are strings or ints, '*' is reserved."""

    __slots__ = ("elements", "base")

    def __init__(self, elements, base="*"):
        elems = set(elements)
        elems.add(base)
        self.elements = tuple(sorted(elems, key=labkey))
        self.base = base

    def nonbase(self):
        return tuple(e for e in self.elements if e != self.base)

    def __eq__(self, other):
        return (
            isinstance(other, PSet)
            and self.elements == other.elements
            and self.base == other.base
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "<PSet %r>" % (self.elements,)


class PSetMap:
    __slots__ = ("source", "target", "images")

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = dict(images)
        self.images[source.base] = target.base

    def apply(self, x):
        return self.images[x]

    def then(self, other):
        return PSetMap(
            self.source, other.target, {x: other.apply(y) for x, y in self.images.items()}
        )

    def is_injective(self):
        seen = set()
        for x in self.source.elements:
            y = self.images[x]
            if y in seen:
                return False
            seen.add(y)
        return True

    def __eq__(self, other):
        return isinstance(other, PSetMap) and self.images == other.images

    def __ne__(self, other):
        return not self.__eq__(other)


class _RealizedSetSmash:
    """Smash of pointed sets; non-base tokens are tuples of non-base elements."""

    __slots__ = ("obj", "factors")

    def __init__(self, factors):
        self.factors = tuple(factors)
        elems = []
        for tup in itertools.product(*[f.nonbase() for f in factors]):
            elems.append(tup)
        self.obj = PSet(elems)

    def resolve(self, token):
        if token == self.obj.base:
            return None
        return tuple(token)

    def classify(self, coords):
        coords = tuple(coords)
        for c, f in zip(coords, self.factors):
            if c == f.base:
                return self.obj.base
        return coords


class _SetPushout:
    __slots__ = ("obj", "left", "right", "_origin")

    def __init__(self, f, g):
        a, x, y = f.source, f.target, g.target
        parent = {}

        def find(t):
            while parent[t] != t:
                parent[t] = parent[parent[t]]
                t = parent[t]
            return t

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                if labkey(ru) <= labkey(rv):
                    parent[rv] = ru
                else:
                    parent[ru] = rv

        for e in x.elements:
            parent[(0, e)] = (0, e)
        for e in y.elements:
            parent[(1, e)] = (1, e)
        union((0, x.base), (1, y.base))
        for e in a.elements:
            union((0, f.apply(e)), (1, g.apply(e)))
        roots = sorted({find(t) for t in parent}, key=labkey)
        names = {}
        for r in roots:
            names[r] = r if find((0, x.base)) != r else "*"
        base_root = find((0, x.base))
        self.obj = PSet([names[r] for r in roots if r != base_root], "*")
        self._origin = {}
        left_images = {}
        right_images = {}
        for e in x.elements:
            left_images[e] = names[find((0, e))]
        for e in y.elements:
            right_images[e] = names[find((1, e))]
        self.left = PSetMap(x, self.obj, left_images)
        self.right = PSetMap(y, self.obj, right_images)
        for e in x.elements:
            self._origin.setdefault(left_images[e], (0, e))
        for e in y.elements:
            self._origin.setdefault(right_images[e], (1, e))

    def origin(self, token):
        return self._origin[token]

    def induced(self, cone_x, cone_y):
        images = {}
        cones = (cone_x, cone_y)
        for token in self.obj.elements:
            tag, e = self._origin[token]
            images[token] = cones[tag].apply(e)
        return PSetMap(self.obj, cone_x.target, images)


class PointedSets:
    """Value category of finite pointed sets; the exact oracle ground."""

    kind = "sets"

    def unit(self):
        return PSet(["1"])

    def zero(self):
        return PSet([])

    def is_zero(self, obj):
        return not obj.nonbase()

    def obj_equal(self, a, b):
        return a == b

    def identity(self, obj):
        return PSetMap(obj, obj, {e: e for e in obj.elements})

    def compose(self, f, g):
        return f.then(g)

    def constant(self, src, tgt):
        return PSetMap(src, tgt, {e: tgt.base for e in src.elements})

    def nondeg_tokens(self, obj):
        return obj.nonbase()

    def tokens(self, obj):
        return obj.elements

    def apply(self, f, token):
        return f.apply(token)

    def realize_smash(self, factors):
        return _RealizedSetSmash(factors)

    def smash_map_many(self, fs, src, tgt):
        images = {}
        for token in src.obj.elements:
            coords = src.resolve(token)
            if coords is None:
                images[token] = tgt.obj.base
            else:
                images[token] = tgt.classify([f.apply(c) for f, c in zip(fs, coords)])
        return PSetMap(src.obj, tgt.obj, images)

    def map_from_tokens(self, src, tgt, fn):
        return PSetMap(src, tgt, {e: fn(e) for e in src.nonbase()})

    def pushout_pointed(self, f, g, src_base=None):
        return _SetPushout(f, g)

    def injective(self, f):
        return f.is_injective()

    def surrogate_equiv(self, f, d=None):
        ok = f.is_injective() and len(f.source.elements) == len(f.target.elements)
        return ok, "" if ok else "not a pointed bijection"

    def unit_token(self):
        return "1"

    def validate_map(self, f):
        for e in f.source.elements:
            if f.images[e] not in set(f.target.elements):
                raise ValueError("image outside the target")
        if f.images[f.source.base] != f.target.base:
            raise ValueError("not pointed")
        return True

    def pair_tokens(self, x, y):
        return itertools.product(x.nonbase(), y.nonbase())

    def triple_tokens(self, x, y, z):
        return itertools.product(x.nonbase(), y.nonbase(), z.nonbase())

    def degree_of(self, token):
        return 0

    def unit_like(self, token):
        return "1"

    def serialize_obj(self, obj):
        return obj.elements

    def serialize_map(self, f):
        return tuple(sorted(f.images.items(), key=lambda kv: labkey(kv[0])))


# --- pointed simplicial sets -----------------------------------------------------


class _RealizedSmash:
    __slots__ = ("obj", "inner")

    def __init__(self, inner):
        self.inner = inner
        self.obj = inner.pointed

    def resolve(self, token):
        return self.inner.resolve_cell(token)

    def classify(self, coords):
        return self.inner.classify(list(coords))


class _SSetPushout:
    __slots__ = ("obj", "left", "right", "_po")

    def __init__(self, f, g, left_base):
        # left_base is the basepoint ref of f's target; its image points the pushout
        self._po = pushout(f, g)
        b = self._po.left.apply(((), left_base))
        self.obj = PointedSSet(self._po.space, b[1])
        self.left = self._po.left
        self.right = self._po.right

    def origin(self, token):
        word, ref = token
        dim, (tag, lab) = self._po.quotient.rep[ref]
        return tag, (word, (dim, lab))

    def induced(self, cone_x, cone_y):
        return self._po.induced(cone_x, cone_y, validate=False)


class PointedSimplicialSets:
    """Value category of finite pointed simplicial sets."""

    kind = "ssets"

    def __init__(self):
        self._unit = sphere0()
        self._zero = pointed_point()

    def unit(self):
        return self._unit

    def zero(self):
        return self._zero

    def is_zero(self, obj):
        return obj.space.size() <= 1

    def obj_equal(self, a, b):
        return a == b

    def identity(self, obj):
        return SSetMap.identity(obj.space)

    def compose(self, f, g):
        return f.then(g)

    def constant(self, src, tgt):
        images = {
            ref: (full_degeneracy(ref[0]), tgt.base) for ref in src.space.refs()
        }
        return SSetMap(src.space, tgt.space, images)

    def nondeg_tokens(self, obj):
        return tuple(
            ((), ref) for ref in obj.space.refs() if ref != obj.base
        )

    def tokens(self, obj):
        out = []
        for n in range(obj.space.dim + 1):
            out.extend(obj.space.cells(n))
        return out

    def apply(self, f, token):
        return f.apply(token)

    def realize_smash(self, factors):
        return _RealizedSmash(smash_many(list(factors)))

    def smash_map_many(self, fs, src, tgt):
        return smash_map(list(fs), src.inner, tgt.inner)

    def map_from_tokens(self, src, tgt, fn):
        images = {src.base: ((), tgt.base)}
        for ref in src.space.refs():
            if ref != src.base:
                images[ref] = fn(((), ref))
        return SSetMap(src.space, tgt.space, images)

    def pushout_pointed(self, f, g, left_base):
        """Pushout of pointed maps; pointed at the image of the left basepoint."""
        return _SSetPushout(f, g, left_base)

    def injective(self, f):
        return f.is_injective()

    def surrogate_equiv(self, f, d=2):
        if not pi0_bijective(f):
            return False, "pi0 not bijective"
        if not homology_iso_upto(f, d):
            return False, "homology not an iso through degree %d" % d
        return True, ""

    def unit_token(self):
        pt = [r for r in self._unit.space.refs() if r != self._unit.base][0]
        return ((), pt)

    def validate_map(self, f):
        f.validate()
        return True

    def pair_tokens(self, x, y):
        top = max(x.space.dim, 0) + max(y.space.dim, 0)
        for d in range(top + 1):
            for u in x.space.cells(d):
                if u[1] == x.base:
                    continue
                su = set(u[0])
                for v in y.space.cells(d):
                    if v[1] == y.base:
                        continue
                    if not (su & set(v[0])):
                        yield u, v

    def triple_tokens(self, x, y, z):
        top = sum(max(w.space.dim, 0) for w in (x, y, z))
        for d in range(top + 1):
            for u in x.space.cells(d):
                if u[1] == x.base:
                    continue
                for v in y.space.cells(d):
                    if v[1] == y.base:
                        continue
                    common = set(u[0]) & set(v[0])
                    for w in z.space.cells(d):
                        if w[1] == z.base:
                            continue
                        if not (common & set(w[0])):
                            yield u, v, w

    def degree_of(self, token):
        return len(token[0]) + token[1][0]

    def unit_like(self, token):
        d = self.degree_of(token)
        pt = [r for r in self._unit.space.refs() if r != self._unit.base][0]
        return (full_degeneracy(d), pt)

    def serialize_map(self, f):
        return f.serialize()


# --- truncated symmetric spectra ---------------------------------------------------


class _RealizedDay:
    __slots__ = ("obj", "day")

    def __init__(self, day):
        self.day = day
        self.obj = day.spectrum

    def resolve(self, token):
        n, cell = token
        return self.day.resolve(n, cell)

    def classify(self, coords):
        n = sum(t[0] for t in coords)
        return (n, self.day.classify(n, list(coords)))


class _SpectrumPushout:
    __slots__ = ("obj", "left", "right", "_po")

    def __init__(self, f, g):
        self._po = sp.spectrum_pushout(f, g)
        self.obj = self._po.spectrum
        self.left = self._po.left
        self.right = self._po.right

    def origin(self, token):
        n, (word, ref) = token
        dim, (tag, lab) = self._po.level_pushouts[n].quotient.rep[ref]
        return tag, (n, (word, (dim, lab)))

    def induced(self, cone_x, cone_y):
        return self._po.induced(cone_x, cone_y)


class TruncatedSpectra:
    """Value category of symmetric spectra truncated at a fixed level."""

    kind = "spectra"

    def __init__(self, N):
        self.N = N
        self._unit = sp.sphere_spectrum(N)
        self._zero = sp.point_spectrum(N)
        self._sphere_pieces = [smash_many([sp.CIRCLE] * n) for n in range(N + 1)]

    def unit(self):
        return self._unit

    def zero(self):
        return self._zero

    def is_zero(self, obj):
        return all(l.space.size() <= 1 for l in obj.levels)

    def obj_equal(self, a, b):
        return all(x.space == y.space for x, y in zip(a.levels, b.levels))

    def identity(self, obj):
        return sp.SpectrumMap.identity(obj)

    def compose(self, f, g):
        return f.then(g)

    def constant(self, src, tgt):
        comps = []
        for n in range(self.N + 1):
            images = {
                ref: (full_degeneracy(ref[0]), tgt.levels[n].base)
                for ref in src.levels[n].space.refs()
            }
            comps.append(SSetMap(src.levels[n].space, tgt.levels[n].space, images))
        return sp.SpectrumMap(src, tgt, comps)

    def nondeg_tokens(self, obj):
        out = []
        for n in range(self.N + 1):
            for ref in obj.levels[n].space.refs():
                if ref != obj.levels[n].base:
                    out.append((n, ((), ref)))
        return out

    def tokens(self, obj):
        out = []
        for n in range(self.N + 1):
            for d in range(obj.levels[n].space.dim + 1):
                out.extend((n, c) for c in obj.levels[n].space.cells(d))
        return out

    def apply(self, f, token):
        n, cell = token
        return (n, f.components[n].apply(cell))

    def realize_smash(self, factors):
        return _RealizedDay(sp.day_smash_many(list(factors)))

    def smash_map_many(self, fs, src, tgt):
        comps = []
        for n in range(self.N + 1):
            images = {}
            space = src.obj.levels[n].space
            for ref in space.refs():
                if ref == src.obj.levels[n].base:
                    images[ref] = ((), tgt.obj.levels[n].base)
                    continue
                tokens = src.resolve((n, ((), ref)))
                moved = [
                    (t[0], t[1], fs[i].components[t[0]].apply(t[2]))
                    for i, t in enumerate(tokens)
                ]
                images[ref] = tgt.classify(moved)[1]
            comps.append(SSetMap(space, tgt.obj.levels[n].space, images))
        return sp.SpectrumMap(src.obj, tgt.obj, comps)

    def map_from_tokens(self, src, tgt, fn):
        comps = []
        for n in range(self.N + 1):
            images = {src.levels[n].base: ((), tgt.levels[n].base)}
            for ref in src.levels[n].space.refs():
                if ref != src.levels[n].base:
                    got = fn((n, ((), ref)))
                    images[ref] = got[1]
            comps.append(SSetMap(src.levels[n].space, tgt.levels[n].space, images))
        return sp.SpectrumMap(src, tgt, comps)

    def pushout_pointed(self, f, g, src_base=None):
        return _SpectrumPushout(f, g)

    def injective(self, f):
        return f.is_injective()

    def surrogate_equiv(self, f, d=2):
        for n in range(self.N + 1):
            comp = f.components[n]
            if not pi0_bijective(comp):
                return False, "level %d: pi0 not bijective" % n
            if not homology_iso_upto(comp, d):
                return False, "level %d: homology not iso through %d" % (n, d)
        return True, ""

    def unit_token(self):
        pt = [r for r in sphere0().space.refs() if r != sphere0().base][0]
        return (0, ((), pt))

    def validate_map(self, f):
        f.validate()
        return True

    def pair_tokens(self, x, y):
        for p in range(self.N + 1):
            for q in range(self.N + 1 - p):
                xs = x.levels[p]
                ys = y.levels[q]
                top = max(xs.space.dim, 0) + max(ys.space.dim, 0)
                for d in range(top + 1):
                    for u in xs.space.cells(d):
                        if u[1] == xs.base:
                            continue
                        su = set(u[0])
                        for v in ys.space.cells(d):
                            if v[1] == ys.base:
                                continue
                            if not (su & set(v[0])):
                                yield (p, u), (q, v)

    def triple_tokens(self, x, y, z):
        for p in range(self.N + 1):
            for q in range(self.N + 1 - p):
                for r in range(self.N + 1 - p - q):
                    xs, ys, zs = x.levels[p], y.levels[q], z.levels[r]
                    top = sum(max(s.space.dim, 0) for s in (xs, ys, zs))
                    for d in range(top + 1):
                        for u in xs.space.cells(d):
                            if u[1] == xs.base:
                                continue
                            for v in ys.space.cells(d):
                                if v[1] == ys.base:
                                    continue
                                common = set(u[0]) & set(v[0])
                                for w in zs.space.cells(d):
                                    if w[1] == zs.base:
                                        continue
                                    if not (common & set(w[0])):
                                        yield (p, u), (q, v), (r, w)

    def degree_of(self, token):
        n, cell = token
        return (n, len(cell[0]) + cell[1][0])

    def unit_like(self, token):
        n, cell = token
        d = len(cell[0]) + cell[1][0]
        pt = [r for r in sphere0().space.refs() if r != sphere0().base][0]
        return (0, (full_degeneracy(d), pt))

    def fold_unit_left(self, X, stoken, vtoken):
        """Expected value of the left unit law on a sphere-level pair."""
        p, scell = stoken
        q, vcell = vtoken
        coords = self._sphere_pieces[p].resolve_cell(scell)
        e = vcell
        for t in range(p - 1, -1, -1):
            e = X.sigma_apply(q + (p - 1 - t), coords[t], e)
        return (p + q, e)

    def fold_unit_right(self, X, vtoken, stoken):
        p, vcell = vtoken
        q, scell = stoken
        coords = self._sphere_pieces[q].resolve_cell(scell)
        e = vcell
        for t in range(q - 1, -1, -1):
            e = X.sigma_apply(p + (q - 1 - t), coords[t], e)
        # circles currently occupy the first q slots; move them after the rest
        gamma = tuple(range(p, p + q)) + tuple(range(p))
        return (p + q, X.action_map(p + q, gamma).apply(e))

    def serialize_map(self, f):
        return f.serialize()


# --- bimorphisms -------------------------------------------------------------------


class Bimorphism:
    """Composition data on smash generators: a function on cell pairs."""

    __slots__ = ("V", "source_pair", "target", "fn", "_memo")

    def __init__(self, V, source_pair, target, fn):
        self.V = V
        self.source_pair = source_pair
        self.target = target
        self.fn = fn
        self._memo = {}

    def apply(self, u, v):
        key = (u, v)
        if key not in self._memo:
            self._memo[key] = self.fn(u, v)
        return self._memo[key]


def zero_bimorphism(V, x_obj, y_obj, target):
    if V.kind == "sets":
        return Bimorphism(V, (x_obj, y_obj), target, lambda u, v: target.base)
    if V.kind == "ssets":

        def fn(u, v):
            d = V.degree_of(u)
            return (full_degeneracy(d), target.base)

        return Bimorphism(V, (x_obj, y_obj), target, fn)

    def fn(u, v):
        p, uc = u
        q, vc = v
        d = len(uc[0]) + uc[1][0]
        return (p + q, (full_degeneracy(d), target.levels[p + q].base))

    return Bimorphism(V, (x_obj, y_obj), target, fn)


def unit_unit_bimorphism(V):
    unit = V.unit()
    if V.kind == "sets":
        def fn(u, v):
            return "1" if (u == "1" and v == "1") else unit.base
        return Bimorphism(V, (unit, unit), unit, fn)
    if V.kind == "ssets":
        def fn(u, v):
            if u[1] == unit.base or v[1] == unit.base:
                return (full_degeneracy(V.degree_of(u)), unit.base)
            return u
        return Bimorphism(V, (unit, unit), unit, fn)

    pieces = V._sphere_pieces

    def fn(u, v):
        p, uc = u
        q, vc = v
        cu = pieces[p].resolve_cell(uc)
        cv = pieces[q].resolve_cell(vc)
        if cu is None or cv is None:
            d = len(uc[0]) + uc[1][0]
            return (p + q, (full_degeneracy(d), unit.levels[p + q].base))
        if p + q == 0:
            return (0, uc)
        return (p + q, pieces[p + q].classify(list(cu) + list(cv)))

    return Bimorphism(V, (unit, unit), unit, fn)


def left_unit_bimorphism(V, x):
    unit = V.unit()
    if V.kind == "sets":
        def fn(u, v):
            return v if u == "1" else x.base
        return Bimorphism(V, (unit, x), x, fn)
    if V.kind == "ssets":
        def fn(u, v):
            if u[1] == unit.base:
                return (full_degeneracy(V.degree_of(v)), x.base)
            return v
        return Bimorphism(V, (unit, x), x, fn)

    def fn(u, v):
        p, uc = u
        if uc[1] == unit.levels[p].base:
            q, vc = v
            d = len(vc[0]) + vc[1][0]
            return (p + q, (full_degeneracy(d), x.levels[p + q].base))
        return V.fold_unit_left(x, u, v)

    return Bimorphism(V, (unit, x), x, fn)


def right_unit_bimorphism(V, x):
    unit = V.unit()
    if V.kind == "sets":
        def fn(u, v):
            return u if v == "1" else x.base
        return Bimorphism(V, (x, unit), x, fn)
    if V.kind == "ssets":
        def fn(u, v):
            if v[1] == unit.base:
                return (full_degeneracy(V.degree_of(u)), x.base)
            return u
        return Bimorphism(V, (x, unit), x, fn)

    def fn(u, v):
        q, vc = v
        if vc[1] == unit.levels[q].base:
            p, uc = u
            d = len(uc[0]) + uc[1][0]
            return (p + q, (full_degeneracy(d), x.levels[p + q].base))
        return V.fold_unit_right(x, u, v)

    return Bimorphism(V, (x, unit), x, fn)


def table_bimorphism(V, x, y, target, table):
    """A bimorphism given by images of jointly nondegenerate non-base pairs."""
    if V.kind == "sets":
        def fn(u, v):
            return table.get((u, v), target.base)
        return Bimorphism(V, (x, y), target, fn)
    if V.kind == "ssets":
        from .simplicial import compose_degeneracies, normalize_tuple

        def fn(u, v):
            if u[1] == x.base or v[1] == y.base:
                return (full_degeneracy(V.degree_of(u)), target.base)
            word, (u2, v2) = normalize_tuple([u, v])
            got = table[(u2, v2)]
            return (compose_degeneracies(word, got[0]), got[1])

        return Bimorphism(V, (x, y), target, fn)
    from .simplicial import compose_degeneracies, normalize_tuple

    def fn(u, v):
        p, uc = u
        q, vc = v
        if uc[1] == x.levels[p].base or vc[1] == y.levels[q].base:
            d = len(uc[0]) + uc[1][0]
            return (p + q, (full_degeneracy(d), target.levels[p + q].base))
        word, (u2, v2) = normalize_tuple([uc, vc])
        level, got = table[(p, u2, q, v2)]
        return (p + q, (compose_degeneracies(word, got[0]), got[1]))

    return Bimorphism(V, (x, y), target, fn)


def check_bimorphism(b):
    """Structural validity: base absorption, simplicial and spectral laws."""
    V = b.V
    x, y = b.source_pair
    issues = []
    if V.kind == "sets":
        for u in x.elements:
            if b.apply(u, y.base) != b.target.base or b.apply(x.base, u if u in y.elements else y.base) != b.target.base:
                issues.append("base not absorbed")
                break
        return issues
    if V.kind == "ssets":
        for u, v in V.pair_tokens(x, y):
            d = V.degree_of(u)
            out = b.apply(u, v)
            if V.degree_of(out) != d:
                issues.append("degree not preserved at %r" % ((u, v),))
                break
            if d:
                for i in range(d + 1):
                    left = b.apply(x.space.face(u, i), y.space.face(v, i))
                    if left != b.target.space.face(out, i):
                        issues.append("faces fail at %r" % ((u, v, i),))
                        return issues
        return issues
    # spectra: levelwise simplicial, equivariance, structure compatibility
    N = V.N
    for (p, u), (q, v) in V.pair_tokens(x, y):
        out = b.apply((p, u), (q, v))
        n, oc = out
        if n != p + q:
            issues.append("level mismatch")
            return issues
        d = len(u[0]) + u[1][0]
        if d:
            for i in range(d + 1):
                left = b.apply((p, x.levels[p].space.face(u, i)), (q, y.levels[q].space.face(v, i)))
                if left[1] != b.target.levels[n].space.face(oc, i):
                    issues.append("faces fail at level pair (%d,%d)" % (p, q))
                    return issues
    for p in range(N + 1):
        for q in range(N + 1 - p):
            for i in range(max(p - 1, 0)):
                gx = x.actions[p][i]
                shifted = pm.block_sum([pm.transposition(p, i), pm.identity(q)])
                gz = b.target.action_map(p + q, shifted)
                for u, v in _level_pairs(V, x, y, p, q):
                    lhs = b.apply((p, gx.apply(u)), (q, v))
                    if lhs[1] != gz.apply(b.apply((p, u), (q, v))[1]):
                        issues.append("left equivariance fails at (%d,%d)" % (p, q))
                        return issues
            for i in range(max(q - 1, 0)):
                gy = y.actions[q][i]
                shifted = pm.block_sum([pm.identity(p), pm.transposition(q, i)])
                gz = b.target.action_map(p + q, shifted)
                for u, v in _level_pairs(V, x, y, p, q):
                    lhs = b.apply((p, u), (q, gy.apply(v)))
                    if lhs[1] != gz.apply(b.apply((p, u), (q, v))[1]):
                        issues.append("right equivariance fails at (%d,%d)" % (p, q))
                        return issues
    for p in range(N):
        for q in range(N - p):
            cyc = tuple([p] + list(range(p)) + list(range(p + 1, p + q + 1)))
            for u, v in _level_pairs(V, x, y, p, q):
                for c in sp.CIRCLE.space.cells(len(u[0]) + u[1][0]):
                    if c[1] == sp.CIRCLE.base:
                        continue
                    su = x.sigma_apply(p, c, u)
                    lhs = b.apply((p + 1, su), (q, v))
                    rhs_cell = b.target.sigma_apply(p + q, c, b.apply((p, u), (q, v))[1])
                    if lhs[1] != rhs_cell:
                        issues.append("left structure fails at (%d,%d)" % (p, q))
                        return issues
                    sv = y.sigma_apply(q, c, v)
                    lhs2 = b.apply((p, u), (q + 1, sv))
                    rhs2 = b.target.action_map(p + q + 1, cyc).apply(rhs_cell)
                    if lhs2[1] != rhs2:
                        issues.append("right structure fails at (%d,%d)" % (p, q))
                        return issues
    return issues


def _level_pairs(V, x, y, p, q):
    xs, ys = x.levels[p], y.levels[q]
    top = max(xs.space.dim, 0) + max(ys.space.dim, 0)
    for d in range(top + 1):
        for u in xs.space.cells(d):
            if u[1] == xs.base:
                continue
            for v in ys.space.cells(d):
                if v[1] == ys.base:
                    continue
                yield u, v


# --- enriched categories ------------------------------------------------------------


class VCategory:
    """A finite category enriched in a value category instance."""

    __slots__ = ("V", "objects", "homs", "comps", "units")

    def __init__(self, V, objects, homs, comps, units):
        self.V = V
        self.objects = list(objects)
        self.homs = dict(homs)
        self.comps = dict(comps)
        self.units = dict(units)

    def hom(self, x, y):
        return self.homs[(x, y)]

    def comp(self, x, y, z):
        return self.comps[(x, y, z)]

    def unit_token(self, x):
        return self.units[x]


class VFunctor:
    __slots__ = ("V", "source", "target", "object_map", "hom_maps")

    def __init__(self, V, source, target, object_map, hom_maps):
        self.V = V
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.hom_maps = dict(hom_maps)

    def on_obj(self, x):
        return self.object_map[x]

    def hom_map(self, x, y):
        return self.hom_maps[(x, y)]

    def then(self, other):
        object_map = {x: other.on_obj(y) for x, y in self.object_map.items()}
        hom_maps = {}
        for (x, y), f in self.hom_maps.items():
            g = other.hom_map(self.on_obj(x), self.on_obj(y))
            hom_maps[(x, y)] = self.V.compose(f, g)
        return VFunctor(self.V, self.source, other.target, object_map, hom_maps)

    @staticmethod
    def identity(a):
        return VFunctor(
            a.V,
            a,
            a,
            {x: x for x in a.objects},
            {(x, y): a.V.identity(a.hom(x, y)) for x in a.objects for y in a.objects},
        )


class Report:
    __slots__ = ("ok", "violations")

    def __init__(self, ok, violations):
        self.ok = ok
        self.violations = list(violations)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "<Report %s %d violations>" % ("ok" if self.ok else "FAIL", len(self.violations))


def check_category_axioms(a, pair_filter=None, skip_stage_overflow=False):
    """Unit and associativity laws on all generating cells.

    With ``skip_stage_overflow`` composites beyond a pushout's computed
    filtration stage are skipped instead of failing.
    """
    from .errors import StageExceededError

    V = a.V
    violations = []
    skipped = 0
    for x in a.objects:
        for y in a.objects:
            hom = a.hom(x, y)
            for v in V.nondeg_tokens(hom):
                try:
                    left = a.comp(x, x, y).apply(_unit_match(V, a, x, v), v)
                    right = a.comp(x, y, y).apply(v, _unit_match(V, a, y, v))
                except StageExceededError:
                    if not skip_stage_overflow:
                        raise
                    skipped += 1
                    continue
                if left != v:
                    violations.append(("left unit", x, y, v))
                if right != v:
                    violations.append(("right unit", x, y, v))
    for w in a.objects:
        for x in a.objects:
            for y in a.objects:
                for z in a.objects:
                    if pair_filter is not None and not pair_filter(w, x, y, z):
                        continue
                    b1 = a.comp(w, x, y)
                    b2 = a.comp(w, y, z)
                    b3 = a.comp(x, y, z)
                    b4 = a.comp(w, x, z)
                    for u, v, t in V.triple_tokens(a.hom(w, x), a.hom(x, y), a.hom(y, z)):
                        try:
                            lhs = b2.apply(b1.apply(u, v), t)
                            rhs = b4.apply(u, b3.apply(v, t))
                        except StageExceededError:
                            if not skip_stage_overflow:
                                raise
                            skipped += 1
                            continue
                        if lhs != rhs:
                            violations.append(("associativity", w, x, y, z, u, v, t))
                            return Report(False, violations)
    return Report(not violations, violations)


def _unit_match(V, a, x, token):
    """The unit cell of A(x,x) degenerate-matched to the degree of a token."""
    unit_tok = a.unit_token(x)
    if V.kind == "sets":
        return unit_tok
    if V.kind == "ssets":
        d = V.degree_of(token)
        word = full_degeneracy(d)
        return (word, unit_tok[1])
    n, cell = token
    d = len(cell[0]) + cell[1][0]
    return (0, (full_degeneracy(d), unit_tok[1][1]))


def check_functor(f):
    """Unit and composition preservation on generating cells."""
    V = f.V
    a, b = f.source, f.target
    violations = []
    for x in a.objects:
        fx = f.on_obj(x)
        got = V.apply(f.hom_map(x, x), _token_of_unit(V, a, x))
        want = _token_of_unit(V, b, fx)
        if got != want:
            violations.append(("unit", x))
    for x in a.objects:
        for y in a.objects:
            for z in a.objects:
                for u, v in V.pair_tokens(a.hom(x, y), a.hom(y, z)):
                    lhs = V.apply(f.hom_map(x, z), a.comp(x, y, z).apply(u, v))
                    rhs = b.comp(f.on_obj(x), f.on_obj(y), f.on_obj(z)).apply(
                        V.apply(f.hom_map(x, y), u), V.apply(f.hom_map(y, z), v)
                    )
                    if lhs != rhs:
                        violations.append(("composition", x, y, z, u, v))
                        return Report(False, violations)
    return Report(not violations, violations)


def _token_of_unit(V, a, x):
    tok = a.unit_token(x)
    if V.kind == "sets":
        return tok
    return tok


# --- standard constructions -----------------------------------------------------------


def two_object_category(V, x_obj):
    """The category with objects 1, 2, the given hom from 1 to 2, and zero back."""
    unit = V.unit()
    zero = V.zero()
    homs = {
        (1, 1): unit,
        (2, 2): unit,
        (1, 2): x_obj,
        (2, 1): zero,
    }
    uu = unit_unit_bimorphism(V)
    comps = {}
    for x in (1, 2):
        for y in (1, 2):
            for z in (1, 2):
                hx, hy, hz = homs[(x, y)], homs[(y, z)], homs[(x, z)]
                if x == y == z:
                    comps[(x, y, z)] = uu
                elif x == y:
                    comps[(x, y, z)] = left_unit_bimorphism(V, homs[(y, z)])
                elif y == z:
                    comps[(x, y, z)] = right_unit_bimorphism(V, homs[(x, y)])
                else:
                    comps[(x, y, z)] = zero_bimorphism(V, hx, hy, hz)
    units = {1: V.unit_token(), 2: V.unit_token()}
    return VCategory(V, [1, 2], homs, comps, units)


def two_object_functor(V, f, src_cat, tgt_cat):
    """The functor between two-object categories induced by a value map."""
    unit = V.unit()
    zero = V.zero()
    hom_maps = {
        (1, 1): V.identity(unit),
        (2, 2): V.identity(unit),
        (1, 2): f,
        (2, 1): V.identity(zero),
    }
    return VFunctor(V, src_cat, tgt_cat, {1: 1, 2: 2}, hom_maps)


def unit_category(V, name="*"):
    homs = {(name, name): V.unit()}
    comps = {(name, name, name): unit_unit_bimorphism(V)}
    return VCategory(V, [name], homs, comps, {name: V.unit_token()})


def add_object(a, name=None):
    """Disjointly add a unit object; old homs are untouched."""
    V = a.V
    if name is None:
        k = 0
        while "obj%d" % k in a.objects:
            k += 1
        name = "obj%d" % k
    objects = list(a.objects) + [name]
    homs = dict(a.homs)
    comps = dict(a.comps)
    units = dict(a.units)
    homs[(name, name)] = V.unit()
    for x in a.objects:
        homs[(x, name)] = V.zero()
        homs[(name, x)] = V.zero()
    units[name] = V.unit_token()
    for x in objects:
        for y in objects:
            for z in objects:
                if (x, y, z) in comps:
                    continue
                hx, hy, hz = homs[(x, y)], homs[(y, z)], homs[(x, z)]
                if x == y == z == name:
                    comps[(x, y, z)] = unit_unit_bimorphism(V)
                elif x == y == name:
                    comps[(x, y, z)] = left_unit_bimorphism(V, homs[(y, z)])
                elif y == z == name:
                    comps[(x, y, z)] = right_unit_bimorphism(V, homs[(x, y)])
                else:
                    comps[(x, y, z)] = zero_bimorphism(V, hx, hy, hz)
    return VCategory(V, objects, homs, comps, units)


class GeneratorMap:
    """A functor between two-object categories determined by a value map."""

    __slots__ = ("functor", "vmap", "kind", "label")

    def __init__(self, functor, vmap, kind, label):
        self.functor = functor
        self.vmap = vmap
        self.kind = kind
        self.label = label

    def __repr__(self):
        return "<GeneratorMap %s %r>" % (self.kind, self.label)


def generating_cofibration(m, n, N):
    """The two-object functor on F_m of the pointed boundary inclusion."""
    V = TruncatedSpectra(N)
    bd = plus(boundary(n))
    dn = plus(standard_simplex(n))
    incl = SSetMap(bd.space, dn.space, {ref: ((), ref) for ref in bd.space.refs()})
    fmap, fsrc, ftgt = sp.free_map(m, incl, bd, dn, N)
    src_cat = two_object_category(V, fmap.source)
    tgt_cat = two_object_category(V, fmap.target)
    functor = two_object_functor(V, fmap, src_cat, tgt_cat)
    return GeneratorMap(functor, fmap, "cofibration", ("C", m, n))


def generating_trivial_cofibration(m, k, n, N):
    """The two-object functor on F_m of the pointed horn inclusion."""
    V = TruncatedSpectra(N)
    fmap = sp.free_horn_inclusion(m, k, n, N)
    src_cat = two_object_category(V, fmap.source)
    tgt_cat = two_object_category(V, fmap.target)
    functor = two_object_functor(V, fmap, src_cat, tgt_cat)
    return GeneratorMap(functor, fmap, "anodyne", ("A", m, k, n))
