"""Free categories on graphs, path factorization, and component-level tooling.

A free category with cycles has infinitely many morphisms, so every
operation takes an explicit length bound and reports it.  The
factorization certificate for a loop word records its unique splitting
into primitive loops (paths that return to the chosen vertex exactly
once), verified by exhaustive search over all block partitions.
"""

import itertools

from .enriched import Bimorphism, Report, VCategory
from .homology import pi0
from .lifting import kan_fibration
from .simplicial import PointedSSet, SSetMap, full_degeneracy, labkey


class Graph:
    """A finite multigraph with labelled edges."""

    __slots__ = ("vertices", "edges", "by_source")

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        vs = set(self.vertices)
        self.by_source = {}
        for lab, src, tgt in self.edges:
            if src not in vs or tgt not in vs:
                raise ValueError("edge %r has a missing endpoint" % (lab,))
            self.by_source.setdefault(src, []).append((lab, src, tgt))

    def edge(self, lab):
        for e in self.edges:
            if e[0] == lab:
                return e
        raise KeyError(lab)


def free_category_words(graph, x, y, max_len):
    """All composable edge words from x to y of length at most max_len.

    Words list edges in diagrammatic order (first edge first) and are
    returned in a deterministic order.
    """
    out = []
    if x == y:
        out.append(())

    def walk(at, word):
        if len(word) >= max_len:
            return
        for lab, src, tgt in sorted(graph.by_source.get(at, ()), key=lambda e: labkey(e[0])):
            word.append(lab)
            if tgt == y:
                out.append(tuple(word))
            walk(tgt, word)
            word.pop()

    walk(x, [])
    out.sort(key=lambda w: (len(w), labkey(w)))
    return out


def primitive_loops(graph, x, max_len):
    """Loops at x that stay away from x at every intermediate step."""
    out = []

    def walk(at, word):
        if len(word) >= max_len:
            return
        for lab, src, tgt in sorted(graph.by_source.get(at, ()), key=lambda e: labkey(e[0])):
            word.append(lab)
            if tgt == x:
                out.append(tuple(word))
            else:
                walk(tgt, word)
            word.pop()

    walk(x, [])
    out.sort(key=lambda w: (len(w), labkey(w)))
    return out


class FactorizationCertificate:
    """The unique splitting of a loop word into primitive loops."""

    __slots__ = ("word", "blocks", "cuts", "alternatives")

    def __init__(self, word, blocks, cuts, alternatives):
        self.word = word
        self.blocks = blocks
        self.cuts = cuts
        self.alternatives = alternatives

    def __repr__(self):
        return "<Factorization %r -> %r>" % (self.word, self.blocks)


def _word_targets(graph, word):
    return [graph.edge(lab)[2] for lab in word]


def factorize(graph, x, word, verify=True):
    """Split a loop at x into primitive blocks; optionally verify uniqueness.

    The splitting cuts after every return to x.  With ``verify`` the
    certificate also records how many block partitions into primitive
    loops exist (the count is one exactly when the splitting is unique).
    """
    if word:
        src = graph.edge(word[0])[1]
        if src != x or graph.edge(word[-1])[2] != x:
            raise ValueError("word is not a loop at %r" % (x,))
        at = x
        for lab in word:
            lab_, src_, tgt_ = graph.edge(lab)
            if src_ != at:
                raise ValueError("word is not composable")
            at = tgt_
    targets = _word_targets(graph, word)
    cuts = [i + 1 for i, t in enumerate(targets) if t == x]
    blocks = []
    prev = 0
    for c in cuts:
        blocks.append(tuple(word[prev:c]))
        prev = c
    assert sum(blocks, ()) == tuple(word)
    alternatives = 0
    if verify:
        prim = set(primitive_loops(graph, x, max(len(word), 1)))
        n = len(word)
        for split in _all_partitions(n):
            pieces = []
            prev = 0
            good = True
            for c in split:
                piece = tuple(word[prev:c])
                if piece not in prim:
                    good = False
                    break
                pieces.append(piece)
                prev = c
            if good:
                alternatives += 1
    return FactorizationCertificate(tuple(word), tuple(blocks), tuple(cuts), alternatives)


def _all_partitions(n):
    """All increasing cut sequences 0 < c_1 < ... < c_k = n."""
    if n == 0:
        return [()]
    out = []
    for inner in itertools.chain.from_iterable(
        itertools.combinations(range(1, n), k) for k in range(n)
    ):
        out.append(tuple(inner) + (n,))
    return out


# --- finite categories ---------------------------------------------------------------


class FiniteCategory:
    """Objects, finite hom sets, a composition table and identities."""

    __slots__ = ("objects", "homs", "comp", "identities")

    def __init__(self, objects, homs, comp, identities):
        self.objects = tuple(objects)
        self.homs = dict(homs)
        self.comp = dict(comp)
        self.identities = dict(identities)

    def hom(self, x, y):
        return self.homs.get((x, y), ())

    def compose(self, x, y, z, f, g):
        return self.comp[(x, y, z, f, g)]

    def check(self):
        violations = []
        for x in self.objects:
            if self.identities[x] not in set(self.hom(x, x)):
                violations.append(("identity missing", x))
        for x in self.objects:
            for y in self.objects:
                for f in self.hom(x, y):
                    if self.compose(x, x, y, self.identities[x], f) != f:
                        violations.append(("left identity", x, y, f))
                    if self.compose(x, y, y, f, self.identities[y]) != f:
                        violations.append(("right identity", x, y, f))
        for w in self.objects:
            for x in self.objects:
                for y in self.objects:
                    for z in self.objects:
                        for f in self.hom(w, x):
                            for g in self.hom(x, y):
                                for h in self.hom(y, z):
                                    left = self.compose(w, y, z, self.compose(w, x, y, f, g), h)
                                    right = self.compose(w, x, z, f, self.compose(x, y, z, g, h))
                                    if left != right:
                                        violations.append(("associativity", w, x, y, z, f, g, h))
        return Report(not violations, violations)

    def is_isomorphism(self, x, y, f):
        for g in self.hom(y, x):
            if (
                self.compose(x, y, x, f, g) == self.identities[x]
                and self.compose(y, x, y, g, f) == self.identities[y]
            ):
                return True
        return False

    def isomorphic_objects(self, x, y):
        if x == y:
            return True
        return any(self.is_isomorphism(x, y, f) for f in self.hom(x, y))


class FiniteFunctor:
    __slots__ = ("source", "target", "object_map", "morphism_map")

    def __init__(self, source, target, object_map, morphism_map):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.morphism_map = dict(morphism_map)

    @staticmethod
    def identity(cat):
        return FiniteFunctor(
            cat,
            cat,
            {x: x for x in cat.objects},
            {
                (x, y, f): f
                for x in cat.objects
                for y in cat.objects
                for f in cat.hom(x, y)
            },
        )


def essentially_surjective(functor):
    """Is every target object isomorphic to an image object?"""
    tgt = functor.target
    images = set(functor.object_map.values())
    for y in tgt.objects:
        if not any(tgt.isomorphic_objects(x, y) for x in images):
            return False
    return True


# --- component categories ---------------------------------------------------------


def level0_category(a):
    """Replace spectrum homs by their level-0 pointed simplicial sets."""
    V = a.V
    if V.kind == "ssets":
        return a
    if V.kind != "spectra":
        raise ValueError("level-0 extraction wants spectra or simplicial homs")
    from .enriched import PointedSimplicialSets

    Vs = PointedSimplicialSets()
    homs = {}
    comps = {}
    units = {}
    for x in a.objects:
        for y in a.objects:
            homs[(x, y)] = a.hom(x, y).levels[0]
    for x in a.objects:
        units[x] = a.unit_token(x)[1]
    for x in a.objects:
        for y in a.objects:
            for z in a.objects:
                bim = a.comp(x, y, z)

                def fn(u, v, bim=bim):
                    return bim.apply((0, u), (0, v))[1]

                comps[(x, y, z)] = Bimorphism(
                    Vs, (homs[(x, y)], homs[(y, z)]), homs[(x, z)], fn
                )
    return VCategory(Vs, a.objects, homs, comps, units)


def pi0_category(a, strict=True):
    """Components of the homs with the induced composition.

    With ``strict`` the independence of the composition table from the
    choice of representatives is verified exhaustively.
    """
    V = a.V
    if V.kind != "ssets":
        raise ValueError("component categories want simplicial homs")
    comps_of = {}
    verts_of = {}
    for x in a.objects:
        for y in a.objects:
            hom = a.hom(x, y)
            assign = pi0(hom.space)
            comps_of[(x, y)] = assign
            by_comp = {}
            for lab, cid in assign.items():
                by_comp.setdefault(cid, []).append(lab)
            verts_of[(x, y)] = by_comp
    homs = {}
    for (x, y), by_comp in verts_of.items():
        homs[(x, y)] = tuple(sorted(by_comp))
    comp_table = {}
    for x in a.objects:
        for y in a.objects:
            for z in a.objects:
                bim = a.comp(x, y, z)
                for f in homs[(x, y)]:
                    for g in homs[(y, z)]:
                        results = set()
                        pairs = itertools.product(
                            verts_of[(x, y)][f], verts_of[(y, z)][g]
                        ) if strict else [
                            (verts_of[(x, y)][f][0], verts_of[(y, z)][g][0])
                        ]
                        for u_lab, v_lab in pairs:
                            out = bim.apply(((), (0, u_lab)), ((), (0, v_lab)))
                            results.add(comps_of[(x, z)][out[1][1]])
                        if len(results) != 1:
                            raise ValueError(
                                "composition not well defined on components at %r"
                                % ((x, y, z, f, g),)
                            )
                        comp_table[(x, y, z, f, g)] = results.pop()
    identities = {}
    for x in a.objects:
        unit_ref = a.unit_token(x)[1]
        identities[x] = comps_of[(x, x)][unit_ref[1]]
    return FiniteCategory(a.objects, homs, comp_table, identities)


def bracket_category(a, omega_reports):
    """The component category of the level-0 homs, gated by an omega certificate.

    ``omega_reports`` maps hom pairs to lifting reports; every verdict must
    be true, otherwise the construction refuses to answer.
    """
    missing = [p for p in ((x, y) for x in a.objects for y in a.objects) if p not in omega_reports]
    if missing:
        raise ValueError("no omega certificate for %r" % (missing[0],))
    bad = [p for p, rep in omega_reports.items() if not rep.verdict]
    if bad:
        raise ValueError(
            "hom %r is not certified as an omega spectrum within bounds" % (bad[0],)
        )
    return pi0_category(level0_category(a))


# --- functor-level surrogate checks ----------------------------------------------


def check_level_equivalence_surrogate(functor, d=2):
    """Per hom pair: levelwise pi0 bijection and homology isos through degree d."""
    V = functor.V
    violations = []
    for x in functor.source.objects:
        for y in functor.source.objects:
            ok, why = V.surrogate_equiv(functor.hom_map(x, y), d)
            if not ok:
                violations.append(((x, y), why))
    return Report(not violations, violations)


def check_level_fibration(functor, dim_bound=2):
    """Per hom pair and level: horn lifting against the hom component."""
    V = functor.V
    violations = []
    for x in functor.source.objects:
        for y in functor.source.objects:
            f = functor.hom_map(x, y)
            if V.kind == "spectra":
                comps = f.components
            else:
                comps = [f]
            for n, comp in enumerate(comps):
                rep = kan_fibration(comp, dim_bound)
                if not rep.ok:
                    violations.append(((x, y), n, rep.detail))
    return Report(not violations, violations)
