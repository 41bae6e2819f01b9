"""Level-truncated symmetric spectra of pointed simplicial sets.

A spectrum holds levels 0..N, symmetric-group actions stored on adjacent
transpositions, and structure maps from the smash of a circle with each
level (new circle coordinate in slot 0).  Free spectra are wedges of
sphere-smash pieces indexed by placements of the generating level; maps
out of them are computed by the freeness adjunction.  The smash product
of spectra is computed as an explicit wedge of induced summands modulo
the structure-map coequalizer relations.
"""

import itertools

from . import permutations as pm
from .errors import TruncationError
from .lifting import LiftReport, enumerate_maps
from .simplicial import (
    PointedSSet,
    SSetMap,
    boundary,
    circle,
    coequalize,
    compose_degeneracies,
    full_degeneracy,
    horn,
    labkey,
    plus,
    pointed_point,
    pushout,
    smash_many,
    smash_map,
    sphere0,
    standard_simplex,
    wedge,
)

CIRCLE = circle()
S0 = sphere0()


def _as_map(images_or_map, source, target):
    if isinstance(images_or_map, SSetMap):
        return images_or_map
    return SSetMap(source, target, images_or_map)


class Spectrum:
    """A symmetric spectrum truncated at level N."""

    __slots__ = ("N", "levels", "actions", "structures", "_smash1", "_act_memo")

    def __init__(self, N, levels, actions, structures):
        if N < 1:
            raise ValueError("truncation must be at least 1")
        if len(levels) != N + 1:
            raise ValueError("expected %d levels" % (N + 1))
        self.N = N
        self.levels = list(levels)
        self._smash1 = [smash_many([CIRCLE, levels[n]]) for n in range(N)]
        self.actions = []
        for n in range(N + 1):
            gens = list(actions[n]) if n < len(actions) else []
            space = levels[n].space
            self.actions.append([_as_map(g, space, space) for g in gens])
            if n >= 2 and len(self.actions[n]) != n - 1:
                raise ValueError("level %d wants %d action generators" % (n, n - 1))
        self.structures = [
            _as_map(structures[n], self._smash1[n].space, levels[n + 1].space)
            for n in range(N)
        ]
        self._act_memo = {}

    def level(self, n):
        if not 0 <= n <= self.N:
            raise TruncationError("level %d outside truncation %d" % (n, self.N))
        return self.levels[n]

    def smash1(self, n):
        if not 0 <= n < self.N:
            raise TruncationError("structure map at %d outside truncation %d" % (n, self.N))
        return self._smash1[n]

    def sigma_apply(self, n, c_cell, x_cell):
        """Structure map on the smash class of (circle cell, level-n cell)."""
        sm = self.smash1(n)
        return self.structures[n].apply(sm.classify([c_cell, x_cell]))

    def action_map(self, n, perm):
        """The action of a permutation on level n, composed from generators."""
        key = (n, tuple(perm))
        if key in self._act_memo:
            return self._act_memo[key]
        space = self.levels[n].space
        out = SSetMap.identity(space)
        for i in reversed(pm.adjacent_decomposition(perm)):
            out = out.then(self.actions[n][i])
        self._act_memo[key] = out
        return out

    def __repr__(self):
        sizes = ",".join(str(l.space.size()) for l in self.levels)
        return "<Spectrum N=%d sizes=%s>" % (self.N, sizes)


class SpectrumMap:
    """A map of spectra: one pointed simplicial map per level."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source, target, components):
        if source.N != target.N:
            raise ValueError("truncation mismatch")
        self.source = source
        self.target = target
        self.components = list(components)

    @staticmethod
    def identity(spectrum):
        return SpectrumMap(
            spectrum, spectrum, [SSetMap.identity(l.space) for l in spectrum.levels]
        )

    def apply(self, n, cell):
        return self.components[n].apply(cell)

    def then(self, other):
        return SpectrumMap(
            self.source,
            other.target,
            [f.then(g) for f, g in zip(self.components, other.components)],
        )

    def is_injective(self):
        return all(f.is_injective() for f in self.components)

    def validate(self):
        issues = []
        for n in range(self.source.N + 1):
            f = self.components[n]
            f.validate()
            if f.apply(((), self.source.levels[n].base)) != ((), self.target.levels[n].base):
                issues.append("level %d not pointed" % n)
            for i, gen in enumerate(self.source.actions[n]):
                tgen = self.target.actions[n][i]
                for ref in self.source.levels[n].space.refs():
                    if f.apply(gen.apply(((), ref))) != tgen.apply(f.apply(((), ref))):
                        issues.append("level %d not equivariant at generator %d" % (n, i))
                        break
        for n in range(self.source.N):
            src_sm = self.source.smash1(n)
            tgt_sm = self.target.smash1(n)
            lifted = smash_map([SSetMap.identity(CIRCLE.space), self.components[n]], src_sm, tgt_sm)
            left = self.source.structures[n].then(self.components[n + 1])
            right = lifted.then(self.target.structures[n])
            if left.images != right.images:
                issues.append("level %d structure square fails" % n)
        if issues:
            raise ValueError("; ".join(issues))
        return True

    def serialize(self):
        return tuple(f.serialize() for f in self.components)

    def __eq__(self, other):
        return (
            isinstance(other, SpectrumMap)
            and all(f.images == g.images for f, g in zip(self.components, other.components))
        )

    def __ne__(self, other):
        return not self.__eq__(other)


def check_spectrum(spectrum, deep=True):
    """Structural checks: group relations, equivariance, the twist law."""
    issues = []
    X = spectrum
    for n in range(X.N + 1):
        gens = X.actions[n]
        space = X.levels[n].space
        ident = SSetMap.identity(space)
        for i, g in enumerate(gens):
            if g.then(g).images != ident.images:
                issues.append("t_%d^2 != id at level %d" % (i, n))
            if g.apply(((), X.levels[n].base)) != ((), X.levels[n].base):
                issues.append("t_%d moves the basepoint at level %d" % (i, n))
        for i in range(len(gens) - 1):
            a, b = gens[i], gens[i + 1]
            if a.then(b).then(a).images != b.then(a).then(b).images:
                issues.append("braid fails at level %d, %d" % (n, i))
        for i in range(len(gens)):
            for j in range(i + 2, len(gens)):
                if gens[i].then(gens[j]).images != gens[j].then(gens[i]).images:
                    issues.append("distant swaps fail at level %d (%d,%d)" % (n, i, j))
    for n in range(X.N):
        sm = X.smash1(n)
        for i, g in enumerate(gens_at(X, n)):
            shifted = X.action_map(n + 1, _one_plus(pm.transposition(n, i), n))
            lifted = smash_map([SSetMap.identity(CIRCLE.space), g], sm, sm)
            left = lifted.then(X.structures[n])
            right = X.structures[n].then(shifted)
            if left.images != right.images:
                issues.append("structure equivariance fails at level %d gen %d" % (n, i))
    if deep:
        for n in range(X.N - 1):
            issues.extend(_twist_issues(X, n))
    return issues


def gens_at(X, n):
    return X.actions[n]


def _one_plus(perm, n):
    """Embed a permutation of n letters into n+1 letters fixing slot 0."""
    return (0,) + tuple(v + 1 for v in perm)


def _twist_issues(X, n):
    """Swapping two incoming circle coordinates must act by the transposition."""
    issues = []
    triple = smash_many([CIRCLE, CIRCLE, X.levels[n]])
    tau = X.action_map(n + 2, pm.transposition(n + 2, 0))

    def absorb(c1, c2, x):
        return X.sigma_apply(n + 1, c1, X.sigma_apply(n, c2, x))

    for ref in triple.space.refs():
        if ref == triple.pointed.base:
            continue
        c1, c2, x = triple.resolve(ref)
        if tau.apply(absorb(c1, c2, x)) != absorb(c2, c1, x):
            issues.append("twist law fails at level %d on %r" % (n, ref))
            break
    return issues


# --- basic spectra -------------------------------------------------------------


def point_spectrum(N):
    pt = pointed_point()
    levels = [pt for _ in range(N + 1)]
    actions = [[SSetMap.identity(pt.space)] * max(n - 1, 0) for n in range(N + 1)]
    structures = []
    for n in range(N):
        sm = smash_many([CIRCLE, pt])
        structures.append(SSetMap(sm.space, pt.space, {sm.pointed.base: ((), pt.base)}))
    return Spectrum(N, levels, actions, structures)


def _placements(n, m):
    return sorted(itertools.permutations(range(n), m))


class FreeSpectrum:
    """A free spectrum together with its wedge bookkeeping."""

    __slots__ = ("spectrum", "m", "seed", "pieces", "wedges", "alphas")

    def __init__(self, spectrum, m, seed, pieces, wedges, alphas):
        self.spectrum = spectrum
        self.m = m
        self.seed = seed
        self.pieces = pieces
        self.wedges = wedges
        self.alphas = alphas

    def inject(self, n, alpha, piece_cell):
        """The level-n cell at the given summand."""
        tag = self.alphas[n].index(alpha)
        return self.wedges[n].injections[tag].apply(piece_cell)


def free_spectrum(m, seed, N):
    """The spectrum freely generated by a pointed simplicial set at level m.

    Level n >= m is the wedge over placements of m slots among n of the
    (n-m)-fold circle smash with the seed; the symmetric group permutes
    placements and sphere coordinates, and structure maps are the
    canonical inclusions.
    """
    if not 0 <= m <= N:
        raise ValueError("free level must lie within the truncation")
    pieces = {}

    def piece(j):
        if j not in pieces:
            pieces[j] = smash_many([CIRCLE] * j + [seed])
        return pieces[j]

    levels = []
    wedges = {}
    alphas = {}
    for n in range(N + 1):
        if n < m:
            levels.append(pointed_point())
            continue
        alphas[n] = _placements(n, m)
        w = wedge_of([piece(n - m).pointed] * len(alphas[n]))
        wedges[n] = w
        levels.append(w.pointed)

    def coords_of(level_n, cell):
        """Summand and component cells of a level cell; None for basepoints."""
        hit = wedges[level_n].locate_cell(cell)
        if hit is None:
            return None
        tag, pcell = hit
        return alphas[level_n][tag], piece(level_n - m).resolve_cell(pcell)

    actions = []
    for n in range(N + 1):
        if n < m:
            actions.append([SSetMap.identity(levels[n].space)] * max(n - 1, 0))
            continue
        gens = []
        for i in range(max(n - 1, 0)):
            gamma = pm.transposition(n, i)
            images = {}
            space = levels[n].space
            for ref in space.refs():
                if ref == levels[n].base:
                    images[ref] = ((), levels[n].base)
                    continue
                alpha, coords = coords_of(n, ((), ref))
                blocks = [tuple(sorted(set(range(n)) - set(alpha)))] + [(a,) for a in alpha]
                gamma_b = pm.partition_rep(blocks)
                nblocks, twists = pm.split_by_blocks(
                    pm.compose(gamma, gamma_b), [n - m] + [1] * m
                )
                alpha2 = tuple(gamma[a] for a in alpha)
                rho = twists[0]
                j = n - m
                newcoords = [coords[_inv_slot(rho, t)] for t in range(j)] + [coords[j]]
                pcell = piece(j).classify(newcoords)
                images[ref] = _locate_inject(wedges[n], alphas[n], alpha2, pcell, levels[n])
            gens.append(images)
        actions.append(gens)

    structures = []
    for n in range(N):
        sm = smash_many([CIRCLE, levels[n]])
        images = {}
        for ref in sm.space.refs():
            if ref == sm.pointed.base:
                images[ref] = ((), levels[n + 1].base)
                continue
            # non-base smash simplices only exist from level m upward
            c, w = sm.resolve(ref)
            alpha, coords = coords_of(n, w)
            alpha2 = tuple(a + 1 for a in alpha)
            pcell = piece(n + 1 - m).classify([c] + list(coords))
            images[ref] = _locate_inject(wedges[n + 1], alphas[n + 1], alpha2, pcell, levels[n + 1])
        structures.append(images)

    spec = Spectrum(N, levels, actions, structures)
    return FreeSpectrum(spec, m, seed, pieces, wedges, alphas)


def _inv_slot(rho, t):
    for s, v in enumerate(rho):
        if v == t:
            return s
    raise ValueError


def _locate_inject(wedge_result, alphas, alpha, piece_cell, level):
    tag = alphas.index(alpha)
    return wedge_result.injections[tag].apply(piece_cell)


def wedge_of(pointeds):
    return wedge(pointeds)


def sphere_spectrum(N):
    """Levels are smashes of circles with the coordinate-permutation action."""
    pieces = [smash_many([CIRCLE] * n) for n in range(N + 1)]
    levels = [p.pointed for p in pieces]
    actions = []
    for n in range(N + 1):
        gens = []
        for i in range(max(n - 1, 0)):
            rho = pm.transposition(n, i)
            images = {}
            for ref in levels[n].space.refs():
                if ref == levels[n].base:
                    images[ref] = ((), levels[n].base)
                    continue
                coords = pieces[n].resolve(ref)
                newcoords = [coords[_inv_slot(rho, t)] for t in range(n)]
                images[ref] = pieces[n].classify(list(newcoords))
            gens.append(images)
        actions.append(gens)
    structures = []
    for n in range(N):
        sm = smash_many([CIRCLE, levels[n]])
        images = {}
        for ref in sm.space.refs():
            if ref == sm.pointed.base:
                images[ref] = ((), levels[n + 1].base)
                continue
            c, w = sm.resolve(ref)
            coords = pieces[n].resolve_cell(w)
            if coords is None:
                d = len(c[0]) + c[1][0]
                images[ref] = (full_degeneracy(d), levels[n + 1].base)
                continue
            images[ref] = pieces[n + 1].classify([c] + list(coords))
        structures.append(images)
    return Spectrum(N, levels, actions, structures)


# --- maps out of free spectra ---------------------------------------------------


def adjoint_free_map(free, seed_map, target):
    """The spectrum map F_m(seed) -> target adjoint to a level-m seed map."""
    m = free.m
    X = target
    components = []
    for n in range(X.N + 1):
        src = free.spectrum.levels[n]
        images = {}
        if n < m:
            for ref in src.space.refs():
                images[ref] = ((), X.levels[n].base)
            components.append(SSetMap(src.space, X.levels[n].space, images))
            continue
        j = n - m
        for ref in src.space.refs():
            if ref == src.base:
                images[ref] = ((), X.levels[n].base)
                continue
            hit = free.wedges[n].locate_cell(((), ref))
            tag, pcell = hit
            alpha = free.alphas[n][tag]
            coords = free.pieces[j].resolve_cell(pcell)
            e = seed_map.apply(coords[-1])
            for t in range(j - 1, -1, -1):
                e = X.sigma_apply(m + (j - 1 - t), coords[t], e)
            blocks = [tuple(sorted(set(range(n)) - set(alpha)))] + [(a,) for a in alpha]
            gamma = pm.partition_rep(blocks)
            images[ref] = X.action_map(n, gamma).apply(e)
        components.append(SSetMap(src.space, X.levels[n].space, images))
    return SpectrumMap(free.spectrum, X, components)


def seed_inclusion(free):
    """The level-m map seed -> (F_m seed)_m at the identity placement."""
    m = free.m
    alpha_id = tuple(range(m))
    piece = free.pieces[0]
    images = {}
    for ref in free.seed.space.refs():
        cell = piece.classify([((), ref)])
        images[ref] = free.inject(m, alpha_id, cell)
    return SSetMap(free.seed.space, free.spectrum.levels[m].space, images)


def free_map(m, f, src_seed, tgt_seed, N):
    """F_m applied to a pointed simplicial map between seeds."""
    fsrc = free_spectrum(m, src_seed, N)
    ftgt = free_spectrum(m, tgt_seed, N)
    seed_map = f.then(seed_inclusion(ftgt))
    return adjoint_free_map(fsrc, seed_map, ftgt.spectrum), fsrc, ftgt


def free_horn_inclusion(m, k, n, N):
    """F_m of the pointed horn inclusion into the simplex."""
    if n < 1 or not 0 <= k <= n or not 0 <= m <= N:
        raise ValueError("bad horn parameters")
    h = plus(horn(n, k))
    d = plus(standard_simplex(n))
    incl = SSetMap(h.space, d.space, {ref: ((), ref) for ref in h.space.refs()})
    fmap, _, _ = free_map(m, incl, h, d, N)
    return fmap


def loop_comparison(m, N):
    """The map F_{m+1}(S^1) -> F_m(S^0) adjoint to the identity-summand circle."""
    if m + 1 > N:
        raise TruncationError("loop comparison needs level %d" % (m + 1))
    fsrc = free_spectrum(m + 1, CIRCLE, N)
    ftgt = free_spectrum(m, S0, N)
    alpha_id = tuple(range(1, m + 1))
    piece = ftgt.pieces[1]
    pt_ref = None
    for ref in S0.space.refs():
        if ref != S0.base:
            pt_ref = ref
    images = {}
    for ref in CIRCLE.space.refs():
        d = ref[0]
        cell = piece.classify([((), ref), (full_degeneracy(d), pt_ref)])
        images[ref] = ftgt.inject(m + 1, alpha_id, cell)
    seed_map = SSetMap(CIRCLE.space, ftgt.spectrum.levels[m + 1].space, images)
    return adjoint_free_map(fsrc, seed_map, ftgt.spectrum)


# --- functorial constructions ---------------------------------------------------


def smash_sset_spectrum(a, X):
    """The levelwise smash of a pointed simplicial set with a spectrum."""
    smashes = [smash_many([a, X.levels[n]]) for n in range(X.N + 1)]
    levels = [s.pointed for s in smashes]
    actions = []
    for n in range(X.N + 1):
        gens = []
        for g in X.actions[n]:
            gens.append(smash_map([SSetMap.identity(a.space), g], smashes[n], smashes[n]))
        actions.append(gens)
    structures = []
    for n in range(X.N):
        sm = smash_many([CIRCLE, levels[n]])
        images = {}
        for ref in sm.space.refs():
            if ref == sm.pointed.base:
                images[ref] = ((), levels[n + 1].base)
                continue
            c, w = sm.resolve(ref)
            pair = smashes[n].resolve_cell(w)
            if pair is None:
                d = len(c[0]) + c[1][0]
                images[ref] = (full_degeneracy(d), levels[n + 1].base)
                continue
            acell, xcell = pair
            images[ref] = smashes[n + 1].classify([acell, X.sigma_apply(n, c, xcell)])
        structures.append(images)
    spec = Spectrum(X.N, levels, actions, structures)
    return spec, smashes


def smash_sset_map(a_map, spec_map, src_pair, tgt_pair):
    """Componentwise smash of a simplicial map with a spectrum map."""
    src_spec, src_smashes = src_pair
    tgt_spec, tgt_smashes = tgt_pair
    comps = []
    for n in range(src_spec.N + 1):
        comps.append(
            smash_map([a_map, spec_map.components[n]], src_smashes[n], tgt_smashes[n])
        )
    return SpectrumMap(src_spec, tgt_spec, comps)


class SpectrumPushout:
    __slots__ = ("spectrum", "left", "right", "level_pushouts")

    def __init__(self, spectrum, left, right, level_pushouts):
        self.spectrum = spectrum
        self.left = left
        self.right = right
        self.level_pushouts = level_pushouts

    def induced(self, cone_x, cone_y, validate=False):
        comps = [
            po.induced(cone_x.components[n], cone_y.components[n], validate=validate)
            for n, po in enumerate(self.level_pushouts)
        ]
        return SpectrumMap(self.spectrum, cone_x.target, comps)


def spectrum_pushout(f, g):
    """Levelwise pushout of spectra with induced actions and structure maps."""
    X, Y, A = f.target, g.target, f.source
    pos = [pushout(f.components[n], g.components[n]) for n in range(A.N + 1)]
    bases = []
    levels = []
    for n, po in enumerate(pos):
        base = po.left.apply(((), X.levels[n].base))
        bases.append(base[1])
        levels.append(PointedSSet(po.space, base[1]))
    sides = (X, Y)

    def origin(n, ref):
        src_ref = pos[n].quotient.rep[ref]
        dim, (tag, lab) = src_ref
        return tag, (dim, lab)

    def leg(n, tag):
        return (pos[n].left, pos[n].right)[tag]

    actions = []
    for n in range(A.N + 1):
        gens = []
        for i in range(max(n - 1, 0)):
            images = {}
            for ref in levels[n].space.refs():
                tag, up = origin(n, ref)
                moved = sides[tag].actions[n][i].apply(((), up))
                images[ref] = leg(n, tag).apply(moved)
            gens.append(images)
        actions.append(gens)
    structures = []
    for n in range(A.N):
        sm = smash_many([CIRCLE, levels[n]])
        images = {}
        for ref in sm.space.refs():
            if ref == sm.pointed.base:
                images[ref] = ((), bases[n + 1])
                continue
            c, w = sm.resolve(ref)
            word, base_ref = w
            tag, up = origin(n, base_ref)
            up_cell = (word, up)
            e = sides[tag].sigma_apply(n, c, up_cell)
            images[ref] = leg(n + 1, tag).apply(e)
        structures.append(images)
    spec = Spectrum(A.N, levels, actions, structures)
    left = SpectrumMap(X, spec, [pos[n].left for n in range(A.N + 1)])
    right = SpectrumMap(Y, spec, [pos[n].right for n in range(A.N + 1)])
    return SpectrumPushout(spec, left, right, pos)


def cylinder_factorization(f):
    """Factor a spectrum map through its levelwise mapping cylinder.

    Returns ``(Z, front, projection)`` with ``front . projection == f``,
    ``front`` levelwise injective.
    """
    X, Y = f.source, f.target
    interval = plus(standard_simplex(1))
    cyl, cyl_smashes = _cylinder_spectrum(X, interval)

    def end(t):
        comps = []
        for n in range(X.N + 1):
            images = {}
            for ref in X.levels[n].space.refs():
                vertex = (full_degeneracy(ref[0]), (0, (t,)))
                images[ref] = cyl_smashes[n].classify([((), ref), vertex])
            comps.append(SSetMap(X.levels[n].space, cyl.levels[n].space, images))
        return SpectrumMap(X, cyl, comps)

    po = spectrum_pushout(end(1), f)
    front = end(0).then(po.left)
    collapse_comps = []
    for n in range(X.N + 1):
        images = {}
        for ref in cyl.levels[n].space.refs():
            if ref == cyl.levels[n].base:
                images[ref] = ((), Y.levels[n].base)
                continue
            xcell, _ = cyl_smashes[n].resolve(ref)
            images[ref] = f.components[n].apply(xcell)
        collapse_comps.append(SSetMap(cyl.levels[n].space, Y.levels[n].space, images))
    collapse = SpectrumMap(cyl, Y, collapse_comps)
    proj = po.induced(collapse, SpectrumMap.identity(Y))
    return po.spectrum, front, proj


def _cylinder_spectrum(X, interval):
    smashes = [smash_many([X.levels[n], interval]) for n in range(X.N + 1)]
    levels = [s.pointed for s in smashes]
    actions = []
    for n in range(X.N + 1):
        gens = []
        for g in X.actions[n]:
            gens.append(smash_map([g, SSetMap.identity(interval.space)], smashes[n], smashes[n]))
        actions.append(gens)
    structures = []
    for n in range(X.N):
        sm = smash_many([CIRCLE, levels[n]])
        images = {}
        for ref in sm.space.refs():
            if ref == sm.pointed.base:
                images[ref] = ((), levels[n + 1].base)
                continue
            c, w = sm.resolve(ref)
            pair = smashes[n].resolve_cell(w)
            if pair is None:
                d = len(c[0]) + c[1][0]
                images[ref] = (full_degeneracy(d), levels[n + 1].base)
                continue
            xcell, tcell = pair
            images[ref] = smashes[n + 1].classify([X.sigma_apply(n, c, xcell), tcell])
        structures.append(images)
    return Spectrum(X.N, levels, actions, structures), smashes


def cylinder_pushout_product(m, n, N):
    """The pushout-product of the boundary inclusion with the cylinder front.

    The domain is the gluing of the simplex smashed with the free circle
    spectrum and the boundary smashed with the cylinder; the codomain is
    the simplex smashed with the cylinder.
    """
    lam = loop_comparison(m, N)
    z, front, _ = cylinder_factorization(lam)
    fs1 = lam.source
    dn = plus(standard_simplex(n))
    bd = plus(boundary(n))
    incl = SSetMap(bd.space, dn.space, {ref: ((), ref) for ref in bd.space.refs()})
    dn_fs1 = smash_sset_spectrum(dn, fs1)
    bd_fs1 = smash_sset_spectrum(bd, fs1)
    bd_z = smash_sset_spectrum(bd, z)
    dn_z = smash_sset_spectrum(dn, z)
    top = smash_sset_map(incl, SpectrumMap.identity(fs1), bd_fs1, dn_fs1)
    side = smash_sset_map(SSetMap.identity(bd.space), front, bd_fs1, bd_z)
    po = spectrum_pushout(top, side)
    cone_x = smash_sset_map(SSetMap.identity(dn.space), front, dn_fs1, dn_z)
    cone_y = smash_sset_map(incl, SpectrumMap.identity(z), bd_z, dn_z)
    product_map = po.induced(cone_x, cone_y)
    return product_map


# --- smash products of spectra ---------------------------------------------------


class DaySmash:
    """The smash product of spectra, presented level by level.

    Level n is the wedge of pieces X^(1)_{p_1} ^ ... ^ X^(d)_{p_d} over all
    compositions p of n and all ordered partitions of the slot set with
    those block sizes, coequalized by the relations that move a circle
    coordinate across a factor boundary through the structure maps.
    """

    __slots__ = ("factors", "spectrum", "levels_data")

    def __init__(self, factors, spectrum, levels_data):
        self.factors = factors
        self.spectrum = spectrum
        self.levels_data = levels_data

    def resolve(self, n, cell):
        """Tokens ((p_t, block_t, cell_t), ...) of a level-n cell, or None."""
        data = self.levels_data[n]
        word, ref = cell
        if ref == self.spectrum.levels[n].base:
            return None
        rep_ref = data["quotient"].rep[ref]
        dim, (tag, lab) = rep_ref
        pvec, blocks = data["labels"][tag]
        piece = data["pieces"][pvec]
        coords = piece.resolve_cell((word, (dim, lab)))
        return tuple(
            (pvec[t], blocks[t], coords[t]) for t in range(len(self.factors))
        )

    def classify(self, n, tokens):
        """The level-n cell with the given summand tokens."""
        data = self.levels_data[n]
        pvec = tuple(t[0] for t in tokens)
        blocks = tuple(tuple(t[1]) for t in tokens)
        piece = data["pieces"][pvec]
        pcell = piece.classify([t[2] for t in tokens])
        tag = data["labels"].index((pvec, blocks))
        upstairs = data["wedge"].injections[tag].apply(pcell)
        return data["quotient"].project(upstairs)


def day_smash_many(factors):
    """Smash product of several spectra sharing a truncation."""
    if not factors:
        raise ValueError("empty smash of spectra is the sphere; build it directly")
    N = factors[0].N
    if any(X.N != N for X in factors):
        raise TruncationError("smash factors must share the truncation")
    d = len(factors)
    levels_data = []
    levels = []
    for n in range(N + 1):
        pieces = {}
        labels = []
        summands = []
        for pvec in pm.compositions(n, d):
            if pvec not in pieces:
                pieces[pvec] = smash_many([factors[t].levels[pvec[t]] for t in range(d)])
            for blocks in pm.ordered_partitions(range(n), pvec):
                labels.append((pvec, blocks))
                summands.append(pieces[pvec].pointed)
        w = wedge_of(summands)

        def inject(pvec, blocks, piece_cell, labels=labels, w=w):
            tag = labels.index((pvec, blocks))
            return w.injections[tag].apply(piece_cell)

        pairs = []
        for g in range(d - 1):
            for qvec in pm.compositions(n - 1, d):
                mid_factors = (
                    [factors[t].levels[qvec[t]] for t in range(g + 1)]
                    + [CIRCLE]
                    + [factors[t].levels[qvec[t]] for t in range(g + 1, d)]
                )
                mid = smash_many(mid_factors)
                sizes = list(qvec[: g + 1]) + [1] + list(qvec[g + 1:])
                for parts in pm.ordered_partitions(range(n), sizes):
                    dblocks = parts[: g + 1] + parts[g + 2:]
                    s = parts[g + 1][0]
                    for ref in mid.space.refs():
                        if ref == mid.pointed.base:
                            continue
                        coords = list(mid.resolve(ref))
                        c = coords[g + 1]
                        us = coords[: g + 1] + coords[g + 2:]
                        left = _absorb(factors[g], qvec[g], dblocks[g], c, us[g], s)
                        right = _absorb(
                            factors[g + 1], qvec[g + 1], dblocks[g + 1], c, us[g + 1], s
                        )
                        lpvec = tuple(
                            q + (1 if t == g else 0) for t, q in enumerate(qvec)
                        )
                        rpvec = tuple(
                            q + (1 if t == g + 1 else 0) for t, q in enumerate(qvec)
                        )
                        lblocks = tuple(
                            left[0] if t == g else dblocks[t] for t in range(d)
                        )
                        rblocks = tuple(
                            right[0] if t == g + 1 else dblocks[t] for t in range(d)
                        )
                        lcells = [left[1] if t == g else us[t] for t in range(d)]
                        rcells = [right[1] if t == g + 1 else us[t] for t in range(d)]
                        lcell = inject(lpvec, lblocks, pieces_classify(pieces, factors, lpvec, lcells))
                        rcell = inject(rpvec, rblocks, pieces_classify(pieces, factors, rpvec, rcells))
                        pairs.append((lcell, rcell))
        q = coequalize(w.pointed.space, pairs)
        base = q.project(((), w.pointed.base))
        levels.append(PointedSSet(q.space, base[1]))
        levels_data.append(
            {"pieces": pieces, "labels": labels, "wedge": w, "quotient": q}
        )

    day = DaySmash(tuple(factors), None, levels_data)

    actions = []
    for n in range(N + 1):
        gens = []
        for i in range(max(n - 1, 0)):
            gamma = pm.transposition(n, i)
            images = {}
            for ref in levels[n].space.refs():
                if ref == levels[n].base:
                    images[ref] = ((), levels[n].base)
                    continue
                tokens = _day_resolve(levels_data, levels, n, ((), ref))
                pvec = tuple(t[0] for t in tokens)
                blocks = [t[1] for t in tokens]
                nblocks, twists = pm.split_by_blocks(
                    pm.compose(gamma, pm.partition_rep(blocks)), pvec
                )
                newtokens = []
                for t in range(d):
                    moved = factors[t].action_map(pvec[t], twists[t]).apply(tokens[t][2])
                    newtokens.append((pvec[t], tuple(nblocks[t]), moved))
                images[ref] = _day_classify(levels_data, levels, n, newtokens)
            gens.append(images)
        actions.append(gens)

    structures = []
    for n in range(N):
        sm = smash_many([CIRCLE, levels[n]])
        images = {}
        for ref in sm.space.refs():
            if ref == sm.pointed.base:
                images[ref] = ((), levels[n + 1].base)
                continue
            c, zcell = sm.resolve(ref)
            tokens = _day_resolve(levels_data, levels, n, zcell)
            if tokens is None:
                dd = len(c[0]) + c[1][0]
                images[ref] = (full_degeneracy(dd), levels[n + 1].base)
                continue
            newtokens = [
                (
                    tokens[0][0] + 1,
                    tuple([0] + [v + 1 for v in tokens[0][1]]),
                    factors[0].sigma_apply(tokens[0][0], c, tokens[0][2]),
                )
            ]
            for t in range(1, d):
                newtokens.append(
                    (tokens[t][0], tuple(v + 1 for v in tokens[t][1]), tokens[t][2])
                )
            images[ref] = _day_classify(levels_data, levels, n + 1, newtokens)
        structures.append(images)

    spec = Spectrum(N, levels, actions, structures)
    day.spectrum = spec
    return day


def pieces_classify(pieces, factors, pvec, cells):
    if pvec not in pieces:
        pieces[pvec] = smash_many([factors[t].levels[pvec[t]] for t in range(len(factors))])
    return pieces[pvec].classify(cells)


def _absorb(X, q, block, c, u, s):
    """Absorb a circle at slot s into a level-q coordinate with slots ``block``.

    Returns the merged sorted block and the twisted level-(q+1) cell.
    """
    v = X.sigma_apply(q, c, u)
    merged = tuple(sorted(block + (s,)))
    rank = {val: r for r, val in enumerate(merged)}
    tau = tuple([rank[s]] + [rank[val] for val in block])
    return merged, X.action_map(q + 1, tau).apply(v)


def _day_resolve(levels_data, levels, n, cell):
    data = levels_data[n]
    word, ref = cell
    if ref == levels[n].base:
        return None
    rep_ref = data["quotient"].rep[ref]
    dim, (tag, lab) = rep_ref
    pvec, blocks = data["labels"][tag]
    piece = data["pieces"][pvec]
    coords = piece.resolve_cell((word, (dim, lab)))
    return tuple((pvec[t], blocks[t], coords[t]) for t in range(len(pvec)))


def _day_classify(levels_data, levels, n, tokens):
    data = levels_data[n]
    pvec = tuple(t[0] for t in tokens)
    blocks = tuple(tuple(t[1]) for t in tokens)
    piece = data["pieces"][pvec]
    pcell = piece.classify([t[2] for t in tokens])
    tag = data["labels"].index((pvec, blocks))
    upstairs = data["wedge"].injections[tag].apply(pcell)
    return data["quotient"].project(upstairs)


def smash_spectra(X, Y):
    """Binary smash product."""
    return day_smash_many([X, Y])


def unit_comparison(day, X):
    """The canonical maps between S ^ X and X (levelwise inverse bijections).

    ``day`` must be the smash of the sphere spectrum with X.
    Returns ``(to_x, from_x)``.
    """
    S = day.factors[0]
    comps_to = []
    comps_from = []
    for n in range(X.N + 1):
        images = {}
        space = day.spectrum.levels[n].space
        for ref in space.refs():
            if ref == day.spectrum.levels[n].base:
                images[ref] = ((), X.levels[n].base)
                continue
            (p, bs, scell), (q, bx, xcell) = day.resolve(n, ((), ref))
            circle_coords = smash_many([CIRCLE] * p).resolve_cell(scell) if p else ()
            e = xcell
            for t in range(p - 1, -1, -1):
                e = X.sigma_apply(q + (p - 1 - t), circle_coords[t], e)
            gamma = pm.partition_rep([bs, bx])
            images[ref] = X.action_map(n, gamma).apply(e)
        comps_to.append(SSetMap(space, X.levels[n].space, images))
        images_from = {}
        for ref in X.levels[n].space.refs():
            if ref == X.levels[n].base:
                images_from[ref] = ((), day.spectrum.levels[n].base)
                continue
            tokens = [
                (0, (), _empty_smash_point(ref[0])),
                (n, tuple(range(n)), ((), ref)),
            ]
            images_from[ref] = day.classify(n, tokens)
        comps_from.append(SSetMap(X.levels[n].space, space, images_from))
    to_x = SpectrumMap(day.spectrum, X, comps_to)
    from_x = SpectrumMap(X, day.spectrum, comps_from)
    return to_x, from_x


def _empty_smash_point(dim):
    """The fully degenerate non-basepoint cell of the empty smash piece."""
    pt_ref = [r for r in S0.space.refs() if r != S0.base][0]
    return (full_degeneracy(dim), pt_ref)


def symmetry_comparison(day_xy, day_yx):
    """The swap map X ^ Y -> Y ^ X on smash presentations."""
    comps = []
    N = day_xy.spectrum.N
    for n in range(N + 1):
        images = {}
        space = day_xy.spectrum.levels[n].space
        for ref in space.refs():
            if ref == day_xy.spectrum.levels[n].base:
                images[ref] = ((), day_yx.spectrum.levels[n].base)
                continue
            t0, t1 = day_xy.resolve(n, ((), ref))
            images[ref] = day_yx.classify(n, [t1, t0])
        comps.append(SSetMap(space, day_yx.spectrum.levels[n].space, images))
    return SpectrumMap(day_xy.spectrum, day_yx.spectrum, comps)


# --- enumeration of spectrum maps ----------------------------------------------


def divide_word(space, word, cell):
    """Solve word . x == cell for x, or return None."""
    x = cell
    for a in word:
        x = space.face(x, a)
    got = (compose_degeneracies(word, x[0]), x[1])
    if got != cell:
        return None
    return x


def _level_prescription(D, X, n, prev, pres_out):
    """Constraints on level n+1 from the structure square at level n."""
    sm = D.smash1(n)
    xsm = X.smash1(n)
    for ref in sm.space.refs():
        if ref == sm.pointed.base:
            continue
        c, w = sm.resolve(ref)
        mapped = prev.apply(w)
        target = X.structures[n].apply(xsm.classify([c, mapped]))
        lhs = D.structures[n].apply(((), ref))
        lw, lref = lhs
        want = divide_word(X.levels[n + 1].space, lw, target)
        if want is None:
            return False
        if pres_out.get(lref, want) != want:
            return False
        pres_out[lref] = want
    return True


def _level_assignments(D, X, n, pres, results_cap=None):
    """All pointed equivariant maps D_n -> X_n extending the prescriptions."""
    src = D.levels[n].space
    tgt = X.levels[n].space
    refs = sorted(src.refs(), key=lambda r: (r[0], labkey(r[1])))
    pres = dict(pres)
    pres[D.levels[n].base] = ((), X.levels[n].base)
    gens = list(zip(D.actions[n], X.actions[n]))
    from .lifting import _candidate_index

    indexes = {}
    assign = {}
    out = []

    def faces_ok(ref, img):
        d = ref[0]
        if d == 0:
            return True
        for i in range(d + 1):
            w, fref = src.face(((), ref), i)
            iw, iref = assign[fref]
            if tgt.face(img, i) != (compose_degeneracies(w, iw), iref):
                return False
        return True

    def propagate(ref, img, trail):
        stack = [(ref, img)]
        while stack:
            r, t = stack.pop()
            if r in assign:
                if assign[r] != t:
                    return False
                continue
            if len(t[0]) + t[1][0] != r[0]:
                return False
            if not faces_ok(r, t):
                return False
            assign[r] = t
            trail.append(r)
            for gd, gx in gens:
                r2 = gd.images[r]
                if r2[0]:
                    continue
                stack.append((r2[1], gx.apply(t)))
        return True

    def seed():
        trail = []
        for r, t in sorted(pres.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1]))):
            if not propagate(r, t, trail):
                return None
        return trail

    base_trail = seed()
    if base_trail is None:
        return []

    def backtrack(pos):
        while pos < len(refs) and refs[pos] in assign:
            pos += 1
        if pos == len(refs):
            out.append(SSetMap(src, tgt, dict(assign)))
            return results_cap is not None and len(out) >= results_cap
        ref = refs[pos]
        d = ref[0]
        if d not in indexes:
            indexes[d] = _candidate_index(tgt, d)
        if d == 0:
            candidates = tgt.cells(0)
        else:
            want = tuple(
                (compose_degeneracies(w, assign[fr][0]), assign[fr][1])
                for (w, fr) in (src.face(((), ref), i) for i in range(d + 1))
            )
            candidates = indexes[d].get(want, ())
        for cand in candidates:
            trail = []
            if propagate(ref, cand, trail):
                if backtrack(pos + 1):
                    return True
            for r in trail:
                del assign[r]
        return False

    backtrack(0)
    return out


def enumerate_spectrum_maps(D, X, prescribed=None, first_only=False):
    """All spectrum maps D -> X, level by level with forced propagation."""
    if D.N != X.N:
        raise TruncationError("truncation mismatch")
    pres0 = {n: dict((prescribed or {}).get(n, {})) for n in range(D.N + 1)}
    results = []

    def descend(n, comps):
        if n > D.N:
            results.append(SpectrumMap(D, X, list(comps)))
            return first_only
        pres = dict(pres0[n])
        if n > 0:
            if not _level_prescription(D, X, n - 1, comps[-1], pres):
                return False
        for f in _level_assignments(D, X, n, pres):
            comps.append(f)
            if descend(n + 1, comps):
                comps.pop()
                return True
            comps.pop()
        return False

    descend(0, [])
    return results


def extend_spectrum_map(i, u, first_only=True):
    """Maps g with g . i == u, for i levelwise injective on nondegenerates."""
    E, X = i.target, u.target
    pres = {n: {} for n in range(E.N + 1)}
    for n in range(E.N + 1):
        for ref in i.source.levels[n].space.refs():
            w, eref = i.components[n].images[ref]
            want = u.components[n].apply(((), ref))
            if w:
                want = divide_word(X.levels[n].space, w, want)
                if want is None:
                    return []
            if pres[n].get(eref, want) != want:
                return []
            pres[n][eref] = want
    return enumerate_spectrum_maps(E, X, prescribed=pres, first_only=first_only)


def spectrum_rlp(f, X):
    """Does the terminal map of X lift against f?  Witness on failure."""
    for u in enumerate_spectrum_maps(f.source, X):
        if not extend_spectrum_map(f, u, first_only=True):
            return LiftReport(False, (u, None), "no extension")
    return LiftReport(True)


# --- the omega test set ---------------------------------------------------------


class OmegaReport:
    """Per-generator lifting decisions and the combined verdict."""

    __slots__ = ("entries", "bounds")

    def __init__(self, entries, bounds):
        self.entries = list(entries)
        self.bounds = bounds

    @property
    def verdict(self):
        return all(ok for (_, ok, _) in self.entries)

    def failures(self):
        return [(desc, w) for (desc, ok, w) in self.entries if not ok]

    def __repr__(self):
        return "<OmegaReport %s %d generators>" % (
            "ok" if self.verdict else "FAIL",
            len(self.entries),
        )


def omega_generators(N, m_max, n_max, include_cylinders=True):
    """Horn generators and cylinder pushout-products within the bounds."""
    gens = []
    for m in range(0, min(m_max, N) + 1):
        for n in range(1, n_max + 1):
            for k in range(n + 1):
                gens.append((("FI", m, k, n), free_horn_inclusion(m, k, n, N)))
    if include_cylinders:
        for m in range(0, min(m_max, N - 1) + 1):
            for n in range(0, n_max + 1):
                gens.append((("K", m, n), cylinder_pushout_product(m, n, N)))
    return gens


def is_omega_shape(X, m_max, n_max, include_cylinders=True, generators=None):
    """Lifting census against the omega test set, within the stated bounds."""
    gens = generators
    if gens is None:
        gens = omega_generators(X.N, m_max, n_max, include_cylinders)
    entries = []
    for desc, g in gens:
        rep = spectrum_rlp(g, X)
        entries.append((desc, rep.ok, None if rep.ok else rep.square))
    return OmegaReport(entries, (m_max, n_max))
