"""Exhaustive decision procedures for simplicial lifting problems.

Everything here is finite: maps are enumerated by backtracking over
nondegenerate simplices in dimension order, candidates are filtered by a
face-image index, and right-lifting-property questions are settled by
checking every commuting square.
"""

from .errors import BudgetExceededError
from .simplicial import SSetMap, cellkey, labkey, size_budget

from . import simplicial as _ss


def _face_key(space, cell, n):
    return tuple(space.face(cell, i) for i in range(n + 1))


def _candidate_index(space, n):
    """Cells of dimension n indexed by their face tuples."""
    index = {}
    for c in space.cells(n):
        key = _face_key(space, c, n) if n else ()
        index.setdefault(key, []).append(c)
    return index


def enumerate_maps(source, target, pointed=None, prescribed=None,
                   first_only=False, limit=None):
    """All simplicial maps source -> target, in a deterministic order.

    ``pointed`` is an optional pair of PointedSSet wrappers; ``prescribed``
    pins images of some nondegenerate simplices.  With ``first_only`` the
    search stops at the first map.
    """
    refs = sorted(source.refs(), key=lambda r: (r[0], labkey(r[1])))
    pres = dict(prescribed or {})
    if pointed is not None:
        src_p, tgt_p = pointed
        want = ((), tgt_p.base)
        if pres.get(src_p.base, want) != want:
            return []
        pres[src_p.base] = want
    indexes = {}
    results = []
    assignment = {}

    def partial_apply(cell):
        w, ref = cell
        iw, iref = assignment[ref]
        return (_ss.compose_degeneracies(w, iw), iref)

    def backtrack(pos):
        if pos == len(refs):
            results.append(SSetMap(source, target, dict(assignment)))
            if limit is not None and len(results) > limit:
                raise BudgetExceededError("map enumeration exceeded %d" % limit)
            return first_only
        ref = refs[pos]
        n = ref[0]
        if ref in pres:
            candidates = [pres[ref]]
            if n:
                want = tuple(partial_apply(source.face(((), ref), i)) for i in range(n + 1))
                got = _face_key(target, pres[ref], n)
                if got != want:
                    return False
        elif n == 0:
            candidates = target.cells(0)
        else:
            if n not in indexes:
                indexes[n] = _candidate_index(target, n)
            want = tuple(partial_apply(source.face(((), ref), i)) for i in range(n + 1))
            candidates = indexes[n].get(want, ())
        for cand in candidates:
            assignment[ref] = cand
            if backtrack(pos + 1):
                return True
            del assignment[ref]
        return False

    backtrack(0)
    return results


class LiftReport:
    """Outcome of a lifting decision, with a witness square on failure."""

    __slots__ = ("ok", "square", "detail")

    def __init__(self, ok, square=None, detail=""):
        self.ok = ok
        self.square = square
        self.detail = detail

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "<LiftReport %s %s>" % ("ok" if self.ok else "FAIL", self.detail)


def _restrict_along(i, u):
    """Prescriptions for maps w: target(i) -> X with w . i == u.

    Requires i to send nondegenerate simplices to distinct nondegenerate
    simplices (checked by the caller).
    """
    pres = {}
    for ref in i.source.refs():
        w, tref = i.images[ref]
        img = u.apply(((), ref))
        if w:
            return None
        if tref in pres and pres[tref] != img:
            return None
        pres[tref] = img
    return pres


def has_rlp(i, p, pointed=None):
    """Does p have the right lifting property against i?

    Every commuting square (u: A -> X, v: B -> Y) with v.i == p.u must
    admit a diagonal B -> X.  Returns a witness square on failure.
    """
    injective = i.is_injective()
    pointed_a = pointed_b = None
    if pointed is not None:
        a_p, b_p, x_p, y_p = pointed
        pointed_a = (a_p, x_p)
        pointed_b = (b_p, y_p)
    maps_u = enumerate_maps(i.source, p.source, pointed=pointed_a)
    if injective:
        for u in maps_u:
            pu = u.then(p)
            pres_v = _restrict_along(i, pu)
            if pres_v is None:
                continue
            for v in enumerate_maps(i.target, p.target, pointed=pointed_b, prescribed=pres_v):
                pres_w = _restrict_along(i, u)
                lifts = [
                    w
                    for w in enumerate_maps(i.target, p.source, pointed=None if pointed is None else (pointed[1], pointed[2]), prescribed=pres_w)
                    if w.then(p).images == v.images
                ]
                if not lifts:
                    return LiftReport(False, (u, v), "no diagonal")
        return LiftReport(True)
    # general case: bucket all maps from the codomain of i by
    # (restriction along i, projection along p)
    maps_w = enumerate_maps(i.target, p.source, pointed=None if pointed is None else (pointed[1], pointed[2]))
    buckets = {}
    for w in maps_w:
        ri = tuple(sorted({ref: w.apply(i.images[ref]) for ref in i.source.refs()}.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1]))))
        pw = tuple(sorted(w.then(p).images.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1]))))
        buckets.setdefault((ri, pw), []).append(w)
    maps_v = enumerate_maps(i.target, p.target, pointed=pointed_b)
    for u in maps_u:
        pu = u.then(p)
        for v in maps_v:
            vi = {ref: v.apply(i.images[ref]) for ref in i.source.refs()}
            if any(vi[ref] != pu.apply(((), ref)) for ref in i.source.refs()):
                continue
            ri = tuple(sorted(u.images.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1]))))
            pw = tuple(sorted(v.images.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1]))))
            if not buckets.get((ri, pw)):
                return LiftReport(False, (u, v), "no diagonal")
    return LiftReport(True)


def horn_fillable(space, n, u):
    """Does the horn map u extend over the full simplex?"""
    full = _ss.standard_simplex(n)
    pres = dict(u.images)
    return bool(enumerate_maps(full, space, prescribed=pres, first_only=True))


def is_kan(space, d_max):
    """Horn-filling test in dimensions <= d_max."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    for n in range(1, d_max + 1):
        for k in range(n + 1):
            h = _ss.horn(n, k)
            for u in enumerate_maps(h, space):
                if not horn_fillable(space, n, u):
                    return LiftReport(False, (u, None), "horn (%d,%d) has no filler" % (n, k))
    return LiftReport(True)


def kan_fibration(f, d_max):
    """Levelwise Kan-fibration test: RLP against horn inclusions up to d_max."""
    for n in range(1, d_max + 1):
        for k in range(n + 1):
            h = _ss.horn(n, k)
            full = _ss.standard_simplex(n)
            incl = SSetMap(h, full, {ref: ((), ref) for ref in h.refs()})
            rep = has_rlp(incl, f)
            if not rep.ok:
                rep.detail = "horn (%d,%d): %s" % (n, k, rep.detail)
                return rep
    return LiftReport(True)
