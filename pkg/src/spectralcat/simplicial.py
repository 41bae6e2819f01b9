"""Finite simplicial sets in Eilenberg-Zilber normal form.

A finite simplicial set is stored by its nondegenerate simplices together
with, for each nondegenerate n-simplex and each 0 <= i <= n, its i-th face
written in normal form: an admissible degeneracy word applied to a
nondegenerate simplex.  A "cell" is any simplex, degenerate or not,
represented as a pair ``(word, (dim, label))`` where ``word`` is a strictly
decreasing tuple of degeneracy indices; the cell's dimension is
``len(word) + dim``.

All values are immutable after construction.  Colimits (pushouts,
quotients, wedges, smashes) are computed levelwise and renormalized, so
every constructed object is again in normal form.
"""

from .errors import BudgetExceededError

DEFAULT_SIZE_BUDGET = 20000

_size_budget = DEFAULT_SIZE_BUDGET


def set_size_budget(n):
    """Set the global cap on nondegenerate simplices per object.  Returns the old value."""
    global _size_budget
    old = _size_budget
    _size_budget = int(n)
    return old


def size_budget():
    return _size_budget


def _guard(count, what):
    if count > _size_budget:
        raise BudgetExceededError(
            "%s needs %d nondegenerate simplices, budget is %d" % (what, count, _size_budget)
        )


_labkey_memo = {}


def labkey(lab):
    """Total order key for labels built from ints, strings and tuples."""
    if isinstance(lab, bool):
        return (0, int(lab))
    if isinstance(lab, int):
        return (0, lab)
    if isinstance(lab, str):
        return (1, lab)
    if isinstance(lab, tuple):
        got = _labkey_memo.get(lab)
        if got is None:
            got = (2, tuple(labkey(x) for x in lab))
            _labkey_memo[lab] = got
        return got
    return (3, repr(lab))


def cellkey(cell):
    word, (dim, lab) = cell
    return (dim + len(word), len(word), word, labkey(lab))


# --- degeneracy word algebra -------------------------------------------------
#
# A word (a_1, ..., a_k) with a_1 > a_2 > ... > a_k >= 0 denotes the operator
# s_{a_1} ... s_{a_k} (rightmost applied first).  The simplicial identity
# s_i s_j = s_{j+1} s_i (i <= j) normalizes arbitrary composites to this form.


def degeneracy_after(word, i):
    """Normal form of s_i composed after an admissible word."""
    out = []
    k = 0
    j = i
    while k < len(word) and j <= word[k]:
        out.append(word[k] + 1)
        k += 1
    out.append(j)
    out.extend(word[k:])
    return tuple(out)


def compose_degeneracies(outer, inner):
    """Normal form of the composite (outer word) applied after (inner word)."""
    acc = inner
    for a in reversed(outer):
        acc = degeneracy_after(acc, a)
    return acc


def face_into_word(word, i):
    """Push d_i through an admissible word.

    Returns ``(word2, j)`` with d_i s_word = s_word2 d_j, or ``(word2, None)``
    when the face cancels against one of the degeneracies.
    """
    out = []
    j = i
    for idx, b in enumerate(word):
        if j == b or j == b + 1:
            return (tuple(out) + word[idx + 1:], None)
        if j < b:
            out.append(b - 1)
        else:
            out.append(b)
            j -= 1
    return (tuple(out), j)


def remove_letter(word, ell):
    """Write the word as s_ell applied after a shorter admissible word."""
    t = word.index(ell)
    return tuple(b - 1 for b in word[:t]) + word[t + 1:]


def full_degeneracy(n):
    """The word collapsing a vertex to dimension n."""
    return tuple(range(n - 1, -1, -1))


def _admissible_words(length, top):
    """All admissible words of the given length with letters below ``top``."""
    if length == 0:
        return [()]
    out = []

    def build(prefix, lo, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        # letters strictly decrease and stay nonnegative
        for a in range(lo, remaining - 2, -1):
            prefix.append(a)
            build(prefix, a - 1, remaining - 1)
            prefix.pop()

    build([], top - 1, length)
    return out


class SimplicialSet:
    """A finite simplicial set presented by nondegenerate simplices.

    ``simplices`` maps a dimension to the labels of its nondegenerate
    simplices; ``faces`` maps ``(dim, label)`` to the tuple of ``dim + 1``
    face cells.  Labels are arbitrary values built from ints, strings and
    tuples and are kept in a canonical sorted order.
    """

    __slots__ = ("simplices", "faces", "dim", "_cells", "_face_index")

    def __init__(self, simplices, faces, validate=False):
        norm = {}
        total = 0
        for n, labs in simplices.items():
            labs = tuple(sorted(labs, key=labkey))
            if labs:
                norm[n] = labs
                total += len(labs)
        _guard(total, "simplicial set")
        self.simplices = norm
        self.faces = dict(faces)
        self.dim = max(norm) if norm else -1
        self._cells = {}
        self._face_index = {}
        if validate:
            self.validate()

    # -- basic queries

    def nondeg(self, n):
        return self.simplices.get(n, ())

    def refs(self):
        for n in sorted(self.simplices):
            for lab in self.simplices[n]:
                yield (n, lab)

    def size(self):
        return sum(len(v) for v in self.simplices.values())

    def is_empty(self):
        return not self.simplices

    def has_ref(self, ref):
        n, lab = ref
        return lab in set(self.simplices.get(n, ()))

    def cells(self, n):
        """All cells of dimension n (nondegenerate and degenerate), sorted."""
        if n in self._cells:
            return self._cells[n]
        out = []
        for m in sorted(self.simplices):
            if m > n:
                break
            words = _admissible_words(n - m, n)
            for lab in self.simplices[m]:
                for w in words:
                    out.append((w, (m, lab)))
        out.sort(key=cellkey)
        out = tuple(out)
        self._cells[n] = out
        return out

    # -- simplicial operators on cells

    def face(self, cell, i):
        word, ref = cell
        w2, j = face_into_word(word, i)
        if j is None:
            return (w2, ref)
        fw, fref = self.faces[ref][j]
        return (compose_degeneracies(w2, fw), fref)

    def degenerate(self, cell, i):
        word, ref = cell
        return (degeneracy_after(word, i), ref)

    def face_tuple(self, cell):
        d = len(cell[0]) + cell[1][0]
        return tuple(self.face(cell, i) for i in range(d + 1))

    def validate(self):
        for (n, lab), fs in self.faces.items():
            if lab not in set(self.simplices.get(n, ())):
                raise ValueError("faces listed for missing simplex %r" % ((n, lab),))
            if n > 0 and len(fs) != n + 1:
                raise ValueError("simplex %r has %d faces, wants %d" % ((n, lab), len(fs), n + 1))
            for w, ref in fs:
                if not self.has_ref(ref):
                    raise ValueError("face target %r missing" % (ref,))
                if len(w) + ref[0] != n - 1:
                    raise ValueError("face of %r has wrong dimension" % ((n, lab),))
                if any(w[t] <= w[t + 1] for t in range(len(w) - 1)):
                    raise ValueError("inadmissible word %r" % (w,))
        for n in sorted(self.simplices):
            if n < 2:
                continue
            for lab in self.simplices[n]:
                c = ((), (n, lab))
                for j in range(1, n + 1):
                    for i in range(j):
                        left = self.face(self.face(c, j), i)
                        right = self.face(self.face(c, i), j - 1)
                        if left != right:
                            raise ValueError(
                                "simplicial identity fails at %r: d_%d d_%d" % ((n, lab), i, j)
                            )
        return True

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialSet)
            and self.simplices == other.simplices
            and self.faces == other.faces
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        counts = ["%d:%d" % (n, len(self.simplices[n])) for n in sorted(self.simplices)]
        return "<SimplicialSet %s>" % (" ".join(counts) or "empty")


EMPTY = SimplicialSet({}, {})


class SSetMap:
    """A simplicial map, stored by images of nondegenerate simplices."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source, target, images, validate=False):
        self.source = source
        self.target = target
        self.images = dict(images)
        if validate:
            self.validate()

    @staticmethod
    def identity(space):
        return SSetMap(space, space, {ref: ((), ref) for ref in space.refs()})

    def apply(self, cell):
        word, ref = cell
        iw, iref = self.images[ref]
        return (compose_degeneracies(word, iw), iref)

    def then(self, other):
        """Composite: first ``self``, then ``other``."""
        if other.source is not self.target and other.source != self.target:
            raise ValueError("composition mismatch")
        images = {ref: other.apply(img) for ref, img in self.images.items()}
        return SSetMap(self.source, other.target, images)

    def is_injective(self):
        seen = set()
        for ref in self.source.refs():
            img = self.images[ref]
            if img[0] != () or img in seen:
                return False
            seen.add(img)
        return True

    def validate(self):
        for ref in self.source.refs():
            if ref not in self.images:
                raise ValueError("no image for %r" % (ref,))
            w, tref = self.images[ref]
            if not self.target.has_ref(tref):
                raise ValueError("image of %r hits missing simplex" % (ref,))
            if len(w) + tref[0] != ref[0]:
                raise ValueError("image of %r has wrong dimension" % (ref,))
        for n in sorted(self.source.simplices):
            if n == 0:
                continue
            for lab in self.source.simplices[n]:
                c = ((), (n, lab))
                for i in range(n + 1):
                    if self.apply(self.source.face(c, i)) != self.target.face(self.apply(c), i):
                        raise ValueError("map does not commute with d_%d at %r" % (i, (n, lab)))
        return True

    def __eq__(self, other):
        return (
            isinstance(other, SSetMap)
            and self.source == other.source
            and self.target == other.target
            and self.images == other.images
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def serialize(self):
        return tuple(sorted(self.images.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1]))))

    def __repr__(self):
        return "<SSetMap %r -> %r>" % (self.source, self.target)


class PointedSSet:
    """A simplicial set with a chosen basepoint vertex."""

    __slots__ = ("space", "base")

    def __init__(self, space, base):
        if not space.has_ref(base) or base[0] != 0:
            raise ValueError("basepoint must be a vertex of the underlying set")
        self.space = space
        self.base = base

    def base_cell(self, n):
        return (full_degeneracy(n), self.base)

    def is_base_cell(self, cell):
        return cell[1] == self.base

    def __eq__(self, other):
        return (
            isinstance(other, PointedSSet)
            and self.space == other.space
            and self.base == other.base
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "<PointedSSet %r at %r>" % (self.space, self.base)


def is_pointed_map(f, src, tgt):
    return f.images[src.base] == ((), tgt.base)


# --- standard complexes -------------------------------------------------------


def standard_simplex(n):
    """The simplex with vertices 0..n; labels are vertex tuples."""
    simplices = {}
    faces = {}
    import itertools

    for k in range(n + 1):
        labs = list(itertools.combinations(range(n + 1), k + 1))
        simplices[k] = labs
        for t in labs:
            faces[(k, t)] = tuple(((), (k - 1, t[:i] + t[i + 1:])) for i in range(k + 1)) if k else ()
    return SimplicialSet(simplices, faces)


def boundary(n):
    """The boundary of the n-simplex."""
    full = standard_simplex(n)
    simplices = {k: labs for k, labs in full.simplices.items() if k < n}
    faces = {ref: fs for ref, fs in full.faces.items() if ref[0] < n}
    return SimplicialSet(simplices, faces)


def horn(n, k):
    """The horn missing the face opposite vertex k."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("horn wants n >= 1 and 0 <= k <= n")
    full = standard_simplex(n)
    missing = tuple(v for v in range(n + 1) if v != k)
    simplices = {
        m: [lab for lab in labs if lab != missing]
        for m, labs in full.simplices.items()
        if m < n
    }
    faces = {
        ref: fs
        for ref, fs in full.faces.items()
        if ref[0] < n and ref != (n - 1, missing)
    }
    return SimplicialSet(simplices, faces)


def point():
    return standard_simplex(0)


def pointed_point():
    return PointedSSet(point(), (0, (0,)))


def circle():
    """The circle with one vertex and one edge."""
    space = SimplicialSet(
        {0: ["*"], 1: ["e"]},
        {(0, "*"): (), (1, "e"): (((), (0, "*")), ((), (0, "*")))},
    )
    return PointedSSet(space, (0, "*"))


def sphere0():
    space = SimplicialSet({0: ["*", "pt"]}, {(0, "*"): (), (0, "pt"): ()})
    return PointedSSet(space, (0, "*"))


def sphere(n):
    """The n-sphere as an n-fold smash of circles; pointed."""
    if n < 0:
        raise ValueError("sphere wants n >= 0")
    if n == 0:
        return sphere0()
    return smash_many([circle()] * n).pointed


def _fresh_vertex_label(space):
    used = set(space.simplices.get(0, ()))
    lab = "*"
    while lab in used:
        lab = lab + "*"
    return lab


def plus(space):
    """Add a disjoint basepoint; labels of the input are kept."""
    lab = _fresh_vertex_label(space)
    simplices = {n: list(v) for n, v in space.simplices.items()}
    simplices.setdefault(0, [])
    simplices[0] = list(simplices[0]) + [lab]
    faces = dict(space.faces)
    faces[(0, lab)] = ()
    return PointedSSet(SimplicialSet(simplices, faces), (0, lab))


def constant_map(space, target_pointed):
    """The map collapsing everything to the basepoint of the target."""
    images = {
        (n, lab): (full_degeneracy(n), target_pointed.base)
        for n in space.simplices
        for lab in space.simplices[n]
    }
    return SSetMap(space, target_pointed.space, images)


# --- colimits -----------------------------------------------------------------


class UnionFind:
    """Union-find keeping the earliest-added element as the class root."""

    __slots__ = ("parent", "order")

    def __init__(self):
        self.parent = {}
        self.order = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.order[x] = len(self.order)

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if self.order[ra] <= self.order[rb]:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def disjoint_union(spaces):
    """Disjoint union; labels are tagged by position.  Returns (space, inclusions)."""
    simplices = {}
    faces = {}
    for i, sp in enumerate(spaces):
        for n, labs in sp.simplices.items():
            simplices.setdefault(n, []).extend((i, lab) for lab in labs)
        for (n, lab), fs in sp.faces.items():
            faces[(n, (i, lab))] = tuple((w, (m, (i, l2))) for (w, (m, l2)) in fs)
    total = SimplicialSet(simplices, faces)
    incls = []
    for i, sp in enumerate(spaces):
        incls.append(SSetMap(sp, total, {(n, lab): ((), (n, (i, lab))) for (n, lab) in sp.refs()}))
    return total, incls


class QuotientResult:
    """A quotient simplicial set with projection and chosen representatives."""

    __slots__ = ("space", "proj", "rep")

    def __init__(self, space, proj, rep):
        self.space = space
        self.proj = proj
        self.rep = rep

    def project(self, cell):
        return self.proj.apply(cell)


def coequalize(space, pairs):
    """Quotient by the levelwise equivalence generated by the given cell pairs.

    The pairs must come from images of simplicial maps (so they are closed
    under faces); closure under degeneracies is performed here.
    """
    by_dim = {}
    for a, b in pairs:
        da = len(a[0]) + a[1][0]
        db = len(b[0]) + b[1][0]
        if da != db:
            raise ValueError("relation pairs must match dimensions")
        if da <= space.dim:
            by_dim.setdefault(da, []).append((a, b))

    nf = {}  # nondegenerate ref of the source -> normal-form cell downstairs
    simplices = {}
    faces = {}
    rep = {}
    prev_classes = []
    for n in range(space.dim + 1):
        cells = space.cells(n)
        uf = UnionFind()
        for c in cells:
            uf.add(c)
        for a, b in by_dim.get(n, ()):
            uf.union(a, b)
        for members in prev_classes:
            if len(members) > 1:
                for i in range(n):
                    anchor = space.degenerate(members[0], i)
                    for m in members[1:]:
                        uf.union(anchor, space.degenerate(m, i))
        groups = {}
        for c in cells:
            groups.setdefault(uf.find(c), []).append(c)
        # cells are added in canonical order, so roots sort classes canonically
        classes = sorted(groups.values(), key=lambda ms: uf.order[uf.find(ms[0])])
        prev_classes = classes
        idx = 0
        labs = []
        for members in classes:
            members.sort(key=uf.order.get)
            degenerate_members = [m for m in members if m[0]]
            if not degenerate_members:
                qlab = idx
                idx += 1
                labs.append(qlab)
                rep[(n, qlab)] = members[0][1]
                for w, ref in members:
                    nf[ref] = ((), (n, qlab))
            else:
                w, ref0 = degenerate_members[0]
                head, rest = w[0], w[1:]
                below = nf[ref0]
                down = (compose_degeneracies(rest, below[0]), below[1])
                cls_nf = (degeneracy_after(down[0], head), down[1])
                for ww, ref in members:
                    if not ww:
                        nf[ref] = cls_nf
        if labs:
            simplices[n] = labs
    # faces of the quotient via representatives
    def project_cell(cell):
        w, ref = cell
        iw, iref = nf[ref]
        return (compose_degeneracies(w, iw), iref)

    for (n, qlab), ref in rep.items():
        if n == 0:
            faces[(0, qlab)] = ()
        else:
            faces[(n, qlab)] = tuple(
                project_cell(space.face(((), ref), i)) for i in range(n + 1)
            )
    q = SimplicialSet(simplices, faces)
    proj = SSetMap(space, q, {ref: nf[ref] for ref in space.refs()})
    return QuotientResult(q, proj, rep)


class PushoutResult:
    __slots__ = ("space", "left", "right", "quotient", "_spaces")

    def __init__(self, space, left, right, quotient, spaces):
        self.space = space
        self.left = left
        self.right = right
        self.quotient = quotient
        self._spaces = spaces

    def induced(self, cone_x, cone_y, validate=True):
        """Map out of the pushout determined by a commuting cocone."""
        cones = (cone_x, cone_y)
        target = cone_x.target
        images = {}
        for qref, src_ref in self.quotient.rep.items():
            n, (tag, lab) = src_ref
            images[qref] = cones[tag].apply(((), (n, lab)))
        out = SSetMap(self.space, target, images)
        if validate:
            out.validate()
        return out


def pushout(f, g):
    """Pushout of X <- A -> Y; returns the space and the two canonical maps."""
    if f.source != g.source:
        raise ValueError("pushout legs must share their source")
    total, (inx, iny) = disjoint_union([f.target, g.target])
    pairs = []
    src = f.source
    for n in range(src.dim + 1):
        for c in src.cells(n):
            pairs.append((inx.apply(f.apply(c)), iny.apply(g.apply(c))))
    q = coequalize(total, pairs)
    return PushoutResult(
        q.space, inx.then(q.proj), iny.then(q.proj), q, (f.target, g.target)
    )


def subcomplex(space, generators):
    """The smallest subcomplex containing the given nondegenerate refs."""
    keep = set()
    stack = list(generators)
    while stack:
        ref = stack.pop()
        if ref in keep:
            continue
        keep.add(ref)
        n = ref[0]
        if n > 0:
            for w, fref in space.faces[ref]:
                if fref not in keep:
                    stack.append(fref)
    simplices = {}
    for n, labs in space.simplices.items():
        got = [lab for lab in labs if (n, lab) in keep]
        if got:
            simplices[n] = got
    faces = {ref: space.faces[ref] for ref in keep}
    sub = SimplicialSet(simplices, faces)
    incl = SSetMap(sub, space, {ref: ((), ref) for ref in sub.refs()})
    return sub, incl


def quotient_subcomplex(space, generators):
    """Collapse the subcomplex spanned by the given refs to a point.

    Returns ``(pointed quotient, projection)``.
    """
    sub, incl = subcomplex(space, generators)
    if sub.is_empty():
        raise ValueError("cannot collapse an empty subcomplex")
    pt = pointed_point()
    po = pushout(incl, constant_map(sub, pt))
    base = po.right.apply(((), pt.base))[1]
    return PointedSSet(po.space, base), po.left


# --- products and smashes -----------------------------------------------------


def word_support(word):
    return set(word)


def normalize_tuple(cells):
    """Joint normal form of a tuple of same-dimension cells.

    Returns ``(word, cells2)`` where the components of ``cells2`` share no
    degeneracy letter.
    """
    cells = list(cells)
    word = ()
    while True:
        common = set(cells[0][0])
        for c in cells[1:]:
            common &= set(c[0])
            if not common:
                break
        if not common:
            break
        ell = max(common)
        cells = [(remove_letter(w, ell), ref) for (w, ref) in cells]
        word = compose_degeneracies(word, (ell,))
    return word, tuple(cells)


class ProductResult:
    """A binary (or n-ary) cartesian product with projections."""

    __slots__ = ("space", "factors", "projections")

    def __init__(self, space, factors, projections):
        self.space = space
        self.factors = factors
        self.projections = projections

    def classify(self, cells):
        """The cell of the product with the given component cells."""
        w, tup = normalize_tuple(cells)
        n = len(tup[0][0]) + tup[0][1][0]
        return (w, (n, tup))

    def pair(self, maps, source):
        """The map into the product with the given components."""
        images = {}
        for ref in source.refs():
            images[ref] = self.classify([m.apply(((), ref)) for m in maps])
        return SSetMap(source, self.space, images)


_shuffle_words_memo = {}


def _shuffle_words(dims):
    """Degeneracy-word tuples of jointly nondegenerate simplex tuples.

    A jointly nondegenerate tuple over nondegenerate simplices of the given
    dimensions corresponds to a strictly increasing lattice path from the
    origin to ``dims`` in which every step advances a nonempty set of
    coordinates; factor i is degenerate exactly at the steps that leave
    coordinate i alone.  Returns a list of word tuples grouped with their
    total dimension.
    """
    dims = tuple(dims)
    if dims in _shuffle_words_memo:
        return _shuffle_words_memo[dims]
    k = len(dims)
    out = []
    stalls = [[] for _ in range(k)]

    def walk(pos, step):
        if all(pos[i] == dims[i] for i in range(k)):
            out.append((step, tuple(tuple(reversed(s)) for s in stalls)))
            return
        movable = [i for i in range(k) if pos[i] < dims[i]]
        # choose the nonempty subset of coordinates that advance
        import itertools

        for r in range(1, len(movable) + 1):
            for subset in itertools.combinations(movable, r):
                moved = set(subset)
                for i in range(k):
                    if i not in moved:
                        stalls[i].append(step)
                    else:
                        pos[i] += 1
                walk(pos, step + 1)
                for i in range(k):
                    if i not in moved:
                        stalls[i].pop()
                    else:
                        pos[i] -= 1

    walk([0] * k, 0)
    _shuffle_words_memo[dims] = out
    return out


def multi_product(spaces):
    """Cartesian product; nondegenerate simplices are jointly nondegenerate tuples."""
    if not spaces:
        raise ValueError("empty product is a point; build it directly")
    import itertools

    simplices = {}
    faces = {}
    total = 0
    ref_groups = [list(sp.refs()) for sp in spaces]
    for combo in itertools.product(*ref_groups):
        dims = tuple(ref[0] for ref in combo)
        for d, words in _shuffle_words(dims):
            tup = tuple((words[t], combo[t]) for t in range(len(spaces)))
            simplices.setdefault(d, []).append(tup)
            total += 1
            _guard(total, "product")
    for n, labs in simplices.items():
        for tup in labs:
            if n == 0:
                faces[(n, tup)] = ()
            else:
                fs = []
                for i in range(n + 1):
                    comps = [spaces[t].face(tup[t], i) for t in range(len(spaces))]
                    w, tup2 = normalize_tuple(comps)
                    fs.append((w, (n - 1, tup2)))
                faces[(n, tup)] = tuple(fs)
    space = SimplicialSet(simplices, faces)
    projections = []
    for t, sp in enumerate(spaces):
        projections.append(
            SSetMap(space, sp, {(n, tup): tup[t] for (n, tup) in space.refs()})
        )
    return ProductResult(space, tuple(spaces), projections)


def product(x, y):
    return multi_product([x, y])


class WedgeResult:
    """A wedge of pointed simplicial sets; labels are (tag, label) pairs."""

    __slots__ = ("pointed", "factors", "injections", "locate")

    def __init__(self, pointed, factors, injections, locate):
        self.pointed = pointed
        self.factors = factors
        self.injections = injections
        self.locate = locate

    def locate_cell(self, cell):
        """Where a non-basepoint cell comes from: (tag, cell upstairs), else None."""
        w, ref = cell
        hit = self.locate.get(ref)
        if hit is None:
            return None
        tag, src_ref = hit
        return tag, (w, src_ref)


def wedge(pointeds):
    """One-point union; basepoints are identified to the label '*'."""
    simplices = {0: ["*"]}
    faces = {(0, "*"): ()}
    locate = {}
    base_cells = {}
    for tag, p in enumerate(pointeds):
        base_cells[tag] = p.base
        for n, labs in p.space.simplices.items():
            for lab in labs:
                if (n, lab) == p.base:
                    continue
                simplices.setdefault(n, []).append((tag, lab))
                locate[(n, (tag, lab))] = (tag, (n, lab))
    def push(tag, cell):
        w, ref = cell
        if ref == base_cells[tag]:
            return (full_degeneracy(len(w) + ref[0]), (0, "*"))
        return (w, (ref[0], (tag, ref[1])))

    for tag, p in enumerate(pointeds):
        for (n, lab), fs in p.space.faces.items():
            if (n, lab) == p.base:
                continue
            faces[(n, (tag, lab))] = tuple(push(tag, c) for c in fs)
    space = SimplicialSet(simplices, faces)
    pointed = PointedSSet(space, (0, "*"))
    injections = []
    for tag, p in enumerate(pointeds):
        injections.append(
            SSetMap(p.space, space, {ref: push(tag, ((), ref)) for ref in p.space.refs()})
        )
    return WedgeResult(pointed, tuple(pointeds), tuple(injections), locate)


class SmashResult:
    """A smash product; non-basepoint simplices are tuples of non-base cells."""

    __slots__ = ("pointed", "factors")

    def __init__(self, pointed, factors):
        self.pointed = pointed
        self.factors = factors

    @property
    def space(self):
        return self.pointed.space

    def resolve(self, ref):
        """The representative component tuple of a non-base nondegenerate ref."""
        if not self.factors:
            return ()
        return ref[1]

    def resolve_cell(self, cell):
        w, ref = cell
        if ref == self.pointed.base:
            return None
        if not self.factors:
            return ()
        return tuple((compose_degeneracies(w, cw), cref) for (cw, cref) in ref[1])

    def classify(self, cells):
        """The smash cell with the given component cells."""
        n = len(cells[0][0]) + cells[0][1][0]
        for c, p in zip(cells, self.factors):
            if p.is_base_cell(c):
                return (full_degeneracy(n), self.pointed.base)
        w, tup = normalize_tuple(cells)
        return (w, (n - len(w), tup))


def smash_many(pointeds):
    """Iterated smash product.  The empty smash is the two-point sphere."""
    if not pointeds:
        return SmashResult(sphere0(), ())
    import itertools

    simplices = {0: ["*"]}
    total = 1
    tuples_by_dim = {}
    ref_groups = [
        [ref for ref in p.space.refs() if ref != p.base] for p in pointeds
    ]
    for combo in itertools.product(*ref_groups):
        dims = tuple(ref[0] for ref in combo)
        for d, words in _shuffle_words(dims):
            tup = tuple((words[t], combo[t]) for t in range(len(pointeds)))
            tuples_by_dim.setdefault(d, []).append(tup)
            total += 1
            _guard(total, "smash")
    for n, labs in tuples_by_dim.items():
        simplices.setdefault(n, []).extend(labs)
    result = SmashResult(
        PointedSSet(SimplicialSet(simplices, {}), (0, "*")), tuple(pointeds)
    )
    # fill faces through the classifier; recreate the space with them
    faces = {(0, "*"): ()}
    for n, labs in tuples_by_dim.items():
        for tup in labs:
            if n == 0:
                faces[(0, tup)] = ()
                continue
            fs = []
            for i in range(n + 1):
                comps = [pointeds[t].space.face(tup[t], i) for t in range(len(pointeds))]
                fs.append(result.classify(comps))
            faces[(n, tup)] = tuple(fs)
    space = SimplicialSet(simplices, faces)
    return SmashResult(PointedSSet(space, (0, "*")), tuple(pointeds))


def smash(a, b):
    return smash_many([a, b])


def smash_map(fs, src, tgt):
    """The smash of componentwise pointed maps, as a map of smash products."""
    images = {}
    for ref in src.space.refs():
        if ref == src.pointed.base:
            images[ref] = ((), tgt.pointed.base)
            continue
        comps = [f.apply(c) for f, c in zip(fs, src.resolve(ref))]
        images[ref] = tgt.classify(comps)
    return SSetMap(src.space, tgt.space, images)


def mapping_cylinder(f, src, tgt):
    """Reduced mapping cylinder of a pointed map.

    Returns ``(Z, front, projection)`` with ``front`` the inclusion of the
    source at time 0 and ``projection . front == f``.
    """
    interval = plus(standard_simplex(1))
    cyl = smash_many([src, interval])

    def end_map(t):
        images = {}
        for ref in src.space.refs():
            n = ref[0]
            vertex = (full_degeneracy(n), (0, (t,)))
            images[ref] = cyl.classify([((), ref), vertex])
        return SSetMap(src.space, cyl.space, images)

    end0, end1 = end_map(0), end_map(1)
    po = pushout(end1, f)
    front = end0.then(po.left)
    collapse = SSetMap(
        cyl.space,
        tgt.space,
        {
            ref: ((), tgt.base) if ref == cyl.pointed.base
            else f.apply(cyl.resolve(ref)[0])
            for ref in cyl.space.refs()
        },
    )
    proj = po.induced(collapse, SSetMap.identity(tgt.space), validate=False)
    z_base = po.right.apply(((), tgt.base))[1]
    return PointedSSet(po.space, z_base), front, proj
