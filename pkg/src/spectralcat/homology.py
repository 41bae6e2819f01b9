"""Integral homology of finite simplicial sets via Smith normal form.

The normalized chain complex has one generator per nondegenerate simplex;
a face contributes to the boundary only when its normal form carries no
degeneracies.  All arithmetic is exact (Python integers), so torsion is
computed exactly.
"""

from .simplicial import labkey


def smith_invariant_factors(rows):
    """Invariant factors of an integer matrix (nonnegative, divisibility-ordered).

    The input is a list of equal-length lists and is not modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    factors = []
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = m[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear the pivot column
            again = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, ncols):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        again = True
            if again:
                continue
            # clear the pivot row
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for i in range(t, nrows):
                        m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        for i in range(nrows):
                            m[i][t], m[i][j] = m[i][j], m[i][t]
                        again = True
            if not again:
                break
        # entries below-right must be divisible by the pivot
        p = m[t][t]
        bad = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if m[i][j] % p:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(t, ncols):
                m[t][j] += m[bad][j]
            continue
        factors.append(abs(p))
        t += 1
    return factors


def boundary_matrix(space, n):
    """The matrix of the normalized boundary C_n -> C_{n-1}."""
    if n < 1:
        return []
    rows = list(space.nondeg(n - 1))
    cols = list(space.nondeg(n))
    index = {lab: i for i, lab in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, lab in enumerate(cols):
        cell = ((), (n, lab))
        for i in range(n + 1):
            w, (m, flab) = space.face(cell, i)
            if not w:
                mat[index[flab]][j] += -1 if i % 2 else 1
    return mat


class HomologyResult:
    """Betti rank and torsion invariant factors per degree."""

    __slots__ = ("degrees",)

    def __init__(self, degrees):
        self.degrees = dict(degrees)

    def betti(self, d):
        return self.degrees.get(d, (0, ()))[0]

    def torsion(self, d):
        return self.degrees.get(d, (0, ()))[1]

    def __eq__(self, other):
        return isinstance(other, HomologyResult) and self.degrees == other.degrees

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        parts = []
        for d in sorted(self.degrees):
            b, tor = self.degrees[d]
            piece = ["Z"] * b + ["Z/%d" % t for t in tor]
            parts.append("H%d=%s" % (d, "+".join(piece) if piece else "0"))
        return "<Homology %s>" % " ".join(parts)


def _rank_and_torsion(mat):
    factors = smith_invariant_factors(mat) if mat and mat[0] else []
    rank = len([f for f in factors if f != 0])
    torsion = tuple(f for f in factors if f > 1)
    return rank, torsion


def homology(space, d_max):
    """Integral homology in degrees 0..d_max."""
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    degrees = {}
    info = {}
    for n in range(d_max + 2):
        info[n] = _rank_and_torsion(boundary_matrix(space, n))
    for d in range(d_max + 1):
        c = len(space.nondeg(d))
        rank_in, _ = info[d]
        rank_out, torsion = info[d + 1]
        degrees[d] = (c - rank_in - rank_out, torsion)
    return HomologyResult(degrees)


def chain_map_matrix(f, n):
    """The matrix of a simplicial map on normalized n-chains."""
    rows = list(f.target.nondeg(n))
    cols = list(f.source.nondeg(n))
    index = {lab: i for i, lab in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, lab in enumerate(cols):
        w, (m, tlab) = f.apply(((), (n, lab)))
        if not w:
            mat[index[tlab]][j] += 1
    return mat


def _cone_boundary(f, n):
    """Boundary of the algebraic mapping cone in degree n.

    Cone_n = C_{n-1}(source) + C_n(target) with d(x, y) = (-dx, dy - fx).
    """
    src, tgt = f.source, f.target
    rows_src = list(src.nondeg(n - 2)) if n >= 2 else []
    rows_tgt = list(tgt.nondeg(n - 1)) if n >= 1 else []
    cols_src = list(src.nondeg(n - 1)) if n >= 1 else []
    cols_tgt = list(tgt.nondeg(n))
    d_src = boundary_matrix(src, n - 1) if n >= 1 else []
    d_tgt = boundary_matrix(tgt, n)
    f_mat = chain_map_matrix(f, n - 1) if n >= 1 else []
    nrows = len(rows_src) + len(rows_tgt)
    mat = [[0] * (len(cols_src) + len(cols_tgt)) for _ in range(nrows)]
    for i in range(len(rows_src)):
        for j in range(len(cols_src)):
            mat[i][j] = -d_src[i][j]
    for i in range(len(rows_tgt)):
        for j in range(len(cols_src)):
            mat[len(rows_src) + i][j] = -f_mat[i][j]
        for j in range(len(cols_tgt)):
            mat[len(rows_src) + i][len(cols_src) + j] = d_tgt[i][j]
    return mat, len(cols_src) + len(cols_tgt)


def homology_iso_upto(f, d_max):
    """Exact test: does f induce isomorphisms on H_0..H_{d_max}?

    A map is an iso in degrees <= d exactly when the two homologies agree
    abstractly there and the mapping cone is acyclic there (an epimorphism
    between isomorphic finitely generated abelian groups is an iso).
    """
    if homology(f.source, d_max) != homology(f.target, d_max):
        return False
    info = {}
    for n in range(d_max + 2):
        mat, cols = _cone_boundary(f, n)
        rank, torsion = _rank_and_torsion(mat)
        info[n] = (rank, torsion, cols)
    for d in range(d_max + 1):
        rank_in = info[d][0]
        rank_out, torsion = info[d + 1][0], info[d + 1][1]
        dim_d = info[d][2]
        if dim_d - rank_in - rank_out != 0 or torsion:
            return False
    return True


def pi0(space):
    """Connected components: a map from vertex labels to component ids."""
    labels = list(space.nondeg(0))
    parent = {lab: lab for lab in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lab in space.nondeg(1):
        cell = ((), (1, lab))
        a = space.face(cell, 0)[1][1]
        b = space.face(cell, 1)[1][1]
        ra, rb = find(a), find(b)
        if ra != rb:
            if labkey(ra) <= labkey(rb):
                parent[rb] = ra
            else:
                parent[ra] = rb
    roots = sorted({find(lab) for lab in labels}, key=labkey)
    number = {r: i for i, r in enumerate(roots)}
    return {lab: number[find(lab)] for lab in labels}


def pi0_bijective(f):
    """Does f induce a bijection on connected components?"""
    src = pi0(f.source)
    tgt = pi0(f.target)
    image = {}
    for lab, comp in src.items():
        tlab = f.apply(((), (0, lab)))[1][1]
        if comp in image and image[comp] != tgt[tlab]:
            return False
        image[comp] = tgt[tlab]
    n_src = len(set(src.values()))
    n_tgt = len(set(tgt.values()))
    return len(set(image.values())) == n_src == n_tgt
