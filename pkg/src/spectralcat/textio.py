"""Line-oriented interchange format for the objects the command line handles.

Documents are nested blocks: ``begin <role>`` ... ``end`` wraps a child
document.  Simplices are named by stable tokens; printing relabels every
simplicial object canonically (integers per dimension, sorted), so
``print . parse . print == print``.  Words are dotted digit strings with
``-`` for the empty word; permutation and action data are given by
per-simplex assignments.
"""

from . import spectra as sp
from .enriched import (
    Bimorphism,
    PSet,
    PSetMap,
    PointedSets,
    PointedSimplicialSets,
    TruncatedSpectra,
    VCategory,
    table_bimorphism,
    unit_unit_bimorphism,
)
from .errors import FormatError
from .filtration import AttachmentData
from .freecat import Graph
from .simplicial import PointedSSet, SimplicialSet, SSetMap, labkey

FORMAT_HEADER = "artifact-format 1"


def _tok(value):
    if isinstance(value, int):
        return str(value)
    return str(value)


def _untok(token):
    if token.lstrip("-").isdigit():
        return int(token)
    return token


def _word_str(word):
    return ".".join(str(a) for a in word) if word else "-"


def _word_parse(text, line):
    if text == "-":
        return ()
    try:
        return tuple(int(p) for p in text.split("."))
    except ValueError:
        raise FormatError("bad degeneracy word %r" % text, line)


def _cell_str(cell):
    word, (dim, lab) = cell
    return "%s@%d@%s" % (_word_str(word), dim, _tok(lab))


def _cell_parse(text, line):
    parts = text.split("@")
    if len(parts) != 3:
        raise FormatError("bad cell token %r" % text, line)
    return (_word_parse(parts[0], line), (int(parts[1]), _untok(parts[2])))


def _spectrum_cell_str(token):
    n, cell = token
    return "%d:%s" % (n, _cell_str(cell))


def _spectrum_cell_parse(text, line):
    level, rest = text.split(":", 1)
    return (int(level), _cell_parse(rest, line))


# --- block structure -------------------------------------------------------------


class Block:
    __slots__ = ("lines", "children")

    def __init__(self):
        self.lines = []
        self.children = []


def _parse_blocks(lines, start, end_at_end):
    block = Block()
    i = start
    while i < len(lines):
        number, text = lines[i]
        if text.startswith("begin "):
            role = text[6:].strip()
            child, i = _parse_blocks(lines, i + 1, True)
            block.children.append((role, child, number))
            continue
        if text == "end":
            if not end_at_end:
                raise FormatError("unexpected end", number)
            return block, i + 1
        block.lines.append((number, text))
        i += 1
    if end_at_end:
        raise FormatError("missing end", lines[-1][0] if lines else 0)
    return block, i


def _scan(text):
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped))
    return lines


def _fields(block, key):
    out = []
    for number, text in block.lines:
        if text.startswith(key + " "):
            out.append((number, text[len(key) + 1:].strip()))
        elif text == key:
            out.append((number, ""))
    return out


def _field(block, key, default=None):
    got = _fields(block, key)
    if not got:
        if default is not None:
            return default
        raise FormatError("missing field %r" % key, block.lines[0][0] if block.lines else 0)
    return got[0][1]


def _child(block, role):
    for r, child, number in block.children:
        if r == role or r.startswith(role + " "):
            return r, child
    raise FormatError("missing block %r" % role, 0)


# --- relabeling ---------------------------------------------------------------------


def canonical_relabel(space):
    """A copy of the space with integer labels per dimension, plus the mapping."""
    mapping = {}
    simplices = {}
    for n in sorted(space.simplices):
        labs = space.simplices[n]
        simplices[n] = list(range(len(labs)))
        for i, lab in enumerate(labs):
            mapping[(n, lab)] = (n, i)
    faces = {}
    for (n, lab), fs in space.faces.items():
        faces[mapping[(n, lab)]] = tuple((w, mapping[ref]) for (w, ref) in fs)
    return SimplicialSet(simplices, faces), mapping


# --- simplicial sets ------------------------------------------------------------------


def print_sset(space, pointed_at=None, indent=""):
    out = []
    relabeled, mapping = canonical_relabel(space)
    out.append(indent + ("kind pointed-sset" if pointed_at is not None else "kind sset"))
    for n in sorted(relabeled.simplices):
        out.append(
            indent + "dim %d : %s" % (n, " ".join(_tok(l) for l in relabeled.simplices[n]))
        )
    for n in sorted(relabeled.simplices):
        if n == 0:
            continue
        for lab in relabeled.simplices[n]:
            for i, cell in enumerate(relabeled.faces[(n, lab)]):
                out.append(
                    indent + "face %d %s %d : %s" % (n, _tok(lab), i, _cell_str(cell))
                )
    if pointed_at is not None:
        out.append(indent + "basepoint %s" % _tok(mapping[pointed_at][1]))
    return out, mapping


def parse_sset(block):
    simplices = {}
    faces = {}
    for number, text in _fields(block, "dim"):
        head, _, rest = text.partition(":")
        n = int(head.strip())
        labs = [_untok(t) for t in rest.split()]
        simplices[n] = labs
        for lab in labs:
            faces.setdefault((n, lab), ())
    for number, text in _fields(block, "face"):
        head, _, rest = text.partition(":")
        parts = head.split()
        if len(parts) != 3:
            raise FormatError("bad face line", number)
        n, lab, i = int(parts[0]), _untok(parts[1]), int(parts[2])
        cell = _cell_parse(rest.strip(), number)
        current = list(faces.get((n, lab), ()))
        while len(current) <= i:
            current.append(None)
        current[i] = cell
        faces[(n, lab)] = tuple(current)
    for (n, lab), fs in faces.items():
        if n > 0 and (len(fs) != n + 1 or any(f is None for f in fs)):
            raise FormatError("simplex %r is missing faces" % ((n, lab),), 0)
    space = SimplicialSet(simplices, faces)
    space.validate()
    base = None
    got = _fields(block, "basepoint")
    if got:
        base = (0, _untok(got[0][1]))
    return space, base


def print_pointed(pointed, indent=""):
    lines, _ = print_sset(pointed.space, pointed_at=pointed.base, indent=indent)
    return lines


def parse_pointed(block):
    space, base = parse_sset(block)
    if base is None:
        raise FormatError("pointed simplicial set needs a basepoint", 0)
    return PointedSSet(space, base)


# --- maps ------------------------------------------------------------------------------


def print_sset_map(f, pointed=None, indent=""):
    out = [indent + "kind sset-map"]
    src_pointed = pointed[0].base if pointed else None
    tgt_pointed = pointed[1].base if pointed else None
    src_lines, src_map = print_sset(f.source, pointed_at=src_pointed, indent=indent + "  ")
    tgt_lines, tgt_map = print_sset(f.target, pointed_at=tgt_pointed, indent=indent + "  ")
    out.append(indent + "begin source")
    out.extend(src_lines)
    out.append(indent + "end")
    out.append(indent + "begin target")
    out.extend(tgt_lines)
    out.append(indent + "end")
    items = sorted(f.images.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1])))
    for ref, (w, tref) in items:
        new_ref = src_map[ref]
        new_cell = (w, tgt_map[tref])
        out.append(
            indent + "image %d %s : %s" % (new_ref[0], _tok(new_ref[1]), _cell_str(new_cell))
        )
    return out


def parse_sset_map(block):
    _, src_block = _child(block, "source")
    _, tgt_block = _child(block, "target")
    src, src_base = parse_sset(src_block)
    tgt, tgt_base = parse_sset(tgt_block)
    images = {}
    for number, text in _fields(block, "image"):
        head, _, rest = text.partition(":")
        parts = head.split()
        ref = (int(parts[0]), _untok(parts[1]))
        images[ref] = _cell_parse(rest.strip(), number)
    f = SSetMap(src, tgt, images)
    f.validate()
    bases = None
    if src_base is not None and tgt_base is not None:
        bases = (PointedSSet(src, src_base), PointedSSet(tgt, tgt_base))
    return f, bases


# --- spectra ----------------------------------------------------------------------------


def print_spectrum(spectrum, indent=""):
    out = [indent + "kind spectrum", indent + "truncation %d" % spectrum.N]
    mappings = []
    for n in range(spectrum.N + 1):
        lines, mapping = print_sset(
            spectrum.levels[n].space, pointed_at=spectrum.levels[n].base, indent=indent + "  "
        )
        mappings.append(mapping)
        out.append(indent + "begin level %d" % n)
        out.extend(lines)
        out.append(indent + "end")
    for n in range(spectrum.N + 1):
        for i, gen in enumerate(spectrum.actions[n]):
            out.append(indent + "begin action %d %d" % (n, i))
            items = sorted(gen.images.items(), key=lambda kv: (kv[0][0], labkey(kv[0][1])))
            for ref, (w, tref) in items:
                new_ref = mappings[n][ref]
                cell = (w, mappings[n][tref])
                out.append(
                    indent + "  image %d %s : %s" % (new_ref[0], _tok(new_ref[1]), _cell_str(cell))
                )
            out.append(indent + "end")
    # structure maps are written against the canonically relabeled levels:
    # their smash sources rebuild deterministically from those levels
    relabeled = []
    for n in range(spectrum.N + 1):
        space, mapping = canonical_relabel(spectrum.levels[n].space)
        relabeled.append(PointedSSet(space, mappings[n][spectrum.levels[n].base]))
    for n in range(spectrum.N):
        out.append(indent + "begin structure %d" % n)
        sm_old = spectrum.smash1(n)
        rows = []
        for ref in sm_old.space.refs():
            if ref == sm_old.pointed.base:
                continue
            c, w = sm_old.resolve(ref)
            wcell = (w[0], mappings[n][w[1]])
            img_w, img_ref = spectrum.structures[n].images[ref]
            cell = (img_w, mappings[n + 1][img_ref])
            rows.append("%s ^ %s : %s" % (_cell_str(c), _cell_str(wcell), _cell_str(cell)))
        for row in sorted(rows):
            out.append(indent + "  image " + row)
        out.append(indent + "end")
    return out


def parse_spectrum(block):
    n_str = _field(block, "truncation")
    N = int(n_str)
    levels = [None] * (N + 1)
    actions = [[] for _ in range(N + 1)]
    structures = [None] * N
    for role, child, number in block.children:
        parts = role.split()
        if parts[0] == "level":
            levels[int(parts[1])] = parse_pointed(child)
    for role, child, number in block.children:
        parts = role.split()
        if parts[0] == "action":
            n, i = int(parts[1]), int(parts[2])
            images = {}
            for num, text in _fields(child, "image"):
                head, _, rest = text.partition(":")
                hp = head.split()
                images[(int(hp[0]), _untok(hp[1]))] = _cell_parse(rest.strip(), num)
            while len(actions[n]) <= i:
                actions[n].append(None)
            actions[n][i] = images
        elif parts[0] == "structure":
            n = int(parts[1])
            rows = []
            for num, text in _fields(child, "image"):
                head, _, rest = text.partition(":")
                left, _, right = head.partition("^")
                c = _cell_parse(left.strip(), num)
                w = _cell_parse(right.strip(), num)
                rows.append((c, w, _cell_parse(rest.strip(), num)))
            structures[n] = rows
    if any(l is None for l in levels):
        raise FormatError("spectrum is missing a level", 0)
    full_structures = []
    for n in range(N):
        sm = sp.smash_many([sp.CIRCLE, levels[n]])
        images = {sm.pointed.base: ((), levels[n + 1].base)}
        for c, w, cell in structures[n] or []:
            ref_cell = sm.classify([c, w])
            if ref_cell[0] != ():
                raise FormatError("structure row names a degenerate smash cell", 0)
            images[ref_cell[1]] = cell
        for ref in sm.space.refs():
            if ref not in images:
                raise FormatError("structure map is missing a smash simplex", 0)
        full_structures.append(images)
    spec = Spectrum_build(N, levels, actions, full_structures)
    issues = sp.check_spectrum(spec, deep=False)
    if issues:
        raise FormatError("spectrum fails checks: %s" % issues[0], 0)
    return spec


def Spectrum_build(N, levels, actions, structures):
    return sp.Spectrum(N, levels, actions, structures)


# --- pointed sets and categories ---------------------------------------------------------


def print_pset(obj, indent=""):
    out = [indent + "kind pset"]
    out.append(indent + "elements %s" % " ".join(_tok(e) for e in obj.nonbase()))
    out.append(indent + "basepoint %s" % _tok(obj.base))
    return out


def parse_pset(block):
    elems = []
    got = _fields(block, "elements")
    if got:
        elems = [_untok(t) for t in got[0][1].split()]
    base = _field(block, "basepoint", "*")
    return PSet(elems, _untok(base) if base != "*" else "*")


def print_pset_map(f, indent=""):
    out = [indent + "kind pset-map"]
    out.append(indent + "begin source")
    out.extend(print_pset(f.source, indent + "  "))
    out.append(indent + "end")
    out.append(indent + "begin target")
    out.extend(print_pset(f.target, indent + "  "))
    out.append(indent + "end")
    for e in f.source.nonbase():
        out.append(indent + "image %s : %s" % (_tok(e), _tok(f.apply(e))))
    return out


def parse_pset_map(block):
    _, src_block = _child(block, "source")
    _, tgt_block = _child(block, "target")
    src = parse_pset(src_block)
    tgt = parse_pset(tgt_block)
    images = {}
    for number, text in _fields(block, "image"):
        a, _, b = text.partition(":")
        images[_untok(a.strip())] = _untok(b.strip())
    for e in src.nonbase():
        if e not in images:
            raise FormatError("missing image for %r" % (e,), 0)
        if images[e] not in set(tgt.elements):
            raise FormatError("image %r outside the target" % (images[e],), 0)
    return PSetMap(src, tgt, images)


def _value_instance(name, truncation=None):
    if name == "sets":
        return PointedSets()
    if name == "ssets":
        return PointedSimplicialSets()
    if name == "spectra":
        return TruncatedSpectra(truncation if truncation is not None else 4)
    raise FormatError("unknown value category %r" % name, 0)


def print_vcategory(a, indent=""):
    V = a.V
    out = [indent + "kind vcategory", indent + "value %s" % V.kind]
    if V.kind == "spectra":
        out.append(indent + "truncation %d" % V.N)
    out.append(indent + "objects %s" % " ".join(_tok(x) for x in a.objects))
    hom_relabel = {}
    for x in a.objects:
        for y in a.objects:
            hom = a.hom(x, y)
            out.append(indent + "begin hom %s %s" % (_tok(x), _tok(y)))
            if V.kind == "sets":
                out.extend(print_pset(hom, indent + "  "))
                hom_relabel[(x, y)] = {e: e for e in hom.elements}
            elif V.kind == "ssets":
                lines, mapping = print_sset(hom.space, pointed_at=hom.base, indent=indent + "  ")
                out.extend(lines)
                hom_relabel[(x, y)] = mapping
            else:
                out.extend(print_spectrum(hom, indent + "  "))
                maps = []
                for n in range(V.N + 1):
                    _, mapping = canonical_relabel(hom.levels[n].space)
                    maps.append(mapping)
                hom_relabel[(x, y)] = maps
            out.append(indent + "end")
    for x in a.objects:
        tok = a.unit_token(x)
        out.append(indent + "unit %s : %s" % (_tok(x), _unit_tok_str(V, hom_relabel[(x, x)], tok)))
    for x in a.objects:
        for y in a.objects:
            for z in a.objects:
                bim = a.comp(x, y, z)
                for u, v in V.pair_tokens(a.hom(x, y), a.hom(y, z)):
                    w = bim.apply(u, v)
                    out.append(
                        indent + "comp %s %s %s : %s * %s -> %s"
                        % (
                            _tok(x),
                            _tok(y),
                            _tok(z),
                            _comp_tok_str(V, hom_relabel[(x, y)], u),
                            _comp_tok_str(V, hom_relabel[(y, z)], v),
                            _comp_tok_str(V, hom_relabel[(x, z)], w),
                        )
                    )
    return out


def _unit_tok_str(V, relabel, tok):
    if V.kind == "sets":
        return _tok(tok)
    if V.kind == "ssets":
        return _cell_str((tok[0], relabel[tok[1]]))
    n, cell = tok
    return _spectrum_cell_str((n, (cell[0], relabel[n][cell[1]])))


def _comp_tok_str(V, relabel, tok):
    if V.kind == "sets":
        return _tok(tok)
    if V.kind == "ssets":
        return _cell_str((tok[0], relabel[tok[1]]))
    n, cell = tok
    return _spectrum_cell_str((n, (cell[0], relabel[n][cell[1]])))


def parse_vcategory(block):
    value = _field(block, "value")
    truncation = _field(block, "truncation", "-")
    V = _value_instance(value, int(truncation) if truncation != "-" else None)
    objects = [_untok(t) for t in _field(block, "objects").split()]
    homs = {}
    for role, child, number in block.children:
        parts = role.split()
        if parts[0] != "hom":
            continue
        x, y = _untok(parts[1]), _untok(parts[2])
        if value == "sets":
            homs[(x, y)] = parse_pset(child)
        elif value == "ssets":
            homs[(x, y)] = parse_pointed(child)
        else:
            homs[(x, y)] = parse_spectrum(child)
    units = {}
    for number, text in _fields(block, "unit"):
        head, _, rest = text.partition(":")
        x = _untok(head.strip())
        units[x] = _parse_tok(V, rest.strip(), number)
    tables = {}
    for number, text in _fields(block, "comp"):
        head, _, rest = text.partition(":")
        hp = head.split()
        x, y, z = (_untok(t) for t in hp)
        left, _, rest2 = rest.partition("*")
        mid, _, right = rest2.partition("->")
        u = _parse_tok(V, left.strip(), number)
        v = _parse_tok(V, mid.strip(), number)
        w = _parse_tok(V, right.strip(), number)
        tables.setdefault((x, y, z), {})[_table_key(V, u, v)] = w
    comps = {}
    for x in objects:
        for y in objects:
            for z in objects:
                table = tables.get((x, y, z), {})
                comps[(x, y, z)] = table_bimorphism(
                    V, homs[(x, y)], homs[(y, z)], homs[(x, z)], table
                )
    a = VCategory(V, objects, homs, comps, units)
    return a


def _table_key(V, u, v):
    if V.kind == "sets":
        return (u, v)
    if V.kind == "ssets":
        from .simplicial import normalize_tuple

        _, (u2, v2) = normalize_tuple([u, v])
        return (u2, v2)
    from .simplicial import normalize_tuple

    (p, uc), (q, vc) = u, v
    _, (u2, v2) = normalize_tuple([uc, vc])
    return (p, u2, q, v2)


def _parse_tok(V, text, number):
    if V.kind == "sets":
        return _untok(text)
    if V.kind == "ssets":
        return _cell_parse(text, number)
    return _spectrum_cell_parse(text, number)


# --- graphs and attachments ------------------------------------------------------------


def print_graph(graph, indent=""):
    out = [indent + "kind graph"]
    out.append(indent + "vertices %s" % " ".join(_tok(v) for v in graph.vertices))
    for lab, src, tgt in graph.edges:
        out.append(indent + "edge %s %s %s" % (_tok(lab), _tok(src), _tok(tgt)))
    return out


def parse_graph(block):
    vertices = [_untok(t) for t in _field(block, "vertices").split()]
    edges = []
    for number, text in _fields(block, "edge"):
        parts = text.split()
        if len(parts) != 3:
            raise FormatError("bad edge line", number)
        edges.append(tuple(_untok(t) for t in parts))
    return Graph(vertices, edges)


def print_attachment(data, indent=""):
    V = data.V
    out = [indent + "kind attachment", indent + "value %s" % V.kind]
    out.append(indent + "objects %s %s" % (_tok(data.a), _tok(data.b)))
    out.append(indent + "jkind %s" % data.j_kind)
    out.append(indent + "begin category")
    out.extend(print_vcategory(data.A, indent + "  "))
    out.append(indent + "end")
    out.append(indent + "begin j")
    if V.kind == "sets":
        out.extend(print_pset_map(data.j, indent + "  "))
    else:
        out.extend(print_sset_map(data.j, pointed=(data.K, data.L), indent=indent + "  "))
    out.append(indent + "end")
    out.append(indent + "begin phi")
    if V.kind == "sets":
        out.extend(print_pset_map(data.phi, indent + "  "))
    else:
        hom = data.A.hom(data.a, data.b)
        out.extend(print_sset_map(data.phi, pointed=(data.K, hom), indent=indent + "  "))
    out.append(indent + "end")
    return out


def parse_attachment(block):
    value = _field(block, "value")
    if value not in ("sets", "ssets"):
        raise FormatError("attachments are read over sets or ssets", 0)
    V = _value_instance(value)
    _, cat_block = _child(block, "category")
    a = parse_vcategory(cat_block)
    obj_line = _field(block, "objects").split()
    aa, bb = _untok(obj_line[0]), _untok(obj_line[1])
    j_kind = _field(block, "jkind", "other")
    _, j_block = _child(block, "j")
    _, phi_block = _child(block, "phi")
    if value == "sets":
        j = parse_pset_map(j_block)
        phi = parse_pset_map(phi_block)
        if phi.target != a.hom(aa, bb):
            raise FormatError("phi target must be the chosen hom", 0)
        return AttachmentData(V, a, j, aa, bb, phi, j_kind=j_kind)
    j, j_bases = parse_sset_map(j_block)
    phi, phi_bases = parse_sset_map(phi_block)
    if j_bases is None or phi_bases is None:
        raise FormatError("pointed maps need basepoints", 0)
    K, L = j_bases
    if phi.target != a.hom(aa, bb).space:
        raise FormatError("phi target must be the chosen hom", 0)
    return AttachmentData(V, a, j, aa, bb, phi, j_kind=j_kind, K=K, L=L)


# --- top level ----------------------------------------------------------------------------


def print_document(kind, obj, **kw):
    lines = [FORMAT_HEADER]
    if kind == "sset":
        lines.extend(print_sset(obj)[0])
    elif kind == "pointed-sset":
        lines.extend(print_pointed(obj))
    elif kind == "sset-map":
        lines.extend(print_sset_map(obj, pointed=kw.get("pointed")))
    elif kind == "pset-map":
        lines.extend(print_pset_map(obj))
    elif kind == "spectrum":
        lines.extend(print_spectrum(obj))
    elif kind == "pset":
        lines.extend(print_pset(obj))
    elif kind == "graph":
        lines.extend(print_graph(obj))
    elif kind == "vcategory":
        lines.extend(print_vcategory(obj))
    elif kind == "attachment":
        lines.extend(print_attachment(obj))
    else:
        raise FormatError("unknown kind %r" % kind, 0)
    return "\n".join(lines) + "\n"


def parse_document(text):
    lines = _scan(text)
    if not lines or lines[0][1] != FORMAT_HEADER:
        raise FormatError("missing format header", lines[0][0] if lines else 1)
    block, _ = _parse_blocks(lines, 1, False)
    kind = _field(block, "kind")
    if kind == "sset":
        space, base = parse_sset(block)
        return kind, space
    if kind == "pointed-sset":
        return kind, parse_pointed(block)
    if kind == "sset-map":
        f, bases = parse_sset_map(block)
        return kind, (f, bases)
    if kind == "pset-map":
        return kind, parse_pset_map(block)
    if kind == "spectrum":
        return kind, parse_spectrum(block)
    if kind == "pset":
        return kind, parse_pset(block)
    if kind == "graph":
        return kind, parse_graph(block)
    if kind == "vcategory":
        return kind, parse_vcategory(block)
    if kind == "attachment":
        return kind, parse_attachment(block)
    raise FormatError("unknown kind %r" % kind, 0)
