"""Command line entry point.

Commands mirror the library surface: simplicial homology and lifting
tests, free spectra and smash products, category checks, attachment
pushouts with their word-oracle cross-check, free-category tooling, and
the bounded fibrant-replacement run.  Reports are deterministic; exit
codes separate check failures (1), budget overruns (2) and input errors
(3).
"""

import argparse
import json
import sys

from . import filtration as fl
from . import freecat as fc
from . import qfunctor as qf
from . import spectra as sp
from . import textio
from .enriched import check_category_axioms
from .errors import BudgetExceededError, FormatError, TruncationError
from .homology import homology
from .lifting import has_rlp, is_kan
from .simplicial import set_size_budget

PASS, FAIL, BUDGET, BAD_INPUT = 0, 1, 2, 3


class Report:
    """Ordered key/value lines with a deterministic text and json form."""

    def __init__(self, command, bounds):
        self.rows = [("command", command)]
        if bounds:
            self.rows.append(("bounds", bounds))

    def add(self, key, value):
        self.rows.append((key, value))

    def emit(self, as_json):
        if as_json:
            payload = {}
            for k, v in self.rows:
                payload.setdefault(k, []).append(v)
            out = {k: (v[0] if len(v) == 1 else v) for k, v in payload.items()}
            print(json.dumps(out, sort_keys=True))
        else:
            for k, v in self.rows:
                print("%s: %s" % (k, v))


def _load(path, want):
    with open(path) as handle:
        kind, obj = textio.parse_document(handle.read())
    if kind not in want:
        raise FormatError("expected %s, found %s" % ("/".join(want), kind), 0)
    return kind, obj


def _homology_str(h, d_max):
    parts = []
    for d in range(d_max + 1):
        b = h.betti(d)
        tor = h.torsion(d)
        piece = ["Z"] * b + ["Z/%d" % t for t in tor]
        parts.append("H%d=%s" % (d, "+".join(piece) if piece else "0"))
    return " ".join(parts)


def cmd_sset(args):
    rep = Report("sset " + args.action, _bounds_echo(args))
    if args.action == "homology":
        kind, obj = _load(args.files[0], ("sset", "pointed-sset"))
        space = obj.space if kind == "pointed-sset" else obj
        h = homology(space, args.max_degree)
        rep.add("homology", _homology_str(h, args.max_degree))
        rep.add("verdict", "pass")
        rep.emit(args.json)
        return PASS
    if args.action == "kan":
        kind, obj = _load(args.files[0], ("sset", "pointed-sset"))
        space = obj.space if kind == "pointed-sset" else obj
        res = is_kan(space, args.max_dim)
        rep.add("kan", "yes" if res.ok else "no")
        if not res.ok:
            rep.add("witness", res.detail)
        rep.add("verdict", "pass" if res.ok else "fail")
        rep.emit(args.json)
        return PASS if res.ok else FAIL
    if args.action == "rlp":
        _, (i_map, _) = _load(args.files[0], ("sset-map",))
        _, (p_map, _) = _load(args.files[1], ("sset-map",))
        res = has_rlp(i_map, p_map)
        rep.add("rlp", "yes" if res.ok else "no")
        rep.add("verdict", "pass" if res.ok else "fail")
        rep.emit(args.json)
        return PASS if res.ok else FAIL
    raise FormatError("unknown sset action %r" % args.action, 0)


def cmd_spec(args):
    rep = Report("spec " + args.action, _bounds_echo(args))
    if args.action == "free":
        _, seed = _load(args.files[0], ("pointed-sset",))
        free = sp.free_spectrum(args.level, seed, args.truncation)
        sys.stdout.write(textio.print_document("spectrum", free.spectrum))
        return PASS
    if args.action == "smash":
        _, x = _load(args.files[0], ("spectrum",))
        _, y = _load(args.files[1], ("spectrum",))
        day = sp.smash_spectra(x, y)
        sys.stdout.write(textio.print_document("spectrum", day.spectrum))
        return PASS
    if args.action == "omega":
        _, x = _load(args.files[0], ("spectrum",))
        report = sp.is_omega_shape(
            x, args.m_max, args.n_max, include_cylinders=not args.no_cylinders
        )
        for desc, ok, _ in report.entries:
            rep.add("generator", "%s %s" % ("-".join(str(p) for p in desc), "pass" if ok else "fail"))
        rep.add("verdict", "pass" if report.verdict else "fail")
        rep.emit(args.json)
        return PASS if report.verdict else FAIL
    raise FormatError("unknown spec action %r" % args.action, 0)


def cmd_cat(args):
    rep = Report("cat " + args.action, _bounds_echo(args))
    if args.action == "check":
        _, a = _load(args.files[0], ("vcategory",))
        result = check_category_axioms(a, skip_stage_overflow=True)
        rep.add("axioms", "pass" if result.ok else "fail")
        for v in result.violations[:5]:
            rep.add("violation", repr(v))
        rep.add("verdict", "pass" if result.ok else "fail")
        rep.emit(args.json)
        return PASS if result.ok else FAIL
    if args.action == "pushout":
        _, data = _load(args.files[0], ("attachment",))
        result = fl.pushout_category(data, args.stages)
        for pair in result.state.pairs:
            sizes = [_hom_size(data.V, h) for h in result.state.homs[pair]]
            rep.add("hom %s %s" % pair, " ".join(str(s) for s in sizes))
        rep.add("certificate", result.certificate)
        if data.V.kind == "sets":
            oracle = fl.WordOracle(data, args.stages)
            ok, why = fl.oracle_matches_stage(oracle, result.state)
            rep.add("oracle", "agrees" if ok else "disagrees: %s" % why)
            rep.add("verdict", "pass" if ok else "fail")
            rep.emit(args.json)
            return PASS if ok else FAIL
        rep.add("verdict", "pass")
        rep.emit(args.json)
        return PASS
    if args.action == "pi0":
        _, a = _load(args.files[0], ("vcategory",))
        cat = fc.pi0_category(fc.level0_category(a))
        for x in cat.objects:
            for y in cat.objects:
                rep.add("hom %s %s" % (x, y), len(cat.hom(x, y)))
        rep.add("verdict", "pass")
        rep.emit(args.json)
        return PASS
    if args.action == "bracket":
        _, a = _load(args.files[0], ("vcategory",))
        if a.V.kind != "spectra":
            raise FormatError("bracket wants a spectral category", 0)
        reports = {}
        for x in a.objects:
            for y in a.objects:
                reports[(x, y)] = sp.is_omega_shape(
                    a.hom(x, y), args.m_max, args.n_max, include_cylinders=not args.no_cylinders
                )
        try:
            cat = fc.bracket_category(a, reports)
        except ValueError as err:
            rep.add("rejected", str(err))
            rep.add("verdict", "fail")
            rep.emit(args.json)
            return FAIL
        for x in cat.objects:
            for y in cat.objects:
                rep.add("hom %s %s" % (x, y), len(cat.hom(x, y)))
        rep.add("verdict", "pass")
        rep.emit(args.json)
        return PASS
    raise FormatError("unknown cat action %r" % args.action, 0)


def _hom_size(V, hom):
    if V.kind == "sets":
        return len(hom.elements)
    if V.kind == "ssets":
        return hom.space.size()
    return sum(l.space.size() for l in hom.levels)


def cmd_freecat(args):
    rep = Report("freecat " + args.action, _bounds_echo(args))
    _, graph = _load(args.files[0], ("graph",))
    if args.action == "generators":
        loops = fc.primitive_loops(graph, args.vertex, args.max_len)
        rep.add("count", len(loops))
        for w in loops:
            rep.add("generator", ".".join(str(t) for t in w))
        rep.add("verdict", "pass")
        rep.emit(args.json)
        return PASS
    if args.action == "factorize":
        word = tuple(args.word.split(".")) if args.word else ()
        word = tuple(textio._untok(t) for t in word)
        cert = fc.factorize(graph, args.vertex, word)
        rep.add("blocks", " | ".join(".".join(str(t) for t in b) for b in cert.blocks) or "-")
        rep.add("cuts", " ".join(str(c) for c in cert.cuts) or "-")
        rep.add("alternatives", cert.alternatives)
        ok = cert.alternatives == 1
        rep.add("verdict", "pass" if ok else "fail")
        rep.emit(args.json)
        return PASS if ok else FAIL
    raise FormatError("unknown freecat action %r" % args.action, 0)


def cmd_q(args):
    rep = Report("q run", _bounds_echo(args))
    _, a = _load(args.files[0], ("vcategory",))
    if a.V.kind != "spectra":
        raise FormatError("q run wants a spectral category", 0)
    family = qf.standard_family(
        a.V.N, m_max=args.m_max, n_max=args.n_max, include_cylinders=not args.no_cylinders
    )
    state, omega, history, surrogates = qf.q_approx(
        a, family, max_stages=args.stages, stage_budget=args.stage_budget
    )
    rep.add("stages", state.stage)
    rep.add("unsolved-census", " ".join(str(c) for c in history))
    for pair, report in sorted(omega.items(), key=lambda kv: repr(kv[0])):
        rep.add("omega %s %s" % pair, "pass" if report.verdict else "fail")
    for stage, pair, surrogate in surrogates:
        rep.add(
            "surrogate stage %d %s %s" % (stage, pair[0], pair[1]),
            "pass" if surrogate.ok else "fail",
        )
    ok = all(report.verdict for report in omega.values())
    rep.add("verdict", "pass" if ok else "fail")
    rep.emit(args.json)
    return PASS if ok else FAIL


def _bounds_echo(args):
    keys = (
        "max_degree", "max_dim", "level", "truncation", "m_max", "n_max",
        "stages", "stage_budget", "max_len", "vertex", "budget", "seed",
    )
    parts = []
    for key in keys:
        if hasattr(args, key) and getattr(args, key) is not None:
            parts.append("%s=%s" % (key.replace("_", "-"), getattr(args, key)))
    return " ".join(parts)


def build_parser():
    parser = argparse.ArgumentParser(prog="spectralcat")
    parser.add_argument("--budget", type=int, default=None, help="nondegenerate simplex cap")
    parser.add_argument("--seed", type=int, default=0, help="echoed for reproducibility")
    parser.add_argument("--json", action="store_true")
    sub = parser.add_subparsers(dest="group", required=True)

    p_sset = sub.add_parser("sset")
    p_sset.add_argument("action", choices=["homology", "kan", "rlp"])
    p_sset.add_argument("files", nargs="+")
    p_sset.add_argument("--max-degree", dest="max_degree", type=int, default=2)
    p_sset.add_argument("--max-dim", dest="max_dim", type=int, default=2)
    p_sset.set_defaults(run=cmd_sset)

    p_spec = sub.add_parser("spec")
    p_spec.add_argument("action", choices=["free", "smash", "omega"])
    p_spec.add_argument("files", nargs="+")
    p_spec.add_argument("--level", type=int, default=0)
    p_spec.add_argument("--truncation", type=int, default=2)
    p_spec.add_argument("--m-max", dest="m_max", type=int, default=1)
    p_spec.add_argument("--n-max", dest="n_max", type=int, default=2)
    p_spec.add_argument("--no-cylinders", dest="no_cylinders", action="store_true")
    p_spec.set_defaults(run=cmd_spec)

    p_cat = sub.add_parser("cat")
    p_cat.add_argument("action", choices=["check", "pushout", "pi0", "bracket"])
    p_cat.add_argument("files", nargs="+")
    p_cat.add_argument("--stages", type=int, default=2)
    p_cat.add_argument("--m-max", dest="m_max", type=int, default=0)
    p_cat.add_argument("--n-max", dest="n_max", type=int, default=1)
    p_cat.add_argument("--no-cylinders", dest="no_cylinders", action="store_true")
    p_cat.set_defaults(run=cmd_cat)

    p_free = sub.add_parser("freecat")
    p_free.add_argument("action", choices=["generators", "factorize"])
    p_free.add_argument("files", nargs="+")
    p_free.add_argument("--vertex", required=True)
    p_free.add_argument("--max-len", dest="max_len", type=int, default=4)
    p_free.add_argument("--word", default="")
    p_free.set_defaults(run=cmd_freecat)

    p_q = sub.add_parser("q")
    p_q.add_argument("action", choices=["run"])
    p_q.add_argument("files", nargs="+")
    p_q.add_argument("--stages", type=int, default=1)
    p_q.add_argument("--stage-budget", dest="stage_budget", type=int, default=1)
    p_q.add_argument("--m-max", dest="m_max", type=int, default=0)
    p_q.add_argument("--n-max", dest="n_max", type=int, default=1)
    p_q.add_argument("--no-cylinders", dest="no_cylinders", action="store_true")
    p_q.set_defaults(run=cmd_q)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None:
        set_size_budget(args.budget)
    try:
        if args.group == "freecat":
            args.vertex = textio._untok(args.vertex)
        return args.run(args)
    except BudgetExceededError as err:
        print("budget-exceeded: %s" % err)
        return BUDGET
    except (FormatError, TruncationError, FileNotFoundError, ValueError) as err:
        print("input-error: %s" % err)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
