"""A bounded, trimmed small-object-argument approximation of fibrant replacement.

Cells are two-object functors on the horn generators and the cylinder
pushout-products, attached to a spectral category along every currently
unsolved lifting problem.  Stages are sequential; each stage composes its
pushout unit functors into the running comparison functor.  All bounds
(generator levels, horn dimensions, truncation, stage count) are explicit
and quoted in the reports.
"""

from . import spectra as sp
from .enriched import GeneratorMap, VFunctor, generating_trivial_cofibration, two_object_category, two_object_functor, TruncatedSpectra
from .filtration import AttachmentData, check_equivalence_surrogate, pushout_category


class CellFamily:
    """Generator functors within explicit bounds."""

    __slots__ = ("V", "generators", "bounds")

    def __init__(self, V, generators, bounds):
        self.V = V
        self.generators = list(generators)
        self.bounds = bounds

    def __repr__(self):
        return "<CellFamily %d generators bounds=%r>" % (len(self.generators), self.bounds)


def standard_family(N, m_max=2, n_max=3, include_cylinders=True):
    """Horn generators and cylinder pushout-products within the bounds."""
    V = TruncatedSpectra(N)
    gens = []
    for m in range(0, min(m_max, N) + 1):
        for n in range(1, n_max + 1):
            for k in range(n + 1):
                gens.append(generating_trivial_cofibration(m, k, n, N))
    if include_cylinders:
        for m in range(0, min(m_max, N - 1) + 1):
            for n in range(0, n_max + 1):
                vmap = sp.cylinder_pushout_product(m, n, N)
                src_cat = two_object_category(V, vmap.source)
                tgt_cat = two_object_category(V, vmap.target)
                functor = two_object_functor(V, vmap, src_cat, tgt_cat)
                gens.append(GeneratorMap(functor, vmap, "anodyne", ("K", m, n)))
    return CellFamily(V, gens, {"m_max": m_max, "n_max": n_max, "N": N})


def enumerate_cell_attachments(a, family):
    """Every way to attach a family generator along a map into a hom."""
    V = family.V
    out = []
    for gen in family.generators:
        vmap = gen.vmap
        for x in a.objects:
            for y in a.objects:
                hom = a.hom(x, y)
                for phi in sp.enumerate_spectrum_maps(vmap.source, hom):
                    out.append(
                        AttachmentData(
                            V, a, vmap, x, y, phi, j_kind=gen.kind,
                            K=vmap.source, L=vmap.target,
                        )
                    )
    return out


def is_solved(attachment):
    """Does the attaching map extend over the generator's codomain?"""
    return bool(sp.extend_spectrum_map(attachment.j, attachment.phi, first_only=True))


def unsolved_census(a, family):
    """All attachments together with the unsolved ones."""
    attachments = enumerate_cell_attachments(a, family)
    unsolved = [d for d in attachments if not is_solved(d)]
    return attachments, unsolved


class QState:
    """The running category, the stage count, and the comparison functor."""

    __slots__ = ("current", "stage", "eta", "log")

    def __init__(self, current, stage, eta, log):
        self.current = current
        self.stage = stage
        self.eta = eta
        self.log = list(log)

    @staticmethod
    def initial(a):
        return QState(a, 0, VFunctor.identity(a), [])


def q_step(state, family, policy="unsolved", stage_budget=2):
    """Attach cells for each selected lifting problem, in enumeration order.

    The trimmed policy attaches only problems with no current solution;
    attaching everything never terminates and destroys the fixpoint
    property.  Attachments are sequential pushouts: each one pushes the
    remaining attaching maps forward along its unit functor.
    """
    attachments, unsolved = unsolved_census(state.current, family)
    selected = unsolved if policy == "unsolved" else attachments
    if not selected:
        return QState(
            state.current,
            state.stage + 1,
            state.eta,
            state.log + [("stage", state.stage + 1, "no attachments")],
        )
    current = state.current
    eta = state.eta
    log = list(state.log)
    carried = list(selected)
    while carried:
        data = carried.pop(0)
        result = pushout_category(data, stage_budget)
        current = result.category
        eta = eta.then(result.functor)
        log.append(("attach", data.j_kind, (data.a, data.b), result.certificate))
        carried = [
            AttachmentData(
                d.V,
                current,
                d.j,
                d.a,
                d.b,
                d.phi.then(result.functor.hom_map(d.a, d.b)),
                j_kind=d.j_kind,
                K=d.K,
                L=d.L,
            )
            for d in carried
        ]
    log.append(("stage", state.stage + 1, "%d attachments" % len(selected)))
    return QState(current, state.stage + 1, eta, log)


def q_approx(a, family, max_stages=3, policy="unsolved", stage_budget=2, surrogate_degree=2):
    """Iterate the trimmed attachment step and report lifting progress.

    Returns the final state, per-hom omega reports within the family
    bounds, per-stage unsolved counts, and the surrogate verdicts of each
    stage's attachments.
    """
    state = QState.initial(a)
    census_history = []
    surrogates = []
    for _ in range(max_stages):
        _, unsolved = unsolved_census(state.current, family)
        census_history.append(len(unsolved))
        if not unsolved:
            state = QState(state.current, state.stage + 1, state.eta, state.log)
            continue
        state = _q_step_with_surrogates(state, family, policy, stage_budget, surrogate_degree, surrogates)
    _, unsolved = unsolved_census(state.current, family)
    census_history.append(len(unsolved))
    gens = [(g.label, g.vmap) for g in family.generators]
    omega = {}
    for x in a.objects:
        for y in a.objects:
            omega[(x, y)] = sp.is_omega_shape(
                state.current.hom(x, y), 0, 0, generators=gens
            )
    return state, omega, census_history, surrogates


def _q_step_with_surrogates(state, family, policy, stage_budget, d, surrogates):
    attachments, unsolved = unsolved_census(state.current, family)
    selected = unsolved if policy == "unsolved" else attachments
    if not selected:
        return QState(state.current, state.stage + 1, state.eta, state.log)
    current = state.current
    eta = state.eta
    log = list(state.log)
    carried = list(selected)
    while carried:
        data = carried.pop(0)
        result = pushout_category(data, stage_budget)
        surrogates.append(
            (state.stage + 1, (data.a, data.b), check_equivalence_surrogate(result, d))
        )
        current = result.category
        eta = eta.then(result.functor)
        log.append(("attach", data.j_kind, (data.a, data.b), result.certificate))
        carried = [
            AttachmentData(
                dd.V, current, dd.j, dd.a, dd.b,
                dd.phi.then(result.functor.hom_map(dd.a, dd.b)),
                j_kind=dd.j_kind, K=dd.K, L=dd.L,
            )
            for dd in carried
        ]
    return QState(current, state.stage + 1, eta, log)
