"""Bounded small-object-argument approximation."""

import time

from spectralcat import enriched as en
from spectralcat import qfunctor as qf
from spectralcat import spectra as sp
from spectralcat.enriched import VCategory, zero_bimorphism
from spectralcat.lifting import enumerate_maps
from spectralcat.simplicial import plus, standard_simplex


def point_hom_category(V):
    pt = V.zero()
    return VCategory(
        V,
        ["*"],
        {("*", "*"): pt},
        {("*", "*", "*"): zero_bimorphism(V, pt, pt, pt)},
        {"*": (0, ((), pt.levels[0].base))},
    )


def test_empty_family_gives_no_attachments():
    V = en.TruncatedSpectra(2)
    family = qf.CellFamily(V, [], {"m_max": 0, "n_max": 0, "N": 2})
    A = en.unit_category(V)
    assert qf.enumerate_cell_attachments(A, family) == []


def test_attachment_counts_follow_adjunction():
    # a disc generator attaches once per pointed vertex choice of the hom level
    V = en.TruncatedSpectra(2)
    gen = en.generating_trivial_cofibration(0, 1, 1, 2)
    family = qf.CellFamily(V, [gen], {})
    A = en.unit_category(V)
    atts = qf.enumerate_cell_attachments(A, family)
    expected = len(
        enumerate_maps(
            gen.vmap.source.levels[0].space,
            A.hom("*", "*").levels[0].space,
            pointed=(gen.vmap.source.levels[0], A.hom("*", "*").levels[0]),
        )
    )
    assert len(atts) == expected


def test_omega_input_is_a_fixpoint():
    family = qf.standard_family(2, m_max=1, n_max=2, include_cylinders=True)
    V = family.V
    ptcat = point_hom_category(V)
    _, unsolved = qf.unsolved_census(ptcat, family)
    assert unsolved == []
    st = qf.QState.initial(ptcat)
    st1 = qf.q_step(st, family)
    assert st1.current is ptcat
    assert st1.stage == 1
    assert st1.eta.hom_maps == st.eta.hom_maps


def test_planted_problem_strictly_decreases():
    family = qf.standard_family(2, m_max=1, n_max=2, include_cylinders=False)
    V = family.V
    A = en.unit_category(V)
    atts, unsolved = qf.unsolved_census(A, family)
    assert unsolved
    st1 = qf.q_step(qf.QState.initial(A), family, stage_budget=1)
    assert st1.current.objects == A.objects
    # every original problem, pushed along the stage functor, is now solved
    still = 0
    for d in atts:
        phi2 = d.phi.then(st1.eta.hom_map(d.a, d.b))
        if not sp.extend_spectrum_map(d.j, phi2, first_only=True):
            still += 1
    assert still < len(unsolved)
    assert still == 0


def test_q_approx_reports():
    family = qf.standard_family(2, m_max=1, n_max=1, include_cylinders=False)
    V = family.V
    ptcat = point_hom_category(V)
    state, omega, history, surrogates = qf.q_approx(ptcat, family, max_stages=2)
    assert history == [0, 0, 0]
    assert all(rep.verdict for rep in omega.values())
    assert state.stage == 2
    assert surrogates == []


def test_q_approx_with_progress():
    family = qf.standard_family(2, m_max=1, n_max=2, include_cylinders=False)
    V = family.V
    A = en.unit_category(V)
    state, omega, history, surrogates = qf.q_approx(
        A, family, max_stages=1, stage_budget=1
    )
    assert state.stage == 1
    assert state.current.objects == A.objects
    assert history[0] > 0
    for _, _, rep in surrogates:
        assert rep.ok, rep.violations
