import pytest

from conftest import named_vector
from superorbit import exceptional as exc
from superorbit.analysis import (analyze_exceptional_orbit,
                                 analyze_exceptional_table, analyze_partition,
                                 core_subalgebra_psl, is_reachable,
                                 is_strongly_reachable,
                                 labelled_diagram_typeA, psl_center_report,
                                 reachability_criterion, satisfies_panyushev,
                                 sweep_partitions, verify_dim_formulas,
                                 verify_equivalences,
                                 verify_exceptional_tables, verify_osp_structure,
                                 verify_psl_center, sweep_family)
from superorbit.matrixalg import SuperPartition, pyramid


# ---------------------------------------------------------------------------
# reachability flags on the worked exceptional cases

def test_d21_E1_plus_E2_not_reachable(d21):
    e = named_vector(d21, (1, "E1"), (1, "E2"))
    assert not is_reachable(d21, e)


def test_zero_orbit_reachable(d21):
    assert is_reachable(d21, d21.zero_vector())


def test_g3_E_plus_x1_reachable_not_strong(g3):
    e = named_vector(g3, (1, "E"), (1, "x1"))
    assert is_reachable(g3, e)
    assert not is_strongly_reachable(g3, e)


def test_g3_x1_strongly_reachable_not_panyushev(g3):
    e = named_vector(g3, (1, "x1"))
    h = named_vector(g3, (1, "h1"))
    assert is_strongly_reachable(g3, e)
    generated, layerwise = satisfies_panyushev(g3, e, h)
    assert (generated, layerwise) == (False, False)


def test_d21_regular_not_strongly_reachable(d21):
    e = named_vector(d21, (1, "E1"), (1, "E2"), (1, "E3"))
    h = named_vector(d21, (1, "H1"), (1, "H2"), (1, "H3"))
    assert is_reachable(d21, e)
    assert not is_strongly_reachable(d21, e)
    assert satisfies_panyushev(d21, e, h) == (True, True)


def test_f4_strong_row(f4):
    reps = {r.label: r for r in exc.orbit_reps(f4)}
    rep = reps["E+R(e1,e2)"]
    assert is_strongly_reachable(f4, rep.element)


def test_f4_case1_panyushev(f4):
    reps = {r.label: r for r in exc.orbit_reps(f4)}
    rep = reps["E+(R(e1,e-3)+R(e2,e3))"]
    assert satisfies_panyushev(f4, rep.element, rep.h) == (True, True)
    assert not is_strongly_reachable(f4, rep.element)


def test_zero_orbit_panyushev_vacuous(g3):
    assert satisfies_panyushev(g3, g3.zero_vector(), g3.zero_vector()) == (True, True)


# ---------------------------------------------------------------------------
# the partition criterion

@pytest.mark.parametrize("parts,expected", [
    ((2, 2, 1), True),
    ((3, 1), False),      # gap of 2
    ((2, 2), False),      # last part not 1
    ((1,), True),
    ((3, 2, 2, 1), True),
])
def test_reachability_criterion(parts, expected):
    lam = SuperPartition.from_pq(list(parts), [])
    assert reachability_criterion(lam) == expected


# ---------------------------------------------------------------------------
# labelled diagrams

def test_diagram_22():
    d = labelled_diagram_typeA(pyramid(SuperPartition.parse("2|2")))
    assert d.labels == (0, 2, 0)
    assert [g for _l, g in d.nodes] == [True, True, True]
    assert d.n2() == 1
    assert d.two_free_core().labels == (0, 0)


def test_diagram_all_ones_partition():
    d = labelled_diagram_typeA(pyramid(SuperPartition.parse("1,1|1")))
    assert d.labels == (0, 0)
    assert d.n2() == 0


def test_diagram_pure_parity_has_no_label_one():
    for text in ("2,2|", "3,1|", "|2,2", "4,2|"):
        p, q = text.split("|")
        lam = SuperPartition.from_pq(
            [int(x) for x in p.split(",") if x], [int(x) for x in q.split(",") if x])
        d = labelled_diagram_typeA(pyramid(lam))
        assert not d.has_label_one()
        assert d.n2() == lam.sizes[0] - 1


def test_core_components():
    d = labelled_diagram_typeA(pyramid(SuperPartition.parse("2|2")))
    assert d.core_components() == [[0], [2]]


# ---------------------------------------------------------------------------
# psl centre machinery

def test_psl_center_report_33():
    r = psl_center_report(SuperPartition.parse("3|3"))
    assert r["dim_z"] == 2 and r["z_equals_e_powers"]
    assert r["half_sum_ok"]


def test_psl_center_zero_orbit():
    r = psl_center_report(SuperPartition.parse("1,1|1,1"))
    assert r["dim_z"] == 0  # psl(2|2) is simple: trivial centre
    assert r["dim_ge"] == 14 and r["n2"] == 0 and r["dim_g0_e0"] == 14


def test_core_subalgebra_psl_22():
    lam = SuperPartition.parse("2|2")
    rep = analyze_partition("psl", lam)
    d = rep.diagram
    g0, e0 = core_subalgebra_psl(rep.data, d)
    assert not any(e0)           # no label-1 runs: e0 = 0
    assert g0.member(e0)
    # two sl(1|1)-column blocks mod the centre line
    assert g0.dim == 5


def test_verify_psl_center_small():
    # corrected two-free-core relations (identity-line bookkeeping) hold
    assert verify_psl_center(bound=3) == []


def test_printed_core_relations_fail_where_documented():
    bad = verify_psl_center(bound=2, as_stated=True)
    assert sorted(b["partition"] for b in bad) == ["1,1|2", "2|1,1"]
    for b in bad:
        assert not b["blocks_balanced"] or b["sigma"] == 1


def test_verify_dim_formulas_small():
    assert verify_dim_formulas("sl", bound=5) == []
    assert verify_dim_formulas("psl", bound=3) == []


def test_verify_osp_structure_small():
    assert verify_osp_structure(bound=6) == []


# ---------------------------------------------------------------------------
# exceptional tables

def test_exceptional_tables_match_expected():
    assert verify_exceptional_tables(alpha=2) == []


def test_exceptional_tables_symbolic():
    assert verify_exceptional_tables(alpha="symbolic") == []


def test_g3_panyushev_exceptions_exact():
    reports = analyze_exceptional_table("G3", alpha=2)
    exceptions = [r.label for r in reports
                  if r.flags["reachable"] and not r.flags["panyushev_generated"]]
    assert exceptions == ["E+x1", "x1"]


def test_f4_table_has_eight_reachable():
    reports = analyze_exceptional_table("F4")
    assert sum(1 for r in reports if r.flags["reachable"]) == 8


# ---------------------------------------------------------------------------
# sweeps, including the documented falsification set

def test_flag_lattice_holds_on_sweep():
    for rep in sweep_family("sl", bound=5):
        f = rep.flags
        if f["strongly_reachable"]:
            assert f["reachable"]
        if f["panyushev_generated"]:
            assert f["reachable"]


def test_e_lives_in_grade_two_piece():
    for family, text in (("sl", "3|2"), ("psl", "2,2|2,2"), ("osp", "3|2,2")):
        rep = analyze_partition(family, SuperPartition.parse(text))
        assert rep.graded.piece(2).member(rep.data.e)
    import superorbit.exceptional as exc2
    g3 = exc2.build_g3()
    for orep in exc2.orbit_reps(g3):
        if any(orep.element):
            r = analyze_exceptional_orbit(g3, orep)
            assert r.graded.piece(2).member(orep.element)


def test_centralizer_is_bracket_closed():
    from superorbit.superalg import is_bracket_closed
    for family, text in (("sl", "2,1|2"), ("osp", "2,2|2"), ("psl", "3|2,1")):
        rep = analyze_partition(family, SuperPartition.parse(text))
        assert is_bracket_closed(rep.data.carrier, rep.centralizer)
        assert rep.centralizer.contains(rep.derived)


def test_known_equivalence_failures_sl_small():
    # the printed criterion fails exactly on these mixed-parity partitions
    reports = sweep_family("sl", bound=5)
    bad = verify_equivalences(reports)
    assert sorted(b[1] for b in bad) == ["2|3", "3|2"]
    for _a, _l, flags in bad:
        assert flags["reachable"] and not flags["criterion"]


def test_known_equivalence_failures_psl_small():
    reports = sweep_family("psl", bound=3)
    bad = verify_equivalences(reports)
    assert sorted(b[1] for b in bad) == ["2|2", "3|3"]


def test_osp_report_fields():
    rep = analyze_partition("osp", SuperPartition.parse("3|2,2"),
                            with_osp_structure=True)
    dec = rep.extra["osp"]
    assert dec["frakN"].dim + dec["N1"].dim + dec["N2"].dim == rep.dims["g_e"]
    assert not rep.flags["reachable"]
    d = rep.to_dict()
    assert d["orbit"] == "3|2,2" and d["flags"]["criterion"] is False


def test_report_json_shape():
    rep = analyze_partition("sl", SuperPartition.parse("2|1"))
    d = rep.to_dict()
    assert set(d) >= {"algebra", "orbit", "dims", "graded_dims", "flags", "diagram"}
    assert d["diagram"]["labels"] == [1, 1]
    assert d["graded_dims"] == {"0": 1, "1": 2, "2": 1}
