import pytest

from conftest import named_vector
from superorbit.field import QQ, rat
from superorbit import exceptional as exc
from superorbit.superalg import centralizer, check_super_jacobi
from superorbit.analysis import is_ad_nilpotent


# ---------------------------------------------------------------------------
# G2

def test_g2_generated_elements():
    basis = exc.build_g2()
    names = {nm: m for nm, m in zip(exc.G2_NAMES, basis)}
    assert exc._comm(names["x1"], names["x2"]) == names["x3"]
    assert exc._comm(names["x1"], names["x3"]) == names["x4"]
    assert exc._comm(names["y1"], names["y2"]) == names["y3"]


def test_g2_h1_eigenvectors():
    basis = exc.build_g2()
    names = {nm: m for nm, m in zip(exc.G2_NAMES, basis)}
    # x1, x2 are h1-eigenvectors with eigenvalues 2 and -3
    for sym, ev in (("x1", 2), ("x2", -3), ("y1", -2), ("y2", 3)):
        c = exc._comm(names["h1"], names[sym])
        assert c == [[rat(ev) * x for x in row] for row in names[sym]]


# ---------------------------------------------------------------------------
# spin(7)

def test_spin7_printed_actions():
    labels, so7, spin = exc.build_spin7()
    def sp(a, b):
        return spin[labels.index((a, b))]
    def col(m, sub):
        return {exc.V8_ORDER[r]: m[r][exc.V8_IDX[sub]] for r in range(8)
                if m[r][exc.V8_IDX[sub]]}
    assert col(sp(1, 0), (2,)) == {(1, 2): rat(-1)}      # R(e1,e0).e2s = -e1e2s
    assert col(sp(2, 0), (1,)) == {(1, 2): rat(1)}       # R(e2,e0).e1s = e1e2s
    assert col(sp(1, 0), (2, 3)) == {(1, 2, 3): rat(1)}  # R(e1,e0).e2e3s = e1e2e3s
    assert col(sp(1, 0), (1, 2)) == {}


def test_spin7_diagonal_spectrum():
    labels, so7, spin = exc.build_spin7()
    m = spin[labels.index((1, -1))]
    diag = [m[r][r] for r in range(8)]
    # occupation number of e1 minus 1/2 on each basis spinor
    expected = [rat(1, 2) if 1 in sub else rat(-1, 2) for sub in exc.V8_ORDER]
    assert diag == expected
    off = [m[r][c] for r in range(8) for c in range(8) if r != c]
    assert not any(off)


def test_so7_bracket_anchors():
    labels, so7, spin = exc.build_spin7()
    def mat(a, b):
        return so7[labels.index((a, b))]
    assert exc._comm(mat(1, -2), mat(2, -1)) == exc._mat_add(mat(1, -1), mat(2, -2), -1)
    assert exc._comm(mat(1, 3), mat(2, -3)) == [[-x for x in row] for row in mat(1, 2)]
    # tabulated as R(e3,e-3); the matrix commutator carries a factor 2
    assert exc._comm(mat(-3, 0), mat(3, 0)) == [[x + x for x in row] for row in mat(3, -3)]


# ---------------------------------------------------------------------------
# the equivariance solver

def test_solver_on_osp12():
    # sl(2) acting on its 2-dim module: recover osp(1|2)'s odd bracket from
    # the single anchor [u,u] = 2E
    sl2_mats = {"E": exc._q(exc.SL2_E), "H": exc._q(exc.SL2_H), "F": exc._q(exc.SL2_F)}
    even = exc._even_table_from_blocks(QQ, [(0, m) for m in sl2_mats.values()],
                                       list(sl2_mats), "sl2")
    actions = [m for m in sl2_mats.values()]
    u = [QQ.one, QQ.zero]
    anchors = [(u, u, named_vector(even, (2, "E")))]
    ob = exc.solve_odd_bracket(
        exc.EquivariantBracketProblem(even, actions, 2, anchors))
    alg = exc._assemble("osp(1|2)", QQ, even, actions, ["u", "v"], ob)
    assert check_super_jacobi(alg) == []
    uu = named_vector(alg, (1, "u"))
    vv = named_vector(alg, (1, "v"))
    # forced by equivariance: rho(F) sym(u,u) = 2 sym(u,v), [F, 2E] = -2H
    assert alg.bracket(uu, vv) == named_vector(alg, (-1, "H"))
    assert alg.bracket(vv, vv) == named_vector(alg, (-2, "F"))


def test_solver_rejects_inconsistent_anchors(g3):
    even, blocks = exc._g3_even()
    actions = exc._tensor_actions(QQ, blocks, 7)
    idx = {nm: i for i, nm in enumerate(even.basis_names)}
    def ev(c, nm):
        v = even.zero_vector()
        v[idx[nm]] = rat(c)
        return v
    def ov(c, t):
        v = [QQ.zero] * 14
        v[exc.G3_ODD_IDX[t]] = rat(c)
        return v
    anchors = [
        (ov(1, (1, 3)), ov(1, (1, -3)), ev(16, "E")),
        (ov(1, (1, 2)), ov(1, (1, -2)), ev(1, "E")),  # wrong scale vs 16E
    ]
    with pytest.raises(ValueError):
        exc.solve_odd_bracket(exc.EquivariantBracketProblem(even, actions, 14, anchors))


def test_solver_reports_underdetermined():
    sl2_mats = {"E": exc._q(exc.SL2_E), "H": exc._q(exc.SL2_H), "F": exc._q(exc.SL2_F)}
    even = exc._even_table_from_blocks(QQ, [(0, m) for m in sl2_mats.values()],
                                       list(sl2_mats), "sl2")
    actions = [m for m in sl2_mats.values()]
    with pytest.raises(ValueError, match="underdetermined"):
        exc.solve_odd_bracket(exc.EquivariantBracketProblem(even, actions, 2, []))


# ---------------------------------------------------------------------------
# the three algebras

def test_dimensions(d21, g3, f4):
    assert d21.dim == 17 and sum(d21.parity) == 8
    assert g3.dim == 31 and sum(g3.parity) == 14
    assert f4.dim == 40 and sum(f4.parity) == 16


def test_jacobi_symbolic_d21(d21):
    # holds identically in the deformation parameter
    assert check_super_jacobi(d21) == []


def test_jacobi_g3(g3):
    assert check_super_jacobi(g3) == []


def test_orbit_rep_counts(d21, g3, f4):
    assert len(exc.orbit_reps(d21)) == 8
    assert len(exc.orbit_reps(g3)) == 10
    assert len(exc.orbit_reps(f4)) == 14


def test_orbit_reps_are_nilpotent_sl2_triples(d21_sample, g3, f4):
    for alg in (d21_sample, g3, f4):
        for rep in exc.orbit_reps(alg):
            two_e = [c + c for c in rep.element]
            assert alg.bracket(rep.h, rep.element) == two_e
            assert is_ad_nilpotent(alg, rep.element)
            f = exc.sl2_triple_completion(alg, rep.element, rep.h)
            assert f is not None
            if any(rep.element):
                assert alg.bracket(rep.element, f) == rep.h


def test_g3_rep_h_values(g3):
    reps = {r.label: r for r in exc.orbit_reps(g3)}
    assert reps["x1"].h == named_vector(g3, (1, "h1"))
    assert reps["E+x2"].h == named_vector(g3, (1, "H"), (1, "h2"))


def test_f4_rep_h_value(f4):
    reps = {r.label: r for r in exc.orbit_reps(f4)}
    rep = reps["E+R(e1,e2)"]
    # printed h lacks the sl(2) component; [h,e] = 2e forces H + R11 + R22
    assert rep.h == named_vector(f4, (1, "H"), (1, "R(e1,e-1)"), (1, "R(e2,e-2)"))


# ---------------------------------------------------------------------------
# golden anchor commutators from the worked case analyses

def test_golden_anchors_d21(d21):
    from anchors import check_cases, d21_cases
    assert check_cases(d21, d21_cases(d21.field), named_vector) == []


def test_golden_anchors_g3(g3):
    from anchors import G3_CASES, check_cases
    assert check_cases(g3, G3_CASES, named_vector) == []


def test_golden_anchors_f4(f4):
    from anchors import F4_CASES, check_cases
    assert check_cases(f4, F4_CASES, named_vector) == []


def test_d21_at_one_matches_osp42():
    # D(2,1;1) is isomorphic to osp(4|2): the full sets of orbit invariants
    # (centralizer and derived dims, graded dims, flags) must coincide,
    # cross-validating the equivariance solver against the form model
    from superorbit.analysis import analyze_exceptional_orbit, analyze_partition
    from superorbit.matrixalg import osp_partitions

    def key(rep):
        return (rep.dims["g_e"], rep.dims["derived"],
                tuple(sorted(rep.graded_dims.items())),
                rep.flags["reachable"], rep.flags["strongly_reachable"],
                rep.flags["panyushev_generated"])

    osp_keys = {key(analyze_partition("osp", lam))
                for lam in osp_partitions(4, 2)}
    alg = exc.build_d21(1)
    d21_keys = {key(analyze_exceptional_orbit(alg, orep))
                for orep in exc.orbit_reps(alg)}
    assert osp_keys == d21_keys


def test_d21_rational_sample_matches_symbolic_flags(d21, d21_sample):
    # evaluating the symbolic structure constants at a = 2 gives the sample
    a2 = rat(2)
    for (i, j), val in d21.structure.items():
        sval = d21_sample.structure.get((i, j), {})
        for k, c in val.items():
            num = sum(co * a2 ** t for t, co in enumerate(c.num.coeffs))
            den = sum(co * a2 ** t for t, co in enumerate(c.den.coeffs))
            assert sval.get(k, rat(0)) == num / den


def test_graded_dims_match_printed_tables(d21, g3, f4):
    from superorbit.analysis import analyze_exceptional_orbit
    reps = {r.label: r for r in exc.orbit_reps(d21)}
    assert analyze_exceptional_orbit(d21, reps["E1"]).graded_dims == {0: 6, 1: 4, 2: 1}
    assert analyze_exceptional_orbit(d21, reps["E1+E2"]).graded_dims == {0: 5, 2: 4}
    assert analyze_exceptional_orbit(d21, reps["E1+E2+E3"]).graded_dims == \
        {1: 2, 2: 3, 3: 1}
    reps = {r.label: r for r in exc.orbit_reps(g3)}
    assert analyze_exceptional_orbit(g3, reps["E+x2"]).graded_dims == {0: 5, 1: 7, 2: 4}
    assert analyze_exceptional_orbit(g3, reps["x1"]).graded_dims == \
        {0: 6, 1: 4, 2: 3, 3: 2}
    reps = {r.label: r for r in exc.orbit_reps(f4)}
    assert analyze_exceptional_orbit(f4, reps["E+R(e1,e2)"]).graded_dims == \
        {0: 8, 1: 10, 2: 4}
    # the printed grade-2 row of this case lists a spurious bare R(e1,e-3);
    # the computed centralizer has dimension 14 = 1+4+6+2+1
    assert analyze_exceptional_orbit(
        f4, reps["E+(R(e1,e-3)+R(e2,e3))"]).graded_dims == \
        {0: 1, 1: 4, 2: 6, 3: 2, 4: 1}
