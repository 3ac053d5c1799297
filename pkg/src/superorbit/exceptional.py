"""The exceptional basic classical Lie superalgebras D(2,1;a), G(3), F(4).

Even parts are assembled from explicit matrices: three copies of sl(2) for
D(2,1;a); sl(2) + G2 inside gl(7); sl(2) + so(7) with its spin action on an
8-dimensional space of exterior products.  The odd-odd bracket is recovered
by an equivariance solver: starting from a handful of anchor commutators it
propagates [x,[u,v]] = [[x,u],v] + [u,[x,v]] over the even generators until
the symmetric square of the odd part is exhausted, then the whole algebra is
validated by a super-Jacobi scan.
"""

from __future__ import annotations

from functools import lru_cache

from .field import QQ, QALPHA, rat
from .linalg import LinearSolver, Matrix, mat_mul, solve_linear
from .superalg import TableAlgebra

SL2_E = ((0, 1), (0, 0))
SL2_H = ((1, 0), (0, -1))
SL2_F = ((0, 0), (1, 0))


def _q(mat):
    return [[rat(c) for c in row] for row in mat]


def _comm(a, b):
    ab = mat_mul(a, b, QQ)
    ba = mat_mul(b, a, QQ)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def _flat(mat):
    return [c for row in mat for c in row]


def _mat_add(a, b, s=1):
    s = rat(s)
    return [[x + s * y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _zero_mat(n):
    return [[QQ.zero] * n for _ in range(n)]


# ---------------------------------------------------------------------------
# G2 inside gl(7), basis of V7 ordered e3, e2, e1, e0, e-1, e-2, e-3

G2_X1 = ((0, -1, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 1, 0, 0, 0),
         (0, 0, 0, 0, -2, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 1),
         (0, 0, 0, 0, 0, 0, 0))
G2_X2 = ((0, 0, 0, 0, 0, 0, 0),
         (0, 0, 1, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, -1, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0))
G2_Y1 = ((0, 0, 0, 0, 0, 0, 0),
         (-1, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 2, 0, 0, 0, 0),
         (0, 0, 0, -1, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 1, 0))
G2_Y2 = ((0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 1, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, 0, 0, 0),
         (0, 0, 0, 0, -1, 0, 0),
         (0, 0, 0, 0, 0, 0, 0))
G2_H1 = tuple(tuple((1, -1, 2, 0, -2, 1, -1)[i] if i == j else 0 for j in range(7))
              for i in range(7))
G2_H2 = tuple(tuple((0, 1, -1, 0, 1, -1, 0)[i] if i == j else 0 for j in range(7))
              for i in range(7))

G2_NAMES = ["h1", "h2", "x1", "x2", "x3", "x4", "x5", "x6",
            "y1", "y2", "y3", "y4", "y5", "y6"]


@lru_cache(maxsize=1)
def build_g2():
    """14 matrices closing under commutator; x3..x6, y3..y6 are generated."""
    x = {1: _q(G2_X1), 2: _q(G2_X2)}
    y = {1: _q(G2_Y1), 2: _q(G2_Y2)}
    x[3] = _comm(x[1], x[2])
    x[4] = _comm(x[1], x[3])
    x[5] = _comm(x[1], x[4])
    x[6] = _comm(x[5], x[2])
    y[3] = _comm(y[1], y[2])
    y[4] = _comm(y[1], y[3])
    y[5] = _comm(y[1], y[4])
    y[6] = _comm(y[5], y[2])
    basis = [_q(G2_H1), _q(G2_H2)] + [x[i] for i in range(1, 7)] + [y[i] for i in range(1, 7)]
    solver = LinearSolver([_flat(m) for m in basis], QQ)
    for i in range(14):
        for j in range(i + 1, 14):
            if solver.coords(_flat(_comm(basis[i], basis[j]))) is None:
                raise AssertionError(
                    f"G2 transcription error: [{G2_NAMES[i]},{G2_NAMES[j]}] escapes the span")
    return basis


# ---------------------------------------------------------------------------
# so(7) and its spin representation

V7_ORDER = (3, 2, 1, 0, -1, -2, -3)
V7_IDX = {v: i for i, v in enumerate(V7_ORDER)}

# V8: exterior products of e1, e2, e3 applied to the spinor s
V8_ORDER = ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))
V8_IDX = {s: i for i, s in enumerate(V8_ORDER)}


def so7_labels():
    """The 21 basis labels R(e_a, e_b): R(e_i,e_-i) on the diagonal,
    |a| < |b| for same-sign pairs, positive first index for mixed pairs,
    and R(e_a, e_0) with a of any sign."""
    labels = [(i, -i) for i in (1, 2, 3)]
    labels += [(1, 2), (1, 3), (2, 3)]
    labels += [(-1, -2), (-1, -3), (-2, -3)]
    labels += [(a, -c) for a in (1, 2, 3) for c in (1, 2, 3) if a != c]
    labels += [(a, 0) for a in (1, 2, 3, -1, -2, -3)]
    return labels


def so7_matrix(a, b):
    """R(e_a,e_b) on V7: for b != 0 it is E(a,-b) - E(b,-a); R(e_a,e_0) is
    2E(a,0) - E(0,-a), where E(u,w) sends e_w to e_u."""
    m = _zero_mat(7)
    if b == 0:
        m[V7_IDX[a]][V7_IDX[0]] = rat(2)
        m[V7_IDX[0]][V7_IDX[-a]] = rat(-1)
    else:
        m[V7_IDX[a]][V7_IDX[-b]] = rat(1)
        m[V7_IDX[b]][V7_IDX[-a]] = rat(-1)
    return m


def so7_label_str(a, b):
    def e(v):
        return f"e{v}" if v >= 0 else f"e-{-v}"
    return f"R({e(a)},{e(b)})"


def _clifford_matrix(v):
    """Action of the Clifford generator e_v on V8 (wedge / contract / parity)."""
    m = _zero_mat(8)
    if v == 0:
        for i, sub in enumerate(V8_ORDER):
            m[i][i] = rat(1) if len(sub) % 2 == 0 else rat(-1)
        return m
    if v > 0:
        for i, sub in enumerate(V8_ORDER):
            if v in sub:
                continue
            new = tuple(sorted(sub + (v,)))
            sign = (-1) ** sum(1 for j in sub if j < v)
            m[V8_IDX[new]][i] = rat(sign)
        return m
    w = -v
    for i, sub in enumerate(V8_ORDER):
        if w not in sub:
            continue
        new = tuple(j for j in sub if j != w)
        sign = (-1) ** sum(1 for j in sub if j < w)
        m[V8_IDX[new]][i] = rat(sign)
    return m


def _xab_matrix(a, b):
    """X_{a,b} on V7: v -> <b,v> a - <a,v> b with <e_i,e_-i> = 1, <e0,e0> = 2."""
    def pairing(u, w):
        if u == 0 and w == 0:
            return rat(2)
        return rat(1) if u == -w else rat(0)
    m = _zero_mat(7)
    for w in V7_ORDER:
        cb = pairing(b, w)
        if cb:
            m[V7_IDX[a]][V7_IDX[w]] = m[V7_IDX[a]][V7_IDX[w]] + cb
        ca = pairing(a, w)
        if ca:
            m[V7_IDX[b]][V7_IDX[w]] = m[V7_IDX[b]][V7_IDX[w]] - ca
    return m


@lru_cache(maxsize=1)
def build_spin7():
    """21 so(7) matrices on V7 and their spin action on V8.

    Each R is decomposed over the X_{a,b} and mapped through the quadratic
    Clifford elements (c(a)c(b) - c(b)c(a))/2, which is a Lie homomorphism;
    the pairwise homomorphism check guards the transcription.
    """
    labels = so7_labels()
    so7 = [so7_matrix(a, b) for a, b in labels]
    xab_pairs = [(V7_ORDER[i], V7_ORDER[j])
                 for i in range(7) for j in range(i + 1, 7)]
    xab = [_xab_matrix(a, b) for a, b in xab_pairs]
    xab_solver = LinearSolver([_flat(m) for m in xab], QQ)
    cliff = {v: _clifford_matrix(v) for v in V7_ORDER}
    spin = []
    for m in so7:
        coords = xab_solver.coords(_flat(m))
        if coords is None:
            raise AssertionError("so(7) element outside Lambda^2 V7")
        s = _zero_mat(8)
        for c, (a, b) in zip(coords, xab_pairs):
            if not c:
                continue
            q = _mat_add(mat_mul(cliff[a], cliff[b], QQ),
                         mat_mul(cliff[b], cliff[a], QQ), -1)
            s = [[x + c * y / 2 for x, y in zip(r1, r2)] for r1, r2 in zip(s, q)]
        spin.append(s)
    so7_solver = LinearSolver([_flat(m) for m in so7], QQ)
    for i in range(21):
        for j in range(i + 1, 21):
            coords = so7_solver.coords(_flat(_comm(so7[i], so7[j])))
            if coords is None:
                raise AssertionError("so(7) is not closed: transcription error")
            lhs = _comm(spin[i], spin[j])
            rhs = _zero_mat(8)
            for c, sm in zip(coords, spin):
                if c:
                    rhs = _mat_add(rhs, sm, c)
            if lhs != rhs:
                raise AssertionError(
                    f"spin action is not a homomorphism at pair {labels[i]},{labels[j]}")
    return labels, so7, spin


# ---------------------------------------------------------------------------
# equivariance solver for the odd-odd bracket

class EquivariantBracketProblem:
    """Data for recovering S^2(odd) -> even from anchors plus equivariance.

    even: TableAlgebra of the even part; actions: per even basis index, the
    matrix of its action on the odd module (columns are images); anchors:
    triples (u, v, value) with u, v odd coordinate vectors and value an even
    coordinate vector.
    """

    def __init__(self, even, actions, odd_dim, anchors):
        self.even = even
        self.actions = actions
        self.odd_dim = odd_dim
        self.anchors = anchors


def _sym_index_map(d):
    idx = {}
    for a in range(d):
        for b in range(a, d):
            idx[(a, b)] = len(idx)
    return idx


def solve_odd_bracket(problem):
    """The unique equivariant symmetric bracket matching the anchors.

    Returns a list over symmetric pair indices (a <= b) of even coordinate
    vectors.  Raises if the anchors are inconsistent with equivariance or
    leave free parameters.
    """
    even = problem.even
    field = even.field
    d = problem.odd_dim
    sym = _sym_index_map(d)
    tsize = len(sym)
    width = tsize + even.dim

    def sym_coords(u, v):
        out = {}
        nu = [(a, c) for a, c in enumerate(u) if c]
        nv = [(b, c) for b, c in enumerate(v) if c]
        for a, ca in nu:
            for b, cb in nv:
                t = sym[(a, b) if a <= b else (b, a)]
                out[t] = out.get(t, field.zero) + ca * cb
        return {t: c for t, c in out.items() if c}

    sparse_actions = []
    for m in problem.actions:
        cols = []
        for a in range(d):
            cols.append([(r, m[r][a]) for r in range(d) if m[r][a]])
        sparse_actions.append(cols)

    inv_sym = [None] * tsize
    for ab, t in sym.items():
        inv_sym[t] = ab

    def apply_rho(x_idx, tdict):
        cols = sparse_actions[x_idx]
        out = {}
        for t, coeff in tdict.items():
            a, b = inv_sym[t]
            for c, m in cols[a]:
                u = sym[(c, b) if c <= b else (b, c)]
                out[u] = out.get(u, field.zero) + coeff * m
            for c, m in cols[b]:
                u = sym[(a, c) if a <= c else (c, a)]
                out[u] = out.get(u, field.zero) + coeff * m
        return {t: c for t, c in out.items() if c}

    rows = []      # RREF rows of length width, pivots in the t-columns
    pivots = []

    def reduce_row(vec):
        for row, p in zip(rows, pivots):
            c = vec[p]
            if c:
                vec = [x - c * y for x, y in zip(vec, row)]
        return vec

    def insert(tdict, value):
        vec = [field.zero] * width
        for t, c in tdict.items():
            vec[t] = c
        for k, c in enumerate(value):
            vec[tsize + k] = c
        vec = reduce_row(vec)
        p = next((i for i, c in enumerate(vec) if c), None)
        if p is None:
            return None
        if p >= tsize:
            raise ValueError("anchors are inconsistent with equivariance")
        pv = vec[p]
        if pv != field.one:
            inv = field.one / pv
            vec = [x * inv for x in vec]
        for i, row in enumerate(rows):
            c = row[p]
            if c:
                rows[i] = [x - c * y for x, y in zip(row, vec)]
        at = next((i for i, q in enumerate(pivots) if q > p), len(pivots))
        rows.insert(at, vec)
        pivots.insert(at, p)
        return vec

    work = []
    for u, v, value in problem.anchors:
        new = insert(sym_coords(u, v), list(value))
        if new is not None:
            work.append(new)
    while work:
        vec = work.pop()
        tdict = {t: vec[t] for t in range(tsize) if vec[t]}
        value = vec[tsize:]
        for x_idx in range(even.dim):
            new_t = apply_rho(x_idx, tdict)
            new_value = even.bracket(even.basis_vector(x_idx), value)
            new = insert(new_t, new_value)
            if new is not None:
                work.append(new)
    if len(rows) != tsize:
        missing = tsize - len(rows)
        raise ValueError(
            f"odd bracket underdetermined: {missing} symmetric directions unreached")
    values = [None] * tsize
    for row, p in zip(rows, pivots):
        values[p] = list(row[tsize:])
    return values


# ---------------------------------------------------------------------------
# assembling the three algebras

def _assemble(name, field, even, actions, odd_names, odd_bracket):
    even_dim = even.dim
    odd_dim = len(odd_names)
    dim = even_dim + odd_dim
    parity = [0] * even_dim + [1] * odd_dim
    names = list(even.basis_names) + list(odd_names)
    sym = _sym_index_map(odd_dim)

    structure = {}
    for (i, j), val in even.structure.items():
        structure[(i, j)] = dict(val)
    for x in range(even_dim):
        mat = actions[x]
        for a in range(odd_dim):
            entry = {even_dim + r: mat[r][a] for r in range(odd_dim) if mat[r][a]}
            if entry:
                structure[(x, even_dim + a)] = entry
    for (a, b), t in sym.items():
        val = odd_bracket[t]
        entry = {k: c for k, c in enumerate(val) if c}
        if entry:
            structure[(even_dim + a, even_dim + b)] = entry
    return TableAlgebra(dim, parity, field, name, structure, names)


def _even_table_from_blocks(field, blocks, names, name):
    """TableAlgebra for a direct sum of matrix Lie algebras.

    blocks: list of (block_id, matrix) basis elements; brackets stay inside
    a block.
    """
    per_block = {}
    for idx, (bid, m) in enumerate(blocks):
        per_block.setdefault(bid, []).append((idx, m))
    solvers = {}
    for bid, items in per_block.items():
        solvers[bid] = LinearSolver([_flat(m) for _i, m in items], QQ)

    def pair_bracket(i, j):
        bid_i, mi = blocks[i]
        bid_j, mj = blocks[j]
        if bid_i != bid_j:
            return {}
        coords = solvers[bid_i].coords(_flat(_comm(mi, mj)))
        if coords is None:
            raise AssertionError(f"even block {bid_i} is not closed")
        items = per_block[bid_i]
        out = {}
        for c, (idx, _m) in zip(coords, items):
            if c:
                out[idx] = field.of_rational(c) if field is QALPHA else c
        return out

    parity = [0] * len(blocks)
    return TableAlgebra.from_bracket(len(blocks), parity, field, name,
                                     pair_bracket, names)


def _tensor_action_2xm(field, sl2_mat, factor_mat, m):
    """Action of (A, M) on V2 (x) Vm as a 2m x 2m matrix: A(x)I + I(x)M."""
    dim = 2 * m
    out = [[field.zero] * dim for _ in range(dim)]
    for i in range(2):
        for j in range(2):
            c = sl2_mat[i][j]
            if c:
                cc = field.of_rational(c) if field is QALPHA else c
                for t in range(m):
                    out[i * m + t][j * m + t] = out[i * m + t][j * m + t] + cc
    for r in range(m):
        for s in range(m):
            c = factor_mat[r][s]
            if c:
                cc = field.of_rational(c) if field is QALPHA else c
                for i in range(2):
                    out[i * m + r][i * m + s] = out[i * m + r][i * m + s] + cc
    return out


class OrbitRepresentative:
    """A labelled nilpotent orbit representative with its grading element."""

    __slots__ = ("label", "element", "h")

    def __init__(self, label, element, h):
        self.label = label
        self.element = element
        self.h = h

    def __repr__(self):
        return f"OrbitRepresentative({self.label})"


def _check_reps(alg, reps):
    for rep in reps:
        lhs = alg.bracket(rep.h, rep.element)
        if lhs != [c + c for c in rep.element]:
            raise AssertionError(f"[h,e] != 2e for orbit {rep.label}")
    return reps


def sl2_triple_completion(alg, e, h):
    """Solve [h,f] = -2f, [e,f] = h for f supported on the even part."""
    even_idx = [i for i, p in enumerate(alg.parity) if p == 0]
    ad_h = alg.ad_matrix(h)
    ad_e = alg.ad_matrix(e)
    two = alg.field.of_int(2)
    rows = []
    rhs = []
    for r in range(alg.dim):
        row = [ad_h.data[r][c] + (two if r == c else alg.field.zero)
               for c in even_idx]
        rows.append(row)
        rhs.append(alg.field.zero)
    for r in range(alg.dim):
        rows.append([ad_e.data[r][c] for c in even_idx])
        rhs.append(h[r])
    sol = solve_linear(Matrix(len(rows), len(even_idx), rows, alg.field), rhs)
    if sol is None:
        return None
    f = alg.zero_vector()
    for c, i in zip(sol, even_idx):
        f[i] = c
    return f


# ----- D(2,1;alpha) --------------------------------------------------------

D21_ODD_ORDER = [(i, j, k) for i in (1, -1) for j in (1, -1) for k in (1, -1)]
D21_ODD_IDX = {t: n for n, t in enumerate(D21_ODD_ORDER)}


def _d21_even(field):
    sl2 = {"E": _q(SL2_E), "H": _q(SL2_H), "F": _q(SL2_F)}
    blocks = []
    names = []
    for slot in (1, 2, 3):
        for sym in ("E", "H", "F"):
            blocks.append((slot, sl2[sym]))
            names.append(f"{sym}{slot}")
    return _even_table_from_blocks(field, blocks, names, "D21-even"), blocks


def _d21_actions(field, blocks):
    actions = []
    for slot, m2 in blocks:
        dim = 8
        out = [[field.zero] * dim for _ in range(dim)]
        for n, (i, j, k) in enumerate(D21_ODD_ORDER):
            vals = {1: 0, -1: 1}
            comp = (i, j, k)
            row2 = vals[comp[slot - 1]]
            for new2 in (0, 1):
                c = m2[new2][row2]
                if c:
                    cc = field.of_rational(c) if field is QALPHA else c
                    tgt = list(comp)
                    tgt[slot - 1] = 1 if new2 == 0 else -1
                    actions_row = D21_ODD_IDX[tuple(tgt)]
                    out[actions_row][n] = out[actions_row][n] + cc
        actions.append(out)
    return actions


def _d21_sigma(field, alpha):
    if field is QALPHA:
        a = QALPHA.gen
        return 1 + a, QALPHA.of_int(-1), -a
    from .field import parse_rational
    r = alpha if isinstance(alpha, int) else parse_rational(str(alpha))
    if r == 0 or r == -1:
        raise ValueError("D(2,1;a) requires a not in {0, -1}")
    return rat(1) + rat(r), rat(-1), -rat(r)


def build_d21(alpha="symbolic"):
    """D(2,1;a) = Gamma(1+a, -1, -a); symbolic alpha works over Q(a)."""
    field = QALPHA if alpha == "symbolic" else QQ
    even, blocks = _d21_even(field)
    actions = _d21_actions(field, blocks)
    s1, s2, s3 = _d21_sigma(field, None if alpha == "symbolic" else alpha)
    zero = field.zero

    def ov(*terms):
        v = [zero] * 8
        for coeff, trip in terms:
            cc = field.of_int(coeff) if isinstance(coeff, int) else coeff
            v[D21_ODD_IDX[trip]] = v[D21_ODD_IDX[trip]] + cc
        return v

    def ev(*terms):
        v = [zero] * even.dim
        name_idx = {nm: i for i, nm in enumerate(even.basis_names)}
        for coeff, nm in terms:
            v[name_idx[nm]] = v[name_idx[nm]] + coeff
        return v

    two = field.of_int(2)
    four = field.of_int(4)
    x = ov((1, (1, 1, -1)), (-1, (-1, 1, 1)))
    y = ov((1, (1, -1, 1)), (-1, (-1, 1, 1)))
    # the second sample commutator of the e = E1 analysis carries the
    # opposite sign ([v11-1, v1-11] = -2 s1 E1); with both at +2 s1 E1 the
    # anchor set contradicts equivariance, see the golden-anchor tests
    anchors = [
        (ov((1, (1, 1, 1))), ov((1, (1, -1, -1))), ev((two * s1, "E1"))),
        (ov((1, (1, 1, -1))),
         ov((1, (1, -1, 1)), (-1, (-1, 1, 1))),
         ev((-two * s1, "E1"), (two * s2, "E2"))),
        (x, x, ev((four * s2, "E2"))),
        (y, y, ev((four * s3, "E3"))),
        (x, y, ev((-two * s1, "E1"), (two * s2, "E2"), (two * s3, "E3"))),
    ]
    odd_bracket = solve_odd_bracket(
        EquivariantBracketProblem(even, actions, 8, anchors))
    odd_names = [f"v({i},{j},{k})" for i, j, k in D21_ODD_ORDER]
    name = "D(2,1;a)" if alpha == "symbolic" else f"D(2,1;{alpha})"
    return _assemble(name, field, even, actions, odd_names, odd_bracket)


def d21_orbit_reps(alg):
    idx = {nm: i for i, nm in enumerate(alg.basis_names)}

    def vec(*names):
        v = alg.zero_vector()
        for nm in names:
            v[idx[nm]] = alg.field.one
        return v

    combos = [
        ("0", [], []),
        ("E1", ["E1"], ["H1"]),
        ("E2", ["E2"], ["H2"]),
        ("E3", ["E3"], ["H3"]),
        ("E1+E2", ["E1", "E2"], ["H1", "H2"]),
        ("E1+E3", ["E1", "E3"], ["H1", "H3"]),
        ("E2+E3", ["E2", "E3"], ["H2", "H3"]),
        ("E1+E2+E3", ["E1", "E2", "E3"], ["H1", "H2", "H3"]),
    ]
    return _check_reps(alg, [OrbitRepresentative(lbl, vec(*es), vec(*hs))
                             for lbl, es, hs in combos])


@lru_cache(maxsize=None)
def build_d21_cached(alpha="symbolic"):
    return build_d21(alpha)


# ----- G(3) ----------------------------------------------------------------

G3_ODD_ORDER = [(i, j) for i in (1, -1) for j in V7_ORDER]
G3_ODD_IDX = {t: n for n, t in enumerate(G3_ODD_ORDER)}


def _g3_even():
    g2 = build_g2()
    blocks = [(0, _q(SL2_E)), (0, _q(SL2_H)), (0, _q(SL2_F))]
    names = ["E", "H", "F"]
    for nm, m in zip(G2_NAMES, g2):
        blocks.append((1, m))
        names.append(nm)
    return _even_table_from_blocks(QQ, blocks, names, "G3-even"), blocks


def _tensor_actions(field, blocks, m):
    zero_m = _zero_mat(m)
    zero_2 = _q(((0, 0), (0, 0)))
    actions = []
    for bid, mat in blocks:
        if bid == 0:
            actions.append(_tensor_action_2xm(field, mat, zero_m, m))
        else:
            actions.append(_tensor_action_2xm(field, zero_2, mat, m))
    return actions


@lru_cache(maxsize=1)
def build_g3():
    """G(3): even part sl(2) + G2, odd part V2 (x) V7."""
    even, blocks = _g3_even()
    actions = _tensor_actions(QQ, blocks, 7)
    idx = {nm: i for i, nm in enumerate(even.basis_names)}

    def ev(*terms):
        v = even.zero_vector()
        for coeff, nm in terms:
            v[idx[nm]] = v[idx[nm]] + rat(coeff)
        return v

    def ov(*terms):
        v = [QQ.zero] * 14
        for coeff, (i, j) in terms:
            v[G3_ODD_IDX[(i, j)]] = v[G3_ODD_IDX[(i, j)]] + rat(coeff)
        return v

    x = ov((1, (1, 1)), (-1, (-1, 2)))
    y = ov((1, (1, -2)), (1, (-1, -1)))
    anchors = [
        (ov((1, (1, 3))), ov((1, (1, -3))), ev((16, "E"))),
        (ov((1, (1, 3))), ov((1, (-1, -2))), ev((-4, "x1"))),
        (ov((1, (-1, 3))), ov((1, (1, -2))), ev((4, "x1"))),
        (ov((1, (1, 3))), ov((1, (-1, 1))), ev((2, "x5"))),
        (ov((1, (1, -2))), ov((1, (-1, 1))), ev((-12, "y2"))),
        (x, ov((1, (1, -3))), ev((-4, "y1"))),
        (x, ov((1, (1, 0))), ev((-4, "x3"))),
        (x, ov((1, (1, 3))), ev((2, "x6"))),
        (y, ov((1, (1, -3))), ev((2, "y5"))),
    ]
    odd_bracket = solve_odd_bracket(
        EquivariantBracketProblem(even, actions, 14, anchors))
    odd_names = [f"v{i}*e{j}" for i, j in G3_ODD_ORDER]
    return _assemble("G(3)", QQ, even, actions, odd_names, odd_bracket)


def g3_orbit_reps(alg):
    idx = {nm: i for i, nm in enumerate(alg.basis_names)}

    def vec(terms):
        v = alg.zero_vector()
        for coeff, nm in terms:
            v[idx[nm]] = v[idx[nm]] + rat(coeff)
        return v

    combos = [
        ("E+(x1+x2)", [(1, "E"), (1, "x1"), (1, "x2")],
         [(1, "H"), (6, "h1"), (10, "h2")]),
        ("E+x2", [(1, "E"), (1, "x2")], [(1, "H"), (1, "h2")]),
        ("E+x1", [(1, "E"), (1, "x1")], [(1, "H"), (1, "h1")]),
        ("E+(x2+x5)", [(1, "E"), (1, "x2"), (1, "x5")],
         [(1, "H"), (2, "h1"), (4, "h2")]),
        ("E", [(1, "E")], [(1, "H")]),
        ("x1+x2", [(1, "x1"), (1, "x2")], [(6, "h1"), (10, "h2")]),
        ("x2", [(1, "x2")], [(1, "h2")]),
        ("x1", [(1, "x1")], [(1, "h1")]),
        ("x2+x5", [(1, "x2"), (1, "x5")], [(2, "h1"), (4, "h2")]),
        ("0", [], []),
    ]
    return _check_reps(alg, [OrbitRepresentative(lbl, vec(es), vec(hs))
                             for lbl, es, hs in combos])


# ----- F(4) ----------------------------------------------------------------

def _v8_name(sub):
    if not sub:
        return "s"
    return "".join(f"e{j}" for j in sub) + "s"


F4_ODD_ORDER = [(i, sub) for i in (1, -1) for sub in V8_ORDER]
F4_ODD_IDX = {t: n for n, t in enumerate(F4_ODD_ORDER)}


def _f4_even():
    labels, so7, spin = build_spin7()
    blocks = [(0, _q(SL2_E)), (0, _q(SL2_H)), (0, _q(SL2_F))]
    names = ["E", "H", "F"]
    for (a, b), m in zip(labels, so7):
        blocks.append((1, m))
        names.append(so7_label_str(a, b))
    return _even_table_from_blocks(QQ, blocks, names, "F4-even"), blocks, spin


@lru_cache(maxsize=1)
def build_f4():
    """F(4): even part sl(2) + so(7), odd part V2 (x) spin8.

    The odd basis normalizes the v_-1-side vectors to -1/4 of the plain
    tensors: this is the unique diagonal gauge in which every tabulated
    sample commutator holds simultaneously with the super Jacobi identity.
    Concretely [F, v1*w] = -4 v-1*w here.
    """
    even, blocks, spin = _f4_even()
    actions = []
    zero8 = _zero_mat(8)
    zero2 = _q(((0, 0), (0, 0)))
    spin_iter = iter(spin)
    for bid, mat in blocks:
        if bid == 0:
            actions.append(_tensor_action_2xm(QQ, mat, zero8, 8))
        else:
            actions.append(_tensor_action_2xm(QQ, zero2, next(spin_iter), 8))
    gauge = [rat(-1, 4) if i == -1 else rat(1) for i, _sub in F4_ODD_ORDER]
    for m in actions:
        for r in range(16):
            for c in range(16):
                if m[r][c]:
                    m[r][c] = m[r][c] * gauge[c] / gauge[r]
    idx = {nm: i for i, nm in enumerate(even.basis_names)}

    def ev(*terms):
        v = even.zero_vector()
        for coeff, nm in terms:
            v[idx[nm]] = v[idx[nm]] + (coeff if not isinstance(coeff, int) else rat(coeff))
        return v

    def ov(*terms):
        v = [QQ.zero] * 16
        for coeff, (i, sub) in terms:
            v[F4_ODD_IDX[(i, sub)]] = v[F4_ODD_IDX[(i, sub)]] + rat(coeff)
        return v

    x = ov((1, (1, (1,))), (-1, (-1, (1, 2, 3))))
    y = ov((1, (-1, (1, 2))), (1, (1, (2, 3))))
    anchors = [
        (x, x, ev((1, "R(e1,e0)"))),
        (x, ov((1, (1, (2,)))), ev((rat(1, 2), "R(e2,e0)"))),
        (x, ov((1, (1, (1, 3)))), ev((1, "R(e1,e3)"))),
        (x, y, ev((1, "R(e1,e-3)"), (1, "R(e2,e3)"), (-6, "E"))),
        (ov((1, (1, (2,)))), y, ev((1, "R(e2,e-3)"))),
        (ov((1, (1, (2,)))), ov((1, (1, (1, 3)))), ev((6, "E"))),
        (ov((1, (1, (1, 2, 3)))), y, ev((1, "R(e1,e2)"))),
        (ov((1, (1, (1,)))), ov((1, (1, (2, 3)))), ev((-6, "E"))),
    ]
    odd_bracket = solve_odd_bracket(
        EquivariantBracketProblem(even, actions, 16, anchors))
    odd_names = [f"v{i}*{_v8_name(sub)}" for i, sub in F4_ODD_ORDER]
    return _assemble("F(4)", QQ, even, actions, odd_names, odd_bracket)


def f4_orbit_reps(alg):
    idx = {nm: i for i, nm in enumerate(alg.basis_names)}

    def vec(terms):
        v = alg.zero_vector()
        for coeff, nm in terms:
            v[idx[nm]] = v[idx[nm]] + rat(coeff)
        return v

    R = so7_label_str
    combos = [
        (f"E+({R(1,-2)}+{R(2,-3)}+{R(3,0)})",
         [(1, "E"), (1, R(1, -2)), (1, R(2, -3)), (1, R(3, 0))],
         [(1, "H"), (6, R(1, -1)), (4, R(2, -2)), (2, R(3, -3))]),
        (f"E+({R(1,-2)}+{R(2,0)})",
         [(1, "E"), (1, R(1, -2)), (1, R(2, 0))],
         [(1, "H"), (4, R(1, -1)), (2, R(2, -2))]),
        (f"E+({R(1,-3)}+{R(2,3)})",
         [(1, "E"), (1, R(1, -3)), (1, R(2, 3))],
         [(1, "H"), (2, R(1, -1)), (2, R(2, -2))]),
        (f"E+({R(1,0)}+{R(2,3)})",
         [(1, "E"), (1, R(1, 0)), (1, R(2, 3))],
         [(1, "H"), (2, R(1, -1)), (1, R(2, -2)), (1, R(3, -3))]),
        (f"E+{R(1,0)}", [(1, "E"), (1, R(1, 0))], [(1, "H"), (2, R(1, -1))]),
        (f"E+{R(1,2)}", [(1, "E"), (1, R(1, 2))],
         [(1, "H"), (1, R(1, -1)), (1, R(2, -2))]),
        ("E", [(1, "E")], [(1, "H")]),
        (f"{R(1,-2)}+{R(2,-3)}+{R(3,0)}",
         [(1, R(1, -2)), (1, R(2, -3)), (1, R(3, 0))],
         [(6, R(1, -1)), (4, R(2, -2)), (2, R(3, -3))]),
        (f"{R(1,-2)}+{R(2,0)}",
         [(1, R(1, -2)), (1, R(2, 0))], [(4, R(1, -1)), (2, R(2, -2))]),
        (f"{R(1,-3)}+{R(2,3)}",
         [(1, R(1, -3)), (1, R(2, 3))], [(2, R(1, -1)), (2, R(2, -2))]),
        (f"{R(1,0)}+{R(2,3)}",
         [(1, R(1, 0)), (1, R(2, 3))],
         [(2, R(1, -1)), (1, R(2, -2)), (1, R(3, -3))]),
        (R(1, 0), [(1, R(1, 0))], [(2, R(1, -1))]),
        (R(1, 2), [(1, R(1, 2))], [(1, R(1, -1)), (1, R(2, -2))]),
        ("0", [], []),
    ]
    return _check_reps(alg, [OrbitRepresentative(lbl, vec(es), vec(hs))
                             for lbl, es, hs in combos])


def build_exceptional(name, alpha="symbolic"):
    if name == "D21":
        return build_d21_cached(alpha)
    if name == "G3":
        return build_g3()
    if name == "F4":
        return build_f4()
    raise ValueError(f"unknown exceptional algebra {name!r}")


def orbit_reps(alg):
    """Nilpotent orbit representatives (with grading elements) for an
    exceptional algebra built by this module."""
    if alg.name.startswith("D(2,1"):
        return d21_orbit_reps(alg)
    if alg.name == "G(3)":
        return g3_orbit_reps(alg)
    if alg.name == "F(4)":
        return f4_orbit_reps(alg)
    raise ValueError(f"not an exceptional algebra: {alg.name}")
