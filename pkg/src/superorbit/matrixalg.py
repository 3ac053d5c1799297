"""Matrix superalgebras gl/sl/psl/osp, super-partitions and Dynkin pyramids.

Type A algebras are realized on matrix units of gl(m|n); sl is the supertrace
kernel and psl the quotient of sl(n|n) by its one-dimensional centre.  For
osp the orthosymplectic form is adapted to the partition: on the basis
{e^a v_i} the pairing is <e^a v_i, e^b v_j> = (-1)^a theta_i [j = i*]
[a+b = lam_i - 1], which makes the Jordan nilpotent e and its sl(2)-partner h
form-compatible by construction.
"""

from __future__ import annotations

from functools import lru_cache

from .field import QQ, rat
from .linalg import Matrix, Subspace, kernel
from .superalg import MatrixUnitAlgebra, TableAlgebra, quotient


# ---------------------------------------------------------------------------
# super-partitions

def partitions_of(n):
    """All weakly decreasing positive partitions of n (n = 0 gives ())."""
    if n == 0:
        yield ()
        return
    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail
    yield from rec(n, n)


class SuperPartition:
    """Partition of (m|n): sizes weakly decreasing, ties ordered 0-part first."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = [(int(s), int(p) & 1) for s, p in parts]
        if any(s <= 0 for s, _ in parts):
            raise ValueError("partition parts must be positive")
        # canonical order: sizes descending, parity 0 before parity 1 on ties
        self.parts = tuple(sorted(parts, key=lambda sp: (-sp[0], sp[1])))

    @classmethod
    def from_pq(cls, p, q):
        return cls([(s, 0) for s in p] + [(s, 1) for s in q])

    @classmethod
    def parse(cls, text):
        """Grammar "p1,p2,...|q1,q2,..." with 0-parity parts before the bar."""
        if "|" not in text:
            raise ValueError(f"partition needs a '|': {text!r}")
        left, right = text.split("|", 1)
        def side(s):
            s = s.strip()
            return [int(tok) for tok in s.split(",") if tok.strip()] if s else []
        return cls.from_pq(side(left), side(right))

    @property
    def sizes(self):
        return tuple(s for s, _ in self.parts)

    @property
    def parities(self):
        return tuple(p for _, p in self.parts)

    @property
    def m(self):
        return sum(s for s, p in self.parts if p == 0)

    @property
    def n(self):
        return sum(s for s, p in self.parts if p == 1)

    def even_parts(self):
        return tuple(s for s, p in self.parts if p == 0)

    def odd_parts(self):
        return tuple(s for s, p in self.parts if p == 1)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, SuperPartition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def text(self):
        return ",".join(map(str, self.even_parts())) + "|" + ",".join(map(str, self.odd_parts()))

    __str__ = text

    def __repr__(self):
        return f"SuperPartition({self.text()!r})"

    def osp_valid(self):
        """Even 0-parity sizes and odd 1-parity sizes need even multiplicity."""
        from collections import Counter
        ev = Counter(self.even_parts())
        od = Counter(self.odd_parts())
        return (all(c % 2 == 0 for s, c in ev.items() if s % 2 == 0)
                and all(c % 2 == 0 for s, c in od.items() if s % 2 == 1))

    def reachability_sizes_ok(self):
        s = self.sizes
        return all(s[i] - s[i + 1] in (0, 1) for i in range(len(s) - 1)) and s[-1] == 1


def super_partitions(m, n):
    for p in partitions_of(m):
        for q in partitions_of(n):
            yield SuperPartition.from_pq(p, q)


def osp_partitions(m, two_n):
    for lam in super_partitions(m, two_n):
        if lam.osp_valid():
            yield lam


# ---------------------------------------------------------------------------
# Dynkin pyramids

class DynkinPyramid:
    """Centered box diagram; boxes numbered column by column, top to bottom.

    Row i (1-based, bottom row first) has lam_i boxes of parity |i| at the
    x-coordinates -(lam_i-1), -(lam_i-1)+2, ..., lam_i-1.
    """

    def __init__(self, lam):
        self.lam = lam
        boxes = []
        for i, (size, parity) in enumerate(lam.parts, start=1):
            for t in range(size):
                boxes.append((-(size - 1) + 2 * t, i, parity, t))
        # numbering: columns left to right, inside a column top row first
        boxes.sort(key=lambda b: (b[0], -b[1]))
        self.boxes = [(idx + 1, row, col, parity, t)
                      for idx, (col, row, parity, t) in enumerate(boxes)]
        self.row_lengths = lam.sizes

    def __len__(self):
        return len(self.boxes)

    def box_by_rowpos(self):
        """(row, t) -> box number, t counted left to right from 0."""
        return {(row, t): idx for idx, row, _c, _p, t in self.boxes}

    def cols(self):
        return [col for _i, _r, col, _p, _t in self.boxes]

    def parities(self):
        return [p for _i, _r, _c, p, _t in self.boxes]

    def rows(self):
        return [r for _i, r, _c, _p, _t in self.boxes]

    def column_counts(self):
        """col -> [parity0 count, parity1 count] over occupied columns."""
        counts = {}
        for _i, _r, col, parity, _t in self.boxes:
            rc = counts.setdefault(col, [0, 0])
            rc[parity] += 1
        return dict(sorted(counts.items()))

    def c_totals(self):
        return {col: r + s for col, (r, s) in self.column_counts().items()}

    def stats(self):
        """Column statistics (r_i, s_i, c_i, k, tau, sigma) of the pyramid."""
        counts = self.column_counts()
        lam1 = self.lam.sizes[0] if self.lam.parts else 0
        k = next(kk for kk in range(1, lam1 + 2)
                 if sum(counts.get(kk, (0, 0))) == 0)
        tau = sum(1 for col, (r, s) in counts.items()
                  if abs(col) > k and r == s != 0)
        tau_all = sum(1 for col, (r, s) in counts.items() if r == s != 0)
        inner_r = sum(r for col, (r, _s) in counts.items() if abs(col) < k)
        inner_s = sum(s for col, (_r, s) in counts.items() if abs(col) < k)
        sigma = 1 if inner_r == inner_s else 0
        all_balanced = all(r == s for r, s in counts.values())
        return PyramidStats(counts, k, tau, tau_all, sigma, all_balanced)

    def ascii_art(self):
        """One character per box: the parity digit, rows printed top first."""
        if not self.boxes:
            return "(empty)"
        cols = self.cols()
        lo, hi = min(cols), max(cols)
        nrows = len(self.lam.parts)
        grid = [[" "] * (hi - lo + 1) for _ in range(nrows)]
        for _i, row, col, parity, _t in self.boxes:
            grid[nrows - row][col - lo] = str(parity)
        return "\n".join("".join(line).rstrip() for line in grid)


class PyramidStats:
    __slots__ = ("counts", "k", "tau", "tau_all", "sigma", "all_balanced")

    def __init__(self, counts, k, tau, tau_all, sigma, all_balanced):
        self.counts = counts
        self.k = k
        self.tau = tau
        self.tau_all = tau_all
        self.sigma = sigma
        self.all_balanced = all_balanced


def pyramid(lam):
    return DynkinPyramid(lam)


# ---------------------------------------------------------------------------
# gl / sl / psl

@lru_cache(maxsize=None)
def build_gl(m, n):
    return MatrixUnitAlgebra([0] * m + [1] * n)


def supertrace_functional(gl):
    row = [QQ.zero] * gl.dim
    for a in range(gl.n):
        row[gl.unit(a, a)] = -QQ.one if gl.v_parity[a] else QQ.one
    return row


def sl_subspace(gl):
    return kernel(Matrix(1, gl.dim, [supertrace_functional(gl)], QQ))


class SlAlgebra(TableAlgebra):
    """sl(m|n) on off-diagonal units plus supertraceless diagonal combinations."""

    def __init__(self, gl):
        self.gl = gl
        n = gl.n
        basis_gl = []
        names = []
        for a in range(n):
            for b in range(n):
                if a != b:
                    basis_gl.append(gl.basis_vector(gl.unit(a, b)))
                    names.append(f"E[{a},{b}]")
        # D_i = E_ii - (-1)^(p_i + p_{i+1}) E_{i+1,i+1} spans the diagonal part
        for i in range(n - 1):
            v = gl.zero_vector()
            v[gl.unit(i, i)] = QQ.one
            sgn = -QQ.one if (gl.v_parity[i] + gl.v_parity[i + 1]) % 2 == 0 else QQ.one
            v[gl.unit(i + 1, i + 1)] = sgn
            basis_gl.append(v)
            names.append(f"D[{i}]")
        self.basis_gl = basis_gl
        self._offdiag_index = {}
        k = 0
        for a in range(n):
            for b in range(n):
                if a != b:
                    self._offdiag_index[(a, b)] = k
                    k += 1
        parity = [gl.vector_parity(v) for v in basis_gl]
        m = sum(1 for p in gl.v_parity if p == 0)

        def pair_bracket(i, j):
            w = gl.bracket(basis_gl[i], basis_gl[j])
            coords = self.to_sl_coords(w)
            return {t: c for t, c in enumerate(coords) if c}

        dim = len(basis_gl)
        structure = {}
        super().__init__(dim, parity, QQ, f"sl({m}|{n - m})", structure, names)
        for i in range(dim):
            for j in range(i, dim):
                if i == j and not parity[i]:
                    continue
                val = pair_bracket(i, j)
                if val:
                    structure[(i, j)] = val

    def to_sl_coords(self, v_gl):
        """Coordinates over the sl basis; v_gl must be supertraceless."""
        gl = self.gl
        n = gl.n
        coords = [QQ.zero] * self.dim
        for (a, b), k in self._offdiag_index.items():
            coords[k] = v_gl[gl.unit(a, b)]
        base = len(self._offdiag_index)
        t_prev = QQ.zero
        for i in range(n - 1):
            d = v_gl[gl.unit(i, i)]
            if i == 0:
                t = d
            else:
                sgn = QQ.one if (gl.v_parity[i - 1] + gl.v_parity[i]) % 2 == 0 else -QQ.one
                t = d + sgn * t_prev
            coords[base + i] = t
            t_prev = t
        # the last diagonal entry is determined; verify supertracelessness
        sgn = QQ.one if (gl.v_parity[n - 2] + gl.v_parity[n - 1]) % 2 == 0 else -QQ.one
        if v_gl[gl.unit(n - 1, n - 1)] != -sgn * t_prev:
            raise ValueError("vector is not supertraceless")
        return coords

    def to_gl_coords(self, v_sl):
        gl = self.gl
        out = gl.zero_vector()
        for k, c in enumerate(v_sl):
            if c:
                row = self.basis_gl[k]
                out = [x + c * y for x, y in zip(out, row)]
        return out


@lru_cache(maxsize=None)
def build_sl(m, n):
    if m + n < 2:
        raise ValueError("sl(m|n) needs m+n >= 2")
    return SlAlgebra(build_gl(m, n))


class PslAlgebra(TableAlgebra):
    """psl(n|n) = sl(n|n)/<I>, with the projection and a section attached."""

    def __init__(self, n):
        sl = build_sl(n, n)
        gl = sl.gl
        ident = sl.to_sl_coords([QQ.one if a == b else QQ.zero
                                 for a in range(gl.n) for b in range(gl.n)])
        ideal = Subspace.span([ident], sl.dim, QQ)
        q, project, lift = quotient(sl, ideal)
        super().__init__(q.dim, q.parity, QQ, f"psl({n}|{n})", q.structure, q.basis_names)
        self.sl = sl
        self.project = project
        self.lift = lift

    def project_gl(self, v_gl):
        return self.project(self.sl.to_sl_coords(v_gl))


@lru_cache(maxsize=None)
def build_psl(n):
    if n < 2:
        raise ValueError("psl(n|n) requires n >= 2: sl(1|1)/<I> is not simple")
    return PslAlgebra(n)


# ---------------------------------------------------------------------------
# nilpotent data from a pyramid (type A families)

class NilpotentData:
    """An sl(2)-triple (e, h, f) inside a carrier algebra.

    carrier: the SuperAlgebra the coordinates live in (gl, psl, or gl(V) for
    osp); domain: the subspace of the carrier that is "the algebra g" for the
    chosen family (full space for gl and psl).
    """

    def __init__(self, family, lam, pyr, carrier, domain, e, h, f, model=None):
        self.family = family
        self.lam = lam
        self.pyramid = pyr
        self.carrier = carrier
        self.domain = domain
        self.e = e
        self.h = h
        self.f = f
        self.model = model
        two_e = [c + c for c in e]
        if carrier.bracket(h, e) != two_e:
            raise AssertionError("[h,e] != 2e")
        if carrier.bracket(e, f) != h:
            raise AssertionError("[e,f] != h")

    def __repr__(self):
        return f"NilpotentData({self.family}, {self.lam.text()})"


def _pyramid_box_to_v(pyr, m):
    """Box number -> gl(m|n) basis slot: parity-0 boxes first, in box order."""
    mapping = {}
    next_even, next_odd = 0, m
    for idx, _row, _col, parity, _t in pyr.boxes:
        if parity == 0:
            mapping[idx] = next_even
            next_even += 1
        else:
            mapping[idx] = next_odd
            next_odd += 1
    return mapping


def _typea_triple(pyr, gl, box2v):
    e = gl.zero_vector()
    h = gl.zero_vector()
    f = gl.zero_vector()
    bypos = pyr.box_by_rowpos()
    for idx, row, col, _p, t in pyr.boxes:
        a = box2v[idx]
        h[gl.unit(a, a)] = rat(-col)
        lam_i = pyr.row_lengths[row - 1]
        if t > 0:
            left = box2v[bypos[(row, t - 1)]]
            e[gl.unit(left, a)] = QQ.one
        if t < lam_i - 1:
            right = box2v[bypos[(row, t + 1)]]
            f[gl.unit(right, a)] = rat((t + 1) * (lam_i - 1 - t))
    return e, h, f


def nilpotent_from_pyramid(pyr, family="gl"):
    lam = pyr.lam
    m, n = lam.m, lam.n
    if family in ("gl", "sl"):
        gl = build_gl(m, n)
        box2v = _pyramid_box_to_v(pyr, m)
        e, h, f = _typea_triple(pyr, gl, box2v)
        domain = gl.full_space() if family == "gl" else sl_subspace(gl)
        return NilpotentData(family, lam, pyr, gl, domain, e, h, f)
    if family == "psl":
        if m != n:
            raise ValueError("psl needs a partition of (n|n)")
        psl = build_psl(n)
        gl = psl.sl.gl
        box2v = _pyramid_box_to_v(pyr, m)
        e, h, f = _typea_triple(pyr, gl, box2v)
        ep, hp, fp = psl.project_gl(e), psl.project_gl(h), psl.project_gl(f)
        data = NilpotentData(family, lam, pyr, psl, psl.full_space(), ep, hp, fp)
        data.gl_e, data.gl_h = e, h
        return data
    if family == "osp":
        model = osp_model(lam)
        return NilpotentData(family, lam, pyr, model.gl, model.osp,
                             model.e, model.h, model.f, model=model)
    raise ValueError(f"unknown family {family!r}")


def e_power_gl(data, k):
    """Coordinates of the matrix power e^k in the gl carrier of data."""
    if data.family == "psl":
        gl = data.carrier.sl.gl
        e = data.gl_e
    else:
        gl = data.carrier
        e = data.e
    mat = gl.vector_to_matrix(e)
    acc = [[QQ.one if i == j else QQ.zero for j in range(gl.n)] for i in range(gl.n)]
    from .linalg import mat_mul
    for _ in range(k):
        acc = mat_mul(acc, mat, QQ)
    return gl.matrix_to_vector(acc)


# ---------------------------------------------------------------------------
# the xi basis of centralizers (type A and the osp model share the layout)

class XiElement:
    """xi_i^{j,k}: sends e^a v_i to e^{a+k} v_j; ad-h grade lam_i - lam_j + 2k."""

    __slots__ = ("i", "j", "k", "grade", "vector")

    def __init__(self, i, j, k, grade, vector):
        self.i = i
        self.j = j
        self.k = k
        self.grade = grade
        self.vector = vector

    def __repr__(self):
        return f"xi[{self.i}]^[{self.j},{self.k}]"


def _xi_vector_pyramid(pyr, gl, box2v, i, j, k):
    """xi_i^{j,k} in gl coordinates for a type-A pyramid (i, j are 1-based)."""
    sizes = pyr.row_lengths
    bypos = pyr.box_by_rowpos()
    out = gl.zero_vector()
    li, lj = sizes[i - 1], sizes[j - 1]
    for a in range(li):
        if a + k > lj - 1:
            break
        src = box2v[bypos[(i, li - 1 - a)]]
        dst = box2v[bypos[(j, lj - 1 - (a + k))]]
        out[gl.unit(dst, src)] = QQ.one
    return out


def xi_basis(lam):
    """All xi_i^{j,k} spanning gl(m|n)^e, with max(lam_j - lam_i, 0) <= k < lam_j."""
    pyr = pyramid(lam)
    gl = build_gl(lam.m, lam.n)
    box2v = _pyramid_box_to_v(pyr, lam.m)
    sizes = lam.sizes
    out = []
    for i in range(1, len(sizes) + 1):
        for j in range(1, len(sizes) + 1):
            for k in range(max(sizes[j - 1] - sizes[i - 1], 0), sizes[j - 1]):
                vec = _xi_vector_pyramid(pyr, gl, box2v, i, j, k)
                out.append(XiElement(i, j, k, sizes[i - 1] - sizes[j - 1] + 2 * k, vec))
    return out


def dim_formulas(lam):
    """Centralizer dimension formulas evaluated on the partition."""
    p = lam.even_parts()
    q = lam.odd_parts()
    m, n = lam.m, lam.n
    gl0 = (m + 2 * sum(i * pi for i, pi in enumerate(p))) \
        + (n + 2 * sum(j * qj for j, qj in enumerate(q)))
    gl1 = 2 * sum(min(pi, qj) for pi in p for qj in q)
    out = {"dim_gl_e": gl0 + gl1, "dim_gl0_e": gl0, "dim_gl1_e": gl1,
           "dim_sl_e": gl0 + gl1 - 1}
    cts = pyramid(lam).c_totals()
    cols = sorted(cts)
    sum_sq = sum(c * c for c in cts.values())
    sum_adj = sum(cts[c] * cts.get(c + 1, 0) for c in cols)
    out["dim_gl_e_columns"] = sum_sq + sum_adj
    if m == n:
        out["dim_psl_e"] = sum_sq + sum_adj - 2
    return out


# ---------------------------------------------------------------------------
# osp(m|2n)

def osp_involution(lam):
    """Pairing i -> i* of equal parts (0-based); self-paired exactly for
    odd 0-parity and even 1-parity sizes."""
    parts = lam.parts
    istar = list(range(len(parts)))
    buckets = {}
    for idx, (size, parity) in enumerate(parts):
        self_paired = (parity == 0 and size % 2 == 1) or (parity == 1 and size % 2 == 0)
        if not self_paired:
            buckets.setdefault((size, parity), []).append(idx)
    for (size, parity), idxs in buckets.items():
        if len(idxs) % 2 != 0:
            raise ValueError(f"partition {lam} is not osp-valid at part {size}")
        for t in range(0, len(idxs), 2):
            a, b = idxs[t], idxs[t + 1]
            istar[a], istar[b] = b, a
    return istar


def osp_theta(lam, istar=None):
    """Signs theta_i making the model form supersymmetric: -1 on the second
    member of every non-self-paired block, +1 elsewhere."""
    istar = istar or osp_involution(lam)
    theta = [1] * len(istar)
    for i, j in enumerate(istar):
        if j > i:
            theta[j] = -1
    return theta


def epsilon(lam, i, j, k, istar=None, theta=None):
    """epsilon_{i,j,k} = (-1)^(lam_j - k - x.i) theta_j theta_i (0-based i, j)."""
    sizes = lam.sizes
    pars = lam.parities
    theta = theta or osp_theta(lam, istar)
    if not (0 <= k <= min(sizes[i], sizes[j]) - 1):
        raise ValueError("k out of range for epsilon")
    x_par = (pars[i] + pars[j]) % 2
    expo = sizes[j] - k - x_par * pars[i]
    return (1 if expo % 2 == 0 else -1) * theta[j] * theta[i]


class OspModel:
    """osp(m|2n) adapted to a partition: gl carrier, form, triple, xi data."""

    def __init__(self, lam):
        if not lam.osp_valid():
            raise ValueError(f"{lam} is not an osp partition")
        self.lam = lam
        self.istar = osp_involution(lam)
        self.theta = osp_theta(lam, self.istar)
        sizes = lam.sizes
        pars = lam.parities
        self.slot = {}
        v_parity = []
        for i, size in enumerate(sizes):
            for a in range(size):
                self.slot[(i, a)] = len(v_parity)
                v_parity.append(pars[i])
        self.gl = MatrixUnitAlgebra(v_parity, QQ, f"gl({lam.m}|{lam.n})")
        N = len(v_parity)
        gram = [[QQ.zero] * N for _ in range(N)]
        for i, size in enumerate(sizes):
            j = self.istar[i]
            for a in range(size):
                b = size - 1 - a
                gram[self.slot[(i, a)]][self.slot[(j, b)]] = rat(
                    self.theta[i] if a % 2 == 0 else -self.theta[i])
        self.gram = gram
        self.osp = self._osp_subspace()
        gl = self.gl
        e = gl.zero_vector()
        h = gl.zero_vector()
        f = gl.zero_vector()
        for i, size in enumerate(sizes):
            for a in range(size):
                u = self.slot[(i, a)]
                h[gl.unit(u, u)] = rat(-size + 1 + 2 * a)
                if a + 1 < size:
                    e[gl.unit(self.slot[(i, a + 1)], u)] = QQ.one
                if a > 0:
                    f[gl.unit(self.slot[(i, a - 1)], u)] = rat(a * (size - a))
        self.e, self.h, self.f = e, h, f
        for v, what in ((e, "e"), (h, "h"), (f, "f")):
            if not self.osp.member(v):
                raise AssertionError(f"{what} is not form-compatible")

    def _osp_subspace(self):
        gl = self.gl
        N = gl.n
        gram = self.gram
        pair_of = {}
        for u in range(N):
            for w in range(N):
                if gram[u][w]:
                    pair_of[u] = w
        spans = []
        for sector in (0, 1):
            units = [(v, u) for v in range(N) for u in range(N)
                     if (gl.v_parity[v] + gl.v_parity[u]) % 2 == sector]
            index = {vu: t for t, vu in enumerate(units)}
            rows = []
            for u in range(N):
                us = pair_of[u]
                sgn = -QQ.one if (sector and gl.v_parity[u]) else QQ.one
                for w in range(N):
                    ws = pair_of[w]
                    row = [QQ.zero] * len(units)
                    hit = False
                    t = index.get((ws, u))
                    if t is not None and gram[ws][w]:
                        row[t] = row[t] + gram[ws][w]
                        hit = True
                    t = index.get((us, w))
                    if t is not None and gram[u][us]:
                        row[t] = row[t] + sgn * gram[u][us]
                        hit = True
                    if hit and any(row):
                        rows.append(row)
            ker = kernel(Matrix(len(rows), len(units), rows, QQ))
            for kv in ker.rows:
                vec = gl.zero_vector()
                for t, c in enumerate(kv):
                    if c:
                        v, u = units[t]
                        vec[gl.unit(v, u)] = c
                spans.append(vec)
        return Subspace.span(spans, gl.dim, QQ)

    def xi_vector(self, i, j, c):
        """xi_i^{j,c} in gl coordinates (0-based parts)."""
        gl = self.gl
        sizes = self.lam.sizes
        out = gl.zero_vector()
        for a in range(sizes[i]):
            if a + c > sizes[j] - 1:
                break
            out[gl.unit(self.slot[(j, a + c)], self.slot[(i, a)])] = QQ.one
        return out

    def xi_pair_vector(self, i, j, k):
        """xi_i^{j,lam_j-1-k} + eps_{i,j,k} xi_{j*}^{i*,lam_i-1-k}."""
        sizes = self.lam.sizes
        eps = epsilon(self.lam, i, j, k, self.istar, self.theta)
        v1 = self.xi_vector(i, j, sizes[j] - 1 - k)
        v2 = self.xi_vector(self.istar[j], self.istar[i], sizes[i] - 1 - k)
        s = QQ.of_int(eps)
        return [x + s * y for x, y in zip(v1, v2)]

    def decomposition(self):
        """Spanning-set decomposition g^e = frakN (+) N1 (+) N2, with the
        refinements frakN = frakN0 (+) frakN1 and N2 = N2- (+) N2+."""
        lam = self.lam
        sizes = lam.sizes
        istar = self.istar
        r = len(sizes)
        gl = self.gl
        H, N1, N2, N2m = [], [], [], []
        frakN0, frakN1 = [], []
        for i in range(r):
            li = sizes[i]
            if istar[i] == i:
                for k in range(li):
                    if (li - k) % 2 == 0:
                        v = self.xi_vector(i, i, li - 1 - k)
                        H.append(v)
                        frakN0.append(v)
            elif istar[i] > i:
                for k in range(li):
                    v = self.xi_pair_vector(i, i, k)
                    H.append(v)
                    if (li - k) % 2 == 0:
                        frakN0.append(v)
                    else:
                        frakN1.append(v)
        for i in range(r):
            if istar[i] != i:
                li = sizes[i]
                for k in range(li):
                    if (li - k) % 2 == 1:
                        N1.append(self.xi_vector(i, istar[i], li - 1 - k))
        for i in range(r):
            for j in range(i + 1, r):
                if j == istar[i]:
                    continue
                for k in range(min(sizes[i], sizes[j])):
                    v = self.xi_pair_vector(i, j, k)
                    N2.append(v)
                    if (j == i + 1 and istar[i] == i and istar[j] == j
                            and k == sizes[j] - 1
                            and (i == 0 or sizes[i - 1] > sizes[i])
                            and (j == r - 1 or sizes[j] > sizes[j + 1])):
                        N2m.append(v)
        dim = gl.dim
        sp = lambda vecs: Subspace.span(vecs, dim, QQ)
        n2m_sub = sp(N2m)
        n2p = [v for v in N2 if not n2m_sub.member(v)]
        return {
            "frakN": sp(H), "frakN0": sp(frakN0), "frakN1": sp(frakN1),
            "N1": sp(N1), "N2": sp(N2), "N2minus": n2m_sub, "N2plus": sp(n2p),
        }


@lru_cache(maxsize=None)
def osp_model_cached(lam_parts):
    return OspModel(SuperPartition(lam_parts))


def osp_model(lam):
    return osp_model_cached(lam.parts)


def osp_decomposition(lam):
    """The spanning-set subspaces frakN0/frakN1/N1/N2/N2-/N2+ for a partition."""
    return osp_model(lam).decomposition()


def build_osp(m, n2):
    """osp(m|2n2) as an explicit TableAlgebra (trivial-partition form model)."""
    lam = SuperPartition([(1, 0)] * m + [(1, 1)] * (2 * n2))
    model = osp_model(lam)
    gl = model.gl
    basis = list(model.osp.rows)
    parity = [gl.vector_parity(v) for v in basis]
    if any(p is None for p in parity):
        raise AssertionError("osp basis is not parity-homogeneous")

    def pair_bracket(i, j):
        w = gl.bracket(list(basis[i]), list(basis[j]))
        coords = model.osp.coords(w)
        if coords is None:
            raise AssertionError("osp is not bracket-closed")
        return {t: c for t, c in enumerate(coords) if c}

    alg = TableAlgebra.from_bracket(len(basis), parity, QQ,
                                    f"osp({m}|{2 * n2})", pair_bracket)
    alg.model = model
    return alg
