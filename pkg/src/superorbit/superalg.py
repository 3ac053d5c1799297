"""Lie superalgebra engine: brackets, validity checks, centralizers, gradings.

Algebras are presented by a parity-tagged basis and structure constants.  Two
realizations share one interface: TableAlgebra stores the sparse structure
tensor explicitly (quotients, exceptional algebras), MatrixUnitAlgebra is the
full gl(V) on a parity-tagged basis of V with closed-form unit brackets (the
fast carrier for the partition sweeps, where sl and osp live as subspaces).
"""

from __future__ import annotations

from .field import QQ, QALPHA
from .linalg import Matrix, SpanBuilder, Subspace, kernel


class SuperAlgebra:
    """Base class; subclasses provide the basis-level bracket."""

    def __init__(self, dim, parity, field, name, basis_names=None):
        self.dim = dim
        self.parity = tuple(parity)
        self.field = field
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"b{i}" for i in range(dim))

    def bracket_basis(self, i, j):
        """[b_i, b_j] as a sparse {index: scalar} dict."""
        raise NotImplementedError

    def bracket(self, x, y):
        """Bilinear extension of the structure constants, dense in and out."""
        acc = self._bracket_dict(x, y)
        out = [self.field.zero] * self.dim
        for k, c in acc.items():
            out[k] = c
        return out

    def _bracket_dict(self, x, y):
        acc = {}
        xi = [(i, c) for i, c in enumerate(x) if c]
        yj = [(j, c) for j, c in enumerate(y) if c]
        for i, ci in xi:
            for j, cj in yj:
                term = self.bracket_basis(i, j)
                if not term:
                    continue
                f = ci * cj
                for k, c in term.items():
                    v = acc.get(k)
                    acc[k] = f * c if v is None else v + f * c
        return {k: c for k, c in acc.items() if c}

    def ad_matrix(self, x):
        """Matrix of ad x in the basis; column j holds [x, b_j]."""
        z = self.field.zero
        cols = []
        xi = [(i, c) for i, c in enumerate(x) if c]
        for j in range(self.dim):
            acc = {}
            for i, ci in xi:
                term = self.bracket_basis(i, j)
                for k, c in term.items():
                    v = acc.get(k)
                    acc[k] = ci * c if v is None else v + ci * c
            cols.append(acc)
        data = [[cols[j].get(i, z) for j in range(self.dim)] for i in range(self.dim)]
        return Matrix(self.dim, self.dim, data, self.field)

    def basis_vector(self, i):
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def full_space(self):
        return Subspace.full(self.dim, self.field)

    def vector_parity(self, v):
        """0/1 for homogeneous vectors, None for mixed or zero."""
        ps = {self.parity[i] for i, c in enumerate(v) if c}
        return ps.pop() if len(ps) == 1 else None

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, dim {self.dim} over {self.field.name})"


class TableAlgebra(SuperAlgebra):
    """Superalgebra with an explicit sparse structure tensor.

    Brackets are stored for i < j, plus (i, i) for odd i; the remaining
    entries follow from super-skew-symmetry.
    """

    def __init__(self, dim, parity, field, name, structure, basis_names=None):
        super().__init__(dim, parity, field, name, basis_names)
        self.structure = structure
        self._rows = None

    def _row_map(self):
        # partner lists: _rows[i] = [(j, [e,b_j]-dict), ...] over nonzero pairs
        if self._rows is None:
            rows = [[] for _ in range(self.dim)]
            for (a, b), val in self.structure.items():
                rows[a].append((b, val))
                if a != b:
                    if self.parity[a] and self.parity[b]:
                        rows[b].append((a, val))
                    else:
                        rows[b].append((a, {k: -c for k, c in val.items()}))
            self._rows = rows
        return self._rows

    def _bracket_dict(self, x, y):
        rows = self._row_map()
        acc = {}
        for i, ci in enumerate(x):
            if not ci:
                continue
            for j, term in rows[i]:
                cj = y[j]
                if not cj:
                    continue
                f = ci * cj
                for k, c in term.items():
                    v = acc.get(k)
                    acc[k] = f * c if v is None else v + f * c
        return {k: c for k, c in acc.items() if c}

    @classmethod
    def from_bracket(cls, dim, parity, field, name, pair_bracket, basis_names=None):
        """Build the table from a callable (i, j) -> sparse dict, i <= j."""
        structure = {}
        for i in range(dim):
            for j in range(i, dim):
                if i == j and not (parity[i] and parity[j]):
                    continue
                val = pair_bracket(i, j)
                val = {k: c for k, c in val.items() if c}
                if val:
                    structure[(i, j)] = val
        return cls(dim, parity, field, name, structure, basis_names)

    def bracket_basis(self, i, j):
        if i < j or (i == j and self.parity[i]):
            return self.structure.get((i, j), {})
        if i == j:
            return {}
        val = self.structure.get((j, i))
        if not val:
            return {}
        if self.parity[i] and self.parity[j]:
            return val
        return {k: -c for k, c in val.items()}

    def to_json_dict(self):
        f = self.field
        entries = []
        for (i, j) in sorted(self.structure):
            val = self.structure[(i, j)]
            entries.append([i, j, [[k, f.render(val[k])] for k in sorted(val)]])
        return {
            "name": self.name,
            "field": f.name,
            "parity": list(self.parity),
            "basis": list(self.basis_names),
            "structure": entries,
        }

    @classmethod
    def from_json_dict(cls, d):
        f = QQ if d["field"] == "Q" else QALPHA
        structure = {}
        for i, j, terms in d["structure"]:
            structure[(i, j)] = {k: f.parse(c) for k, c in terms}
        return cls(len(d["parity"]), d["parity"], f, d["name"], structure, d["basis"])


class MatrixUnitAlgebra(SuperAlgebra):
    """gl(V) for a parity-tagged basis of V; basis unit (a,b) has index a*N+b."""

    def __init__(self, v_parity, field=QQ, name=None):
        n = len(v_parity)
        self.n = n
        self.v_parity = tuple(v_parity)
        parity = [(v_parity[a] + v_parity[b]) % 2 for a in range(n) for b in range(n)]
        m = sum(1 for p in v_parity if p == 0)
        name = name or f"gl({m}|{n - m})"
        names = [f"E[{a},{b}]" for a in range(n) for b in range(n)]
        super().__init__(n * n, parity, field, name, names)

    def unit(self, a, b):
        return a * self.n + b

    def bracket_basis(self, i, j):
        n = self.n
        a, b = divmod(i, n)
        c, d = divmod(j, n)
        out = {}
        if b == c:
            out[a * n + d] = self.field.one
        if d == a:
            k = c * n + b
            s = -self.field.one if not (self.parity[i] and self.parity[j]) else self.field.one
            out[k] = out.get(k, self.field.zero) + s
        return {k: v for k, v in out.items() if v}

    def _bracket_dict(self, x, y):
        # supercommutator via parity-split sparse matrix products
        n = self.n
        vp = self.v_parity
        def split(v):
            rows = ({}, {})
            for idx, c in enumerate(v):
                if c:
                    a, b = divmod(idx, n)
                    rows[(vp[a] + vp[b]) % 2].setdefault(a, []).append((b, c))
            return rows
        xs = split(x)
        ys = split(y)
        acc = {}
        def mul_into(u, w, sign):
            # sign * (u @ w) accumulated into acc
            wrows = w
            for a, items in u.items():
                for b, c in items:
                    wb = wrows.get(b)
                    if not wb:
                        continue
                    for d, c2 in wb:
                        k = a * n + d
                        v = acc.get(k)
                        t = c * c2 if sign > 0 else -(c * c2)
                        acc[k] = t if v is None else v + t
        for p in (0, 1):
            for q in (0, 1):
                xp, yq = xs[p], ys[q]
                if not xp or not yq:
                    continue
                mul_into(xp, yq, 1)
                mul_into(yq, xp, -1 if not (p and q) else 1)
        return {k: c for k, c in acc.items() if c}

    def matrix_to_vector(self, mat):
        """Flatten an n x n list-of-lists matrix into algebra coordinates."""
        f = self.field
        return [f.of_int(c) if isinstance(c, int) else c for row in mat for c in row]

    def vector_to_matrix(self, v):
        n = self.n
        return [list(v[a * n:(a + 1) * n]) for a in range(n)]

    def supertrace(self, v):
        n = self.n
        out = self.field.zero
        for a in range(n):
            c = v[a * n + a]
            if c:
                out = out - c if self.v_parity[a] else out + c
        return out


def check_super_jacobi(alg, indices=None):
    """Scan basis triples for graded-Jacobi violations; empty list if valid."""
    rng = list(indices) if indices is not None else list(range(alg.dim))
    par = alg.parity
    bad = []
    for ii, i in enumerate(rng):
        for jj in range(ii, len(rng)):
            j = rng[jj]
            for kk in range(jj, len(rng)):
                k = rng[kk]
                acc = {}
                for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = alg.bracket_basis(y, z)
                    if not inner:
                        continue
                    sgn = -1 if (par[x] and par[z]) else 1
                    for t, c in inner.items():
                        outer = alg.bracket_basis(x, t)
                        for u, d in outer.items():
                            v = acc.get(u, alg.field.zero)
                            acc[u] = v + c * d if sgn > 0 else v - c * d
                if any(acc.values()):
                    bad.append((i, j, k))
    return bad


def centralizer(alg, e):
    """{x : [e, x] = 0} as a subspace of the algebra."""
    return kernel(alg.ad_matrix(e))


def centralizer_in(alg, e, sub):
    return centralizer(alg, e).intersect(sub)


def derived_subspace(alg, sub, within=None):
    """Span of all pairwise brackets of a basis of sub.

    `within` is an optional subspace known to contain the result (e.g. sub
    itself when sub is bracket-closed); it only enables an early exit.
    """
    cap = within.dim if within is not None else alg.dim
    sb = SpanBuilder(alg.dim, alg.field)
    rows = [list(r) for r in sub.rows]
    for a in range(len(rows)):
        for b in range(a, len(rows)):
            sb.insert(alg.bracket(rows[a], rows[b]))
            if sb.dim >= cap:
                return sb.subspace()
    return sb.subspace()


def generated_subalgebra(alg, sub):
    """Least bracket-closed subspace containing sub, by fixpoint iteration."""
    sb = SpanBuilder(alg.dim, alg.field)
    basis = []
    fresh = []
    for r in sub.rows:
        if sb.insert(r):
            basis.append(list(r))
            fresh.append(list(r))
    while fresh:
        new = []
        for u in fresh:
            for v in basis:
                w = alg.bracket(u, v)
                if sb.insert(w):
                    new.append(w)
            w = alg.bracket(u, u)
            if sb.insert(w):
                new.append(w)
        basis.extend(new)
        fresh = new
    return sb.subspace()


def is_bracket_closed(alg, sub):
    for a in range(sub.dim):
        for b in range(a, sub.dim):
            if not sub.member(alg.bracket(sub.rows[a], sub.rows[b])):
                return False
    return True


def center_of(alg, sub):
    """{x in sub : [x, s] = 0 for all s in sub}; sub must be bracket-closed."""
    if not is_bracket_closed(alg, sub):
        raise ValueError("center_of requires a bracket-closed subspace")
    cur = sub
    for s in sub.rows:
        if cur.dim == 0:
            break
        cols = [alg.bracket(c, s) for c in cur.rows]
        data = [[cols[j][i] for j in range(len(cols))] for i in range(alg.dim)]
        ker = kernel(Matrix(alg.dim, len(cols), data, alg.field))
        vecs = []
        for t in ker.rows:
            v = [alg.field.zero] * alg.dim
            for i, c in enumerate(t):
                if c:
                    row = cur.rows[i]
                    v = [x + c * y for x, y in zip(v, row)]
            vecs.append(v)
        cur = Subspace.span(vecs, alg.dim, alg.field)
    return cur


class GradedDecomposition:
    """ad-h eigenspace decomposition of a subspace, integer grades only."""

    def __init__(self, pieces, ambient, field):
        self.pieces = dict(sorted(pieces.items()))
        self.ambient = ambient
        self.field = field

    def piece(self, j):
        return self.pieces.get(j, Subspace.zero(self.ambient, self.field))

    def grades(self):
        return sorted(self.pieces)

    def dims(self):
        return {j: s.dim for j, s in self.pieces.items()}

    def part_at_least(self, j0):
        vecs = []
        for j, s in self.pieces.items():
            if j >= j0:
                vecs.extend(s.rows)
        return Subspace.span(vecs, self.ambient, self.field)

    def total_dim(self):
        return sum(s.dim for s in self.pieces.values())


def _abs_int_bound(c):
    # entries of ad-h matrices are integers (possibly embedded in Q(a))
    if hasattr(c, "as_rational"):
        c = c.as_rational()
    return abs(c)


def grade_decompose(alg, sub, h):
    """Split sub into ad-h eigenspaces; errors if sub is not ad-h stable."""
    f = alg.field
    d = sub.dim
    if d == 0:
        return GradedDecomposition({}, alg.dim, f)
    t_rows = []
    for i, s in enumerate(sub.rows):
        img = alg.bracket(h, s)
        coords = sub.coords(img)
        if coords is None:
            raise ValueError(f"subspace is not ad-h stable; witness basis row {i}")
        t_rows.append(coords)
    # eigen problem for the transposed action on coefficient vectors
    m = [[t_rows[b][a] for b in range(d)] for a in range(d)]
    off_diag = any(m[a][b] for a in range(d) for b in range(d) if a != b)
    if not off_diag:
        candidates = sorted({_as_int(m[a][a], f) for a in range(d)})
    else:
        bound = max(sum(_abs_int_bound(c) for c in row) for row in m)
        bound = int(bound)
        candidates = range(-bound, bound + 1)
    pieces = {}
    found = 0
    for j in candidates:
        jj = f.of_int(j)
        mj = [[(m[a][b] - jj) if a == b else m[a][b] for b in range(d)] for a in range(d)]
        ker = kernel(Matrix(d, d, mj, f))
        if ker.dim == 0:
            continue
        vecs = []
        for t in ker.rows:
            v = [f.zero] * alg.dim
            for i, c in enumerate(t):
                if c:
                    row = sub.rows[i]
                    v = [x + c * y for x, y in zip(v, row)]
            vecs.append(v)
        pieces[j] = Subspace.span(vecs, alg.dim, f)
        found += pieces[j].dim
        if found == d:
            break
    if found != d:
        raise ValueError("ad h does not act semisimply with integer eigenvalues")
    return GradedDecomposition(pieces, alg.dim, f)


def _as_int(c, field):
    if hasattr(c, "as_rational"):
        c = c.as_rational()
    n = int(c)
    if c != n:
        raise ValueError(f"non-integer ad-h eigenvalue {c}")
    return n


def quotient(alg, ideal):
    """Quotient by a homogeneous super-ideal; returns (algebra, project, lift)."""
    f = alg.field
    for r in ideal.rows:
        if alg.vector_parity(r) is None and any(r):
            raise ValueError("ideal basis vector is not parity-homogeneous")
    for i in range(alg.dim):
        bi = alg.basis_vector(i)
        for w in ideal.rows:
            img = alg.bracket(bi, w)
            if not ideal.member(img):
                raise ValueError(f"not an ideal: [b{i}, ideal] escapes; witness b{i}")
    pivset = set(ideal.pivots)
    keep = [c for c in range(alg.dim) if c not in pivset]
    pos = {c: k for k, c in enumerate(keep)}

    def project(v):
        res = ideal.reduce(v)
        return [res[c] for c in keep]

    def lift(w):
        v = [f.zero] * alg.dim
        for k, c in enumerate(keep):
            v[c] = w[k]
        return v

    new_parity = [alg.parity[c] for c in keep]
    names = [alg.basis_names[c] for c in keep]

    def pair_bracket(a, b):
        img = alg.bracket(lift_unit(a), lift_unit(b))
        red = ideal.reduce(img)
        return {pos[c]: red[c] for c in keep if red[c]}

    def lift_unit(k):
        v = [f.zero] * alg.dim
        v[keep[k]] = f.one
        return v

    q = TableAlgebra.from_bracket(len(keep), new_parity, f,
                                  f"{alg.name}/I", pair_bracket, names)
    return q, project, lift
