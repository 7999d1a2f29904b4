"""Finite-dimensional algebras over Q(w) via sparse structure tensors.

Vectors are sparse dicts {index: Scalar} with no explicit zeros.  Linear
maps are stored column-major and sparse, since most maps here (group
generators, embeddings) have few nonzero entries per column.  All linear
algebra is exact; the row-reduction kernel keeps rows primitive (integer
content divided out) to control coefficient growth over Q(w).
"""

from __future__ import annotations

from gmpy2 import gcd, lcm, mpq, mpz

from .scalar import S0, S1, Scalar, sc

# ---------------------------------------------------------------------------
# sparse vectors
# ---------------------------------------------------------------------------


def basis_vec(i: int) -> dict:
    return {i: S1}


def vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, s in v.items():
        t = out.get(k)
        if t is None:
            out[k] = s
        else:
            t = t + s
            if t.is_zero():
                del out[k]
            else:
                out[k] = t
    return out


def vec_sub(u: dict, v: dict) -> dict:
    return vec_add(u, vec_scale(v, -1))


def vec_scale(v: dict, c) -> dict:
    c = sc(c)
    if c.is_zero():
        return {}
    return {k: s * c for k, s in v.items()}


def vec_addmul(acc: dict, v: dict, c: Scalar) -> None:
    """In place acc += c*v, dropping zeros."""
    if c.is_zero():
        return
    for k, s in v.items():
        t = acc.get(k)
        t = s * c if t is None else t + s * c
        if t.is_zero():
            acc.pop(k, None)
        else:
            acc[k] = t


def vec_eq(u: dict, v: dict) -> bool:
    return u == v


def vec_dense(v: dict, dim: int) -> list:
    out = [S0] * dim
    for k, s in v.items():
        out[k] = s
    return out


def vec_from_dense(xs) -> dict:
    return {i: sc(x) for i, x in enumerate(xs) if sc(x)}


def _content(v: dict):
    """Rational c such that v/c has coprime integer components."""
    den = mpz(1)
    num = mpz(0)
    for s in v.values():
        den = lcm(den, s.a.denominator)
        den = lcm(den, s.b.denominator)
    for s in v.values():
        num = gcd(num, s.a.numerator * (den // s.a.denominator))
        num = gcd(num, s.b.numerator * (den // s.b.denominator))
    return mpq(num, den) if num else mpq(1)


def vec_primitive(v: dict) -> dict:
    """Scale to coprime integer components with the first entry positive."""
    if not v:
        return {}
    c = _content(v)
    lead = v[min(v)]
    sign = lead.a if lead.a else lead.b
    if sign < 0:
        c = -c
    return {k: s * Scalar(1 / c) for k, s in v.items()}


# ---------------------------------------------------------------------------
# sparse linear maps (column-major)
# ---------------------------------------------------------------------------


class LinMap:
    """Linear map on a dim-dimensional space; column j = image of e_j."""

    __slots__ = ("dim", "cols")

    def __init__(self, dim: int, cols=None):
        self.dim = dim
        self.cols = [dict() for _ in range(dim)] if cols is None else cols

    @staticmethod
    def identity(dim: int) -> "LinMap":
        return LinMap(dim, [{j: S1} for j in range(dim)])

    @staticmethod
    def from_entries(dim: int, entries) -> "LinMap":
        """entries: iterable of (row, col, scalar-like)."""
        m = LinMap(dim)
        for r, c, s in entries:
            s = sc(s)
            if s:
                m.cols[c][r] = s
        return m

    @staticmethod
    def from_rows(rows) -> "LinMap":
        dim = len(rows)
        m = LinMap(dim)
        for r, row in enumerate(rows):
            for c, s in enumerate(row):
                s = sc(s)
                if s:
                    m.cols[c][r] = s
        return m

    def entry(self, r: int, c: int) -> Scalar:
        return self.cols[c].get(r, S0)

    def apply(self, v: dict) -> dict:
        out: dict = {}
        for j, x in v.items():
            vec_addmul(out, self.cols[j], x)
        return out

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in compose")
        return LinMap(self.dim, [self.apply(c) for c in other.cols])

    def __mul__(self, other):
        if isinstance(other, LinMap):
            return self.compose(other)
        return self.scale(other)

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.dim, [vec_add(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.dim, [vec_sub(a, b) for a, b in zip(self.cols, other.cols)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "LinMap":
        return LinMap(self.dim, [vec_scale(col, c) for col in self.cols])

    def commutator(self, other: "LinMap") -> "LinMap":
        return self.compose(other) - other.compose(self)

    def trace(self) -> Scalar:
        t = S0
        for j, col in enumerate(self.cols):
            s = col.get(j)
            if s is not None:
                t = t + s
        return t

    def conjugated(self, invol: "LinMap") -> "LinMap":
        """invol o self o invol (the bar of a map for an involution)."""
        return invol.compose(self).compose(invol)

    def flatten(self) -> dict:
        """Sparse vector over indices r*dim + c, for operator-span work."""
        out = {}
        d = self.dim
        for c, col in enumerate(self.cols):
            for r, s in col.items():
                out[r * d + c] = s
        return out

    @staticmethod
    def unflatten(flat: dict, dim: int) -> "LinMap":
        m = LinMap(dim)
        for idx, s in flat.items():
            r, c = divmod(idx, dim)
            m.cols[c][r] = s
        return m

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    def __repr__(self):
        nz = sum(len(c) for c in self.cols)
        return f"LinMap(dim={self.dim}, nnz={nz})"


# ---------------------------------------------------------------------------
# exact row reduction with expression tracking
# ---------------------------------------------------------------------------


class Echelon:
    """Incremental reduced row-echelon span of sparse vectors.

    Tracks, for every echelon row, its expression in terms of the
    independent vectors that were inserted (the retained basis), so that
    coordinates of any vector in that basis can be recovered exactly.
    """

    def __init__(self):
        self.rows: dict = {}          # pivot col -> (vec, expr)
        self.members: list = []       # retained original vectors
        self._n_inserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict, want_expr: bool):
        out = dict(v)
        expr: dict = {}
        residual: dict = {}
        while out:
            c = min(out)
            x = out.pop(c)
            if x.is_zero():
                continue
            hit = self.rows.get(c)
            if hit is None:
                residual[c] = x
                continue
            rvec, rexpr = hit
            # pivot entries are 1, so the elimination factor is x itself
            for k, s in rvec.items():
                if k == c:
                    continue
                t = out.get(k, S0) - s * x
                if t.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = t
            if want_expr:
                for m, s in rexpr.items():
                    t = expr.get(m, S0) + s * x
                    if t.is_zero():
                        expr.pop(m, None)
                    else:
                        expr[m] = t
        return residual, expr

    def residual(self, v: dict) -> dict:
        return self._reduce(v, False)[0]

    def contains(self, v: dict) -> bool:
        return not self.residual(v)

    def coords(self, v: dict):
        """Coordinates of v in the retained basis, or None if outside."""
        res, expr = self._reduce(v, True)
        if res:
            return None
        return expr

    def add(self, v: dict) -> bool:
        """Insert v; returns True when v enlarged the span."""
        res, expr = self._reduce(v, True)
        if not res:
            return False
        member_idx = len(self.members)
        self.members.append(v)
        pivot = min(res)
        inv = res[pivot].inv()
        row = {k: s * inv for k, s in res.items()}
        rexpr = {m: -s * inv for m, s in expr.items()}
        rexpr[member_idx] = Scalar(inv.a, inv.b)
        # back-substitute into existing rows to keep them fully reduced
        for p, (rvec, re) in list(self.rows.items()):
            x = rvec.get(pivot)
            if x is None:
                continue
            for k, s in row.items():
                t = rvec.get(k, S0) - s * x
                if t.is_zero():
                    rvec.pop(k, None)
                else:
                    rvec[k] = t
            for m, s in rexpr.items():
                t = re.get(m, S0) - s * x
                if t.is_zero():
                    re.pop(m, None)
                else:
                    re[m] = t
        self.rows[pivot] = (row, rexpr)
        return True

    def basis(self) -> list:
        return list(self.members)


def span_basis(vectors) -> list:
    """Independent sublist of vectors, in first-seen order."""
    ech = Echelon()
    return [v for v in vectors if ech.add(dict(v))]


def operator_span(maps) -> list:
    """Independent sublist of LinMaps under the flattened-vector span."""
    ech = Echelon()
    return [m for m in maps if ech.add(m.flatten())]


def nullspace(rows, ncols: int):
    """Solution-space basis of the homogeneous system rows . x = 0.

    rows: iterable of sparse coefficient dicts {col: Scalar}.  Returns
    (basis, rank) where basis vectors are primitive and ordered by their
    free column.
    """
    ech = Echelon()
    for r in rows:
        r = {c: sc(x) for c, x in r.items() if sc(x)}
        if r:
            res = ech.residual(r)
            if res:
                ech.add(vec_primitive(res))
    pivots = set(ech.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: S1}
        for p, (rvec, _) in ech.rows.items():
            x = rvec.get(f)
            if x is not None:
                v[p] = -x
        basis.append(vec_primitive(v))
    return basis, ech.rank


# ---------------------------------------------------------------------------
# structure-tensor algebras
# ---------------------------------------------------------------------------


class AlgebraSpec:
    """Algebra given by sparse structure constants e_i e_j = sum_k bil[i,j][k] e_k.

    Optionally carries a ternary tensor, an involution (a LinMap squaring
    to the identity) and a symmetric bilinear form (a LinMap used as a
    matrix).  Instances are immutable by convention.
    """

    def __init__(self, dim: int, bil=None, tri=None, invol=None, form=None,
                 labels=None):
        self.dim = dim
        self.bil = {} if bil is None else bil
        self.tri = tri
        self.invol = invol
        self.form = form
        self.labels = labels
        for (i, j), v in self.bil.items():
            if not (0 <= i < dim and 0 <= j < dim) or any(k >= dim for k in v):
                raise ValueError(f"structure entry ({i},{j}) out of range")
        if invol is not None and invol.compose(invol) != LinMap.identity(dim):
            raise ValueError("involution does not square to the identity")

    @staticmethod
    def from_pairs(dim: int, entries, antisym: bool = False, **kw) -> "AlgebraSpec":
        """entries: iterable of ((i, j), vecdict); antisym fills (j, i) = -v."""
        bil: dict = {}
        for (i, j), v in entries:
            v = {k: sc(s) for k, s in v.items() if sc(s)}
            if not v:
                continue
            bil[(i, j)] = vec_add(bil.get((i, j), {}), v)
            if antisym and i != j:
                bil[(j, i)] = vec_add(bil.get((j, i), {}), vec_scale(v, -1))
        bil = {k: v for k, v in bil.items() if v}
        return AlgebraSpec(dim, bil, **kw)

    def product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        bil = self.bil
        for i, xi in x.items():
            for j, yj in y.items():
                v = bil.get((i, j))
                if v:
                    vec_addmul(out, v, xi * yj)
        return out

    def triple(self, x: dict, y: dict, z: dict) -> dict:
        if self.tri is None:
            raise ValueError("algebra has no ternary tensor")
        out: dict = {}
        tri = self.tri
        for i, xi in x.items():
            for j, yj in y.items():
                c = xi * yj
                for k, zk in z.items():
                    v = tri.get((i, j, k))
                    if v:
                        vec_addmul(out, v, c * zk)
        return out

    def bar(self, x: dict) -> dict:
        if self.invol is None:
            raise ValueError("algebra has no involution")
        return self.invol.apply(x)

    def __repr__(self):
        return f"AlgebraSpec(dim={self.dim}, nnz={len(self.bil)})"


def check_anticommutative(alg: AlgebraSpec) -> list:
    """Pairs (i, j) with e_i e_j != -e_j e_i (including e_i e_i != 0)."""
    bad = []
    for i in range(alg.dim):
        if alg.bil.get((i, i)):
            bad.append((i, i))
        for j in range(i + 1, alg.dim):
            v = alg.bil.get((i, j), {})
            w = alg.bil.get((j, i), {})
            if vec_add(v, w):
                bad.append((i, j))
    return bad


def check_jacobi(alg: AlgebraSpec) -> list:
    """Triples i < j < k violating [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.

    Assumes anticommutativity, which makes triples with repeats automatic.
    """
    bad = []
    bil = alg.bil
    n = alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            vij = bil.get((i, j))
            for k in range(j + 1, n):
                acc: dict = {}
                if vij:
                    for l, s in vij.items():
                        w = bil.get((l, k))
                        if w:
                            vec_addmul(acc, w, s)
                vjk = bil.get((j, k))
                if vjk:
                    for l, s in vjk.items():
                        w = bil.get((l, i))
                        if w:
                            vec_addmul(acc, w, s)
                vki = bil.get((k, i))
                if vki:
                    for l, s in vki.items():
                        w = bil.get((l, j))
                        if w:
                            vec_addmul(acc, w, s)
                if acc:
                    bad.append((i, j, k))
    return bad


def generated_subalgebra(alg: AlgebraSpec, seeds, max_depth: int):
    """Basis of the subalgebra generated by seeds up to bracket depth.

    Returns (basis, stabilized); stabilized is True when a full round of
    products added nothing before the depth bound was reached.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    ech = Echelon()
    basis: list = []
    frontier: list = []
    for s in seeds:
        if ech.add(dict(s)):
            basis.append(dict(s))
            frontier.append(dict(s))
    stabilized = False
    for _ in range(2, max_depth + 1):
        new = []
        for f in frontier:
            for b in list(basis):
                for p in (alg.product(f, b), alg.product(b, f)):
                    if p and ech.add(p):
                        basis.append(p)
                        new.append(p)
        if not new:
            stabilized = True
            break
        frontier = new
    else:
        # one extra probe round to detect closure exactly at the bound
        stabilized = not any(
            ech.residual(alg.product(x, y))
            for x in basis for y in basis
        )
    return basis, stabilized
