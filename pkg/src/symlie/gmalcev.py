"""Generalized Malcev algebras and the Lie algebras they coordinatize.

A generalized Malcev algebra is a space M with an anticommutative binary
product xy and a ternary product {x,y,z} subject to four identities that
make

    g(M) = d+ (+) d- (+) nu0(M) (+) nu1(M)

a Lie algebra with S3-action, where d+/- are spanned by the skew and
symmetric parts of the operators {x,y,.}.  Malcev algebras appear as the
case where {x,y,z} is skew in (x,y); Jordan triple systems as the case
of zero binary product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraSpec,
    Echelon,
    LinMap,
    basis_vec,
    check_anticommutative,
    check_jacobi,
    vec_add,
    vec_addmul,
    vec_scale,
)
from .scalar import OMEGA, OMEGA2, S1, Scalar, rat, sc
from .symaction import S3Action, check_action

HALF = Scalar(rat(1, 2))


class GMAlgebra:
    """Binary + ternary structure tensors on a finite-dimensional space."""

    def __init__(self, dim: int, bil=None, tri=None, labels=None):
        self.dim = dim
        self.bil = {} if bil is None else {k: v for k, v in bil.items() if v}
        self.tri = {} if tri is None else {k: v for k, v in tri.items() if v}
        self.labels = labels
        self._ops: dict = {}

    def product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                v = self.bil.get((i, j))
                if v:
                    vec_addmul(out, v, xi * yj)
        return out

    def trivec(self, i: int, j: int, k: int) -> dict:
        return self.tri.get((i, j, k), {})

    def triple(self, x: dict, y: dict, z: dict) -> dict:
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                c = xi * yj
                for k, zk in z.items():
                    v = self.tri.get((i, j, k))
                    if v:
                        vec_addmul(out, v, c * zk)
        return out

    def triple_op(self, i: int, j: int) -> LinMap:
        """The operator {e_i, e_j, .}, cached."""
        op = self._ops.get((i, j))
        if op is None:
            op = LinMap(self.dim, [dict(self.tri.get((i, j, k), {}))
                                   for k in range(self.dim)])
            self._ops[(i, j)] = op
        return op

    def op_is_zero(self, i: int, j: int) -> bool:
        return not any((i, j, k) in self.tri for k in range(self.dim))

    def binary_algebra(self) -> AlgebraSpec:
        return AlgebraSpec(self.dim, dict(self.bil), labels=self.labels)

    def __repr__(self):
        return f"GMAlgebra(dim={self.dim}, bil_nnz={len(self.bil)}, tri_nnz={len(self.tri)})"


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------


def check_gm_axioms(M: GMAlgebra) -> dict:
    """Violating basis tuples for each defining identity.

    Keys: '4a' (binary from ternary), '4b' (ternary acts on products),
    '4c' (generalized Jordan triple identity), '4d1'/'4d2' (cyclic sums).
    All empty exactly when M is a generalized Malcev algebra.
    """
    n = M.dim
    bad = {"4a": [], "4b": [], "4c": [], "4d1": [], "4d2": []}
    prod = [[M.bil.get((i, j), {}) for j in range(n)] for i in range(n)]
    tri = M.tri

    def tvec(i, j, k):
        return tri.get((i, j, k), {})

    def t_on_vec(v, j, k):
        out: dict = {}
        for i, c in v.items():
            w = tri.get((i, j, k))
            if w:
                vec_addmul(out, w, c)
        return out

    def t_mid_vec(i, v, k):
        out: dict = {}
        for j, c in v.items():
            w = tri.get((i, j, k))
            if w:
                vec_addmul(out, w, c)
        return out

    # (4a)  (xy)z = {x,z,y} - {y,z,x}
    for i in range(n):
        for j in range(n):
            pij = prod[i][j]
            for k in range(n):
                acc = dict(M.product(pij, basis_vec(k))) if pij else {}
                vec_addmul(acc, tvec(i, k, j), sc(-1))
                vec_addmul(acc, tvec(j, k, i), S1)
                if acc:
                    bad["4a"].append((i, j, k))

    # (4b)  {a,b,xy} = -{b,a,x}y - x{b,a,y}
    for a in range(n):
        for b in range(n):
            op_ab = None if M.op_is_zero(a, b) else M.triple_op(a, b)
            op_ba = None if M.op_is_zero(b, a) else M.triple_op(b, a)
            for x in range(n):
                for y in range(n):
                    pxy = prod[x][y]
                    acc = dict(op_ab.apply(pxy)) if (op_ab and pxy) else {}
                    if op_ba:
                        vec_addmul(acc, M.product(op_ba.cols[x], basis_vec(y)), S1)
                        vec_addmul(acc, M.product(basis_vec(x), op_ba.cols[y]), S1)
                    if acc:
                        bad["4b"].append((a, b, x, y))

    # (4c)  {a,b,{x,y,z}} - {x,y,{a,b,z}} = {{a,b,x},y,z} - {x,{b,a,y},z}
    for a in range(n):
        for b in range(n):
            zero_ab = M.op_is_zero(a, b)
            zero_ba = M.op_is_zero(b, a)
            if zero_ab and zero_ba:
                continue
            op_ab = M.triple_op(a, b)
            op_ba = M.triple_op(b, a)
            for x in range(n):
                for y in range(n):
                    vx = op_ab.cols[x]
                    for z in range(n):
                        acc = dict(op_ab.apply(tvec(x, y, z)))
                        vec_addmul(acc, t_on_vec(op_ab.cols[z], x, y), sc(-1))
                        vec_addmul(acc, t_on_vec(vx, y, z), sc(-1))
                        vec_addmul(acc, t_mid_vec(x, op_ba.cols[y], z), S1)
                        if acc:
                            bad["4c"].append((a, b, x, y, z))

    # (4d)  {xy,z,t} + {yz,x,t} + {zx,y,t} = 0 = {x,yz,t} + {y,zx,t} + {z,xy,t}
    for x in range(n):
        for y in range(n):
            pxy = prod[x][y]
            for z in range(n):
                pyz = prod[y][z]
                pzx = prod[z][x]
                for t in range(n):
                    acc: dict = {}
                    vec_addmul(acc, t_on_vec(pxy, z, t), S1)
                    vec_addmul(acc, t_on_vec(pyz, x, t), S1)
                    vec_addmul(acc, t_on_vec(pzx, y, t), S1)
                    if acc:
                        bad["4d1"].append((x, y, z, t))
                    acc = {}
                    vec_addmul(acc, t_mid_vec(x, pyz, t), S1)
                    vec_addmul(acc, t_mid_vec(y, pzx, t), S1)
                    vec_addmul(acc, t_mid_vec(z, pxy, t), S1)
                    if acc:
                        bad["4d2"].append((x, y, z, t))
    return bad


def gm_ok(M: GMAlgebra) -> bool:
    return all(not v for v in check_gm_axioms(M).values())


@dataclass
class RedundancyReport:
    failed_hypotheses: list
    part_i_ok: bool
    part_ii_condition: str        # 'M=M^2', 'trivial annihilator', or 'not met'
    part_ii_ok: bool

    @property
    def ok(self) -> bool:
        return (not self.failed_hypotheses and self.part_i_ok
                and (self.part_ii_ok or self.part_ii_condition == "not met"))


def check_redundancy(M: GMAlgebra) -> RedundancyReport:
    """Confirms that (4a)-(4c) force the first cyclic identity, and the
    second one under M = M^2 or trivial annihilator of M^2."""
    report = check_gm_axioms(M)
    failed = [k for k in ("4a", "4b", "4c") if report[k]]
    if failed:
        return RedundancyReport(failed, False, "not met", False)
    part_i = not report["4d1"]

    msq = Echelon()
    for v in M.bil.values():
        msq.add(dict(v))
    condition = "not met"
    if msq.rank == M.dim:
        condition = "M=M^2"
    else:
        # annihilator {x : x M^2 = 0}
        msq_basis = msq.basis()
        rows = []
        for m in msq_basis:
            for k in range(M.dim):
                row = {}
                for i in range(M.dim):
                    s = M.product(basis_vec(i), m).get(k)
                    if s:
                        row[i] = s
                if row:
                    rows.append(row)
        from .algebra import nullspace
        ann, _ = nullspace(rows, M.dim)
        if not ann and msq_basis:
            condition = "trivial annihilator"
    part_ii = not report["4d2"] if condition != "not met" else False
    return RedundancyReport([], part_i, condition, part_ii)


# ---------------------------------------------------------------------------
# the associated Lie algebra g(M)
# ---------------------------------------------------------------------------


@dataclass
class DPlusDMinus:
    dplus_basis: list
    dminus_basis: list


def dpm_bases(M: GMAlgebra) -> DPlusDMinus:
    """Bases of d+ = span{x,y,.}-skew and d- = span{x,y,.}-symmetric parts."""
    n = M.dim
    ep, em = Echelon(), Echelon()
    dplus, dminus = [], []
    for i in range(n):
        for j in range(i, n):
            lij = M.triple_op(i, j)
            lji = M.triple_op(j, i)
            if i != j:
                dp = (lij - lji).scale(HALF)
                if not dp.is_zero() and ep.add(dp.flatten()):
                    dplus.append(dp)
            dm = (lij + lji).scale(HALF)
            if not dm.is_zero() and em.add(dm.flatten()):
                dminus.append(dm)
    return DPlusDMinus(dplus, dminus)


@dataclass
class GOfM:
    alg: AlgebraSpec
    act: S3Action
    dplus: list
    dminus: list
    m_dim: int

    @property
    def off_dminus(self):
        return len(self.dplus)

    @property
    def off_nu0(self):
        return len(self.dplus) + len(self.dminus)

    @property
    def off_nu1(self):
        return self.off_nu0 + self.m_dim

    def nu(self, i: int, v: dict) -> dict:
        off = self.off_nu0 if i == 0 else self.off_nu1
        return {off + k: s for k, s in v.items()}


def build_g_of_M(M: GMAlgebra, verify: bool = True) -> GOfM:
    """The Lie algebra g(M) with its S3-action; refuses non-GM input."""
    axioms = check_gm_axioms(M)
    if any(axioms.values()):
        failing = {k: len(v) for k, v in axioms.items() if v}
        raise ValueError(f"not a generalized Malcev algebra: violations {failing}")
    n = M.dim
    ep, em = Echelon(), Echelon()
    dplus, dminus = [], []
    for i in range(n):
        for j in range(i, n):
            lij, lji = M.triple_op(i, j), M.triple_op(j, i)
            if i != j:
                dp = (lij - lji).scale(HALF)
                if not dp.is_zero() and ep.add(dp.flatten()):
                    dplus.append(dp)
            dm = (lij + lji).scale(HALF)
            if not dm.is_zero() and em.add(dm.flatten()):
                dminus.append(dm)
    p, q = len(dplus), len(dminus)
    dim = p + q + 2 * n
    off_m = p + q

    def dp_coords(op: LinMap) -> dict:
        c = ep.coords(op.flatten())
        if c is None:
            raise ValueError("d+ span not closed; axioms violated")
        return c

    def dm_coords(op: LinMap) -> dict:
        c = em.coords(op.flatten())
        if c is None:
            raise ValueError("d- span not closed; axioms violated")
        return c

    entries = []
    dall = dplus + dminus

    def d_block(idx):
        return dall[idx], (idx < p)

    # [d,d'] brackets with the Z2-grading d+/d-
    for a in range(p + q):
        da, a_plus = d_block(a)
        for b in range(a + 1, p + q):
            db, b_plus = d_block(b)
            comm = da.commutator(db)
            if comm.is_zero():
                continue
            if a_plus == b_plus:
                entries.append(((a, b), dp_coords(comm)))
            else:
                entries.append(((a, b), {p + k: s for k, s in dm_coords(comm).items()}))

    # [d, nu_i(x)]
    for a in range(p + q):
        da, a_plus = d_block(a)
        for j in range(n):
            img = da.cols[j]
            if not img:
                continue
            v0 = {off_m + k: s for k, s in img.items()}
            v1 = {off_m + n + k: (s if a_plus else -s) for k, s in img.items()}
            entries.append(((a, off_m + j), v0))
            entries.append(((a, off_m + n + j), v1))

    # [nu_i(x), nu_i(y)] = nu_{1-i}(xy)
    for i in range(n):
        for j in range(i + 1, n):
            v = M.bil.get((i, j))
            if v:
                entries.append(((off_m + i, off_m + j),
                                {off_m + n + k: s for k, s in v.items()}))
                entries.append(((off_m + n + i, off_m + n + j),
                                {off_m + k: s for k, s in v.items()}))

    # [nu_0(x), nu_1(y)] = d+_{x,y} + d-_{x,y}
    for i in range(n):
        for j in range(n):
            lij, lji = M.triple_op(i, j), M.triple_op(j, i)
            dp = (lij - lji).scale(HALF)
            dm = (lij + lji).scale(HALF)
            v: dict = {}
            if not dp.is_zero():
                v.update(dp_coords(dp))
            if not dm.is_zero():
                for k, s in dm_coords(dm).items():
                    v[p + k] = s
            if v:
                entries.append(((off_m + i, off_m + n + j), v))

    alg = AlgebraSpec.from_pairs(dim, entries, antisym=True)

    phi = LinMap.from_entries(dim, (
        [(k, k, S1) for k in range(off_m)]
        + [(off_m + k, off_m + k, OMEGA) for k in range(n)]
        + [(off_m + n + k, off_m + n + k, OMEGA2) for k in range(n)]
    ))
    tau = LinMap.from_entries(dim, (
        [(k, k, S1) for k in range(p)]
        + [(p + k, p + k, sc(-1)) for k in range(q)]
        + [(off_m + n + k, off_m + k, S1) for k in range(n)]
        + [(off_m + k, off_m + n + k, S1) for k in range(n)]
    ))
    act = S3Action(phi=phi, tau=tau)

    if verify:
        if check_anticommutative(alg):
            raise ValueError("g(M) construction is not anticommutative")
        bad = check_jacobi(alg)
        if bad:
            raise ValueError(f"g(M) fails Jacobi at {bad[:3]}...")
        ok, violations = check_action(alg, act)
        if not ok:
            raise ValueError(f"S3 does not act on g(M): {violations[:3]}")
    return GOfM(alg, act, dplus, dminus, n)


# ---------------------------------------------------------------------------
# Malcev bridge
# ---------------------------------------------------------------------------


def _jacobiator(alg: AlgebraSpec, x: dict, y: dict, z: dict) -> dict:
    out = dict(alg.product(alg.product(x, y), z))
    out = vec_add(out, alg.product(alg.product(y, z), x))
    return vec_add(out, alg.product(alg.product(z, x), y))


def malcev_violations(alg: AlgebraSpec) -> list:
    """Quadruples breaking the linearized identity J(x,y,xz) = J(x,y,z)x."""
    n = alg.dim
    bad = []
    e = [basis_vec(i) for i in range(n)]
    for x1 in range(n):
        for x2 in range(x1, n):
            for y in range(n):
                for z in range(n):
                    lhs = vec_add(
                        _jacobiator(alg, e[x1], e[y], alg.product(e[x2], e[z])),
                        _jacobiator(alg, e[x2], e[y], alg.product(e[x1], e[z])),
                    )
                    rhs = vec_add(
                        alg.product(_jacobiator(alg, e[x1], e[y], e[z]), e[x2]),
                        alg.product(_jacobiator(alg, e[x2], e[y], e[z]), e[x1]),
                    )
                    if lhs != rhs:
                        bad.append((x1, x2, y, z))
    return bad


def check_malcev(alg: AlgebraSpec) -> bool:
    """Sagle identity, fully linearized in the repeated variable."""
    if check_anticommutative(alg):
        raise ValueError("algebra is not anticommutative")
    return not malcev_violations(alg)


def _triple_from_binary(alg: AlgebraSpec) -> dict:
    """2{x,y,z} = (xy)z + x(yz) - y(xz) as a ternary tensor."""
    n = alg.dim
    e = [basis_vec(i) for i in range(n)]
    tri = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = dict(alg.product(alg.product(e[i], e[j]), e[k]))
                vec_addmul(v, alg.product(e[i], alg.product(e[j], e[k])), S1)
                vec_addmul(v, alg.product(e[j], alg.product(e[i], e[k])), sc(-1))
                v = vec_scale(v, HALF)
                if v:
                    tri[(i, j, k)] = v
    return tri


def malcev_to_gm(alg: AlgebraSpec) -> GMAlgebra:
    """Attach the canonical triple product to a Malcev algebra."""
    if not check_malcev(alg):
        raise ValueError("input is not a Malcev algebra")
    return GMAlgebra(alg.dim, dict(alg.bil), _triple_from_binary(alg))


def gm_to_malcev(M: GMAlgebra) -> AlgebraSpec:
    """Extract the Malcev algebra from a GM algebra with skew triple."""
    n = M.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if vec_add(M.trivec(i, j, k), M.trivec(j, i, k)):
                    raise ValueError(
                        f"triple product is not skew-symmetric in ({i},{j})")
    axioms = check_gm_axioms(M)
    if any(axioms.values()):
        raise ValueError("input does not satisfy the GM identities")
    alg = AlgebraSpec(n, dict(M.bil))
    if not check_malcev(alg):
        raise ValueError("binary part fails the Malcev identity")
    expected = _triple_from_binary(alg)
    if expected != M.tri:
        raise ValueError("triple product differs from the canonical one")
    return alg


# ---------------------------------------------------------------------------
# Jordan triple systems: TKK
# ---------------------------------------------------------------------------


@dataclass
class TKKResult:
    alg: AlgebraSpec
    s_dim: int
    g_of_T: GOfM
    iso: LinMap          # g(T) -> K(T) in coordinates
    iso_ok: bool


def tkk(T: GMAlgebra, verify: bool = True) -> TKKResult:
    """Tits-Kantor-Koecher Lie algebra of a Jordan triple system.

    K(T) = T (+) s(T) (+) T^ with s(T) spanned by the operator pairs
    ({x,y,.}, -{y,x,.}); also verifies the explicit isomorphism with the
    associated Lie algebra g(T).
    """
    if M_has_binary(T):
        raise ValueError("TKK requires a Jordan triple system (zero binary)")
    n = T.dim
    es = Echelon()
    s_pairs = []
    for i in range(n):
        for j in range(n):
            d1 = T.triple_op(i, j)
            d2 = T.triple_op(j, i).scale(-1)
            flat = _pair_flatten(d1, d2)
            if flat and es.add(flat):
                s_pairs.append((d1, d2))
    s = len(s_pairs)
    dim = n + s + n

    def s_coords(d1, d2):
        c = es.coords(_pair_flatten(d1, d2))
        if c is None:
            raise ValueError("s(T) span not closed; triple identities violated")
        return c

    entries = []
    # [x, y^] = ({x,y,.}, -{y,x,.})
    for i in range(n):
        for j in range(n):
            c = s_coords(T.triple_op(i, j), T.triple_op(j, i).scale(-1))
            if c:
                entries.append(((i, n + s + j), {n + k: v for k, v in c.items()}))
    # s(T) is a subalgebra under componentwise brackets
    for a in range(s):
        for b in range(a + 1, s):
            d1 = s_pairs[a][0].commutator(s_pairs[b][0])
            d2 = s_pairs[a][1].commutator(s_pairs[b][1])
            if d1.is_zero() and d2.is_zero():
                continue
            entries.append(((n + a, n + b),
                            {n + k: v for k, v in s_coords(d1, d2).items()}))
    # [(d1,d2), x] = d1(x) and [(d1,d2), y^] = (d2(y))^
    for a in range(s):
        d1, d2 = s_pairs[a]
        for j in range(n):
            if d1.cols[j]:
                entries.append(((n + a, j), dict(d1.cols[j])))
            if d2.cols[j]:
                entries.append(((n + a, n + s + j),
                                {n + s + k: v for k, v in d2.cols[j].items()}))

    K = AlgebraSpec.from_pairs(dim, entries, antisym=True)

    g = build_g_of_M(T, verify=verify)
    p, q = len(g.dplus), len(g.dminus)
    cols = []
    for a in range(p):
        d = g.dplus[a]
        cols.append({n + k: v for k, v in s_coords(d, d).items()})
    for b in range(q):
        d = g.dminus[b]
        cols.append({n + k: v for k, v in s_coords(d, d.scale(-1)).items()})
    for j in range(n):
        cols.append({j: S1})
    for j in range(n):
        cols.append({n + s + j: S1})
    iso = _RectMap(dim, cols)

    iso_ok = True
    if verify:
        if check_jacobi(K):
            raise ValueError("K(T) fails Jacobi")
        ech = Echelon()
        iso_ok = (len(cols) == dim
                  and all(ech.add(dict(c)) for c in cols))
        gdim = g.alg.dim
        for i in range(gdim):
            for j in range(i + 1, gdim):
                lhs = iso.apply(g.alg.bil.get((i, j), {}))
                rhs = K.product(cols[i], cols[j])
                if lhs != rhs:
                    iso_ok = False
        if not iso_ok:
            raise ValueError("TKK comparison map is not a Lie isomorphism")
    return TKKResult(K, s, g, iso, iso_ok)


def _pair_flatten(d1: LinMap, d2: LinMap) -> dict:
    out = dict(d1.flatten())
    off = d1.dim * d1.dim
    for k, v in d2.flatten().items():
        out[off + k] = v
    return out


def M_has_binary(M: GMAlgebra) -> bool:
    return bool(M.bil)


# ---------------------------------------------------------------------------
# Lie-Yamaguti reduction
# ---------------------------------------------------------------------------


@dataclass
class LYResult:
    binary: dict
    ternary: dict
    enveloping: AlgebraSpec
    iso: LinMap           # enveloping -> g(M) coordinates
    fixed_dim: int


def lie_yamaguti_reduce(M: GMAlgebra, verify: bool = True) -> LYResult:
    """Binary/ternary Lie-Yamaguti structure and its enveloping algebra.

    The enveloping algebra [M,M,.] (+) M is matched against the
    tau-fixed subalgebra of g(M) through d |-> d, x |-> nu0(x)+nu1(x).
    """
    n = M.dim
    ternary = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = vec_add(M.trivec(i, j, k), vec_scale(M.trivec(j, i, k), -1))
                if v:
                    ternary[(i, j, k)] = v

    ed = Echelon()
    dops = []
    for i in range(n):
        for j in range(i + 1, n):
            op = M.triple_op(i, j) - M.triple_op(j, i)
            if not op.is_zero() and ed.add(op.flatten()):
                dops.append(op)
    d = len(dops)
    dim = d + n

    def d_coords(op):
        c = ed.coords(op.flatten())
        if c is None:
            raise ValueError("[M,M,.] span not closed")
        return c

    entries = []
    for a in range(d):
        for b in range(a + 1, d):
            comm = dops[a].commutator(dops[b])
            if not comm.is_zero():
                entries.append(((a, b), d_coords(comm)))
        for j in range(n):
            img = dops[a].cols[j]
            if img:
                entries.append(((a, d + j), {d + k: s for k, s in img.items()}))
    for i in range(n):
        for j in range(i + 1, n):
            op = M.triple_op(i, j) - M.triple_op(j, i)
            v = {} if op.is_zero() else dict(d_coords(op))
            for k, s in M.bil.get((i, j), {}).items():
                v[d + k] = s
            if v:
                entries.append(((d + i, d + j), v))
    env = AlgebraSpec.from_pairs(dim, entries, antisym=True)

    g = build_g_of_M(M, verify=verify)
    # tau-fixed subalgebra: d+ block plus the diagonal nu0(x) + nu1(x)
    cols = []
    ep = Echelon()
    for dp in g.dplus:
        ep.add(dp.flatten())
    for a in range(d):
        c = ep.coords(dops[a].flatten())
        if c is None:
            raise ValueError("[M,M,.] does not lie in d+")
        cols.append(c)
    for j in range(n):
        cols.append(vec_add(g.nu(0, basis_vec(j)), g.nu(1, basis_vec(j))))
    iso = _RectMap(g.alg.dim, cols)

    if verify:
        if check_jacobi(env):
            raise ValueError("enveloping algebra fails Jacobi")
        ech = Echelon()
        if not all(ech.add(dict(c)) for c in cols):
            raise ValueError("enveloping comparison map is not injective")
        for i in range(dim):
            for j in range(i + 1, dim):
                lhs = iso.apply(env.bil.get((i, j), {}))
                rhs = g.alg.product(cols[i], cols[j])
                if lhs != rhs:
                    raise ValueError(
                        f"enveloping map fails to be a homomorphism at ({i},{j})")
        fixed = _tau_fixed_dim(g)
        if fixed != dim:
            raise ValueError(
                f"tau-fixed subalgebra has dim {fixed}, enveloping has {dim}")
    return LYResult(dict(M.bil), ternary, env, iso, d + n)


class _RectMap:
    """Rectangular linear map given by image columns (sparse dicts)."""

    def __init__(self, codim: int, cols: list):
        self.codim = codim
        self.cols = cols

    def apply(self, v: dict) -> dict:
        out: dict = {}
        for j, x in v.items():
            vec_addmul(out, self.cols[j], x)
        return out


def _tau_fixed_dim(g: GOfM) -> int:
    from .algebra import span_basis
    fixed = []
    for i in range(g.alg.dim):
        v = vec_add(basis_vec(i), g.act.tau.apply(basis_vec(i)))
        if v:
            fixed.append(v)
    return len(span_basis(fixed))
