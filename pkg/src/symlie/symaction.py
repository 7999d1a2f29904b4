"""S3/S4 actions on algebras: validation, Klein grading, isotypic pieces.

Actions are given by generator matrices; the full group is generated on
demand, keyed by the abstract permutation each word represents.  The
character tables are hard-coded and re-checked against the orthogonality
relations before any decomposition runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from gmpy2 import mpq

from .algebra import (
    AlgebraSpec,
    Echelon,
    LinMap,
    basis_vec,
    span_basis,
    vec_add,
    vec_addmul,
)
from .scalar import S0, S1, Scalar, rat, sc

# ---------------------------------------------------------------------------
# permutations (tuples of images, 0-indexed)
# ---------------------------------------------------------------------------

S3_PERMS = {"phi": (1, 2, 0), "tau": (1, 0, 2)}
S4_PERMS = {
    "tau1": (1, 0, 3, 2),      # (12)(34)
    "tau2": (3, 2, 1, 0),      # (23)(14)
    "phi": (1, 2, 0, 3),       # (123)
    "tau": (1, 0, 2, 3),       # (12)
}


def perm_mul(p, q):
    """p after q."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_sign(p) -> int:
    n = len(p)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def cycle_type(p) -> tuple:
    n = len(p)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        lens.append(ln)
    return tuple(sorted(lens, reverse=True))


# character tables, keyed by cycle type
_S3_CLASSES = [(1, 1, 1), (2, 1), (3,)]
_S3_SIZES = {(1, 1, 1): 1, (2, 1): 3, (3,): 2}
CHI_S3 = {
    "U": {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    "U'": {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
    "W": {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
}
S3_DIMS = {"U": 1, "U'": 1, "W": 2}

_S4_CLASSES = [(1, 1, 1, 1), (2, 1, 1), (3, 1), (2, 2), (4,)]
_S4_SIZES = {(1, 1, 1, 1): 1, (2, 1, 1): 6, (3, 1): 8, (2, 2): 3, (4,): 6}
CHI_S4 = {
    "U": {(1, 1, 1, 1): 1, (2, 1, 1): 1, (3, 1): 1, (2, 2): 1, (4,): 1},
    "U'": {(1, 1, 1, 1): 1, (2, 1, 1): -1, (3, 1): 1, (2, 2): 1, (4,): -1},
    "W": {(1, 1, 1, 1): 2, (2, 1, 1): 0, (3, 1): -1, (2, 2): 2, (4,): 0},
    "V": {(1, 1, 1, 1): 3, (2, 1, 1): 1, (3, 1): 0, (2, 2): -1, (4,): -1},
    "V'": {(1, 1, 1, 1): 3, (2, 1, 1): -1, (3, 1): 0, (2, 2): -1, (4,): 1},
}
S4_DIMS = {"U": 1, "U'": 1, "W": 2, "V": 3, "V'": 3}

_tables_checked = False


def _check_tables():
    """Orthogonality self-test; a transcription error fails loudly here."""
    global _tables_checked
    if _tables_checked:
        return
    for chi, sizes, order in ((CHI_S3, _S3_SIZES, 6), (CHI_S4, _S4_SIZES, 24)):
        names = list(chi)
        for i, a in enumerate(names):
            for b in names[i:]:
                dot = sum(sizes[c] * chi[a][c] * chi[b][c] for c in sizes)
                if dot != (order if a == b else 0):
                    raise AssertionError(f"character table corrupt: <{a},{b}> = {dot}")
    _tables_checked = True


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------


@dataclass
class S3Action:
    phi: LinMap
    tau: LinMap

    def generators(self):
        return {"phi": self.phi, "tau": self.tau}

    @property
    def dim(self):
        return self.phi.dim


@dataclass
class S4Action:
    tau1: LinMap
    tau2: LinMap
    phi: LinMap
    tau: LinMap

    def generators(self):
        return {"tau1": self.tau1, "tau2": self.tau2,
                "phi": self.phi, "tau": self.tau}

    @property
    def dim(self):
        return self.phi.dim

    def s3_part(self) -> S3Action:
        return S3Action(self.phi, self.tau)


def _gen_perms(act):
    if isinstance(act, S3Action):
        return S3_PERMS
    if isinstance(act, S4Action):
        return S4_PERMS
    raise TypeError(f"not an action: {act!r}")


def group_elements(act):
    """All group elements as {perm: LinMap}; raises if words conflict."""
    gens = act.generators()
    perms = _gen_perms(act)
    n = len(next(iter(perms.values())))
    ident = tuple(range(n))
    elems = {ident: LinMap.identity(act.dim)}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for name, gp in perms.items():
                q = perm_mul(gp, p)
                m = gens[name].compose(elems[p])
                if q in elems:
                    if elems[q] != m:
                        raise ValueError(
                            f"generator relations violated at word {name}*{q}")
                else:
                    elems[q] = m
                    nxt.append(q)
        frontier = nxt
    return elems


def validate(act) -> list:
    """Names of violated defining relations; empty means the action is valid."""
    bad = []
    g = act.generators()
    dim = act.dim
    ident = LinMap.identity(dim)

    def chk(name, m):
        if m != ident:
            bad.append(name)

    phi, tau = g["phi"], g["tau"]
    chk("phi^3", phi.compose(phi).compose(phi))
    chk("tau^2", tau.compose(tau))
    if tau.compose(phi).compose(tau) != phi.compose(phi):
        bad.append("tau*phi*tau=phi^2")
    if isinstance(act, S4Action):
        t1, t2 = g["tau1"], g["tau2"]
        chk("tau1^2", t1.compose(t1))
        chk("tau2^2", t2.compose(t2))
        if t1.compose(t2) != t2.compose(t1):
            bad.append("tau1*tau2=tau2*tau1")
        if phi.compose(t1) != t2.compose(phi):
            bad.append("phi*tau1=tau2*phi")
        if phi.compose(t2) != t1.compose(t2).compose(phi):
            bad.append("phi*tau2=tau1*tau2*phi")
        if tau.compose(t1) != t1.compose(tau):
            bad.append("tau*tau1=tau1*tau")
        if tau.compose(t2) != t1.compose(t2).compose(tau):
            bad.append("tau*tau2=tau1*tau2*tau")
    return bad


def is_faithful(act) -> bool:
    elems = group_elements(act)
    mats = {tuple(sorted((c, k, s.a, s.b) for c, col in enumerate(m.cols)
                         for k, s in col.items())) for m in elems.values()}
    return len(mats) == len(elems)


def check_action(alg: AlgebraSpec, act):
    """(ok, violations): group relations plus the automorphism property."""
    if act.dim != alg.dim:
        raise ValueError("action/algebra dimension mismatch")
    violations = [("relation", name) for name in validate(act)]
    if not violations:
        for name, g in act.generators().items():
            gcols = g.cols
            for (i, j), v in alg.bil.items():
                lhs = g.apply(v)
                rhs = alg.product(gcols[i], gcols[j])
                if lhs != rhs:
                    violations.append(("hom", name, i, j))
            # products that are zero must stay zero
            for i in range(alg.dim):
                for j in range(alg.dim):
                    if (i, j) not in alg.bil:
                        if alg.product(gcols[i], gcols[j]):
                            violations.append(("hom", name, i, j))
    return (not violations), violations


# ---------------------------------------------------------------------------
# Klein grading
# ---------------------------------------------------------------------------

_KLEIN_SIGNS = {"t": (1, 1), "g0": (1, -1), "g1": (-1, 1), "g2": (-1, -1)}


def klein_grading(alg: AlgebraSpec, act: S4Action) -> dict:
    """Joint (tau1, tau2) eigenspace bases; keys 't', 'g0', 'g1', 'g2'."""
    bad = validate(act)
    if bad:
        raise ValueError(f"invalid S4 action: {bad}")
    if act.dim != alg.dim:
        raise ValueError("action/algebra dimension mismatch")
    quarter = Scalar(rat(1, 4))
    out = {}
    total = 0
    for name, (s1, s2) in _KLEIN_SIGNS.items():
        imgs = []
        for i in range(alg.dim):
            w: dict = dict(basis_vec(i))
            vec_addmul(w, act.tau1.apply(basis_vec(i)), sc(s1))
            w2 = act.tau2.apply(w)
            vec_addmul(w, w2, sc(s2))
            w = {k: x * quarter for k, x in w.items()}
            if w:
                imgs.append(w)
        out[name] = span_basis(imgs)
        total += len(out[name])
    if total != alg.dim:
        raise ValueError("Klein projectors do not span; action is not valid")
    return out


# ---------------------------------------------------------------------------
# isotypic decomposition
# ---------------------------------------------------------------------------


@dataclass
class IsotypicReport:
    group: str
    multiplicities: dict
    components: dict

    def to_json(self, dim: int) -> dict:
        from .algebra import vec_dense
        return {
            "group": self.group,
            "multiplicities": dict(self.multiplicities),
            "components": {
                k: [[s.to_str() for s in vec_dense(v, dim)] for v in vs]
                for k, vs in self.components.items()
            },
        }


def restrict_to_span(space: list, m: LinMap) -> LinMap:
    """Matrix of m on the invariant subspace spanned by space."""
    ech = Echelon()
    for v in space:
        if not ech.add(dict(v)):
            raise ValueError("subspace basis is linearly dependent")
    cols = []
    for v in space:
        c = ech.coords(m.apply(v))
        if c is None:
            raise ValueError("subspace is not invariant under the action")
        cols.append(c)
    return LinMap(len(space), cols)


def _rank(m: LinMap) -> int:
    ech = Echelon()
    for col in m.cols:
        ech.add(dict(col))
    return ech.rank


def _image_basis(m: LinMap) -> list:
    return span_basis(dict(c) for c in m.cols if c)


def _to_ambient(space: list, coords_vec: dict) -> dict:
    out: dict = {}
    for j, c in coords_vec.items():
        vec_addmul(out, space[j], c)
    return out


def isotypic_s3(space: list, act: S3Action) -> IsotypicReport:
    """Multiplicities and component bases via the group-algebra idempotents."""
    _check_tables()
    elems = group_elements(S3Action(act.phi, act.tau))
    restricted = {p: restrict_to_span(space, m) for p, m in elems.items()}
    d = len(space)
    sixth = Scalar(rat(1, 6))
    e_u = LinMap(d)
    e_up = LinMap(d)
    for p, m in restricted.items():
        e_u = e_u + m.scale(sixth)
        e_up = e_up + m.scale(sixth * perm_sign(p))
    e_w = LinMap.identity(d) - e_u - e_up
    m_u, m_up, rk_w = _rank(e_u), _rank(e_up), _rank(e_w)
    if rk_w % 2:
        raise ValueError("W-isotypic block has odd dimension: invalid action")
    m_w = rk_w // 2
    if m_u + m_up + 2 * m_w != d:
        raise ValueError("isotypic dimensions do not add up: invalid action")
    comps = {
        "U": [_to_ambient(space, v) for v in _image_basis(e_u)],
        "U'": [_to_ambient(space, v) for v in _image_basis(e_up)],
        "W": [_to_ambient(space, v) for v in _image_basis(e_w)],
    }
    return IsotypicReport("S3", {"U": m_u, "U'": m_up, "W": m_w}, comps)


def isotypic_s4(space: list, act: S4Action) -> IsotypicReport:
    """S4 multiplicities by characters, cross-checked by central idempotents."""
    _check_tables()
    elems = group_elements(act)
    restricted = {p: restrict_to_span(space, m) for p, m in elems.items()}
    d = len(space)
    mult = {}
    comps = {}
    covered = 0
    for name, chi in CHI_S4.items():
        acc = S0
        proj = LinMap(d)
        w = Scalar(rat(S4_DIMS[name], 24))
        for p, m in restricted.items():
            character = chi[cycle_type(p)]
            if character:
                acc = acc + m.trace() * character
                proj = proj + m.scale(w * character)
        acc = acc * Scalar(rat(1, 24))
        if not acc.is_rational() or acc.a.denominator != 1 or acc.a < 0:
            raise ValueError(
                f"non-integer multiplicity {acc!r} for {name}: invalid action")
        m_chi = int(acc.a)
        rk = _rank(proj)
        if rk != m_chi * S4_DIMS[name]:
            raise ValueError(
                f"character and idempotent disagree for {name}: {m_chi} vs rank {rk}")
        mult[name] = m_chi
        comps[name] = [_to_ambient(space, v) for v in _image_basis(proj)]
        covered += m_chi * S4_DIMS[name]
    if covered != d:
        raise ValueError("isotypic dimensions do not add up: invalid action")
    return IsotypicReport("S4", mult, comps)


def pair_w_block(block: list, act: S3Action):
    """Pair a W-isotypic block into (w_plus-like, w_minus-like) couples.

    The plus vectors are the tau-fixed ones inside the block; the partner
    of p is (phi - phi^2)(p), matching the w_+/w_- conventions.
    """
    if not block:
        return []
    half = Scalar(rat(1, 2))
    plus = span_basis(
        {k: s * half for k, s in vec_add(v, act.tau.apply(v)).items()}
        for v in block
    )
    phi2 = act.phi.compose(act.phi)
    return [(p, vec_add(act.phi.apply(p), {k: -s for k, s in phi2.apply(p).items()}))
            for p in plus]
