import pytest

from symlie.algebra import AlgebraSpec, LinMap, basis_vec, vec_add, vec_scale
from symlie.scalar import S0, S1, Scalar, rat, sc
from symlie.symaction import (
    S3Action,
    S4Action,
    check_action,
    cycle_type,
    group_elements,
    is_faithful,
    isotypic_s3,
    isotypic_s4,
    klein_grading,
    pair_w_block,
    perm_mul,
    perm_sign,
    restrict_to_span,
    validate,
)


def s3_regular_action():
    """Left-regular representation of S3 on k^6."""
    elems = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(elems)}

    def mat(g):
        return LinMap.from_entries(6, [(index[perm_mul(g, p)], i, S1)
                                       for i, p in enumerate(elems)])

    return S3Action(phi=mat((1, 2, 0)), tau=mat((1, 0, 2)))


def s4_perm_action(dim4_basis):
    """Action of S4 on a subspace of k^4 stable under coordinate permutation."""
    def mat(p):
        amb = LinMap.from_entries(4, [(p[i], i, S1) for i in range(4)])
        return restrict_to_span(dim4_basis, amb)

    return S4Action(tau1=mat((1, 0, 3, 2)), tau2=mat((3, 2, 1, 0)),
                    phi=mat((1, 2, 0, 3)), tau=mat((1, 0, 2, 3)))


def standard_module_basis():
    return [{0: S1, 1: -S1}, {1: S1, 2: -S1}, {2: S1, 3: -S1}]


def test_perm_helpers():
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((1, 2, 0)) == 1
    assert cycle_type((1, 0, 3, 2)) == (2, 2)
    assert cycle_type((1, 2, 0, 3)) == (3, 1)


def test_group_generation_counts():
    act = s3_regular_action()
    assert len(group_elements(act)) == 6
    v = standard_module_basis()
    act4 = s4_perm_action(v)
    assert len(group_elements(act4)) == 24
    assert is_faithful(act4)


def test_validate_good_and_bad():
    act = s3_regular_action()
    assert validate(act) == []
    bad = S3Action(phi=act.phi.scale(2), tau=act.tau)
    assert "phi^3" in validate(bad)


def test_regular_rep_multiplicities():
    act = s3_regular_action()
    space = [basis_vec(i) for i in range(6)]
    rep = isotypic_s3(space, act)
    assert rep.multiplicities == {"U": 1, "U'": 1, "W": 2}
    assert len(rep.components["W"]) == 4


def test_isotypic_components_invariant():
    act = s3_regular_action()
    space = [basis_vec(i) for i in range(6)]
    rep = isotypic_s3(space, act)
    for comp in rep.components.values():
        if comp:
            for g in (act.phi, act.tau):
                restrict_to_span(comp, g)   # raises if not invariant


def test_idempotent_identities():
    act = s3_regular_action()
    space = [basis_vec(i) for i in range(6)]
    elems = {p: restrict_to_span(space, m) for p, m in group_elements(act).items()}
    sixth = Scalar(rat(1, 6))
    e_u = LinMap(6)
    e_up = LinMap(6)
    for p, m in elems.items():
        e_u = e_u + m.scale(sixth)
        e_up = e_up + m.scale(sixth * perm_sign(p))
    assert e_u.compose(e_u) == e_u
    assert e_up.compose(e_up) == e_up
    assert e_u.compose(e_up).is_zero()


def test_standard_module_s4():
    v = standard_module_basis()
    act = s4_perm_action(v)
    rep = isotypic_s4([basis_vec(i) for i in range(3)], act)
    assert rep.multiplicities == {"U": 0, "U'": 0, "W": 0, "V": 1, "V'": 0}


def test_k4_decomposition_s4():
    amb = [basis_vec(i) for i in range(4)]

    def mat(p):
        return LinMap.from_entries(4, [(p[i], i, S1) for i in range(4)])

    act = S4Action(tau1=mat((1, 0, 3, 2)), tau2=mat((3, 2, 1, 0)),
                   phi=mat((1, 2, 0, 3)), tau=mat((1, 0, 2, 3)))
    rep = isotypic_s4(amb, act)
    assert rep.multiplicities == {"U": 1, "U'": 0, "W": 0, "V": 1, "V'": 0}


def test_klein_grading_trivial_v4():
    ident = LinMap.identity(6)
    act = s3_regular_action()
    triv = S4Action(tau1=ident, tau2=ident, phi=act.phi, tau=act.tau)
    alg = AlgebraSpec(6, {})
    g = klein_grading(alg, triv)
    assert len(g["t"]) == 6
    assert g["g0"] == [] and g["g1"] == [] and g["g2"] == []
    assert not is_faithful(triv)


def test_klein_grading_signs():
    # diagonal tau1/tau2 with prescribed signs on four 1-dim pieces
    diag = {
        "t": (1, 1), "g0": (1, -1), "g1": (-1, 1), "g2": (-1, -1),
    }
    names = list(diag)
    t1 = LinMap.from_entries(4, [(i, i, sc(diag[n][0])) for i, n in enumerate(names)])
    t2 = LinMap.from_entries(4, [(i, i, sc(diag[n][1])) for i, n in enumerate(names)])
    ident = LinMap.identity(4)
    act = S4Action(tau1=t1, tau2=t2, phi=ident, tau=ident)
    # phi must permute the eigenspaces correctly for a valid action; here the
    # relations degenerate (phi = id), which conflicts with phi*tau1 = tau2*phi
    assert "phi*tau1=tau2*phi" in validate(act)


def test_check_action_identity():
    alg = AlgebraSpec.from_pairs(3, [
        ((0, 1), {1: sc(2)}), ((0, 2), {2: sc(-2)}), ((1, 2), {0: S1}),
    ], antisym=True)
    ident = LinMap.identity(3)
    ok, violations = check_action(alg, S3Action(ident, ident))
    assert ok and violations == []
    bad = S3Action(ident.scale(2), ident)
    ok, violations = check_action(alg, bad)
    assert not ok


def test_pair_w_block():
    act = s3_regular_action()
    space = [basis_vec(i) for i in range(6)]
    rep = isotypic_s3(space, act)
    pairs = pair_w_block(rep.components["W"], act)
    assert len(pairs) == 2
    for p, q in pairs:
        assert act.tau.apply(p) == p
        assert act.tau.apply(q) == vec_scale(q, -1)


def test_non_invariant_subspace_rejected():
    act = s3_regular_action()
    with pytest.raises(ValueError):
        isotypic_s3([basis_vec(0)], act)
