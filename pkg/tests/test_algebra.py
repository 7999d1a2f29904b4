import random

import pytest

from symlie.algebra import (
    AlgebraSpec,
    Echelon,
    LinMap,
    basis_vec,
    check_anticommutative,
    check_jacobi,
    generated_subalgebra,
    nullspace,
    operator_span,
    vec_add,
    vec_from_dense,
    vec_scale,
)
from symlie.scalar import OMEGA, S0, S1, Scalar, sc


def sl2():
    # basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return AlgebraSpec.from_pairs(3, [
        ((0, 1), {1: sc(2)}),
        ((0, 2), {2: sc(-2)}),
        ((1, 2), {0: S1}),
    ], antisym=True)


def cross3():
    return AlgebraSpec.from_pairs(3, [
        ((0, 1), {2: S1}),
        ((1, 2), {0: S1}),
        ((2, 0), {1: S1}),
    ], antisym=True)


def rand_vec(rng, dim):
    return {i: Scalar(rng.randint(-5, 5), rng.randint(-2, 2))
            for i in rng.sample(range(dim), k=min(dim, 2))}


def test_product_examples():
    a = sl2()
    assert a.product(basis_vec(0), basis_vec(1)) == {1: sc(2)}
    assert a.product(rand_vec(random.Random(1), 3), {}) == {}
    c = cross3()
    assert c.product(basis_vec(0), basis_vec(1)) == {2: S1}


def test_product_bilinear():
    a = sl2()
    rng = random.Random(13)
    for _ in range(30):
        x, y, z = (rand_vec(rng, 3) for _ in range(3))
        al, be = Scalar(rng.randint(-3, 3)), Scalar(rng.randint(-3, 3))
        lhs = a.product(vec_add(vec_scale(x, al), vec_scale(y, be)), z)
        rhs = vec_add(vec_scale(a.product(x, z), al), vec_scale(a.product(y, z), be))
        assert lhs == rhs


def test_anticommutative():
    assert check_anticommutative(sl2()) == []
    bad = AlgebraSpec(2, {(0, 0): {1: S1}})
    assert check_anticommutative(bad) == [(0, 0)]


def test_jacobi():
    assert check_jacobi(sl2()) == []
    assert check_jacobi(cross3()) == []
    # constructed violation: J(e0,e1,e2) = [[e0,e1],e2] = [e0,e2] = e1 != 0
    broken = AlgebraSpec.from_pairs(3, [
        ((0, 1), {0: S1}),
        ((0, 2), {1: S1}),
    ], antisym=True)
    assert check_jacobi(broken) == [(0, 1, 2)]


def change_of_basis(alg, P):
    """Structure constants in the basis g_i = P(e_i)."""
    ech = Echelon()
    for j in range(alg.dim):
        assert ech.add(P.cols[j])
    bil = {}
    for i in range(alg.dim):
        for j in range(alg.dim):
            p = alg.product(P.cols[i], P.cols[j])
            if p:
                bil[(i, j)] = ech.coords(p)
    return AlgebraSpec(alg.dim, bil)


def test_jacobi_basis_independent():
    rng = random.Random(5)
    a = sl2()
    for _ in range(5):
        while True:
            P = LinMap.from_rows([[rng.randint(-2, 2) for _ in range(3)]
                                  for _ in range(3)])
            e = Echelon()
            if all(e.add(c) for c in P.cols):
                break
        assert check_jacobi(change_of_basis(a, P)) == []


def test_nullspace_examples():
    basis, rank = nullspace([{0: S1, 1: S1}, {0: S1, 1: sc(-1)}], 2)
    assert basis == [] and rank == 2
    basis, rank = nullspace([{0: S1, 1: S1, 2: S1}], 3)
    assert len(basis) == 3 - rank == 2
    for v in basis:
        assert sum(v.values(), S0) == S0


def test_nullspace_solutions_exact():
    rng = random.Random(23)
    rows = []
    for _ in range(6):
        rows.append({i: Scalar(rng.randint(-4, 4), rng.randint(-1, 1))
                     for i in rng.sample(range(5), 3)})
    basis, rank = nullspace(rows, 5)
    assert len(basis) == 5 - rank
    for v in basis:
        for r in rows:
            acc = S0
            for c, x in r.items():
                acc = acc + x * v.get(c, S0)
            assert acc == S0


def test_sl2_derivations_dim3():
    a = sl2()
    rows = []
    pairs = [(0, 1), (0, 2), (1, 2)]
    # unknowns d[r, c] indexed r*3 + c; condition d([ei,ej]) = [d ei, ej] + [ei, d ej]
    for (i, j) in pairs:
        for k in range(3):
            row = {}
            for r in range(3):
                for c in range(3):
                    unit = LinMap.from_entries(3, [(r, c, S1)])
                    lhs = unit.apply(a.bil.get((i, j), {}))
                    rhs = vec_add(a.product(unit.apply(basis_vec(i)), basis_vec(j)),
                                  a.product(basis_vec(i), unit.apply(basis_vec(j))))
                    s = vec_add(lhs, vec_scale(rhs, -1)).get(k, S0)
                    if s:
                        row[r * 3 + c] = s
            if row:
                rows.append(row)
    basis, rank = nullspace(rows, 9)
    assert len(basis) == 3
    # oracle: every derivation of sl2 is inner and ad is injective (center 0)
    ads = [LinMap(3, [a.product(basis_vec(i), basis_vec(j)) for j in range(3)])
           for i in range(3)]
    assert len(operator_span(ads)) == 3


def test_generated_subalgebra():
    a = sl2()
    basis, stab = generated_subalgebra(a, [basis_vec(0)], 3)
    assert len(basis) == 1 and stab
    basis, stab = generated_subalgebra(a, [basis_vec(1), basis_vec(2)], 4)
    assert len(basis) == 3 and stab
    abelian = AlgebraSpec(2, {})
    basis, stab = generated_subalgebra(abelian, [basis_vec(0)], 2)
    assert len(basis) == 1 and stab


def test_echelon_coords():
    ech = Echelon()
    v1 = {0: S1, 1: sc(2)}
    v2 = {1: S1, 2: OMEGA}
    assert ech.add(v1) and ech.add(v2)
    assert not ech.add(vec_add(v1, vec_scale(v2, sc(3))))
    target = vec_add(vec_scale(v1, OMEGA), vec_scale(v2, sc(-2)))
    coords = ech.coords(target)
    assert coords == {0: OMEGA, 1: sc(-2)}
    assert ech.coords({3: S1}) is None


def test_linmap_ops():
    m = LinMap.from_rows([[0, 1], [1, 0]])
    assert m.compose(m) == LinMap.identity(2)
    assert m.trace() == S0
    f = m.flatten()
    assert LinMap.unflatten(f, 2) == m


def test_involution_validation():
    good = LinMap.from_rows([[0, 1], [1, 0]])
    AlgebraSpec(2, {}, invol=good)
    with pytest.raises(ValueError):
        AlgebraSpec(2, {}, invol=LinMap.from_rows([[1, 1], [0, 1]]))


def test_dim_zero_algebra_is_legal():
    z = AlgebraSpec(0, {})
    assert check_anticommutative(z) == [] and check_jacobi(z) == []


def test_vec_from_dense():
    assert vec_from_dense([0, 2, 0]) == {1: sc(2)}
