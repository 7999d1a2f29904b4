import random

import pytest
from gmpy2 import mpq

from symlie.loopring import (
    ONE,
    PHI_A,
    T,
    TAU_A,
    ZERO,
    LoopElem,
    in_S,
    laurent_in_s,
    loop,
    odd_cofactor,
    s_decompose,
    t_prime,
    t_second,
    tau_split,
)


def rand_elem(rng, deg=4, expo=3):
    num = [mpq(rng.randint(-9, 9)) for _ in range(deg + 1)]
    return LoopElem(num, rng.randint(0, expo), rng.randint(0, expo))


def test_basic_identities():
    tp, ts = t_prime(), t_second()
    assert tp * ts == LoopElem((mpq(-1),), 1, 0)          # t' t'' = -1/t
    assert T * tp * ts == -ONE                            # t t' t'' = -1
    assert T + (ONE - T) == ONE
    assert T * T.inverse_unit() == ONE


def test_canonical_form_idempotent():
    # same element in three unreduced presentations
    a = LoopElem((0, 0, 1), 1, 0)     # t^2 / t
    b = LoopElem((0, 1), 0, 0)        # t
    assert a == b == T
    c = LoopElem((1, -1), 0, 1)       # (1-t)/(1-t)
    assert c == ONE


def test_zero_handling():
    z = LoopElem((), 3, 2)
    assert z == ZERO and z.et == 0 and z.eu == 0
    assert (T - T) == ZERO


def test_phi_tau_images():
    assert PHI_A(T) == t_prime()
    assert TAU_A(T) == ONE - T
    x = LoopElem((0, 0, 0, 1), 0, 2)  # t^3/(1-t)^2
    assert PHI_A(PHI_A(PHI_A(x))) == x


def test_group_relations_sampled():
    rng = random.Random(5)
    phi2 = PHI_A.compose(PHI_A)
    for _ in range(100):
        x = rand_elem(rng, deg=3, expo=2)
        assert PHI_A(phi2(x)) == x
        assert TAU_A(TAU_A(x)) == x
        assert TAU_A(PHI_A(TAU_A(x))) == phi2(x)


def test_orders():
    assert PHI_A.order() == 3
    assert TAU_A.order() == 2


def test_automorphism_property_sampled():
    rng = random.Random(9)
    for _ in range(50):
        x, y = rand_elem(rng), rand_elem(rng)
        assert PHI_A(x * y) == PHI_A(x) * PHI_A(y)
        assert TAU_A(x + y) == TAU_A(x) + TAU_A(y)


def test_proof_identities():
    tp, ts = t_prime(), t_second()
    # t'(1-t') = (t-1)/t^2 and t''(1-t'') = -t/(1-t)^2
    assert tp * (ONE - tp) == LoopElem((-1, 1), 2, 0)
    assert ts * (ONE - ts) == LoopElem((0, -1), 0, 2)


def test_tau_split_examples():
    even, odd = tau_split(T)
    assert even == LoopElem((mpq(1, 2),))
    assert odd == LoopElem((mpq(-1, 2), mpq(1)))          # (2t-1)/2
    s = T * (ONE - T)
    even, odd = tau_split(s)
    assert even == s and odd == ZERO
    two_t_minus_1 = LoopElem((-1, 2))
    even, odd = tau_split(two_t_minus_1)
    assert even == ZERO and odd == two_t_minus_1
    assert TAU_A(two_t_minus_1) == -two_t_minus_1


def test_tau_split_is_a_splitting():
    rng = random.Random(20)
    for _ in range(50):
        x = rand_elem(rng)
        even, odd = tau_split(x)
        assert even + odd == x
        assert TAU_A(even) == even
        assert TAU_A(odd) == -odd


def test_laurent_in_s():
    s = T * (ONE - T)
    assert laurent_in_s(s) == {1: mpq(1)}
    assert laurent_in_s(s * s - ONE) == {2: mpq(1), 0: mpq(-1)}
    assert laurent_in_s(s.inverse_unit()) == {-1: mpq(1)}
    with pytest.raises(ValueError):
        laurent_in_s(T)


def test_in_S_examples():
    s = T * (ONE - T)
    assert in_S(s)
    assert not in_S(LoopElem((-1, 2)))                    # 2t - 1
    tp, ts = t_prime(), t_second()
    assert in_S(tp * (ONE - tp))
    assert in_S(ts * (ONE - ts))
    # (2t-1)(1 - t(1-t)) lies in S while 2t-1 does not
    assert in_S(LoopElem((-1, 2)) * (ONE - s))


def test_S_is_S3_invariant():
    rng = random.Random(31)
    s = T * (ONE - T)
    gens = [s, PHI_A(s), PHI_A(PHI_A(s)), s.inverse_unit()]
    for _ in range(40):
        x = ZERO
        for g in gens:
            x = x + g ** rng.randint(0, 2) * loop(rng.randint(-3, 3))
        x = x * s ** rng.randint(0, 2)
        assert in_S(x)
        assert in_S(PHI_A(x))
        assert in_S(TAU_A(x))


def test_s_decompose():
    rng = random.Random(17)
    two_t_minus_1 = LoopElem((-1, 2))
    for _ in range(40):
        x = rand_elem(rng)
        s_part, lam = s_decompose(x)
        assert s_part + two_t_minus_1.scale(lam) == x
        assert in_S(s_part)


def test_odd_cofactor():
    two_t_minus_1 = LoopElem((-1, 2))
    s = T * (ONE - T)
    x = two_t_minus_1 * (s ** 2 - ONE)
    assert odd_cofactor(x) == {2: mpq(1), 0: mpq(-1)}


def test_text_and_json():
    x = LoopElem((mpq(1, 2), 0, -3), 2, 1)
    assert LoopElem.from_json(x.to_json()) == x
    assert "t^2" in repr(x) and "(1-t)" in repr(x)
