"""Arithmetic in the localized ring A = k[t, 1/t, 1/(1-t)] over Q.

Elements are stored as num(t) / (t^et * (1-t)^eu) with num a polynomial,
fully reduced: if et > 0 then num(0) != 0, if eu > 0 then num(1) != 0.
That makes the representation canonical, so equality is componentwise.

The ring carries an S3-action by the substitution automorphisms
phi_A : t -> 1 - 1/t  and  tau_A : t -> 1 - t.  The tau-fixed subring is
B = k[s, 1/s] with s = t(1-t), and the subalgebra generated by
t(1-t), t'(1-t'), t''(1-t'') is S = B + B*(2t-1)*(1-s).
"""

from __future__ import annotations

from gmpy2 import mpq

from .scalar import Rat, rat

# ---------------------------------------------------------------------------
# dense polynomial helpers over Q (tuples of mpq, index = degree)
# ---------------------------------------------------------------------------


def _ptrim(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, ci in enumerate(q):
        out[i] += ci
    return _ptrim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, ci in enumerate(p):
        if not ci:
            continue
        for j, cj in enumerate(q):
            if cj:
                out[i + j] += ci * cj
    return _ptrim(out)


def _pscale(p, c):
    if not c:
        return ()
    return tuple(ci * c for ci in p)


def _peval(p, x: Rat) -> Rat:
    acc = mpq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pdiv_exact(p, d):
    """Quotient of p by d; raises if the division is not exact."""
    p = list(p)
    dd = len(d) - 1
    lead = d[-1]
    out = [mpq(0)] * max(len(p) - dd, 0)
    for i in range(len(p) - 1, dd - 1, -1):
        c = p[i] / lead
        if c:
            out[i - dd] = c
            for j, cj in enumerate(d):
                p[i - dd + j] -= c * cj
    if _ptrim(p):
        raise ValueError("inexact polynomial division")
    return _ptrim(out)


_POLY_S = (mpq(0), mpq(1), mpq(-1))          # s = t(1-t) = t - t^2
_POLY_2T1 = (mpq(-1), mpq(2))                # 2t - 1
_POLY_1MT = (mpq(1), mpq(-1))                # 1 - t


# ---------------------------------------------------------------------------
# ring elements
# ---------------------------------------------------------------------------


class LoopElem:
    """Element num / (t^et * (1-t)^eu) of A, in canonical reduced form."""

    __slots__ = ("num", "et", "eu")

    def __init__(self, num, et=0, eu=0):
        num = _ptrim([c if type(c) is mpq else mpq(c) for c in num])
        if et < 0 or eu < 0:
            raise ValueError("denominator exponents must be nonnegative")
        if not num:
            et = eu = 0
        while et > 0 and num and not num[0]:
            num = num[1:]
            et -= 1
        while eu > 0 and num and not _peval(num, mpq(1)):
            num = _pdiv_exact(num, _POLY_1MT)
            eu -= 1
        self.num = num
        self.et = et
        self.eu = eu

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c) -> "LoopElem":
        return LoopElem((rat(c),))

    @staticmethod
    def monomial(c, i: int, j: int) -> "LoopElem":
        """c * t^i * (1-t)^j with integer exponents of either sign."""
        num = (rat(c),)
        if i > 0:
            num = _pmul(num, _ptrim([mpq(0)] * i + [mpq(1)]))
        if j > 0:
            pw = (mpq(1),)
            for _ in range(j):
                pw = _pmul(pw, _POLY_1MT)
            num = _pmul(num, pw)
        return LoopElem(num, max(-i, 0), max(-j, 0))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = loop(other)
        et = max(self.et, other.et)
        eu = max(self.eu, other.eu)
        a = _scale_up(self.num, et - self.et, eu - self.eu)
        b = _scale_up(other.num, et - other.et, eu - other.eu)
        return LoopElem(_padd(a, b), et, eu)

    __radd__ = __add__

    def __neg__(self):
        out = LoopElem.__new__(LoopElem)
        out.num, out.et, out.eu = _pneg(self.num), self.et, self.eu
        if not out.num:
            out.et = out.eu = 0
        return out

    def __sub__(self, other):
        return self + (-loop(other))

    def __rsub__(self, other):
        return loop(other) + (-self)

    def __mul__(self, other):
        other = loop(other)
        return LoopElem(_pmul(self.num, other.num), self.et + other.et,
                        self.eu + other.eu)

    __rmul__ = __mul__

    def scale(self, c: Rat) -> "LoopElem":
        return LoopElem(_pscale(self.num, rat(c)), self.et, self.eu)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse_unit() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- units ---------------------------------------------------------------

    def unit_parts(self):
        """Write self as c * t^i * (1-t)^j; returns (c, i, j) or None."""
        num, i, j = self.num, -self.et, -self.eu
        if not num:
            return None
        while not num[0]:
            num = num[1:]
            i += 1
        while len(num) > 1 and not _peval(num, mpq(1)):
            num = _pdiv_exact(num, _POLY_1MT)
            j += 1
        if len(num) != 1:
            return None
        return num[0], i, j

    def inverse_unit(self) -> "LoopElem":
        parts = self.unit_parts()
        if parts is None:
            raise ValueError(f"{self!r} is not a unit of A")
        c, i, j = parts
        return LoopElem.monomial(1 / c, -i, -j)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LoopElem.const(other)
        if not isinstance(other, LoopElem):
            return NotImplemented
        return (self.num, self.et, self.eu) == (other.num, other.et, other.eu)

    def __hash__(self):
        return hash((self.num, self.et, self.eu))

    # -- presentation ----------------------------------------------------------

    def __repr__(self):
        if not self.num:
            return "0"
        terms = []
        for d, c in enumerate(self.num):
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                mono = "t" if d == 1 else f"t^{d}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        p = " + ".join(terms).replace("+ -", "- ")
        if self.et == 0 and self.eu == 0:
            return p
        den = []
        if self.et:
            den.append("t" if self.et == 1 else f"t^{self.et}")
        if self.eu:
            den.append("(1-t)" if self.eu == 1 else f"(1-t)^{self.eu}")
        return f"({p})/({'*'.join(den)})"

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num], "et": self.et, "eu": self.eu}

    @staticmethod
    def from_json(obj) -> "LoopElem":
        return LoopElem([mpq(c) for c in obj["num"]], obj["et"], obj["eu"])


def _scale_up(num, dt, du):
    if dt:
        num = _ptrim([mpq(0)] * dt + list(num))
    for _ in range(du):
        num = _pmul(num, _POLY_1MT)
    return num


def loop(x) -> LoopElem:
    if isinstance(x, LoopElem):
        return x
    if isinstance(x, (int, mpq)):
        return LoopElem.const(x)
    raise TypeError(f"cannot coerce {x!r} into A")


ZERO = LoopElem(())
ONE = LoopElem.const(1)
T = LoopElem.monomial(1, 1, 0)
ONE_MINUS_T = LoopElem.monomial(1, 0, 1)


def t_prime() -> LoopElem:
    """t' = 1 - 1/t = (t-1)/t."""
    return LoopElem((mpq(-1), mpq(1)), 1, 0)


def t_second() -> LoopElem:
    """t'' = 1/(1-t)."""
    return LoopElem.monomial(1, 0, -1)


# ---------------------------------------------------------------------------
# substitution automorphisms
# ---------------------------------------------------------------------------


class RingAuto:
    """Ring automorphism of A determined by the image of t.

    The image g and 1 - g must both be units of A, which makes the
    substitution land inside A for every element.
    """

    def __init__(self, image_of_t: LoopElem, name: str = ""):
        g = image_of_t
        if g.unit_parts() is None or (ONE - g).unit_parts() is None:
            raise ValueError("image of t does not define an automorphism of A")
        self.image_of_t = g
        self.name = name
        self._ginv = g.inverse_unit()
        self._hinv = (ONE - g).inverse_unit()

    def __call__(self, x: LoopElem) -> LoopElem:
        acc = ZERO
        for c in reversed(x.num):
            acc = acc * self.image_of_t + LoopElem.const(c)
        if x.et:
            acc = acc * self._ginv ** x.et
        if x.eu:
            acc = acc * self._hinv ** x.eu
        return acc

    def compose(self, other: "RingAuto") -> "RingAuto":
        """self after other: t -> self(other(t))."""
        return RingAuto(self(other.image_of_t), f"{self.name}*{other.name}")

    def order(self, bound: int = 12) -> int:
        g = self.image_of_t
        for n in range(1, bound + 1):
            if g == T:
                return n
            g = self(g)
        raise ValueError(f"order exceeds bound {bound}")

    def __repr__(self):
        return f"RingAuto(t -> {self.image_of_t!r})"


PHI_A = RingAuto(t_prime(), "phi")
TAU_A = RingAuto(ONE - T, "tau")
ID_A = RingAuto(T, "id")


# ---------------------------------------------------------------------------
# tau-splitting and membership in S
# ---------------------------------------------------------------------------


def tau_split(x: LoopElem):
    """x = even + odd with tau(even) = even and tau(odd) = -odd."""
    tx = TAU_A(x)
    half = mpq(1, 2)
    return (x + tx).scale(half), (x - tx).scale(half)


def _common_s_form(x: LoopElem):
    """Rewrite x as (P, m) with x = P(t) / (t(1-t))^m."""
    m = max(x.et, x.eu)
    return _scale_up(x.num, m - x.et, m - x.eu), m


def _rewrite_in_s(p):
    """Exact rewriting of a polynomial p(t) = q(t(1-t)); dict deg -> coeff.

    Raises ValueError when p is not a polynomial in s = t(1-t).
    """
    coeffs = {}
    spows = [(mpq(1),)]
    while p:
        d = len(p) - 1
        if d % 2:
            raise ValueError("polynomial is not even in (2t-1): not in k[t(1-t)]")
        r = d // 2
        while len(spows) <= r:
            spows.append(_pmul(spows[-1], _POLY_S))
        c = p[-1] / spows[r][-1]
        coeffs[r] = c
        p = _padd(p, _pscale(spows[r], -c))
        if p and len(p) - 1 >= d:
            raise ValueError("rewrite in s did not reduce the degree")
    return coeffs


def laurent_in_s(x: LoopElem) -> dict:
    """x in B = k[s, 1/s]: Laurent coefficients {r: c} with x = sum c*s^r."""
    p, m = _common_s_form(x)
    return {r - m: c for r, c in _rewrite_in_s(p).items() if c}


def odd_cofactor(x: LoopElem) -> dict:
    """For tau-odd x, the h in B with x = (2t-1) * h; Laurent dict in s."""
    p, m = _common_s_form(x)
    if not p:
        return {}
    q = _pdiv_exact(p, _POLY_2T1)
    return {r - m: c for r, c in _rewrite_in_s(q).items() if c}


def in_S(x: LoopElem) -> bool:
    """Membership in S = k[t(1-t), t'(1-t'), t''(1-t'')].

    Writes x = even + (2t-1) h with even in B, h in B; x lies in S exactly
    when h vanishes at s = 1.
    """
    even, odd = tau_split(x)
    laurent_in_s(even)                       # raises on malformed input
    h = odd_cofactor(odd)
    return sum(h.values(), mpq(0)) == 0


def s_decompose(x: LoopElem):
    """Split x = s_part + lam*(2t-1) along A = S + k(2t-1); returns (s_part, lam)."""
    even, odd = tau_split(x)
    h = odd_cofactor(odd)
    lam = sum(h.values(), mpq(0))
    s_part = x - LoopElem(_POLY_2T1).scale(lam)
    return s_part, lam
