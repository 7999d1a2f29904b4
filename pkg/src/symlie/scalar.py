"""Exact scalars: rationals and the quadratic extension Q(w), w^2 = -1 - w.

Every other module computes over these scalars; there is no floating point
anywhere in the package.  Rationals are gmpy2.mpq (arbitrary precision,
always stored with positive denominator and gcd-reduced).
"""

from __future__ import annotations

from gmpy2 import mpq

Rat = mpq

RAT0 = mpq(0)
RAT1 = mpq(1)


def rat(p, q=1) -> Rat:
    """Exact rational p/q.  Accepts ints, mpq, or strings like '-3/4'."""
    return mpq(p, q) if q != 1 else mpq(p)


class Scalar:
    """Element a + b*w of Q(w), with w a primitive cube root of unity.

    The relation w^2 = -1 - w is applied eagerly, so the (a, b) pair is a
    canonical form and equality is componentwise.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a if type(a) is mpq else mpq(a)
        self.b = b if type(b) is mpq else mpq(b)

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = sc(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b)

    def __sub__(self, other):
        other = sc(other)
        return Scalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return sc(other) - self

    def __mul__(self, other):
        other = sc(other)
        if not self.b and not other.b:
            return Scalar(self.a * other.a)
        # (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return Scalar(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * sc(other).inv()

    def __rtruediv__(self, other):
        return sc(other) * self.inv()

    # -- field structure ------------------------------------------------

    def norm(self) -> Rat:
        """Field norm a^2 - ab + b^2; zero only for the zero scalar."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inv(self) -> "Scalar":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(w)")
        # conj / norm, with conj(a + bw) = (a - b) - bw
        return Scalar((self.a - self.b) / n, -self.b / n)

    def conj(self) -> "Scalar":
        """Nontrivial automorphism w -> w^2 of Q(w); fixes rationals."""
        return Scalar(self.a - self.b, -self.b)

    # -- predicates and hashing ------------------------------------------

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, (int, mpq)):
            return not self.b and self.a == other
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    # -- presentation -----------------------------------------------------

    def __repr__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}w" if self.b != 1 else "w"
        bs = "+w" if self.b == 1 else (f"{self.b}w" if self.b < 0 else f"+{self.b}w")
        return f"{self.a}{bs}"

    def to_str(self) -> str:
        """Compact string used inside tensor JSON entries."""
        if not self.b:
            return str(self.a)
        return f"{self.a}+{self.b}*w"

    @staticmethod
    def from_str(s: str) -> "Scalar":
        if "w" in s:
            head, tail = s.split("+", 1) if "+" in s[1:] else (None, None)
            if head is None:
                raise ValueError(f"malformed scalar string: {s!r}")
            if not tail.endswith("*w"):
                raise ValueError(f"malformed scalar string: {s!r}")
            return Scalar(mpq(head), mpq(tail[:-2]))
        return Scalar(mpq(s))

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @staticmethod
    def from_json(obj: dict) -> "Scalar":
        return Scalar(mpq(obj["a"]), mpq(obj["b"]))


def sc(x) -> Scalar:
    """Coerce an int/Rat/Scalar to a Scalar."""
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


S0 = Scalar(0)
S1 = Scalar(1)
OMEGA = Scalar(0, 1)
OMEGA2 = OMEGA.conj()                      # -1 - w
