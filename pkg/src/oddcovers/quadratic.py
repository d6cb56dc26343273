"""Exact arithmetic in a quadratic extension Q(sqrt(d)).

A QuadScalar is a + b*sqrt(d) with rational a, b and a fixed non-square
rational d shared by all scalars of one computation; mixing two different
d values raises. No nested extensions: sqrt of a QuadScalar is not provided.
"""

from fractions import Fraction


class QuadScalar:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=None):
        if d is None:
            raise ValueError("QuadScalar requires an explicit discriminant d")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, *args):
        raise AttributeError("QuadScalar is immutable")

    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise ValueError("mixed quadratic contexts: d=%s vs d=%s" % (self.d, other.d))
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other, 0, self.d)
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return QuadScalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2; zero only for the zero scalar since d is non-square."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero quadratic scalar")
        return QuadScalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadScalar(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadScalar):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return repr(self.a)
        return "(%s + %s*sqrt(%s))" % (self.a, self.b, self.d)


def sqrt_of(d) -> QuadScalar:
    """The generator sqrt(d) of the extension with discriminant d."""
    return QuadScalar(0, 1, d)
