"""Truncated formal power series over Q with explicit truncation order.

A Series of order N is known modulo w^(N+1) and stores exactly N+1 rational
coefficients, constant term first. Binary operations return the minimum of
the two operand orders; there is no silent precision loss and no floating
point. Multiplying by w (`shifted`) raises the order, since a series known
mod w^(N+1) times w is known mod w^(N+2).
"""

from fractions import Fraction

from .combinat import binom_gen


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a Series stores at least its constant term")

    def __setattr__(self, *args):
        raise AttributeError("Series is immutable")

    @staticmethod
    def constant(c, order):
        return Series([c] + [0] * order)

    @staticmethod
    def identity(order):
        """The series w."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return Series([0, 1] + [0] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError("coefficient %d beyond truncation order %d" % (n, self.order))
        return self.coeffs[n]

    def truncated(self, order):
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return Series(self.coeffs[: order + 1])

    def shifted(self, k: int):
        """Multiply by w^k; the order grows by k."""
        return Series((0,) * k + self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def _wrap(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = o.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return Series(out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; requires nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ValueError("inverse requires nonzero constant term")
        n = self.order
        inv0 = Fraction(1) / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * n
        for k in range(1, n + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                s += self.coeffs[i] * out[k - i]
            out[k] = -s * inv0
        return Series(out)

    def compose(self, inner):
        """Self evaluated at `inner`; requires inner(0) = 0."""
        if inner.coeffs[0] != 0:
            raise ValueError("compose requires inner constant term zero")
        n = min(self.order, inner.order)
        result = Series.constant(0, n)
        inner = inner.truncated(n)
        for c in reversed(self.coeffs[: n + 1]):
            result = result * inner + c
        return result

    def derivative(self):
        if self.order == 0:
            raise ValueError("derivative of an order-0 series retains no terms")
        return Series([i * c for i, c in enumerate(self.coeffs)][1:])

    def odd_part(self):
        return Series([c if i % 2 == 1 else Fraction(0) for i, c in enumerate(self.coeffs)])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Series(%s; order=%d)" % (list(self.coeffs), self.order)


def binomial_series(a, inner: Series, order=None) -> Series:
    """(1 + inner)^a mod w^(order+1) for rational a; requires inner(0) = 0."""
    if inner.coeffs[0] != 0:
        raise ValueError("binomial_series requires inner constant term zero")
    if order is None:
        order = inner.order
    inner = inner.truncated(order)
    power = Series.constant(1, order)
    result = Series.constant(1, order)
    for k in range(1, order + 1):
        power = power * inner
        if power.is_zero():
            break
        result = result + binom_gen(a, k) * power
    return result


def series_sqrt(f: Series, order=None) -> Series:
    """Square root with constant term 1; callers factor out rational squares first."""
    if f.coeffs[0] != 1:
        raise ValueError("series_sqrt requires constant term 1")
    if order is None:
        order = f.order
    return binomial_series(Fraction(1, 2), f - 1, order)


def lagrange_invert(phi: Series, order: int) -> Series:
    """The unique u with u(0) = 0 and u = w * phi(u) mod w^(order+1).

    Coefficients come from the classical inversion rule
    [w^n] u = (1/n) [z^(n-1)] phi(z)^n; the fixed-point contract is
    re-checked independently by callers.
    """
    if phi.coeffs[0] == 0:
        raise ValueError("lagrange_invert requires phi(0) != 0")
    if order < 1:
        raise ValueError("order must be at least 1")
    if phi.order < order - 1:
        raise ValueError("phi must be known at least to order %d" % (order - 1))
    phi = phi.truncated(min(phi.order, order))
    out = [Fraction(0)] * (order + 1)
    power = Series.constant(1, phi.order)
    for n in range(1, order + 1):
        power = power * phi
        out[n] = power.coeffs[n - 1] / n
    return Series(out)
