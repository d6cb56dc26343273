"""The alternating Catalan numbers A_g by four independent routes.

Routes: the closed alternating sum, coefficient extraction from an explicit
product of binomial series, expansion of the algebraic generating function,
and Lagrange inversion. All four agree exactly; the Schubert-calculus route
lives in `schubert` and is bound to these by `sigma3_route_check`.

The closed formula is evaluated for every g >= 0: the small-g values are the
formal values of the sum and agree with the generating series.
"""

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binom_int, binom_gen, catalan, decimal_root_string
from .series import Series, binomial_series, series_sqrt, lagrange_invert
from . import schubert


def alt_catalan_closed(g: int) -> int:
    """A_g = 16^g * sum_i (-2)^i C(g,i) Catalan(2g-i)."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    return 16 ** g * sum(
        (-2) ** i * binom_int(g, i) * catalan(2 * g - i) for i in range(g + 1)
    )


def alt_catalan_coeff_form(g: int) -> int:
    """A_g as [z^(2g+1)] of 2^(8g+1) (1+z/2)^g (1+z)^(1/2)."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    order = 2 * g + 1
    z = Series.identity(order)
    prod = binomial_series(g, Fraction(1, 2) * z) * binomial_series(Fraction(1, 2), z)
    value = 2 ** (8 * g + 1) * prod[order]
    if value.denominator != 1:
        raise AssertionError("coefficient route produced a non-integer: %s" % value)
    return int(value)


def genfun_series(order: int) -> Series:
    """The generating series sum_g A_g w^(2g+1), expanded to the given order.

    Built from 2w / (sqrt(1+64w^2+16w*s) + sqrt(1+64w^2-16w*s)) with
    s = sqrt(1+16w^2); every even coefficient vanishes.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    w = Series.identity(order)
    s = series_sqrt(1 + 16 * (w * w))
    even = 1 + 64 * (w * w)
    cross = 16 * (w * s)
    denom = series_sqrt(even + cross) + series_sqrt(even - cross)
    return (2 * w) * denom.inverse()


def phi_series(order: int) -> Series:
    """phi(z) = 16 (1+z/2)^(1/2)."""
    z = Series.identity(order)
    return 16 * binomial_series(Fraction(1, 2), Fraction(1, 2) * z)


def psi_series(order: int) -> Series:
    """psi(z) = (1/8) (1+z)^(1/2) (1+z/2)^(-1/2)."""
    z = Series.identity(order)
    return Fraction(1, 8) * (
        binomial_series(Fraction(1, 2), z)
        * binomial_series(Fraction(-1, 2), Fraction(1, 2) * z)
    )


def fmod_series(order: int) -> Series:
    """Independent closed-form expansion of f(w):
    sqrt(64w^2 + 1 + 16w sqrt(16w^2+1)) / (8 sqrt(16w^2+1))."""
    w = Series.identity(order)
    s = series_sqrt(1 + 16 * (w * w))
    radicand = 1 + 64 * (w * w) + 16 * (w * s)
    return series_sqrt(radicand) * (8 * s).inverse()


def lagrange_pipeline(order: int):
    """Return (u, f, h) from the Lagrange-inversion route, with contracts checked.

    u solves u = w phi(u); f = psi(u) / (1 - w phi'(u)); h is the odd part of f
    and carries A_g at w^(2g+1). Raises AssertionError if u fails either of its
    defining relations or if f disagrees with the independent closed-form
    expansion.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    phi = phi_series(order)
    psi = psi_series(order)
    u = lagrange_invert(phi, order)

    residual = u - phi.compose(u).shifted(1).truncated(order)
    if not residual.is_zero():
        raise AssertionError("u = w*phi(u) violated: %r" % residual)
    # Algebraic form of the same relation: 256 w^2 (1 + u/2) = u^2.
    w = Series.identity(order)
    alg = 256 * ((w * w) * (1 + Fraction(1, 2) * u)) - u * u
    if not alg.is_zero():
        raise AssertionError("256 w^2 (1+u/2) = u^2 violated: %r" % alg)

    dphi = phi.derivative()
    f = psi.compose(u) * (1 - dphi.compose(u).shifted(1)).inverse()

    independent = fmod_series(order).truncated(f.order)
    if f != independent:
        raise AssertionError("Lagrange route disagrees with closed-form f(w)")

    return u, f, independent.odd_part()


def binomial_identity_check(g: int) -> bool:
    """sum_k (-1)^k 2^(g-k) C(g,k) C(g-k,i) == C(g,i) 2^i for every 0 <= i <= g."""
    for i in range(g + 1):
        lhs = sum(
            (-1) ** k * 2 ** (g - k) * binom_int(g, k) * binom_int(g - k, i)
            for k in range(g - i + 1)
        )
        if lhs != binom_int(g, i) * 2 ** i:
            return False
    return True


def catalan_half_binomial_check(n: int) -> bool:
    """Catalan(n) == (-1)^n 2^(2n+1) binom(1/2, n+1), the square-root-series rewrite."""
    return catalan(n) == (-1) ** n * 2 ** (2 * n + 1) * binom_gen(Fraction(1, 2), n + 1)


def sigma3_route_check(g: int) -> bool:
    """16^g * top((sigma_1 sigma_3)^g) in G(2,2g+2) equals the closed formula."""
    if not 1 <= g <= 8:
        raise ValueError("sigma3_route_check covers 1 <= g <= 8")
    n = 2 * g + 2
    s1s3 = schubert.SchubertVector.unit(n).pieri(3).pieri(1)
    return 16 ** g * (s1s3 ** g).top_eval() == alt_catalan_closed(g)


@dataclass(frozen=True)
class GrowthRow:
    g: int
    ratio: Fraction | None  # A_{g+1} / A_g; None on the last row
    root_estimate: str  # decimal string for A_g^(1/(2g+1))


# Thresholds frozen from an oracle run of the closed formula to g = 40:
# every ratio lies strictly below 128, the (2g+1)-th roots increase strictly
# over g in [2, 40], and every root stays strictly below 16/sqrt(2)
# (equivalently A_g^2 < 128^(2g+1)); the g = 40 root is about 9.975149.
RATIO_BOUND = 128
ROOT_WINDOW_START = 2


def growth_report(max_g: int):
    """Ratios and root estimates for A_g, with the frozen growth assertions.

    Every comparison is exact integer/rational arithmetic; the decimal strings
    are produced by integer root extraction and only appear in the report.
    """
    if max_g < 5:
        raise ValueError("growth_report needs max_g >= 5")
    values = {g: alt_catalan_closed(g) for g in range(ROOT_WINDOW_START, max_g + 1)}
    rows = []
    for g in range(ROOT_WINDOW_START, max_g):
        ratio = Fraction(values[g + 1], values[g])
        if not ratio < RATIO_BOUND:
            raise AssertionError("ratio A_%d/A_%d = %s breaches the bound %d"
                                 % (g + 1, g, ratio, RATIO_BOUND))
        rows.append(GrowthRow(g, ratio, decimal_root_string(values[g], 2 * g + 1)))
    rows.append(GrowthRow(max_g, None, decimal_root_string(values[max_g], 2 * max_g + 1)))
    for g in range(ROOT_WINDOW_START, max_g):
        # A_g^(1/(2g+1)) < A_{g+1}^(1/(2g+3)), compared exactly in integers
        if not values[g] ** (2 * g + 3) < values[g + 1] ** (2 * g + 1):
            raise AssertionError("root estimates fail to increase at g=%d" % g)
    for g in range(ROOT_WINDOW_START, max_g + 1):
        # A_g^(1/(2g+1)) < 16/sqrt(2) iff A_g^2 < 128^(2g+1)
        if not values[g] ** 2 < 128 ** (2 * g + 1):
            raise AssertionError("root estimate at g=%d is not below 16/sqrt(2)" % g)
    return rows


ROUTES = ("closed", "coeff_form", "schubert", "genfun", "lagrange")


def compute_route(g: int, route: str, n4: int = 16, n5: int = 16) -> int:
    """Single-g dispatcher used by the command line front end."""
    if route == "closed":
        return alt_catalan_closed(g)
    if route == "coeff_form":
        return alt_catalan_coeff_form(g)
    if route == "schubert":
        return schubert.alt_catalan_schubert(g, n4, n5)
    if route == "genfun":
        value = genfun_series(2 * g + 1)[2 * g + 1]
        return int(value)
    if route == "lagrange":
        _, _, h = lagrange_pipeline(2 * g + 1)
        return int(h[2 * g + 1])
    raise ValueError("unknown route %r" % route)
