from fractions import Fraction

from hypothesis import given, settings, strategies as st

from oddcovers import weier
from oddcovers.weier import E1, E2, E3, P, Poly3, WeierExpr, WeierQuot, weier_derive


def test_generator_derivatives():
    p = WeierExpr(P)
    d = WeierExpr(0, 1)
    assert p.derive() == d
    assert d.derive() == WeierExpr(weier.PSECOND)


def test_half_period_values_sum_to_zero():
    assert (E1 + E2 + E3).is_zero()


def test_d_squared_reduces_to_cubic():
    d = WeierExpr(0, 1)
    assert d * d == WeierExpr(weier.CUBIC)


def test_derivation_consistency():
    assert weier.check_derivation_consistency()


coeffs = st.integers(min_value=-3, max_value=3)
monos = st.tuples(
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=1),
    st.integers(min_value=0, max_value=1),
)
poly3s = st.dictionaries(monos, coeffs, max_size=3).map(Poly3)
exprs = st.builds(WeierExpr, poly3s, poly3s)


@settings(max_examples=60)
@given(exprs, exprs)
def test_leibniz_rule(x, y):
    assert (x * y).derive() == x.derive() * y + x * y.derive()


@settings(max_examples=40)
@given(exprs, exprs)
def test_normal_form_is_canonical(x, y):
    # equality is coefficientwise equality of the normal forms
    assert (x == y) == ((x - y).even.is_zero() and (x - y).odd.is_zero())


def test_quotient_derive_quotient_rule():
    q = WeierQuot(WeierExpr(0, P - E2), WeierExpr(P - E1))
    derived = q.derive()
    manual_num = (
        WeierExpr(0, P - E2).derive() * WeierExpr(P - E1)
        - WeierExpr(0, P - E2) * WeierExpr(P - E1).derive()
    )
    assert derived == WeierQuot(manual_num, WeierExpr(P - E1) * WeierExpr(P - E1))


def test_weier_derive_dispatch():
    assert weier_derive(WeierExpr(P)) == WeierExpr(0, 1)
    assert isinstance(weier_derive(WeierQuot(WeierExpr(P))), WeierQuot)


def test_G_identities():
    assert weier.check_G_identities()


def test_Gtilde_identities():
    assert weier.check_Gtilde_identities()


def test_delta0_specializations():
    by_label = {s.label: s for s in weier.delta0_specializations()}
    assert by_label["e1=0"].value == "-2*E2^2"
    assert by_label["e2=0"].value == "10*E1^2"
    # the computed coefficient at e3=0 is 7; only nonvanishing is load-bearing
    assert by_label["e3=0 (e2=-e1)"].value == "7*E1^2"
    assert all(s.nonzero and s.monomial for s in by_label.values())


def test_gtilde_delta_specializations():
    values = [s.value for s in weier.gtilde_delta_specializations()]
    assert values == ["240*E2^2", "96*E1^2", "96*E1^2"]
    assert all(s.nonzero for s in weier.gtilde_delta_specializations())


def test_discriminant_constants():
    assert weier.quadratic_discriminant_in_P(weier.G_QUADRATIC) == 16 * weier.DELTA0
    assert weier.DELTA0 == 10 * E1 * E1 + E1 * E2 - 2 * E2 * E2


def test_substitution_numeric():
    # Delta0 at (e1, e2) = (1, 2): 10 + 2 - 8 = 4
    value = weier.DELTA0.substituted(e1=1, e2=2)
    assert value == Poly3.constant(Fraction(4))
