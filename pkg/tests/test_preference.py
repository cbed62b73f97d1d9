import pytest
from hypothesis import given, strategies as st

from prefatt import (
    FitnessModel,
    ParameterError,
    PreferenceFunction,
    RandomSource,
    parse_fitness,
    parse_preference,
)


def test_linear_mass():
    f = PreferenceFunction.linear(1.0)
    assert f.mass(0, 2.0) == 2.0
    assert f.mass(3, 2.0) == 5.0
    g = PreferenceFunction.linear(2.5)
    assert g.mass(4, 1.0) == 11.0


def test_power_mass():
    f = PreferenceFunction.power(1.2)
    assert f.mass(0, 1.0) == 1.0  # 0**alpha is 0
    assert f.mass(1, 1.0) == 2.0
    assert f.mass(10, 1.0) == pytest.approx(16.84893192, abs=1e-6)


def test_mass_rejects_negative_inputs():
    f = PreferenceFunction.linear(1.0)
    with pytest.raises(ParameterError):
        f.mass(-1, 1.0)
    with pytest.raises(ParameterError):
        f.mass(1, -0.5)


def test_constructor_validation():
    with pytest.raises(ParameterError):
        PreferenceFunction("cubic")
    with pytest.raises(ParameterError):
        PreferenceFunction.linear(-0.1)
    with pytest.raises(ParameterError):
        PreferenceFunction.power(0.0)


@given(
    st.integers(min_value=0, max_value=10**6),
    st.floats(min_value=0.0, max_value=100.0, allow_nan=False),
    st.floats(min_value=0.0, max_value=10.0),
    st.floats(min_value=0.05, max_value=3.0),
)
def test_mass_monotone_and_nonnegative(x, fit, c, alpha):
    lin = PreferenceFunction.linear(c)
    pw = PreferenceFunction.power(alpha)
    for f in (lin, pw):
        m0 = f.mass(x, fit)
        m1 = f.mass(x + 1, fit)
        assert m0 >= 0.0
        assert m1 >= m0


def test_parse_preference_roundtrip():
    f = parse_preference("linear:c=1")
    assert f.kind == "linear" and f.coefficient == 1.0
    assert f.describe() == "linear:c=1"
    g = parse_preference("power:alpha=1.2")
    assert g.kind == "power" and g.exponent == 1.2
    assert g.describe() == "power:alpha=1.2"
    # bare 'linear' defaults the slope
    assert parse_preference("linear").coefficient == 1.0


@pytest.mark.parametrize("text", [
    "power",                 # alpha required
    "power:alpha=0",         # out of domain
    "linear:c=-1",
    "linear:alpha=2",        # wrong key
    "power:alpha=oops",
    "expo:rate=2",
    "linear:c",              # missing '='
])
def test_parse_preference_rejects(text):
    with pytest.raises(ParameterError):
        parse_preference(text)


def test_parse_fitness_roundtrip():
    for text, kind, loc in [
        ("const:3.5", "constant", 3.5),
        ("pareto:3.5", "pareto", 3.5),
        ("normal:1.8", "truncated_normal", 1.8),
    ]:
        m = parse_fitness(text)
        assert m.kind == kind and m.location == loc
        assert m.describe() == text


@pytest.mark.parametrize("text", [
    "const", "const:", "const:abc", "const:0", "const:-1",
    "pareto:1.0",  # scale would be zero
    "gauss:2.0",
])
def test_parse_fitness_rejects(text):
    with pytest.raises(ParameterError):
        parse_fitness(text)


def test_constant_fitness_draw():
    m = FitnessModel("constant", 3.5)
    src = RandomSource(1)
    assert all(m.draw(src) == 3.5 for _ in range(10))


def test_pareto_fitness_mean_is_location():
    # shape=loc, scale=loc-1 gives mean loc*(loc-1)/(loc-1) = loc
    m = FitnessModel("pareto", 3.5)
    src = RandomSource(21)
    n = 200000
    xs = [m.draw(src) for _ in range(n)]
    assert min(xs) >= 2.5
    assert sum(xs) / n == pytest.approx(3.5, abs=0.03)


def test_truncated_normal_fitness_moments():
    m = FitnessModel("truncated_normal", 1.8)
    src = RandomSource(22)
    n = 100000
    xs = [m.draw(src) for _ in range(n)]
    assert min(xs) >= 0.0
    assert sum(xs) / n == pytest.approx(1.8, abs=0.01)
    var = sum((x - 1.8) ** 2 for x in xs) / n
    assert var == pytest.approx(0.45 ** 2, rel=0.05)
