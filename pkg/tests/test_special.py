import pytest

from chdyn import (
    JuliaClass,
    RealBracket,
    build_ra,
    classify_ra,
    find_a_q,
    find_a_star,
    q0_cycle,
    real_critical_value,
    real_root_bisect,
)
from chdyn.errors import CycleNotFound, NoSignChange


def test_real_root_bisect_polynomial():
    res = real_root_bisect(lambda x: x * x - 2, RealBracket(0, 2))
    assert abs(res.value - 2**0.5) < 1e-12
    assert res.residual <= 1e-12
    with pytest.raises(NoSignChange):
        real_root_bisect(lambda x: x * x + 1, RealBracket(0, 2))


def test_bracket_validation():
    with pytest.raises(ValueError):
        RealBracket(1.0, 1.0)
    with pytest.raises(NoSignChange):
        RealBracket.checked(lambda x: 1.0, 0.0, 1.0)


def test_real_critical_value():
    v = real_critical_value(-0.0164)
    assert abs(v - 0.16279133117171196) < 1e-9
    with pytest.raises(ValueError):
        real_critical_value(0.5)


def test_q0_cycle_at_zero():
    q0, q_inf = q0_cycle(0.0)
    assert abs(q0 - 0.2087121525220621) < 1e-9
    assert q_inf > 1
    r0 = build_ra(0.0)
    assert abs(r0(complex(q0)).real - q_inf) < 1e-9
    assert abs(r0(complex(q_inf)).real - q0) < 1e-9


def test_q0_cycle_bad_bracket():
    with pytest.raises(CycleNotFound):
        q0_cycle(0.0, bracket=RealBracket(0.3, 0.4))


def test_find_a_q():
    res = find_a_q()
    assert -0.028 < res.value < -0.0164
    assert res.residual <= 1e-10
    assert res.kind == "a_q"
    # defining property: critical value sits on the 2-cycle
    assert abs(real_critical_value(res.value) - q0_cycle(res.value)[0]) <= 1e-10


def test_find_a_star():
    aq = find_a_q().value
    res = find_a_star()
    assert aq < res.value < 0
    assert res.residual <= 1e-10
    assert abs(res.value - (-0.0164)) < 0.005
    ra = build_ra(res.value)
    v = real_critical_value(res.value)
    second = ra(complex(ra(complex(v))))
    assert abs(second) <= 1e-10
    assert classify_ra(res.value).julia_class is JuliaClass.SIERPINSKI
