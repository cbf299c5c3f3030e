import math
import random

import pytest
from hypothesis import given, strategies as st

from invarlab import (
    BoundedVelocity,
    GFunction,
    Vec3,
    check_invariance_theorem,
    classical_g,
    classical_light_quotient,
    light_quotient,
    lorentz_g,
    oplus,
    proper_time,
    rational_g,
    zero_velocity,
)

from helpers import random_unit


def bisect_weighted_speed(gfun, target, iterations=200):
    """Independent bisection oracle for w G(w) = target."""
    lo, hi = 0.0, gfun.c * (1.0 - 1e-15)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if mid * gfun.g(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_g_function_validation():
    with pytest.raises(ValueError):
        GFunction("bad-at-rest", 1.0, lambda a: 2.0)
    with pytest.raises(ValueError):
        GFunction("decreasing", 1.0, lambda a: 1.0 - a if a < 0.5 else 1.0 + a)
    with pytest.raises(ValueError):
        GFunction("negative-c", -1.0, lambda a: 1.0)
    lorentz_g(2.0)  # fine
    rational_g(0.5)
    classical_g()


def test_g_function_domain():
    g = lorentz_g(1.0)
    assert g(0.0) == 1.0
    with pytest.raises(ValueError):
        g(1.0)
    with pytest.raises(ValueError):
        g(-0.1)


def test_bounded_velocity_requires_speed_below_c():
    g = lorentz_g(1.0)
    BoundedVelocity(Vec3(0.999, 0, 0), g)
    with pytest.raises(ValueError):
        BoundedVelocity(Vec3(1.0, 0, 0), g)
    with pytest.raises(ValueError):
        BoundedVelocity(Vec3(0.8, 0.8, 0), g)


def test_mixed_profiles_rejected():
    u = BoundedVelocity(Vec3(0.1, 0, 0), lorentz_g(1.0))
    v = BoundedVelocity(Vec3(0.1, 0, 0), rational_g(1.0))
    w = BoundedVelocity(Vec3(0.1, 0, 0), lorentz_g(2.0))
    with pytest.raises(ValueError):
        oplus(u, v)
    with pytest.raises(ValueError):
        oplus(u, w)


def test_neutral_element():
    g = lorentz_g(1.0)
    u = BoundedVelocity(Vec3(0.3, -0.4, 0.1), g)
    assert (oplus(u, zero_velocity(g)).v - u.v).norm() < 1e-15
    assert (oplus(zero_velocity(g), u).v - u.v).norm() < 1e-15


def test_inverse_element():
    g = rational_g(1.0)
    u = BoundedVelocity(Vec3(0.5, 0.2, -0.6), g)
    assert oplus(u, -u).v.norm() == 0.0


def test_collinear_addition_against_bisection_oracle():
    g = lorentz_g(1.0)
    u = BoundedVelocity(Vec3(0.6, 0, 0), g)
    w = oplus(u, u)
    oracle = bisect_weighted_speed(g, 1.5)  # g(0.6) * 0.6 * 2 = 1.5
    assert abs(w.v.x - oracle) < 1e-12
    assert abs(w.v.x - 0.8320502943378437) < 1e-12
    assert abs(w.v.x - 1.5 / math.sqrt(3.25)) < 1e-14


def test_weighted_vector_reconstruction():
    rng = random.Random(30)
    for gfun in (lorentz_g(1.0), rational_g(2.0)):
        for _ in range(200):
            u = BoundedVelocity(random_unit(rng) * (rng.uniform(0, 0.98) * gfun.c), gfun)
            v = BoundedVelocity(random_unit(rng) * (rng.uniform(0, 0.98) * gfun.c), gfun)
            w = oplus(u, v)
            rhs = u.weighted() + v.weighted()
            assert (w.weighted() - rhs).norm() < 1e-12 * (1.0 + rhs.norm())
            assert w.speed < gfun.c


def test_monotone_consistency_bound():
    # |u (+) v| never exceeds the inverse image of the summed weighted
    # norms; equality only for aligned operands.
    rng = random.Random(31)
    g = lorentz_g(1.0)
    for _ in range(100):
        u = BoundedVelocity(random_unit(rng) * rng.uniform(0.05, 0.95), g)
        v = BoundedVelocity(random_unit(rng) * rng.uniform(0.05, 0.95), g)
        w = oplus(u, v)
        cap = g.solve_speed(g.weighted_norm(u.speed) + g.weighted_norm(v.speed))
        assert w.speed <= cap + 1e-12
    u = BoundedVelocity(Vec3(0.5, 0, 0), g)
    v = BoundedVelocity(Vec3(0.25, 0, 0), g)
    aligned = oplus(u, v)
    cap = g.solve_speed(g.weighted_norm(0.5) + g.weighted_norm(0.25))
    assert abs(aligned.speed - cap) < 1e-13


speeds = st.floats(min_value=0.0, max_value=0.95)


@given(speeds, speeds, st.floats(min_value=0.0, max_value=2 * math.pi))
def test_commutativity_property(s1, s2, angle):
    g = lorentz_g(1.0)
    u = BoundedVelocity(Vec3(s1, 0.0, 0.0), g)
    v = BoundedVelocity(Vec3(s2 * math.cos(angle), s2 * math.sin(angle), 0.0), g)
    assert (oplus(u, v).v - oplus(v, u).v).norm() < 1e-12


@given(speeds, speeds, speeds)
def test_associativity_property_collinear(s1, s2, s3):
    g = rational_g(1.0)
    u, v, w = (BoundedVelocity(Vec3(s, 0, 0), g) for s in (s1, s2, s3))
    left = oplus(oplus(u, v), w)
    right = oplus(u, oplus(v, w))
    assert (left.v - right.v).norm() < 1e-10


def test_solve_speed_round_trips_near_the_bound():
    for gfun in (lorentz_g(1.0), rational_g(0.5)):
        for frac in (0.1, 0.9, 0.999, 0.999999, 1.0 - 1e-12):
            speed = frac * gfun.c
            recovered = gfun.solve_speed(gfun.weighted_norm(speed))
            assert abs(recovered - speed) < 1e-12 * gfun.c


def test_closure_survives_extreme_operands():
    g = lorentz_g(1.0)
    u = BoundedVelocity(Vec3(0.99999, 0, 0), g)
    w = oplus(u, u)
    assert w.speed < 1.0
    assert w.speed > 0.99999  # composing forward motions only gets faster
    head_on = oplus(u, -u)
    assert head_on.v.norm() == 0.0


def test_monotone_bound_is_strict_off_axis():
    g = lorentz_g(1.0)
    u = BoundedVelocity(Vec3(0.6, 0, 0), g)
    v = BoundedVelocity(Vec3(0, 0.6, 0), g)
    cap = g.solve_speed(g.weighted_norm(0.6) * 2.0)
    assert oplus(u, v).speed < cap - 1e-6


def test_classical_profile_degenerates_to_vector_addition():
    g = classical_g()
    rng = random.Random(32)
    for _ in range(100):
        u = BoundedVelocity(random_unit(rng) * rng.uniform(0, 50), g)
        v = BoundedVelocity(random_unit(rng) * rng.uniform(0, 50), g)
        w = oplus(u, v)
        assert (w.v - (u.v + v.v)).norm() < 1e-9 * (1.0 + (u.v + v.v).norm())


def test_proper_time_at_rest_equals_subjective_time():
    g = lorentz_g(1.0)
    assert proper_time(3.5, zero_velocity(g)) == 3.5


def test_proper_time_divides_by_weight():
    # Pick the speed where G = 2: for the lorentz profile a = sqrt(3)/2 c.
    g = lorentz_g(1.0)
    v = BoundedVelocity(Vec3(math.sqrt(3.0) / 2.0, 0, 0), g)
    assert proper_time(1.0, v) == pytest.approx(0.5, rel=1e-12)


def test_proper_time_strictly_decreasing_in_speed():
    g = rational_g(1.0)
    taus = [
        proper_time(1.0, BoundedVelocity(Vec3(s, 0, 0), g))
        for s in (0.0, 0.2, 0.4, 0.6, 0.8, 0.95)
    ]
    assert all(t2 < t1 for t1, t2 in zip(taus, taus[1:]))


def test_invariance_theorem_holds_generally():
    rng = random.Random(33)
    for gfun in (lorentz_g(1.0), rational_g(1.0)):
        for _ in range(100):
            v2 = BoundedVelocity(random_unit(rng) * rng.uniform(0, 0.95), gfun)
            v3 = BoundedVelocity(random_unit(rng) * rng.uniform(0, 0.95), gfun)
            result = check_invariance_theorem(v2, v3, rng.uniform(0.1, 3.0))
            assert result.passed, result.detail


def test_invariance_theorem_zero_leg_reduces_to_identity():
    g = lorentz_g(1.0)
    v2 = BoundedVelocity(Vec3(0.4, 0.1, 0), g)
    result = check_invariance_theorem(v2, zero_velocity(g), 1.0)
    assert result.passed
    assert result.residual < 1e-14


def test_invariance_break_is_first_order():
    g = lorentz_g(1.0)
    v2 = BoundedVelocity(Vec3(0.5, 0, 0), g)
    v3 = BoundedVelocity(Vec3(0, 0.3, 0), g)
    duration, eps = 1.7, 0.01
    v1 = oplus(v2, v3)
    dt1 = duration * v1.weight()
    dt2 = duration * v2.weight()
    dt3 = duration * v3.weight()
    lhs = v1.v * dt1
    broken = (lhs - v2.v * (dt2 * (1 + eps)) - v3.v * dt3).norm()
    predicted = eps * dt2 * v2.speed
    assert abs(broken - predicted) <= 0.1 * predicted


def test_proper_time_consistent_across_chained_composition():
    # Three-frame chains: the weighted representative is additive, so the
    # proper interval of one process agrees no matter how the chain is cut.
    rng = random.Random(34)
    g = lorentz_g(1.0)
    for _ in range(50):
        u = BoundedVelocity(random_unit(rng) * rng.uniform(0, 0.9), g)
        v = BoundedVelocity(random_unit(rng) * rng.uniform(0, 0.9), g)
        w = BoundedVelocity(random_unit(rng) * rng.uniform(0, 0.9), g)
        total = oplus(oplus(u, v), w)
        duration = 1.3
        subjective = duration * total.weight()
        assert proper_time(subjective, total) == pytest.approx(duration, rel=1e-12)


def test_light_quotient_rest_frame():
    g = lorentz_g(1.0)
    assert light_quotient(zero_velocity(g), 2.0) == pytest.approx(1.0, rel=1e-15)


def test_light_quotient_frame_independent():
    rng = random.Random(35)
    for gfun in (lorentz_g(1.0), rational_g(3.0)):
        for _ in range(20):
            boost = BoundedVelocity(random_unit(rng) * (rng.uniform(0, 0.9) * gfun.c), gfun)
            q = light_quotient(boost, rng.uniform(0.5, 5.0))
            assert abs(q - gfun.c) < 1e-12 * gfun.c


def test_light_quotient_rejects_bad_input():
    g = lorentz_g(1.0)
    with pytest.raises(ValueError):
        light_quotient(zero_velocity(g), 0.0)
    with pytest.raises(ValueError):
        light_quotient(zero_velocity(classical_g()), 1.0)


def classical_two_leg_prediction(boost: Vec3, signal_speed: float, axis: Vec3) -> float:
    """Closed-form two-leg echo quotient under plain vector addition."""
    v2 = boost.norm() ** 2
    unit = axis / axis.norm()
    p = unit.x * boost.x + unit.y * boost.y + unit.z * boost.z
    return (signal_speed**2 - v2) / math.sqrt(p * p + signal_speed**2 - v2)


def test_classical_quotient_longitudinal_and_transverse():
    c = 1.0
    longitudinal = classical_light_quotient(Vec3(0.5, 0, 0), 2.0, c)
    assert longitudinal == pytest.approx(0.75, abs=1e-12)  # c (1 - v^2/c^2)
    transverse = classical_light_quotient(Vec3(0, 0.5, 0), 2.0, c)
    assert transverse == pytest.approx(math.sqrt(0.75), abs=1e-12)


def test_classical_quotient_matches_prediction_generally():
    rng = random.Random(36)
    for _ in range(50):
        boost = random_unit(rng) * rng.uniform(0.0, 0.9)
        q = classical_light_quotient(boost, 3.0, 1.0)
        assert abs(q - classical_two_leg_prediction(boost, 1.0, Vec3(1, 0, 0))) < 1e-10


def test_classical_quotient_rejects_outrunning_apparatus():
    with pytest.raises(ValueError):
        classical_light_quotient(Vec3(2.0, 0, 0), 1.0, 1.0)
