import io
import math

import pytest

from invarlab import (
    Body,
    ForceLaw,
    SingularityError,
    Trajectory,
    Vec3,
    angular_momentum_rate,
    coulomb,
    cross,
    finite_difference,
    free,
    gravity,
    integrate,
    linear_drag,
    merge_laws,
    momentum_rate,
    observables,
    pair_state,
    path_time,
    perp_demo,
    potential_value,
    spring,
)
from invarlab.dynamics import CSV_HEADER
from invarlab.forces import PropertyView

from helpers import kepler_pair


def test_isolated_pair_moves_on_a_straight_line():
    a = Body("A", 1.0, Vec3(0.3, -0.2, 1.0), Vec3(0.7, 0.1, -0.4))
    b = Body("B", 2.5, Vec3(-1.0, 0.4, 0.0), Vec3(-0.3, 0.5, 0.2))
    base = pair_state(a, b)
    traj = integrate(a, b, free(), 10.0, 0.01, "rk4")
    for t, (ta, tb) in zip(traj.times, traj.states):
        rel = pair_state(ta, tb)
        expected = base.x_ab + base.v_ab * t
        assert (rel.x_ab - expected).norm() < 1e-13 * max(1.0, expected.norm())
        assert rel.v_ab == base.v_ab


def test_circular_orbit_radius_is_steady():
    # |v_ab|^2 = g (m_a + m_b) / |x_ab| keeps the separation constant.
    a, b, period = kepler_pair(ma=1.0, mb=2.0, ecc=0.0)
    traj = integrate(a, b, gravity(1.0), period, period / 10_000.0, "rk4")
    r0 = pair_state(a, b).x_ab.norm()
    worst = max(abs(traj.relative(i).x_ab.norm() - r0) / r0 for i in range(len(traj)))
    assert worst < 1e-6


def test_spring_matches_analytic_oscillator():
    ma, mb, kappa = 1.0, 2.0, 1.3
    omega = math.sqrt(kappa * (ma + mb) / (ma * mb))
    period = 2.0 * math.pi / omega
    a = Body("A", ma, Vec3(1.0, 0.0, 0.2), Vec3(0.0, 0.5, 0.0))
    b = Body("B", mb, Vec3(-0.5, 0.0, 0.0), Vec3(0.0, -0.2, 0.1))
    base = pair_state(a, b)
    traj = integrate(a, b, spring(kappa), 10.0 * period, period / 2000.0, "rk4")
    worst = 0.0
    for t, (ta, tb) in zip(traj.times, traj.states):
        rel = pair_state(ta, tb)
        expected_x = base.x_ab * math.cos(omega * t) + base.v_ab * (math.sin(omega * t) / omega)
        expected_v = base.v_ab * math.cos(omega * t) - base.x_ab * (omega * math.sin(omega * t))
        worst = max(worst, (rel.x_ab - expected_x).norm(), (rel.v_ab - expected_v).norm())
    assert worst < 1e-8


def test_observables_at_rest():
    a = Body("A", 1.0, Vec3(2, 0, 0), Vec3(0, 0, 0))
    b = Body("B", 3.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    law = gravity(1.0)
    obs = observables(a, b, law)
    assert obs.total_momentum == Vec3(0, 0, 0)
    assert obs.angular_momentum == Vec3(0, 0, 0)
    assert obs.reduced_mass == pytest.approx(0.75)
    assert obs.internal_energy == pytest.approx(-1.0 * 3.0 / 2.0)  # V(r) = -g m_a m_b / r


def test_angular_momentum_zero_for_collinear_motion():
    a = Body("A", 1.0, Vec3(1, 0, 0), Vec3(2, 0, 0))
    b = Body("B", 1.0, Vec3(0, 0, 0), Vec3(-1, 0, 0))
    assert observables(a, b, free()).angular_momentum == Vec3(0, 0, 0)


def test_energy_absent_for_non_central_law():
    a = Body("A", 1.0, Vec3(1, 0, 0), Vec3(0, 1, 0))
    b = Body("B", 1.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    assert observables(a, b, linear_drag(0.5)).internal_energy is None
    assert observables(a, b, perp_demo(1.0)).internal_energy is None


def test_registered_potentials_match_force_by_finite_differences():
    a = Body("A", 1.2, Vec3(1.7, 0, 0), Vec3(0, 0, 0), {"charge": 2.0})
    b = Body("B", 0.8, Vec3(0, 0, 0), Vec3(0, 0, 0), {"charge": -0.5})
    h = 1e-6
    for law in (gravity(0.7), coulomb(1.3), spring(2.1)):
        qa, qb = PropertyView(a), PropertyView(b)
        for r in (0.8, 1.7, 3.0):
            dv = (potential_value(law, a, b, r + h) - potential_value(law, a, b, r - h)) / (2 * h)
            # -dV/dr must equal phi_e(r) * r
            phi = law.phi_e(qa, qb, r, 0.0, 0.0)
            assert abs(-dv - phi * r) < 1e-6 * max(1.0, abs(phi * r))


def test_potential_quadrature_fallback_matches_closed_form():
    bare = ForceLaw(
        "bare-gravity",
        phi_e=lambda qa, qb, r, v, c: -qa["mass"] * qb["mass"] / r**3,
        singular=True,
    )
    a = Body("A", 2.0, Vec3(1, 0, 0), Vec3(0, 0, 0))
    b = Body("B", 3.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    for r1, r2 in ((0.5, 2.0), (1.0, 4.0)):
        numeric = potential_value(bare, a, b, r2) - potential_value(bare, a, b, r1)
        closed = (-6.0 / r2) - (-6.0 / r1)
        assert abs(numeric - closed) < 1e-10


def test_path_time_straight_segment():
    assert path_time([Vec3(0, 0, 0), Vec3(2, 0, 0)], lambda s: 1.0) == pytest.approx(2.0)


def test_path_time_constant_speed_is_length_over_speed():
    pts = [Vec3(0, 0, 0), Vec3(1, 1, 0), Vec3(1, 1, 3)]
    length = math.sqrt(2.0) + 3.0
    assert path_time(pts, lambda s: 4.0) == pytest.approx(length / 4.0, rel=1e-12)


def test_path_time_piecewise_speeds():
    pts = [Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0)]
    assert path_time(pts, lambda s: 1.0 if s < 1.0 else 2.0) == pytest.approx(1.5, rel=1e-10)


def test_path_time_rejects_bad_input():
    with pytest.raises(ValueError):
        path_time([Vec3(0, 0, 0)], lambda s: 1.0)
    with pytest.raises(ValueError):
        path_time([Vec3(0, 0, 0), Vec3(1, 0, 0)], lambda s: 0.0)
    with pytest.raises(ValueError):
        path_time([Vec3(0, 0, 0), Vec3(1, 0, 0)], lambda s: -2.0)


def test_verlet_rejects_velocity_dependent_law():
    a = Body("A", 1.0, Vec3(1, 0, 0), Vec3(0, 1, 0))
    b = Body("B", 1.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    with pytest.raises(ValueError):
        integrate(a, b, linear_drag(0.1), 1.0, 0.01, "verlet")


def test_unknown_method_rejected():
    a = Body("A", 1.0, Vec3(1, 0, 0), Vec3(0, 1, 0))
    b = Body("B", 1.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    with pytest.raises(ValueError):
        integrate(a, b, gravity(), 1.0, 0.01, "leapfrog")
    with pytest.raises(ValueError):
        integrate(a, b, gravity(), 1.0, -0.01)


def test_immediate_singularity_is_an_error():
    a = Body("A", 1.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    b = Body("B", 1.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    with pytest.raises(SingularityError):
        integrate(a, b, gravity(1.0), 1.0, 0.01)


def test_verlet_and_rk4_agree_on_short_kepler_arc():
    a, b, period = kepler_pair(ecc=0.05)
    law = gravity(1.0)
    t_end, step = period / 4.0, period / 8000.0
    r1 = integrate(a, b, law, t_end, step, "rk4")
    r2 = integrate(a, b, law, t_end, step, "verlet")
    last = len(r1) - 1
    gap = (r1.relative(last).x_ab - r2.relative(last).x_ab).norm()
    assert gap < 1e-5


def test_trajectory_invariants_enforced():
    a = Body("A", 1.0, Vec3(1, 0, 0), Vec3(0, 0, 0))
    b = Body("B", 1.0, Vec3(0, 0, 0), Vec3(0, 0, 0))
    with pytest.raises(ValueError):
        Trajectory((0.0, 0.0), ((a, b), (a, b)), free(), "rk4", 0.1)
    with pytest.raises(ValueError):
        Trajectory((0.0, 0.1), ((a, b),), free(), "rk4", 0.1)


def test_finite_difference_on_linear_series():
    times = [0.0, 0.5, 1.0, 1.5]
    values = [Vec3(2.0 * t, -t, 0.0) for t in times]
    for d in finite_difference(values, times):
        assert (d - Vec3(2.0, -1.0, 0.0)).norm() < 1e-12


def test_momentum_rate_matches_finite_differences():
    a = Body("A", 1.0, Vec3(0.5, 0, 0), Vec3(0, 0.4, 0))
    b = Body("B", 2.0, Vec3(-0.5, 0, 0), Vec3(0, -0.2, 0))
    law = perp_demo(1.0)
    traj = integrate(a, b, law, 1.0, 0.001, "rk4")
    momenta = [
        ta.velocity * ta.mass + tb.velocity * tb.mass for ta, tb in traj.states
    ]
    rates = finite_difference(momenta, traj.times)
    mid = len(traj) // 2
    ta, tb = traj.states[mid]
    assert (rates[mid] - momentum_rate(ta, tb, law)).norm() < 1e-5


def test_angular_momentum_rate_matches_finite_differences():
    a = Body("A", 1.0, Vec3(0.5, 0.1, 0), Vec3(0, 0.4, 0.1))
    b = Body("B", 2.0, Vec3(-0.5, 0, 0), Vec3(0, -0.2, 0))
    law = merge_laws((linear_drag(0.3), perp_demo(0.5)))
    traj = integrate(a, b, law, 1.0, 0.001, "rk4")
    mu = a.mass * b.mass / (a.mass + b.mass)
    series = [
        cross(pair_state(ta, tb).x_ab, pair_state(ta, tb).v_ab * mu) for ta, tb in traj.states
    ]
    rates = finite_difference(series, traj.times)
    mid = len(traj) // 2
    ta, tb = traj.states[mid]
    assert (rates[mid] - angular_momentum_rate(ta, tb, law)).norm() < 1e-5


def test_merged_trajectory_equals_hand_summed_law():
    # Independent construction of the sum: one coefficient that adds the
    # two formulas directly.
    g, kappa = 1.0, 0.8
    merged = merge_laws((gravity(g), spring(kappa)))
    hand = ForceLaw(
        "hand-sum",
        phi_e=lambda qa, qb, r, v, c: -g * qa["mass"] * qb["mass"] / r**3 - kappa,
        singular=True,
    )
    a = Body("A", 1.0, Vec3(1.0, 0, 0), Vec3(0, 0.9, 0))
    b = Body("B", 2.0, Vec3(-0.5, 0, 0), Vec3(0, -0.45, 0))
    t1 = integrate(a, b, merged, 2.0, 0.002, "rk4")
    t2 = integrate(a, b, hand, 2.0, 0.002, "rk4")
    for i in (0, len(t1) // 2, len(t1) - 1):
        assert (t1.relative(i).x_ab - t2.relative(i).x_ab).norm() < 1e-12


def test_csv_export_format():
    a, b, period = kepler_pair()
    traj = integrate(a, b, gravity(1.0), period / 10.0, period / 100.0, "rk4")
    buffer = io.StringIO()
    traj.write_csv(buffer)
    lines = buffer.getvalue().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == len(traj) + 1
    first = lines[1].split(",")
    assert len(first) == 20
    assert first[0] == "0.0"
    assert first[-1] != ""  # central law: energy column populated

    drag_traj = integrate(a, b, linear_drag(0.1), 0.1, 0.01, "rk4")
    buffer = io.StringIO()
    drag_traj.write_csv(buffer)
    row = buffer.getvalue().splitlines()[1].split(",")
    assert row[-1] == ""  # energy undefined: blank, not zero
