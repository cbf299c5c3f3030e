"""Two-body motion under a pairwise law, and the quantities conserved
along it.

The coupled equations of motion are

    m_a x_a'' = f(pair state)      m_b x_b'' = k(pair state)

integrated with fixed-step classic Runge-Kutta (general laws) or velocity
Verlet (central laws only, where its bounded energy oscillation makes the
conservation audits sharper). Observables along a trajectory:

    total momentum    P = m_a v_a + m_b v_b
    angular momentum  L = x_ab x (mu v_ab),  mu = m_a m_b / (m_a + m_b)
    internal energy   E = mu |v_ab|^2 / 2 + V(|x_ab|)   (central laws)

with the potential V taken from the law's registered closed form or
recovered by quadrature of the radial coefficient, V'(r) = -phi_e(r) r.
Exact statements the audits lean on:

    dP/dt = f + k = 2 (x_ab x v_ab) phi_perp
    dL/dt = (x_ab x v_ab) phi_s
            + (m_b - m_a)/(m_a + m_b) x_ab x (x_ab x v_ab) phi_perp
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, IO, Sequence

from .core import Body, PairState, Vec3, cross, pair_state
from .forces import ForceLaw, PropertyView, raw_force_pair

__all__ = [
    "Trajectory",
    "Observables",
    "CSV_HEADER",
    "integrate",
    "observables",
    "potential_value",
    "path_time",
    "momentum_rate",
    "angular_momentum_rate",
    "finite_difference",
]

CSV_HEADER = (
    "t,ax,ay,az,avx,avy,avz,bx,by,bz,bvx,bvy,bvz,Px,Py,Pz,Lx,Ly,Lz,E"
)

DEFAULT_POTENTIAL_REFERENCE = 1.0


@dataclass(frozen=True)
class Observables:
    """Conserved-candidate quantities of a pair state under a law.

    ``internal_energy`` is None (absent, not zero) when the law is not
    central.
    """

    total_momentum: Vec3
    angular_momentum: Vec3
    internal_energy: float | None
    reduced_mass: float


@dataclass(frozen=True)
class Trajectory:
    """Time-ordered snapshots of the pair, step metadata attached."""

    times: tuple[float, ...]
    states: tuple[tuple[Body, Body], ...]
    law: ForceLaw
    method: str
    step: float

    def __post_init__(self) -> None:
        if len(self.times) != len(self.states):
            raise ValueError("times and states must have equal length")
        if any(t1 >= t2 for t1, t2 in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.times)

    def relative(self, i: int) -> PairState:
        a, b = self.states[i]
        return pair_state(a, b)

    def observables(self, i: int) -> Observables:
        a, b = self.states[i]
        return observables(a, b, self.law)

    def write_csv(self, stream: IO[str]) -> None:
        """One row per sample; the energy column is blank when undefined."""
        stream.write(CSV_HEADER + "\n")
        for t, (a, b) in zip(self.times, self.states):
            obs = observables(a, b, self.law)
            cells = [
                t,
                a.position.x, a.position.y, a.position.z,
                a.velocity.x, a.velocity.y, a.velocity.z,
                b.position.x, b.position.y, b.position.z,
                b.velocity.x, b.velocity.y, b.velocity.z,
                obs.total_momentum.x, obs.total_momentum.y, obs.total_momentum.z,
                obs.angular_momentum.x, obs.angular_momentum.y, obs.angular_momentum.z,
            ]
            row = ",".join(repr(c) for c in cells)
            energy = "" if obs.internal_energy is None else repr(obs.internal_energy)
            stream.write(f"{row},{energy}\n")


def _accel_fn(law: ForceLaw, a0: Body, b0: Body) -> Callable[..., tuple[float, ...]]:
    """Acceleration closure on raw floats; property maps are fixed along
    a trajectory, so the views are bound once."""
    qa, qb = PropertyView(a0), PropertyView(b0)
    inv_ma, inv_mb = 1.0 / a0.mass, 1.0 / b0.mass

    def accels(xa, ya, za, vax, vay, vaz, xb, yb, zb, vbx, vby, vbz):
        fx, fy, fz, kx, ky, kz = raw_force_pair(
            law, qa, qb, xa - xb, ya - yb, za - zb, vax - vbx, vay - vby, vaz - vbz
        )
        return (fx * inv_ma, fy * inv_ma, fz * inv_ma, kx * inv_mb, ky * inv_mb, kz * inv_mb)

    return accels


def integrate(
    a0: Body,
    b0: Body,
    law: ForceLaw,
    t_end: float,
    step: float,
    method: str = "rk4",
) -> Trajectory:
    """Fixed-step trajectory from t = 0 to (approximately) t_end.

    The number of steps is round(t_end / step); the final sample sits at
    n * step, so pick t_end as a multiple of step for exact coverage.

    Raises:
        ValueError: nonpositive step or t_end, unknown method, or verlet
            requested for a law that is not central.
        SingularityError: the pair entered a singular law's exclusion
            radius (including at t = 0).
    """
    if step <= 0.0 or t_end <= 0.0:
        raise ValueError("step and t_end must be positive")
    if method not in ("rk4", "verlet"):
        raise ValueError(f"unknown integration method {method!r}")
    if method == "verlet" and not law.central:
        raise ValueError(
            f"velocity Verlet needs a velocity-independent (central) law; {law.name!r} is not"
        )
    n_steps = max(1, round(t_end / step))
    accels = _accel_fn(law, a0, b0)

    y = (
        a0.position.x, a0.position.y, a0.position.z,
        a0.velocity.x, a0.velocity.y, a0.velocity.z,
        b0.position.x, b0.position.y, b0.position.z,
        b0.velocity.x, b0.velocity.y, b0.velocity.z,
    )
    samples = [y]
    h = step

    if method == "rk4":
        def deriv(s):
            axa, aya, aza, axb, ayb, azb = accels(*s)
            return (
                s[3], s[4], s[5], axa, aya, aza,
                s[9], s[10], s[11], axb, ayb, azb,
            )

        for _ in range(n_steps):
            k1 = deriv(y)
            k2 = deriv(tuple(s + 0.5 * h * k for s, k in zip(y, k1)))
            k3 = deriv(tuple(s + 0.5 * h * k for s, k in zip(y, k2)))
            k4 = deriv(tuple(s + h * k for s, k in zip(y, k3)))
            y = tuple(
                s + (h / 6.0) * (p + 2.0 * q + 2.0 * r + w)
                for s, p, q, r, w in zip(y, k1, k2, k3, k4)
            )
            samples.append(y)
    else:
        acc = accels(*y)
        half_h2 = 0.5 * h * h
        for _ in range(n_steps):
            xa = (
                y[0] + h * y[3] + half_h2 * acc[0],
                y[1] + h * y[4] + half_h2 * acc[1],
                y[2] + h * y[5] + half_h2 * acc[2],
            )
            xb = (
                y[6] + h * y[9] + half_h2 * acc[3],
                y[7] + h * y[10] + half_h2 * acc[4],
                y[8] + h * y[11] + half_h2 * acc[5],
            )
            # Central law: velocities passed here are ignored by the force.
            acc_new = accels(*xa, y[3], y[4], y[5], *xb, y[9], y[10], y[11])
            y = (
                *xa,
                y[3] + 0.5 * h * (acc[0] + acc_new[0]),
                y[4] + 0.5 * h * (acc[1] + acc_new[1]),
                y[5] + 0.5 * h * (acc[2] + acc_new[2]),
                *xb,
                y[9] + 0.5 * h * (acc[3] + acc_new[3]),
                y[10] + 0.5 * h * (acc[4] + acc_new[4]),
                y[11] + 0.5 * h * (acc[5] + acc_new[5]),
            )
            acc = acc_new
            samples.append(y)

    times = tuple(i * step for i in range(n_steps + 1))
    states = tuple(
        (
            a0.with_state(Vec3(s[0], s[1], s[2]), Vec3(s[3], s[4], s[5])),
            b0.with_state(Vec3(s[6], s[7], s[8]), Vec3(s[9], s[10], s[11])),
        )
        for s in samples
    )
    return Trajectory(times, states, law, method, step)


def potential_value(
    law: ForceLaw,
    a: Body,
    b: Body,
    r: float,
    *,
    reference_radius: float = DEFAULT_POTENTIAL_REFERENCE,
) -> float:
    """Potential V(r) of a central law for this body pair.

    Uses the registered closed form when the law carries one; otherwise
    integrates V'(rho) = -phi_e(rho) rho from the reference radius, where
    the potential is gauged to zero. The gauge constant cancels in every
    drift check.
    """
    if not law.central:
        raise ValueError(f"law {law.name!r} is not central; no potential exists")
    qa, qb = PropertyView(a), PropertyView(b)
    if law.potential is not None:
        return law.potential(qa, qb, r)
    if law.phi_e is None:
        return 0.0

    def integrand(rho: float) -> float:
        return -law.phi_e(qa, qb, rho, 0.0, 0.0) * rho

    return _adaptive_simpson(integrand, reference_radius, r, 1e-12)


def observables(a: Body, b: Body, law: ForceLaw) -> Observables:
    mu = a.mass * b.mass / (a.mass + b.mass)
    momentum = a.velocity * a.mass + b.velocity * b.mass
    ps = pair_state(a, b)
    angular = cross(ps.x_ab, ps.v_ab * mu)
    energy: float | None = None
    if law.central:
        r = ps.x_ab.norm()
        speed2 = ps.v_ab.x**2 + ps.v_ab.y**2 + ps.v_ab.z**2
        energy = 0.5 * mu * speed2 + potential_value(law, a, b, r)
    return Observables(momentum, angular, energy, mu)


def momentum_rate(a: Body, b: Body, law: ForceLaw) -> Vec3:
    """Exact d(total momentum)/dt: only the normal channel contributes."""
    if law.phi_perp is None:
        return Vec3(0.0, 0.0, 0.0)
    ps = pair_state(a, b)
    r = ps.x_ab.norm()
    speed = ps.v_ab.norm()
    radial = ps.x_ab.x * ps.v_ab.x + ps.x_ab.y * ps.v_ab.y + ps.x_ab.z * ps.v_ab.z
    c = law.phi_perp(PropertyView(a), PropertyView(b), r, speed, radial)
    return cross(ps.x_ab, ps.v_ab) * (2.0 * c)


def angular_momentum_rate(a: Body, b: Body, law: ForceLaw) -> Vec3:
    """Exact d(angular momentum)/dt (the internal torque)."""
    ps = pair_state(a, b)
    qa, qb = PropertyView(a), PropertyView(b)
    r = ps.x_ab.norm()
    speed = ps.v_ab.norm()
    radial = ps.x_ab.x * ps.v_ab.x + ps.x_ab.y * ps.v_ab.y + ps.x_ab.z * ps.v_ab.z
    normal = cross(ps.x_ab, ps.v_ab)
    rate = Vec3(0.0, 0.0, 0.0)
    if law.phi_s is not None:
        rate = rate + normal * law.phi_s(qa, qb, r, speed, radial)
    if law.phi_perp is not None:
        weight = (b.mass - a.mass) / (a.mass + b.mass)
        rate = rate + cross(ps.x_ab, normal) * (weight * law.phi_perp(qa, qb, r, speed, radial))
    return rate


def finite_difference(values: Sequence[Vec3], times: Sequence[float]) -> list[Vec3]:
    """Numerical time derivative of a sampled vector series: central
    differences inside, one-sided at the ends."""
    n = len(values)
    if n != len(times) or n < 2:
        raise ValueError("need two or more samples with matching times")
    out: list[Vec3] = []
    for i in range(n):
        if i == 0:
            out.append((values[1] - values[0]) / (times[1] - times[0]))
        elif i == n - 1:
            out.append((values[-1] - values[-2]) / (times[-1] - times[-2]))
        else:
            out.append((values[i + 1] - values[i - 1]) / (times[i + 1] - times[i - 1]))
    return out


def path_time(points: Sequence[Vec3], speed: Callable[[float], float]) -> float:
    """Elapsed time along a polyline traversed at a given speed profile.

    ``speed`` maps arc length to a strictly positive speed; the result is
    the quadrature of ds / speed(s) along the path. Change of position is
    the clock here: a degenerate (zero-length) path takes no time.

    Raises:
        ValueError: fewer than two points, or a nonpositive speed sample.
    """
    if len(points) < 2:
        raise ValueError("a path needs at least two points")

    def pace(s: float) -> float:
        v = speed(s)
        if v <= 0.0:
            raise ValueError(f"speed must be positive along the path; got {v} at s={s}")
        return 1.0 / v

    total = 0.0
    s0 = 0.0
    for p, q in zip(points, points[1:]):
        seg = (q - p).norm()
        if seg == 0.0:
            continue
        total += _adaptive_simpson(pace, s0, s0 + seg, 1e-12)
        s0 += seg
    return total


def _adaptive_simpson(f: Callable[[float], float], a: float, b: float, tol: float) -> float:
    """Recursive Simpson quadrature with interval-halving error control."""
    if a == b:
        return 0.0

    def simpson(lo: float, hi: float, flo: float, fmid: float, fhi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, hi, flo, fmid, fhi, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        fl, fr = f(lmid), f(rmid)
        left = simpson(lo, mid, flo, fl, fmid)
        right = simpson(mid, hi, fmid, fr, fhi)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(lo, mid, flo, fl, fmid, left, 0.5 * eps, depth - 1) + recurse(
            mid, hi, fmid, fr, fhi, right, 0.5 * eps, depth - 1
        )

    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = simpson(a, b, fa, fm, fb)
    return sign * recurse(a, b, fa, fm, fb, whole, tol, 48)
