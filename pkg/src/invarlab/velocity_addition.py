"""Velocity composition with a hard speed bound.

Velocities live strictly inside a ball of radius c. Each velocity u gets
a weight g(u) = G(|u|), where G is continuous, strictly increasing, 1 at
rest, and divergent at the bound. Composition is defined through the
weighted vectors:

    u (+) v = w   such that   g(w) w = g(u) u + g(v) v.

Because the weighted vectors simply add, the operation is a commutative
group: 0 is neutral, -u is the inverse of u, and associativity holds.
Since a |a| G(|a|) maps [0, c) bijectively onto [0, inf), the result
always exists and |w| < c: the bound cannot be crossed. Recovering |w|
from the weighted norm is a scalar root solve (bracketed bisection with
a safeguarded Newton refinement).

Proper time divides a subjective interval by the weight of the moving
object, T = t / g(v). For any split v1 = v2 (+) v3 the weighted-vector
identity makes displacements computed leg by leg agree exactly if and
only if all three proper intervals agree: distances are invariant
precisely when proper time is.

With G identically 1 on an unbounded domain the whole construction
degenerates to ordinary vector addition with a single universal time;
``classical_g`` ships that limit for contrast experiments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .core import Vec3
from .report import AuditResult, FAIL, PASS
from .rootfind import ConvergenceError, solve_increasing

__all__ = [
    "GFunction",
    "BoundedVelocity",
    "lorentz_g",
    "rational_g",
    "classical_g",
    "GFUNCTIONS",
    "zero_velocity",
    "oplus",
    "proper_time",
    "check_invariance_theorem",
    "light_quotient",
    "classical_light_quotient",
]

_VALIDATION_GRID = 64


@dataclass(frozen=True)
class GFunction:
    """Weight profile G: [0, c) -> [1, inf): continuous, strictly
    increasing, G(0) = 1, divergent at c.

    Construction spot-checks G(0) and monotonicity on a grid. ``c`` may be
    infinite only for the degenerate classical profile, where strict
    growth is not required.
    """

    name: str
    c: float
    g: Callable[[float], float]
    g_prime: Callable[[float], float] | None = None

    def __post_init__(self) -> None:
        if not self.c > 0.0:
            raise ValueError("limiting speed c must be positive")
        if abs(self.g(0.0) - 1.0) > 1e-12:
            raise ValueError(f"G(0) must be 1, got {self.g(0.0)}")
        if math.isfinite(self.c):
            grid = [self.c * (k / _VALIDATION_GRID) for k in range(_VALIDATION_GRID)]
            grid.append(self.c * (1.0 - 1e-9))
            values = [self.g(a) for a in grid]
            for a, (v1, v2) in zip(grid, zip(values, values[1:])):
                if not v2 > v1:
                    raise ValueError(f"G must be strictly increasing; violated near {a:.6g}")

    def __call__(self, speed: float) -> float:
        if speed < 0.0 or speed >= self.c:
            raise ValueError(f"speed {speed} outside [0, {self.c})")
        return self.g(speed)

    def weighted_norm(self, speed: float) -> float:
        return speed * self(speed)

    def solve_speed(self, weighted: float) -> float:
        """Invert a |a| G(|a|) = weighted; unique root in [0, c)."""
        if weighted < 0.0:
            raise ValueError("weighted norm must be nonnegative")
        if weighted == 0.0:
            return 0.0
        # G >= 1 puts the root at or below `weighted`; cap just under c.
        if math.isfinite(self.c):
            hi = min(weighted, self.c * (1.0 - 1e-15))
        else:
            hi = weighted

        def f(a: float) -> float:
            return a * self.g(a) - weighted

        fprime = None
        if self.g_prime is not None:
            fprime = lambda a: self.g(a) + a * self.g_prime(a)  # noqa: E731
        if f(hi) < 0.0:
            raise ConvergenceError(
                f"{self.name}: weighted norm {weighted:.6g} not reachable below the bound"
            )
        return solve_increasing(f, 0.0, hi, fprime=fprime, ftol=1e-14 * (1.0 + weighted))

    def compatible(self, other: "GFunction") -> bool:
        return self.name == other.name and self.c == other.c


def lorentz_g(c: float = 1.0) -> GFunction:
    """G(a) = 1 / sqrt(1 - (a/c)^2)."""

    def g(a: float) -> float:
        u = a / c
        return 1.0 / math.sqrt(1.0 - u * u)

    def g_prime(a: float) -> float:
        return a * g(a) ** 3 / (c * c)

    return GFunction("lorentz", c, g, g_prime)


def rational_g(c: float = 1.0) -> GFunction:
    """G(a) = 1 / (1 - (a/c)^2)."""

    def g(a: float) -> float:
        u = a / c
        return 1.0 / (1.0 - u * u)

    def g_prime(a: float) -> float:
        return 2.0 * a * g(a) ** 2 / (c * c)

    return GFunction("rational", c, g, g_prime)


def classical_g() -> GFunction:
    """Degenerate unbounded profile G = 1: plain vector addition."""
    return GFunction("classical", math.inf, lambda a: 1.0, lambda a: 0.0)


GFUNCTIONS: dict[str, Callable[..., GFunction]] = {
    "lorentz": lorentz_g,
    "rational": rational_g,
    "classical": classical_g,
}


@dataclass(frozen=True)
class BoundedVelocity:
    """Velocity vector strictly inside the bound of its weight profile."""

    v: Vec3
    gfun: GFunction

    def __post_init__(self) -> None:
        s = self.v.norm()
        if not s < self.gfun.c:
            raise ValueError(f"speed {s} must be strictly below the bound {self.gfun.c}")

    @property
    def speed(self) -> float:
        return self.v.norm()

    def weight(self) -> float:
        return self.gfun(self.speed)

    def weighted(self) -> Vec3:
        """The additive representative g(v) v."""
        return self.v * self.weight()

    def __neg__(self) -> "BoundedVelocity":
        return BoundedVelocity(-self.v, self.gfun)


def zero_velocity(gfun: GFunction) -> BoundedVelocity:
    return BoundedVelocity(Vec3(0.0, 0.0, 0.0), gfun)


def oplus(u: BoundedVelocity, v: BoundedVelocity) -> BoundedVelocity:
    """Group composition: weighted vectors add, the result stays bounded."""
    if not u.gfun.compatible(v.gfun):
        raise ValueError(
            f"cannot compose velocities under different profiles "
            f"({u.gfun.name}, c={u.gfun.c}) vs ({v.gfun.name}, c={v.gfun.c})"
        )
    rhs = u.weighted() + v.weighted()
    r = rhs.norm()
    if r == 0.0:
        return zero_velocity(u.gfun)
    w = u.gfun.solve_speed(r)
    return BoundedVelocity(rhs * (w / r), u.gfun)


def proper_time(dt: float, v: BoundedVelocity) -> float:
    """Subjective interval rescaled by the mover's weight: dt / G(|v|)."""
    return dt / v.weight()


def check_invariance_theorem(
    v2: BoundedVelocity,
    v3: BoundedVelocity,
    duration: float,
    *,
    tolerance: float = 1e-12,
    perturbation: float = 0.01,
) -> AuditResult:
    """Distance bookkeeping across three observers sharing one process.

    With v1 = v2 (+) v3 and equal proper duration on every leg, the direct
    displacement must match the two-leg sum: v1 dt1 = v2 dt2 + v3 dt3
    where dt_i = duration * G(|v_i|). The converse is probed by stretching
    one subjective interval and confirming the identity breaks by the
    predicted first-order amount.
    """
    if duration <= 0.0:
        raise ValueError("duration must be positive")
    v1 = oplus(v2, v3)
    dt1 = duration * v1.weight()
    dt2 = duration * v2.weight()
    dt3 = duration * v3.weight()
    lhs = v1.v * dt1
    rhs = v2.v * dt2 + v3.v * dt3
    residual = (lhs - rhs).norm()

    predicted = perturbation * dt2 * v2.speed
    perturbed = (lhs - v2.v * (dt2 * (1.0 + perturbation)) - v3.v * dt3).norm()
    converse_ok = True
    detail = f"perturbed residual {perturbed:.3e}, first-order prediction {predicted:.3e}"
    if predicted > 0.0:
        converse_ok = abs(perturbed - predicted) <= 0.1 * predicted
    verdict = PASS if (residual <= tolerance and converse_ok) else FAIL
    return AuditResult(
        audit="proper-time-invariance",
        lemma="distance-iff-proper-time",
        verdict=verdict,
        residual=residual,
        tolerance=tolerance,
        detail=detail,
    )


def light_quotient(frame_boost: BoundedVelocity, baseline: float) -> float:
    """Echo measurement under the bounded group, seen from a moving frame.

    A signal leaves the source, reflects at a mirror a fixed baseline away,
    and returns, travelling at the limiting speed c. The measured figure is
    (2 baseline) / (proper time elapsed at the source). In the apparatus
    rest frame that is c outright; re-expressed in a frame where the
    apparatus rides at ``frame_boost``, the subjective interval stretches
    by the apparatus weight while the baseline is invariant, and the
    proper-time division undoes the stretch: the quotient is frame
    independent.
    """
    if baseline <= 0.0:
        raise ValueError("baseline must be positive")
    gfun = frame_boost.gfun
    if not math.isfinite(gfun.c):
        raise ValueError("the bounded echo measurement needs a finite limiting speed")
    # Rest frame: two legs at the limiting speed; source at rest.
    out_leg = baseline / gfun.c
    back_leg = baseline / gfun.c
    rest_proper = proper_time(out_leg + back_leg, zero_velocity(gfun))
    # Moving frame: the apparatus velocity through the group operation.
    apparatus = oplus(zero_velocity(gfun), frame_boost)
    subjective = rest_proper * apparatus.weight()
    source_proper = proper_time(subjective, apparatus)
    return 2.0 * baseline / source_proper


def classical_light_quotient(
    apparatus_velocity: Vec3,
    baseline: float,
    signal_speed: float,
    axis: Vec3 = Vec3(1.0, 0.0, 0.0),
) -> float:
    """Echo measurement under plain vector addition with universal time.

    Here the signal is a thing moving at ``signal_speed`` through the rest
    frame while the whole apparatus (source and mirror, separated by
    ``baseline`` along ``axis``) drifts at ``apparatus_velocity``. Each leg
    is a catch-up problem solved for its duration; the quotient
    2 baseline / (t_out + t_back) then depends on the drift, unlike the
    bounded construction.
    """
    if baseline <= 0.0:
        raise ValueError("baseline must be positive")
    if signal_speed <= 0.0:
        raise ValueError("signal speed must be positive")
    drift = apparatus_velocity.norm()
    if drift >= signal_speed:
        raise ValueError("no echo: apparatus outruns the signal")
    n = axis.norm()
    if n == 0.0:
        raise ValueError("apparatus axis must be nonzero")
    unit = axis / n

    def leg_time(sign: float) -> float:
        target = unit * (sign * baseline)

        def gap(t: float) -> float:
            reach = Vec3(
                target.x + apparatus_velocity.x * t,
                target.y + apparatus_velocity.y * t,
                target.z + apparatus_velocity.z * t,
            )
            return signal_speed * t - reach.norm()

        hi = 2.0 * baseline / (signal_speed - drift)
        return solve_increasing(gap, 0.0, hi, ftol=1e-14 * (1.0 + baseline))

    return 2.0 * baseline / (leg_time(1.0) + leg_time(-1.0))
