"""Shared builders for the test suite."""

from __future__ import annotations

import math
import random

from invarlab import Body, Vec3


def kepler_pair(ma=1.0, mb=2.0, g=1.0, semi_major=1.0, ecc=0.0):
    """Two bodies on a relative gravity orbit starting at perihelion,
    center of mass at rest. Returns (body_a, body_b, period)."""
    mu = g * (ma + mb)
    r0 = semi_major * (1.0 - ecc)
    v0 = math.sqrt(mu * (2.0 / r0 - 1.0 / semi_major))
    period = 2.0 * math.pi * math.sqrt(semi_major**3 / mu)
    fa = mb / (ma + mb)
    fb = ma / (ma + mb)
    a = Body("A", ma, Vec3(fa * r0, 0.0, 0.0), Vec3(0.0, fa * v0, 0.0))
    b = Body("B", mb, Vec3(-fb * r0, 0.0, 0.0), Vec3(0.0, -fb * v0, 0.0))
    return a, b, period


def inverse_cube_circular_pair(coupling, ma=1.0, mb=2.0, radius=1.0):
    """Pair on a circular orbit of any attractive inverse-square law with
    phi_e = -coupling / r^3 (coupling > 0). Returns (a, b, period)."""
    accel = coupling * (1.0 / ma + 1.0 / mb) / radius**2
    v0 = math.sqrt(accel * radius)
    period = 2.0 * math.pi * radius / v0
    fa = mb / (ma + mb)
    fb = ma / (ma + mb)
    a = Body("A", ma, Vec3(fa * radius, 0.0, 0.0), Vec3(0.0, fa * v0, 0.0), {"charge": 1.0})
    b = Body("B", mb, Vec3(-fb * radius, 0.0, 0.0), Vec3(0.0, -fb * v0, 0.0), {"charge": -1.0})
    return a, b, period


def random_unit(rng: random.Random) -> Vec3:
    while True:
        v = Vec3(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        n = v.norm()
        if n > 1e-6:
            return v / n


def random_body(rng: random.Random, name: str, charge: float = 0.0) -> Body:
    return Body(
        name,
        rng.uniform(0.5, 3.0),
        Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)),
        Vec3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)),
        {"charge": charge},
    )
