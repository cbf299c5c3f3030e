"""Shared value types: 3-vectors, point bodies, and relative pair states.

Everything here is an immutable value; instances can be shared freely
between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = ["Vec3", "ZERO", "Body", "PairState", "cross", "dot", "pair_state"]


@dataclass(frozen=True, slots=True)
class Vec3:
    """3-component real vector; components must be finite."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise ValueError(f"non-finite vector component in ({self.x}, {self.y}, {self.z})")

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec3":
        return Vec3(self.x / s, self.y / s, self.z / s)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


ZERO = Vec3(0.0, 0.0, 0.0)


def dot(u: Vec3, v: Vec3) -> float:
    return u.x * v.x + u.y * v.y + u.z * v.z


def cross(u: Vec3, v: Vec3) -> Vec3:
    """Right-handed vector product; perpendicular to both arguments,
    zero whenever they are collinear."""
    return Vec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )


@dataclass(frozen=True)
class Body:
    """Point body: positive mass, kinematic state, named scalar properties.

    Property lookup is total: a property the body does not carry reads as
    zero, so e.g. an uncharged body is just the zero-charge case. ``mass``
    is reachable through the same lookup.
    """

    id: str
    mass: float
    position: Vec3
    velocity: Vec3
    properties: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise ValueError(f"body {self.id!r}: mass must be positive and finite, got {self.mass}")
        object.__setattr__(self, "properties", dict(self.properties))

    def prop(self, name: str) -> float:
        if name == "mass":
            return self.mass
        return self.properties.get(name, 0.0)

    def with_state(self, position: Vec3, velocity: Vec3) -> "Body":
        """Copy with a new kinematic state; identity, mass and properties kept."""
        return Body(self.id, self.mass, position, velocity, self.properties)


@dataclass(frozen=True, slots=True)
class PairState:
    """Relative state of an ordered body pair; negates under body exchange."""

    x_ab: Vec3
    v_ab: Vec3

    def __neg__(self) -> "PairState":
        return PairState(-self.x_ab, -self.v_ab)


def pair_state(a: Body, b: Body) -> PairState:
    """Relative position and velocity of ``a`` with respect to ``b``.

    Both bodies must be expressed in the same frame; the result no longer
    depends on that frame's origin or rest state.
    """
    return PairState(a.position - b.position, a.velocity - b.velocity)
