"""The group of arbitrary observer choices acting on body states.

A transform bundles a rotation or reflection of the axes, a shift of the
spatial origin, a uniform relative velocity, and a clock offset. Applied
to a body at observer time t it sends

    position -> R position + translation + boost (t + time_offset)
    velocity -> R velocity + boost

while mass and other intrinsic properties stay untouched. Composition,
inverse and the identity below satisfy the group laws exactly at the
field level, which the audit suite verifies numerically. Relative
quantities of a body pair only feel the rotation part, so their norms
are invariant under every transform.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .core import Vec3, ZERO, Body
from .report import AuditResult, PASS, FAIL

__all__ = [
    "Mat3",
    "IDENTITY_ROTATION",
    "FrameTransform",
    "identity",
    "pure_rotation",
    "pure_translation",
    "pure_boost",
    "pure_time_offset",
    "rotation_about",
    "apply",
    "compose",
    "inverse",
    "transform_residual",
    "orthogonality_defect",
    "random_rotation",
    "random_transform",
    "check_objectivity",
]

Mat3 = tuple[tuple[float, float, float], tuple[float, float, float], tuple[float, float, float]]

IDENTITY_ROTATION: Mat3 = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))

ORTHOGONALITY_TOL = 1e-10


def _mat_vec(m: Mat3, v: Vec3) -> Vec3:
    return Vec3(
        m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
        m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
        m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
    )


def _mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def _transpose(m: Mat3) -> Mat3:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))  # type: ignore[return-value]


def determinant(m: Mat3) -> float:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def orthogonality_defect(m: Mat3) -> float:
    """Largest entry of |m^T m - I|."""
    worst = 0.0
    for i in range(3):
        for j in range(3):
            entry = sum(m[k][i] * m[k][j] for k in range(3))
            worst = max(worst, abs(entry - (1.0 if i == j else 0.0)))
    return worst


@dataclass(frozen=True)
class FrameTransform:
    """One observer choice: rotation/reflection, origin shift, boost, clock offset.

    The rotation must be orthogonal (checked at construction); det -1 is
    allowed, so reflections are in the group.
    """

    rotation: Mat3 = IDENTITY_ROTATION
    translation: Vec3 = ZERO
    boost: Vec3 = ZERO
    time_offset: float = 0.0

    def __post_init__(self) -> None:
        rot = tuple(tuple(float(x) for x in row) for row in self.rotation)
        if len(rot) != 3 or any(len(row) != 3 for row in rot):
            raise ValueError("rotation must be a 3x3 matrix")
        object.__setattr__(self, "rotation", rot)
        defect = orthogonality_defect(rot)
        if defect > ORTHOGONALITY_TOL:
            raise ValueError(f"rotation is not orthogonal (defect {defect:.3e})")
        if not math.isfinite(self.time_offset):
            raise ValueError("time_offset must be finite")


def identity() -> FrameTransform:
    return FrameTransform()


def pure_rotation(rotation: Mat3) -> FrameTransform:
    return FrameTransform(rotation=rotation)


def pure_translation(d: Vec3) -> FrameTransform:
    return FrameTransform(translation=d)


def pure_boost(w: Vec3) -> FrameTransform:
    return FrameTransform(boost=w)


def pure_time_offset(s: float) -> FrameTransform:
    return FrameTransform(time_offset=s)


def rotation_about(axis: Vec3, angle: float) -> Mat3:
    """Rotation matrix for a right-handed turn around ``axis``."""
    n = axis.norm()
    if n == 0.0:
        raise ValueError("rotation axis must be nonzero")
    ux, uy, uz = axis.x / n, axis.y / n, axis.z / n
    c, s = math.cos(angle), math.sin(angle)
    k = 1.0 - c
    return (
        (c + ux * ux * k, ux * uy * k - uz * s, ux * uz * k + uy * s),
        (uy * ux * k + uz * s, c + uy * uy * k, uy * uz * k - ux * s),
        (uz * ux * k - uy * s, uz * uy * k + ux * s, c + uz * uz * k),
    )


def apply(t: FrameTransform, body: Body, time: float = 0.0) -> Body:
    """Re-express a body's state at observer time ``time`` in the new frame."""
    pos = _mat_vec(t.rotation, body.position) + t.translation + t.boost * (time + t.time_offset)
    vel = _mat_vec(t.rotation, body.velocity) + t.boost
    return body.with_state(pos, vel)


def compose(t1: FrameTransform, t2: FrameTransform) -> FrameTransform:
    """Transform acting like t2 first, then t1, at the same observer time:
    apply(compose(t1, t2), b, t) == apply(t1, apply(t2, b, t), t)."""
    rot = _mat_mul(t1.rotation, t2.rotation)
    boost = _mat_vec(t1.rotation, t2.boost) + t1.boost
    offset = t1.time_offset + t2.time_offset
    # Offsets add; the translation keeps the combined action exact and makes
    # the identity and inverse hold field by field, not just on body states.
    translation = (
        _mat_vec(t1.rotation, t2.translation)
        + t1.translation
        - _mat_vec(t1.rotation, t2.boost) * t1.time_offset
        - t1.boost * t2.time_offset
    )
    return FrameTransform(rot, translation, boost, offset)


def inverse(t: FrameTransform) -> FrameTransform:
    rot_t = _transpose(t.rotation)
    boost = -_mat_vec(rot_t, t.boost)
    translation = -_mat_vec(rot_t, t.translation + t.boost * (2.0 * t.time_offset))
    return FrameTransform(rot_t, translation, boost, -t.time_offset)


def transform_residual(t1: FrameTransform, t2: FrameTransform) -> float:
    """Largest field-by-field difference between two transforms."""
    worst = abs(t1.time_offset - t2.time_offset)
    for i in range(3):
        for j in range(3):
            worst = max(worst, abs(t1.rotation[i][j] - t2.rotation[i][j]))
    for a, b in ((t1.translation, t2.translation), (t1.boost, t2.boost)):
        worst = max(worst, abs(a.x - b.x), abs(a.y - b.y), abs(a.z - b.z))
    return worst


def random_rotation(rng: random.Random, reflections: bool = False) -> Mat3:
    """Uniform random rotation (unit quaternion); optionally a reflection
    with probability 1/2."""
    while True:
        q = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = math.sqrt(sum(c * c for c in q))
        if n > 1e-6:
            break
    w, x, y, z = (c / n for c in q)
    rot: Mat3 = (
        (1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)),
        (2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)),
        (2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)),
    )
    if reflections and rng.random() < 0.5:
        rot = tuple((row[0], row[1], -row[2]) for row in rot)  # type: ignore[assignment]
    return rot


def random_transform(
    rng: random.Random,
    *,
    translation: float = 1.0,
    boost: float = 1.0,
    time_offset: float = 1.0,
    reflections: bool = True,
) -> FrameTransform:
    """Random group element with the given scales for each part."""

    def vec(scale: float) -> Vec3:
        return Vec3(
            rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)
        )

    return FrameTransform(
        rotation=random_rotation(rng, reflections=reflections),
        translation=vec(translation),
        boost=vec(boost),
        time_offset=rng.uniform(-time_offset, time_offset),
    )


T = TypeVar("T")


def check_objectivity(
    law: Callable[[T], float],
    representations: Sequence[T],
    *,
    tolerance: float = 1e-9,
    labels: Sequence[str] | None = None,
    audit: str = "objectivity",
    lemma: str = "objectivity-of-laws",
) -> AuditResult:
    """Evaluate a scalar law on every representation of the same situation.

    The law holds objectively when its residual vanishes in all of them;
    the verdict is FAIL with the worst offender named otherwise.
    """
    worst = 0.0
    worst_label = ""
    for i, rep in enumerate(representations):
        value = abs(law(rep))
        if value > worst:
            worst = value
            worst_label = labels[i] if labels is not None else f"representation {i}"
    if worst <= tolerance:
        return AuditResult(audit, lemma, PASS, residual=worst, tolerance=tolerance)
    return AuditResult(
        audit, lemma, FAIL, residual=worst, tolerance=tolerance, detail=f"worst: {worst_label}"
    )
