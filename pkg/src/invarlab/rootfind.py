"""Scalar root finding on a bracket for increasing functions.

Written for the bounded velocity-addition solver, where the target
function is strictly increasing and diverges at the upper end of the
bracket, but generic: bisection guarantees progress, a Newton step
(secant when no derivative is supplied) accelerates whenever it lands
inside the current bracket.
"""

from __future__ import annotations

from typing import Callable

__all__ = ["ConvergenceError", "solve_increasing"]

_EPS = 2.220446049250313e-16


class ConvergenceError(RuntimeError):
    """Root solve failed to bracket or reach the requested tolerance."""


def solve_increasing(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    fprime: Callable[[float], float] | None = None,
    ftol: float = 1e-14,
    max_iter: int = 200,
) -> float:
    """Solve f(x) = 0 on [lo, hi] for increasing f with f(lo) <= 0 <= f(hi).

    Converges when |f(x)| <= ftol, or when the bracket has collapsed to a
    few ulps (the root is then determined to full working precision even
    if f is too steep for the residual test, as happens next to an
    asymptote).

    Raises:
        ConvergenceError: invalid bracket, or no convergence in max_iter.
    """
    if not lo <= hi:
        raise ConvergenceError(f"empty bracket [{lo}, {hi}]")
    flo = f(lo)
    fhi = f(hi)
    if flo > 0.0 or fhi < 0.0:
        raise ConvergenceError(
            f"bracket [{lo}, {hi}] does not straddle a root: f(lo)={flo}, f(hi)={fhi}"
        )
    if abs(flo) <= ftol:
        return lo
    if abs(fhi) <= ftol:
        return hi

    # Previous iterate, kept for secant steps.
    x_prev, f_prev = lo, flo
    x, fx = hi, fhi

    for _ in range(max_iter):
        trial = None
        if fprime is not None:
            d = fprime(x)
            if d > 0.0:
                trial = x - fx / d
        elif fx != f_prev:
            trial = x - fx * (x - x_prev) / (fx - f_prev)
        if trial is None or not lo < trial < hi:
            trial = 0.5 * (lo + hi)

        x_prev, f_prev = x, fx
        x = trial
        fx = f(x)
        if abs(fx) <= ftol:
            return x
        if fx < 0.0:
            lo = x
        else:
            hi = x
        if hi - lo <= 4.0 * _EPS * max(1.0, abs(lo), abs(hi)):
            return 0.5 * (lo + hi)

    raise ConvergenceError(f"no convergence after {max_iter} iterations, bracket [{lo}, {hi}]")
