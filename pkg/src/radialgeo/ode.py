"""Fixed-step classical Runge-Kutta integration."""

import math

import numpy as np

from .errors import StepError


def rk4_step(rhs, s, y, h):
    k1 = rhs(s, y)
    k2 = rhs(s + 0.5 * h, y + 0.5 * h * k1)
    k3 = rhs(s + 0.5 * h, y + 0.5 * h * k2)
    k4 = rhs(s + h, y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4(rhs, y0, s0, length, step, stop=None):
    """Integrate y' = rhs(s, y) from s0 over ``length`` (may be negative).

    Takes ceil(|length|/step) steps, the last one shortened so the final node
    lands on s0 + length.  ``stop(s, y)`` is called on every new state; a true
    result ends the integration early and the offending state is discarded.
    Returns ``(s, y, stopped)`` with arrays of the accepted nodes.
    """
    if not step > 0:
        raise StepError(f"step must be positive, got {step!r}")
    n = max(1, math.ceil(abs(length) / step - 1e-12))
    direction = 1.0 if length >= 0 else -1.0
    ss = [float(s0)]
    ys = [np.asarray(y0, dtype=float)]
    stopped = False
    for i in range(n):
        s_next = s0 + direction * min((i + 1) * step, abs(length))
        try:
            y_next = rk4_step(rhs, ss[-1], ys[-1], s_next - ss[-1])
        except (ArithmeticError, ValueError):
            stopped = True
            break
        if stop is not None and stop(s_next, y_next):
            stopped = True
            break
        ss.append(s_next)
        ys.append(y_next)
    return np.array(ss), np.array(ys), stopped
