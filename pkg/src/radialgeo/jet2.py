"""Truncated second-order forward-mode AD in two variables (u, v).

A :class:`Jet2` carries a value, both first partials and the three second
partials.  Arithmetic and the elementary functions below propagate them
exactly, so a map written with these functions yields the full second-order
jet of a surface in one evaluation::

    u, v = Jet2.variables(0.3, 1.2)
    x = [cosh(u) * cos(v), cosh(u) * sin(v), u]
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Jet2", "sin", "cos", "exp", "log", "sqrt", "sinh", "cosh", "tanh", "atan"]


@dataclass(frozen=True)
class Jet2:
    v: float
    du: float = 0.0
    dv: float = 0.0
    duu: float = 0.0
    duv: float = 0.0
    dvv: float = 0.0

    @classmethod
    def variables(cls, u: float, v: float) -> tuple["Jet2", "Jet2"]:
        return cls(float(u), 1.0, 0.0), cls(float(v), 0.0, 1.0)

    @classmethod
    def const(cls, c: float) -> "Jet2":
        return cls(float(c))

    def chain(self, f0: float, f1: float, f2: float) -> "Jet2":
        """Compose with a scalar function whose value/derivatives at self.v are f0, f1, f2."""
        return Jet2(
            f0,
            f1 * self.du,
            f1 * self.dv,
            f2 * self.du * self.du + f1 * self.duu,
            f2 * self.du * self.dv + f1 * self.duv,
            f2 * self.dv * self.dv + f1 * self.dvv,
        )

    def __add__(self, o):
        if isinstance(o, Jet2):
            return Jet2(self.v + o.v, self.du + o.du, self.dv + o.dv,
                        self.duu + o.duu, self.duv + o.duv, self.dvv + o.dvv)
        return Jet2(self.v + o, self.du, self.dv, self.duu, self.duv, self.dvv)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.v, -self.du, -self.dv, -self.duu, -self.duv, -self.dvv)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Jet2):
            return Jet2(
                self.v * o.v,
                self.du * o.v + self.v * o.du,
                self.dv * o.v + self.v * o.dv,
                self.duu * o.v + 2.0 * self.du * o.du + self.v * o.duu,
                self.duv * o.v + self.du * o.dv + self.dv * o.du + self.v * o.duv,
                self.dvv * o.v + 2.0 * self.dv * o.dv + self.v * o.dvv,
            )
        return Jet2(self.v * o, self.du * o, self.dv * o, self.duu * o, self.duv * o, self.dvv * o)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet2":
        r = 1.0 / self.v
        return self.chain(r, -r * r, 2.0 * r * r * r)

    def __truediv__(self, o):
        if isinstance(o, Jet2):
            return self * o.reciprocal()
        return self * (1.0 / o)

    def __rtruediv__(self, o):
        return self.reciprocal() * o

    def __pow__(self, p):
        if isinstance(p, Jet2):
            return exp(p * log(self))
        p = float(p)
        if p == 2.0:
            return self * self
        x = self.v
        return self.chain(x**p, p * x ** (p - 1.0), p * (p - 1.0) * x ** (p - 2.0))

    def __float__(self):
        return float(self.v)


def _lift(f, df, ddf):
    def g(x):
        if isinstance(x, Jet2):
            return x.chain(f(x.v), df(x.v), ddf(x.v))
        return f(x)

    g.__name__ = f.__name__
    return g


sin = _lift(math.sin, math.cos, lambda x: -math.sin(x))
cos = _lift(math.cos, lambda x: -math.sin(x), lambda x: -math.cos(x))
exp = _lift(math.exp, math.exp, math.exp)
log = _lift(math.log, lambda x: 1.0 / x, lambda x: -1.0 / (x * x))
sqrt = _lift(math.sqrt, lambda x: 0.5 / math.sqrt(x), lambda x: -0.25 / (x * math.sqrt(x)))
sinh = _lift(math.sinh, math.cosh, math.sinh)
cosh = _lift(math.cosh, math.sinh, math.cosh)
tanh = _lift(math.tanh, lambda x: 1.0 / math.cosh(x) ** 2,
             lambda x: -2.0 * math.tanh(x) / math.cosh(x) ** 2)
atan = _lift(math.atan, lambda x: 1.0 / (1.0 + x * x),
             lambda x: -2.0 * x / (1.0 + x * x) ** 2)
