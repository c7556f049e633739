"""Classical Weierstrass-Enneper representation, used to generate minimal test surfaces.

X(z) = Re int_0^z Phi(w) dw,  Phi = (f (1 - g^2)/2, i f (1 + g^2)/2, f g),

integrated along the straight segment from 0 to z with Gauss-Legendre
quadrature.  With f = 2, g = z this is Enneper's surface reflected in the
x1 x3 plane.
"""

import numpy as np

__all__ = ["phi", "weierstrass_point", "weierstrass_frame"]


def phi(f, g, z):
    fz, gz = f(z), g(z)
    return np.array([fz * (1 - gz * gz) / 2, 1j * fz * (1 + gz * gz) / 2, fz * gz])


def weierstrass_point(f, g, z, nodes=32):
    z = complex(z)
    x, w = np.polynomial.legendre.leggauss(nodes)
    pts = 0.5 * z * (x + 1.0)
    vals = np.array([phi(f, g, p) for p in pts])
    return np.real(0.5 * z * (w @ vals))


def weierstrass_frame(f, g, z, nodes=32):
    """(X, X_u, X_v) at z = u + i v; X_u = Re Phi and X_v = -Im Phi."""
    p = phi(f, g, complex(z))
    return weierstrass_point(f, g, z, nodes), np.real(p), -np.imag(p)
