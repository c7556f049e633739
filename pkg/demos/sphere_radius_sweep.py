"""Radii of origin spheres with prescribed extrinsic curvature, then a profile shot.

    python3 demos/sphere_radius_sweep.py
"""

import math

import numpy as np

from radialgeo.errors import NoBracketError
from radialgeo.metric import EXP, RADIAL
from radialgeo.rotation import radius_for_curvature, solve_profile


def main():
    for f in (EXP, RADIAL):
        print(f"factor {f.label}")
        for c0 in np.geomspace(0.01, 100.0, 5):
            try:
                roots = radius_for_curvature(f, float(c0)).roots
                print(f"  c0 = {c0:8.3g}  R = " + ", ".join(f"{r:.10g}" for r in roots))
            except NoBracketError as exc:
                print(f"  c0 = {c0:8.3g}  {type(exc).__name__}: {exc}")

    c0 = 9.0 * math.exp(-2.0)
    prof = solve_profile(EXP, c0, 1.0, 0.0, (-0.9, 0.9))
    err = max(abs(prof(u)[0] - math.sqrt(1 - u * u)) for u in np.linspace(-0.9, 0.9, 91))
    print(f"\nprofile ODE from phi(0) = 1, c0 = 9/e^2: max deviation from the unit circle {err:.1e}")


if __name__ == "__main__":
    main()
