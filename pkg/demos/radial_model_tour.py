"""Origin spheres, geodesics and the product picture in the radial model.

    python3 demos/radial_model_tour.py
"""

import math

import numpy as np

from radialgeo import curvature_at, transform
from radialgeo.geodesic import circle_radius_drift, integrate
from radialgeo.metric import EXP, RADIAL
from radialgeo.radialmodel import psi, sphere_report
from radialgeo.surface import sphere_origin


def main():
    print("origin spheres under F = sqrt(t): totally geodesic, Gauss curvature 1")
    for R in (0.5, 1.0, 5.0):
        rep = sphere_report(R)
        print(f"  R = {R:<4}  |KE| = {rep.KE:.1e}  |H| = {rep.H:.1e}  K = {rep.K:.12f}")

    c = transform(EXP, curvature_at(sphere_origin(1.0), 0.3, 0.7))
    print(f"\nthe same unit sphere under F = exp(-t): KE = {c.KE:.10f} (9/e^2 = {9 / math.e ** 2:.10f})")

    print("\na geodesic shot tangent to the unit circle")
    for f in (RADIAL, EXP):
        tr = integrate(f, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 2.0, 1e-3)
        print(f"  {f.label:>6}: radius drift over length 2 = {circle_radius_drift(tr):.2e}")

    tr = integrate(RADIAL, [0.3, 0.4, 0.0], [0.3, 0.4, 0.0], 1.0, 1e-3)
    heights = [psi(x).h for x in tr.x[::250]]
    print("\nradial geodesic seen through psi: direction fixed, height grows linearly")
    print("  heights:", np.round(heights, 6), " direction:", np.round(psi(tr.x[-1]).p, 6))


if __name__ == "__main__":
    main()
