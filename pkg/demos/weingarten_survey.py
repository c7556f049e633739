"""Tabulate the two Weingarten functionals over the surface catalog.

    python3 demos/weingarten_survey.py
"""

from radialgeo import catalog, curvature_at
from radialgeo.conformal import weingarten_functionals
from radialgeo.surface import grid_points


def main():
    print(f"{'surface':<20}{'max |W1|':>12}{'max |W2|':>12}")
    for name, spec in catalog().items():
        w1 = w2 = 0.0
        for u, v in grid_points(spec, (10, 10)):
            a, b, _ = weingarten_functionals(curvature_at(spec, u, v))
            w1, w2 = max(w1, abs(a)), max(w2, abs(b))
        print(f"{name:<20}{w1:>12.3e}{w2:>12.3e}")


if __name__ == "__main__":
    main()
