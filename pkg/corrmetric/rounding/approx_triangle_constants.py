import sympy as sp

from corrmetric.helpers import as_rational


class ApproxTriangleConstants:
    """
    Rounding constants for a distance function satisfying the
    (delta1, delta2)-approximate triangle inequality
    d(u, v) <= delta1 (d(u, w) + d(w, v)) + delta2.

    All values are exact sympy Rationals. Construction checks every
    inequality the rounding analysis relies on and raises a ValueError
    naming the first one that fails.

    Args:
        delta1 (float, sympy.Rational): multiplicative slack, >= 1
        delta2 (float, sympy.Rational): additive slack, >= 0

    Attributes:
        delta1 (sympy.Rational): multiplicative slack
        delta2 (sympy.Rational): additive slack
        r (sympy.Rational): score radius
        c1 (sympy.Rational): delta1 + delta2 / r
        b (sympy.Rational): cut radius factor, (c1 + 1) delta1 + delta2 / r
        c2 (sympy.Rational): delta1 (b + 1) + delta2 / r
    """

    def __init__(self, delta1, delta2) -> None:
        self.delta1 = as_rational(delta1)
        self.delta2 = as_rational(delta2)
        if self.delta1 < 1:
            raise ValueError(f"delta1 must be >= 1, got {self.delta1}")
        if self.delta2 < 0:
            raise ValueError(f"delta2 must be >= 0, got {self.delta2}")

        d1, d2 = self.delta1, self.delta2
        self.r = (1 - d2 - d1 * d2 - d1**3 * d2 - d1**2 * d2) / (
            d1**2 + d1**3 * (d1 + 1) + d1 + 1
        )
        if self.r <= 0:
            raise ValueError(
                f"r = {float(self.r):.4g} <= 0 for delta1={float(d1):.4g}, "
                f"delta2={float(d2):.4g}: delta2 is too large"
            )
        self.c1 = d1 + d2 / self.r
        self.b = (self.c1 + 1) * d1 + d2 / self.r
        self.c2 = d1 * (self.b + 1) + d2 / self.r
        self.check()

    def inequalities(self):
        """The ten conditions of the rounding analysis

        Returns:
            list: (description, bool) pairs
        """
        d1, d2 = self.delta1, self.delta2
        r, c1, b, c2 = self.r, self.c1, self.b, self.c2
        return [
            ("b >= 1", b >= 1),
            ("c2*r < 1", c2 * r < 1),
            ("c1 <= b < c2", (c1 <= b) and (b < c2)),
            ("1 - 2*delta1*b*r - delta2 - r >= 0", 1 - 2 * d1 * b * r - d2 - r >= 0),
            (
                "b*r/delta1 - c1*r - r - delta2/delta1 >= 0",
                b * r / d1 - c1 * r - r - d2 / d1 >= 0,
            ),
            (
                "c2*r/delta1 - b*r - r - delta2/delta1 >= 0",
                c2 * r / d1 - b * r - r - d2 / d1 >= 0,
            ),
            ("c1*r/delta1 - delta2/delta1 >= r", c1 * r / d1 - d2 / d1 >= r),
            ("1 - (delta1*b + delta1)*r - delta2 >= r", 1 - (d1 * b + d1) * r - d2 >= r),
            (
                "(b/delta1 - 1)*r - delta2/delta1 >= r",
                (b / d1 - 1) * r - d2 / d1 >= r,
            ),
            (
                "1 - (delta1*c2 + delta1)*r - delta2 >= r",
                1 - (d1 * c2 + d1) * r - d2 >= r,
            ),
        ]

    def check(self):
        """Raises a ValueError naming the first failing inequality

        Returns:
            bool: True if all inequalities hold
        """
        for description, holds in self.inequalities():
            if not bool(holds):
                raise ValueError(f"approximate triangle inequality check failed: {description}")
        return True

    def as_floats(self):
        return {
            "r": float(self.r),
            "c1": float(self.c1),
            "b": float(self.b),
            "c2": float(self.c2),
        }

    def __repr__(self):
        return f"ApproxTriangleConstants(r={self.r}, c1={self.c1}, b={self.b}, c2={self.c2})"


def approx_triangle_constants(delta1, delta2):
    """Builds and checks the rounding constants of a
    (delta1, delta2)-approximate semi-metric"""
    return ApproxTriangleConstants(delta1, delta2)
