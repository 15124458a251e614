import warnings
from fractions import Fraction

from corrmetric.helpers import as_fraction


THEORY = "theory"
APPROX = "approx"
SWEPT = "swept"


class RoundingParams:
    """
    Ball radii of the rounding algorithm

    Args:
        r1 (float, Fraction): radius of the balls scoring candidate centres
        r2 (float, Fraction): radius of the ball cut as a cluster
        mode (str, optional): "theory", "approx" or "swept".
            Defaults to "swept".

    Attributes:
        r1 (Fraction): exact score radius (floats are read through their
            decimal representation, 0.7 -> 7/10)
        r2 (Fraction): exact cut radius
        mode (str): the mode tag
    """

    def __init__(self, r1, r2, mode=SWEPT) -> None:
        self.r1 = r1
        self.r2 = r2
        self.mode = mode

        if self.mode == APPROX and self.r1 > self.r2:
            raise ValueError(
                f"approx mode needs r1 <= r2, got r1={self.r1}, r2={self.r2}"
            )
        if self.mode == SWEPT and self.r2 < 2 * self.r1:
            warnings.warn(
                f"radii r1={float(self.r1)}, r2={float(self.r2)} lie outside "
                "the regime r2 >= 2 r1 covered by the approximation guarantee",
                UserWarning,
            )

    @classmethod
    def theory(cls):
        """r1 = 1/5, r2 = 2/5"""
        return cls(Fraction(1, 5), Fraction(2, 5), mode=THEORY)

    @classmethod
    def approx(cls, constants):
        """r1 = r, r2 = b r from approximate triangle constants

        Args:
            constants (corrmetric.ApproxTriangleConstants): the constants
        """
        return cls(constants.r, constants.b * constants.r, mode=APPROX)

    @classmethod
    def swept(cls, r1, r2=None):
        """User-supplied radii, r2 defaults to r1 (common radius)"""
        return cls(r1, r1 if r2 is None else r2, mode=SWEPT)

    @property
    def r1(self):
        return self._r1

    @r1.setter
    def r1(self, value):
        self._r1 = self._validate_radius(value, "r1")

    @property
    def r2(self):
        return self._r2

    @r2.setter
    def r2(self, value):
        self._r2 = self._validate_radius(value, "r2")

    @property
    def mode(self):
        return self._mode

    @mode.setter
    def mode(self, value):
        if value not in [THEORY, APPROX, SWEPT]:
            raise ValueError(
                f"mode must be one of {THEORY}, {APPROX}, {SWEPT}, got {value}"
            )
        self._mode = value

    def _validate_radius(self, value, name):
        try:
            value = as_fraction(value)
        except TypeError:
            raise TypeError(f"{name} should be a number")
        if not 0 < value < 1:
            raise ValueError(f"{name} must lie in (0, 1), got {value}")
        return value

    def radii_for(self, oracle):
        """Radii in the number type of the oracle (Fraction or float)"""
        return oracle.as_radius(self.r1), oracle.as_radius(self.r2)

    def as_dict(self):
        return {"r1": float(self.r1), "r2": float(self.r2), "mode": self.mode}

    def __repr__(self):
        return f"RoundingParams(r1={self.r1}, r2={self.r2}, mode={self.mode})"
