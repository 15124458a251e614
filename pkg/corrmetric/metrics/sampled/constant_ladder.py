import sympy as sp

from corrmetric.helpers import as_rational


class ConstantLadder:
    """
    The epsilon-dependent constants of the sampled pipeline, held as exact
    sympy Rationals

    Args:
        epsilon (float, Fraction, sympy.Rational): the accuracy parameter,
            0 < epsilon < 1. Floats are read through their decimal
            representation.

    Attributes:
        epsilon (sympy.Rational): the accuracy parameter
        c1, h1 (sympy.Rational): single-estimate constants,
            (1 + eps) / (1 - eps) and 2 eps / (1 - eps)
        c2, h2 (sympy.Rational): same values as c1, h1
        c3, h3 (sympy.Rational): approximate triangle inequality of the
            initial estimate, c1**2 and h1 (1 + 2 c1)
        c4, h4 (sympy.Rational): approximate triangle inequality of the
            post-processed estimate, (2 c3 + 1) c3 and
            (4 c3 + 1)(2 c3 + 1) h3
        delta1, delta2 (sympy.Rational): 3 + h4 and h4
        d_factor (sympy.Rational): fractional cost blow-up, 2 c3
        t_low (sympy.Rational): positive edges with an estimate at most
            t_low are snapped to 0, 2 h3
        t_high (sympy.Rational): negative edges with an estimate at least
            t_high are snapped to 1, 1 / (2 c3 + 1)

    Usage:
        >>> ladder = ConstantLadder(0.01)
        >>> round(float(ladder.c3), 7)
        1.0408122
    """

    def __init__(self, epsilon) -> None:
        epsilon = as_rational(epsilon)
        if not 0 < epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
        self._fill(epsilon)

    @classmethod
    def limit(cls):
        """The epsilon -> 0 ladder: c3 = 1, h3 = 0, c4 = 3, h4 = 0,
        delta1 = 3, delta2 = 0"""
        ladder = cls.__new__(cls)
        ladder._fill(sp.Integer(0))
        return ladder

    def _fill(self, epsilon):
        self.epsilon = epsilon
        self.c1 = (1 + epsilon) / (1 - epsilon)
        self.h1 = 2 * epsilon / (1 - epsilon)
        self.c2, self.h2 = self.c1, self.h1
        self.c3 = self.c1**2
        self.h3 = self.h1 * (1 + 2 * self.c1)
        self.c4 = (2 * self.c3 + 1) * self.c3
        self.h4 = (4 * self.c3 + 1) * (2 * self.c3 + 1) * self.h3
        self.delta1 = 3 + self.h4
        self.delta2 = self.h4
        self.d_factor = 2 * self.c3
        self.t_low = 2 * self.h3
        self.t_high = 1 / (2 * self.c3 + 1)

    def as_floats(self):
        """Returns every constant as a float, keyed by name"""
        names = [
            "epsilon", "c1", "h1", "c2", "h2", "c3", "h3", "c4", "h4",
            "delta1", "delta2", "d_factor", "t_low", "t_high",
        ]
        return {name: float(getattr(self, name)) for name in names}

    def __repr__(self):
        return f"ConstantLadder(epsilon={self.epsilon})"


def constant_ladder(epsilon):
    """Builds the ConstantLadder of epsilon, 0 < epsilon < 1"""
    return ConstantLadder(epsilon)
