import math
import os
from fractions import Fraction

import numpy as np
import sympy as sp


def as_fraction(value):
    """Converts a number to an exact fractions.Fraction

    Floats are read through their decimal representation so that 0.7
    becomes 7/10 rather than the nearest binary value.

    Args:
        value (int, float, Fraction, sympy.Rational): the value

    Raises:
        TypeError: if value is not a number

    Returns:
        Fraction: the exact value
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not accepted as numbers")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        return Fraction(repr(float(value)))
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact fraction")


def as_rational(value):
    """Converts a number to a sympy.Rational (floats via their decimal
    representation)"""
    if isinstance(value, sp.Rational):
        return value
    frac = as_fraction(value)
    return sp.Rational(frac.numerator, frac.denominator)


def exact_sum(numerators, denominators):
    """Exact sum of num/den over paired integer arrays.

    Terms sharing a denominator are summed as integers first, then the
    distinct denominators are brought to their least common multiple.

    Args:
        numerators (np.ndarray): integer numerators
        denominators (np.ndarray): positive integer denominators

    Returns:
        Fraction: the exact sum
    """
    numerators = np.asarray(numerators, dtype=np.int64)
    denominators = np.asarray(denominators, dtype=np.int64)
    if numerators.size == 0:
        return Fraction(0)
    dens, inverse = np.unique(denominators, return_inverse=True)
    sums = np.zeros(len(dens), dtype=np.int64)
    np.add.at(sums, inverse, numerators)
    dens = [int(d) for d in dens]
    common = math.lcm(*dens)
    total = sum(int(s) * (common // d) for s, d in zip(sums, dens))
    return Fraction(total, common)


def n_pairs(n):
    """Number of unordered pairs of distinct vertices among n"""
    return n * (n - 1) // 2


def pair_from_index(index, n):
    """Maps indices in [0, C(n,2)) to unordered pairs (u, v), u < v, in
    the row-major order of np.triu_indices(n, 1)

    Args:
        index (np.ndarray): pair indices
        n (int): number of vertices

    Returns:
        tuple of np.ndarray: the u and v arrays
    """
    index = np.asarray(index, dtype=np.int64)
    # row u starts at u * (2n - u - 1) / 2
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(b * b - 8.0 * index)) / 2).astype(np.int64)
    start = u * (2 * n - u - 1) // 2
    # correct the float estimate at row boundaries
    too_far = start > index
    u[too_far] -= 1
    start = u * (2 * n - u - 1) // 2
    next_start = (u + 1) * (2 * n - u - 2) // 2
    not_far_enough = next_start <= index
    u[not_far_enough] += 1
    start = u * (2 * n - u - 1) // 2
    v = index - start + u + 1
    return u, v


def ensure_parent_dir(filename):
    """Creates the directory containing filename if it doesn't exist"""
    dirname = os.path.dirname(filename)
    if dirname and not os.path.exists(dirname):
        os.makedirs(dirname, exist_ok=True)


def corrmetric_print(msg, end="\n"):
    print(msg, end=end)
