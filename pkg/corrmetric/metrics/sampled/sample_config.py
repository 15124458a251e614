import math
import warnings

import numpy as np


class SampleConfig:
    """
    Parameters of the neighbourhood sampling pipeline

    Args:
        epsilon (float): accuracy parameter in (0, 1). Values outside
            (0, 0.03) are accepted with a warning.
        seed (int, optional): seed of the numpy random generator.
            Defaults to 0.
        sample_size (int, optional): if given, overrides m(n). Defaults to
            None.

    Attributes:
        epsilon (float): accuracy parameter
        seed (int): seed of the numpy random generator
        sample_size (int): fixed sample size, or None for m(n)
    """

    def __init__(self, epsilon, seed=0, sample_size=None) -> None:
        self.epsilon = epsilon
        self.seed = seed
        self.sample_size = sample_size

    @property
    def epsilon(self):
        return self._epsilon

    @epsilon.setter
    def epsilon(self, value):
        if not isinstance(value, (int, float, np.floating)) or isinstance(value, bool):
            raise TypeError("epsilon should be a float")
        if not 0 < value < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {value}")
        if value >= 0.03:
            warnings.warn(
                f"epsilon={value} is outside (0, 0.03) where the sampling "
                "guarantees hold",
                UserWarning,
            )
        self._epsilon = float(value)

    @property
    def seed(self):
        return self._seed

    @seed.setter
    def seed(self, value):
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
            raise TypeError("seed should be an int")
        if value < 0:
            raise ValueError("seed should be non-negative")
        self._seed = int(value)

    @property
    def sample_size(self):
        return self._sample_size

    @sample_size.setter
    def sample_size(self, value):
        if value is not None:
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise TypeError("sample_size should be an int")
            if value < 1:
                raise ValueError("sample_size should be positive")
            value = int(value)
        self._sample_size = value

    @property
    def sampling_constant(self):
        """C(epsilon) = 32 / epsilon**2"""
        return 32 / self.epsilon**2

    def m(self, n):
        """Sample size m(n) = ceil(C(epsilon) ln n), at least 1"""
        if self.sample_size is not None:
            return self.sample_size
        return max(1, math.ceil(self.sampling_constant * math.log(n)))

    def make_rng(self):
        return np.random.default_rng(self.seed)
