import corrmetric as C
import pytest
import sympy as sp


class TestLadder:
    ladder = C.ConstantLadder(0.01)

    def test_single_estimate_constants(self):
        assert self.ladder.c1 == sp.Rational(101, 99)
        assert self.ladder.h1 == sp.Rational(2, 99)
        assert self.ladder.c2 == self.ladder.c1
        assert self.ladder.h2 == self.ladder.h1

    def test_initial_estimate_constants(self):
        assert self.ladder.c3 == sp.Rational(10201, 9801)
        assert self.ladder.h3 == sp.Rational(602, 9801)
        assert float(self.ladder.c3) == pytest.approx(1.0408122, abs=1e-7)
        assert float(self.ladder.h3) == pytest.approx(0.0614223, abs=1e-7)

    def test_post_processing_constants(self):
        c3, h3 = self.ladder.c3, self.ladder.h3
        assert self.ladder.c4 == (2 * c3 + 1) * c3
        assert self.ladder.h4 == (4 * c3 + 1) * (2 * c3 + 1) * h3
        assert self.ladder.delta1 == 3 + self.ladder.h4
        assert self.ladder.delta2 == self.ladder.h4
        assert self.ladder.d_factor == sp.Rational(20402, 9801)

    def test_thresholds(self):
        assert self.ladder.t_low == sp.Rational(1204, 9801)
        assert self.ladder.t_high == sp.Rational(9801, 30203)

    def test_epsilon_is_exact(self):
        assert self.ladder.epsilon == sp.Rational(1, 100)

    def test_as_floats(self):
        floats = self.ladder.as_floats()
        assert floats["epsilon"] == 0.01
        assert set(floats) >= {"c3", "h3", "c4", "h4", "delta1", "delta2", "t_low", "t_high"}


def test_limit():
    ladder = C.ConstantLadder.limit()
    assert ladder.c3 == 1
    assert ladder.h3 == 0
    assert ladder.c4 == 3
    assert ladder.h4 == 0
    assert ladder.delta1 == 3
    assert ladder.delta2 == 0
    assert ladder.t_low == 0
    assert ladder.t_high == sp.Rational(1, 3)


def test_constants_grow_with_epsilon():
    small, large = C.constant_ladder(0.001), C.constant_ladder(0.02)
    assert small.c3 < large.c3
    assert small.h4 < large.h4


@pytest.mark.parametrize("epsilon", [0, 1, -0.1, 1.5])
def test_epsilon_range(epsilon):
    with pytest.raises(ValueError, match="epsilon must lie in"):
        C.ConstantLadder(epsilon)
