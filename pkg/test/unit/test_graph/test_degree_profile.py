from corrmetric import PosDegreeProfile
import pytest


def test_profile():
    profile = PosDegreeProfile([1, 3, 2])
    assert profile.n == 3
    assert profile.delta_max == 3
    assert profile[1] == 3
    assert len(profile) == 3
    assert profile.deg_minus(0) == 2


def test_degrees_count_the_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        PosDegreeProfile([0, 2])
