import pytest

import oracles
from conftest import QUADRICS, cubic, quadrics_ideal, polys, socle
from frobtail import (SocleProfile, a_invariant, back_twist, hilbert_function, is_artinian,
                      socle_profile)
from frobtail.errors import NotArtinian, NotGorenstein, NotGradeThree


def test_fermat_socle():
    s = socle("fermat", 5, 0)
    assert s.degrees == {6: 1, 7: 3}
    assert s.degrees == oracles.socle_dims(cubic(5), polys(5, ["x^5", "y^5", "z^5"]), 14)


def test_quadrics_socles():
    assert socle("quadrics", 5, 1).degrees == {12: 6}
    assert socle("quadrics", 5, 0).degrees == {2: 1}
    assert socle("quadrics", 2, 1).degrees == oracles.socle_dims(cubic(2), list(quadrics_ideal(2, 1)), 8)


def test_maximal_ideal_socle(F5):
    assert socle_profile(cubic(5), list(F5.gens())).degrees == {0: 1}


def test_socle_requires_artinian(F5):
    x, y, _ = F5.gens()
    with pytest.raises(NotArtinian):
        socle_profile(cubic(5), [x * y])


def test_hilbert_functions(F5):
    assert hilbert_function(list(F5.gens()), 4) == [1, 0, 0, 0, 0]
    assert hilbert_function(polys(5, ["x^2", "y^2", "z^2"]), 5) == [1, 3, 3, 1, 0, 0]
    K = polys(5, ["x^5", "y^5", "z^5", "x^3+y^3+z^3"])
    h = hilbert_function(K, 16)
    assert h == [oracles.quotient_dim(K, d) for d in range(17)]
    assert all(v == 0 for v in h[13:])
    # top socle degree 7 is the last nonzero degree
    assert h[7] > 0 and not any(h[8:])


def test_is_artinian(F5):
    assert is_artinian(polys(5, ["x^5", "y^5", "z^5"]))
    assert not is_artinian(polys(5, ["x^2", "y^2"]))


def test_a_invariant(F5):
    assert a_invariant(cubic(5)) == 0
    assert a_invariant(F5.parse("x^5+y^5+z^5")) == 2
    assert a_invariant(F5.gen("x")) == -2


def test_back_twist_examples():
    gd = back_twist(polys(5, ["x^5", "y^5", "z^5"]))
    assert (gd.b, gd.mu) == (15, 3)
    gd = back_twist(polys(5, QUADRICS))
    assert (gd.b, gd.mu) == (5, 5)


def test_back_twist_scales_with_frobenius():
    assert back_twist(list(quadrics_ideal(5, 1))).b == 25
    assert back_twist(list(quadrics_ideal(2, 2))).b == 20


def test_back_twist_failures(F5):
    with pytest.raises(NotGorenstein):
        back_twist(polys(5, ["x^2", "y^2", "z^2", "xy"]))
    assert oracles.koszul_betti(polys(5, ["x^2", "y^2", "z^2", "xy"]), 3, 5) == 2
    with pytest.raises(NotGradeThree):
        back_twist(polys(5, ["x^2", "xy", "xz"]))


def test_socle_profile_helpers():
    s = SocleProfile.from_degrees([7, 6, 7, 7])
    assert s.format() == "6:1 7:3" and s.s == 4 and s.top == 7 and not s.is_pure()
    assert s.shifted(30).degrees == {36: 1, 37: 3}
    assert SocleProfile.from_dict(s.to_dict()) == s
