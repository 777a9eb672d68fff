import pytest

from conftest import cubic, quadrics_ideal, fermat_ideal, polys, resolved, socle
from frobtail import (SocleProfile, check_hypotheses, frobenius_shift_check, predict_tail,
                      check_pure_socle, pure_socle_shape, colon_tail_compare, verify_theorem)
from frobtail.errors import FDegreeNotThree, SocleNotPure
from frobtail.theorem import (UNSATISFIABLE, HypothesisVerdict, TheoremReport, canonical_generators,
                              canonical_generator_degrees, common_shift, sum_avoiding_pair)


def fermat(e):
    return cubic(5), list(fermat_ideal(e))


def test_fermat_hypotheses_hold():
    v = check_hypotheses(*fermat(0), resolution=resolved("fermat", 5, 0))
    assert v.all_hold
    assert v.mu_I == v.mu_J == 3
    assert v.rank_F2 == v.socle_dim == 4
    assert (v.b, v.a) == (15, 0)
    sums = {s + t for s in (6, 7) for t in (6, 7)}
    assert sums == {12, 13, 14} and 15 not in sums
    assert v.offending_pair is None


def test_quadrics_p2_e1_fails():
    v = check_hypotheses(cubic(2), list(quadrics_ideal(2, 1)))
    assert not v.all_hold
    assert not v.b_holds and v.rank_F2 == 12 and v.socle_dim == 7


def test_f_in_ideal_breaks_generator_count():
    f = cubic(5)
    v = check_hypotheses(f, polys(5, ["x^3", "y^3", "z^3"]))
    assert not v.a_holds
    assert (v.mu_I, v.mu_J) == (3, 2)


def test_sum_avoiding_pair_allows_equal_indices():
    s = SocleProfile({6: 1, 9: 1})
    assert sum_avoiding_pair(s, 12) == (6, 6)
    assert sum_avoiding_pair(s, 15) == (6, 9)
    assert sum_avoiding_pair(s, 13) is None


def test_predict_tail_examples():
    t = predict_tail(SocleProfile.from_degrees([6, 7, 7, 7]), 15, 0, 3)
    assert t.twists(2) == [8, 8, 8, 9]
    assert t.twists(3) == [9, 10, 10, 10]
    t = predict_tail(SocleProfile({12: 6}), 25, 0, 3)
    assert (t.twists(2), t.twists(3), t.twists(4)) == ([13] * 6, [15] * 6, [16] * 6)
    assert predict_tail(SocleProfile({}), 15, 0, 3).is_empty()
    with pytest.raises(ValueError):
        t.twists(1)


def test_verify_theorem_fermat():
    rep = verify_theorem(*fermat(0), max_position=5, resolution=resolved("fermat", 5, 0, 5))
    assert rep.asserted and rep.match and rep.passed
    assert rep.positions == [2, 3, 4, 5]


def test_verify_theorem_quadrics_p5_e2():
    rep = verify_theorem(cubic(5), list(quadrics_ideal(5, 2)), resolution=resolved("quadrics", 5, 2))
    assert rep.socle.degrees == {62: 6} and rep.verdict.b == 125
    assert rep.asserted and rep.match


def test_verify_theorem_not_asserted_when_a_fails():
    rep = verify_theorem(cubic(5), polys(5, ["x^3", "y^3", "z^3"]), max_position=3)
    assert not rep.verdict.a_holds
    assert not rep.asserted and rep.passed


def test_report_roundtrip():
    rep = verify_theorem(*fermat(0), resolution=resolved("fermat", 5, 0))
    back = TheoremReport.from_json(rep.to_json())
    assert back.to_dict() == rep.to_dict()
    assert "8:3 9:1" in rep.format_text()
    v = rep.verdict
    assert HypothesisVerdict.from_dict(v.to_dict()) == v


def test_frobenius_shift_fermat():
    f, I = fermat(0)
    rep = frobenius_shift_check(f, I, 5, base={"resolution": resolved("fermat", 5, 0), "socle": socle("fermat", 5, 0)})
    assert rep.status == "PASS" and rep.n == 30 and rep.b_q == 75
    assert rep.power_socle == [[36, 1], [37, 3]]
    assert rep.power_tail["2"] == [38, 38, 38, 39] and rep.power_tail["3"] == [39, 40, 40, 40]


def test_frobenius_shift_quadrics_p2():
    f = cubic(2)
    rep = frobenius_shift_check(f, list(quadrics_ideal(2, 2)), 2)
    assert (rep.b, rep.n, rep.status) == (20, 10, "PASS")
    assert rep.base_socle == [[9, 12]] and rep.power_socle == [[19, 12]]
    assert [rep.power_tail[k][0] for k in ("2", "3", "4")] == [21, 22, 24]


def test_frobenius_shift_parity():
    rep = frobenius_shift_check(*fermat(0), 2)
    assert rep.status == UNSATISFIABLE and not rep.passed


def test_common_shift():
    r0, r1 = resolved("fermat", 5, 0, 3), resolved("fermat", 5, 1, 3)
    assert common_shift(r0.betti, r1.betti, [2, 3]) == 30
    assert common_shift(r0.betti, r1.betti, [1, 2]) is None


def test_pure_socle_classifier():
    assert pure_socle_shape(25, 5).as_tuple() == (6, 2, 1, 12)
    assert pure_socle_shape(20, 5).as_tuple() == (12, 1, 2, 9)


def test_check_pure_socle_matches_computation():
    out = check_pure_socle(cubic(5), list(quadrics_ideal(5, 1)), resolution=resolved("quadrics", 5, 1))
    assert out["matches"] and out["entry_degrees"] == {"3": [2], "4": [1]}
    out = check_pure_socle(cubic(2), list(quadrics_ideal(2, 2)), resolution=resolved("quadrics", 2, 2))
    assert out["matches"] and out["entry_degrees"] == {"3": [1], "4": [2]}


def test_pure_socle_guards(F5):
    with pytest.raises(FDegreeNotThree):
        check_pure_socle(F5.parse("x^4+y^4+z^4"), list(fermat_ideal(0)))
    with pytest.raises(SocleNotPure):
        check_pure_socle(*fermat(0))


def test_canonical_generator_degrees():
    assert canonical_generator_degrees(*fermat(0)) == [5, 5, 5, 6]
    # equal to b - 3 - sigma over the socle degrees {6, 7, 7, 7}
    assert sorted(15 - 3 - s for s in (6, 7, 7, 7)) == [5, 5, 5, 6]
    cg = canonical_generators(cubic(5), polys(5, ["x^2", "xz", "xy+z^2", "yz", "y^2"]))
    # f lies in this I (z^3 = z(xy+z^2) - y·xz), so (I:f) is the unit ideal
    assert cg.degrees == [0] and cg.degenerate


def test_canonical_generators_degenerate_when_f_in_ideal():
    f = cubic(5)
    cg = canonical_generators(f, polys(5, ["x^3+y^3+z^3", "x^4", "y^4"]))
    assert cg.degenerate


def test_colon_tail_report_fields():
    rep = colon_tail_compare(*fermat(0))
    assert rep.b == 15 and rep.expected_shift == 12
    assert rep.generator_degrees == [5, 5, 5, 6] == rep.expected_generator_degrees
    # twists observed by resolving (I:f)/I directly; see the acceptance suite
    # for the stated +12 comparison
    assert rep.module_tail["3"] == rep.quotient_tail["3"] == [9, 10, 10, 10]
    assert rep.module_tail["4"] == rep.quotient_tail["4"] == [11, 11, 11, 12]
    assert rep.computed_shift == 0


def test_colon_module_prefix_matches_dense_hilbert_function():
    import oracles
    from frobtail.theorem import resolve_colon_module

    f, I = fermat(0)
    L = resolve_colon_module(f, I, 5)
    # the alternating sum over positions 0..4 is exact below the first twist at position 5
    for d in range(min(L.twists(5))):
        alt = sum((-1) ** k * sum(oracles.hypersurface_dim(f, d - t) for t in L.twists(k)) for k in range(5))
        assert alt == oracles.colon_quotient_dim(I, f, d), d
    assert L.twists(3) == [9, 10, 10, 10]
