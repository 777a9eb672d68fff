import pytest

from conftest import QUADRICS, cubic, polys
from frobtail import bracket_power, run_sweep
from frobtail.errors import NotAPowerOfP
from frobtail.fixtures import QUADRICS_P2, FERMAT_TABLE, parse_cell, row
from frobtail.frobenius import prime_exponent


def test_bracket_power_examples():
    assert bracket_power(polys(2, ["x", "y", "z"]), 2) == polys(2, ["x^2", "y^2", "z^2"])
    assert bracket_power(polys(5, ["xy+z^2"]), 5) == polys(5, ["x^5y^5+z^10"])
    assert bracket_power(polys(5, ["x^5", "y^5", "z^5"]), 5) == polys(5, ["x^25", "y^25", "z^25"])
    assert bracket_power([], 5) == []


def test_bracket_power_rejects_non_powers():
    with pytest.raises(NotAPowerOfP):
        bracket_power(polys(5, ["x"]), 10)
    assert prime_exponent(125, 5) == 3 and prime_exponent(1, 3) == 0
    with pytest.raises(NotAPowerOfP):
        prime_exponent(0, 2)


def test_sweep_fermat_matches_table():
    sw = run_sweep(cubic(5), polys(5, ["x^5", "y^5", "z^5"]), [1, 0], max_position=3, theorem=False)
    assert sw.exponents == [0, 1] and len(sw) == 2
    for e in (0, 1):
        want = row(FERMAT_TABLE, e)
        got = sw[e].resolution.betti
        for k in range(4):
            assert got[k] == parse_cell(want[f"pos {k}"])


def test_sweep_quadrics_p2_matches_table():
    sw = run_sweep(cubic(2), polys(2, QUADRICS), range(4))
    for e in range(4):
        want = row(QUADRICS_P2, e)
        r = sw[e]
        assert r.ok
        assert r.socle.degrees == parse_cell(want["socle"])
        for k in range(5):
            assert r.resolution.betti[k] == parse_cell(want[f"pos {k}"])
        assert r.report.verdict.all_hold == (e >= 2)
    table = sw.format_table()
    assert table.splitlines()[0].split() == ["e", "socle", "pos", "0", "pos", "1", "pos", "2",
                                             "pos", "3", "pos", "4"]
    assert "19:12" in table


def test_empty_sweep():
    sw = run_sweep(cubic(5), polys(5, ["x^5", "y^5", "z^5"]), [])
    assert len(sw) == 0 and sw.format_table() == ""


def test_sweep_records_errors():
    sw = run_sweep(cubic(5), polys(5, ["x^2"]), [0], theorem=False)
    assert not sw[0].ok and "NotArtinian" in sw[0].error
    assert "error" in sw.format_table()
