"""Frobenius sweeps for I = (x^2, xz, xy+z^2, yz, y^2) and f = x^3+y^3+z^3.

In characteristic 5 every e >= 1 satisfies the tail hypotheses; in
characteristic 2 only e >= 2 does, and e = 1 is visibly irregular (socle
4:7 and rank 12 at position 2).

Run:  python3 demos/frobenius_sweep.py
"""
from frobtail import PolynomialRing, bracket_power, frobenius_shift_check, check_pure_socle, run_sweep

IDEAL = ("x^2", "xz", "xy+z^2", "yz", "y^2")

for p, E in ((5, range(3)), (2, range(4))):
    R = PolynomialRing(p, ["x", "y", "z"])
    f = R.parse("x^3+y^3+z^3")
    I = [R.parse(g) for g in IDEAL]
    sweep = run_sweep(f, I, E)
    print(f"p = {p}")
    print(sweep.format_table())
    for e in E:
        v = sweep[e].report.verdict
        flags = "".join(k for k in "abc" if getattr(v, f"{k}_holds"))
        print(f"  e={e}: hypotheses holding {flags or '-'}, tail prediction "
              f"{'matches' if sweep[e].report.match else 'differs'}")
    # pure socle: size and entry degrees follow from b and mu alone
    e = 2
    Iq = bracket_power(I, p ** e)
    out = check_pure_socle(f, Iq, socle=sweep[e].socle, resolution=sweep[e].resolution)
    print(f"  e={e}: b={out['b']} mu={out['mu']} predicted (s, deg d3, deg d4, sigma) = "
          f"{tuple(out['predicted'])}, computed degrees {out['entry_degrees']}")
    rep = frobenius_shift_check(f, bracket_power(I, p), p)
    print(f"  J^[{p}] vs J^[{p * p}]: {rep.status}, n = {rep.n}")
    print()
