"""Walk through the Fermat cubic x^3+y^3+z^3 over F_5 with J = (x^5, y^5, z^5).

Run:  python3 demos/fermat_cubic.py
"""
from frobtail import (PolynomialRing, alternating_normalize, bracket_power, frobenius_shift_check,
                      determinant, extract_mf, resolve_over_R, socle_profile, verify_theorem)
from frobtail.cli import render_betti

R = PolynomialRing(5, ["x", "y", "z"])
f = R.parse("x^3+y^3+z^3")
J = [R.parse(g) for g in ("x^5", "y^5", "z^5")]

# resolution of R/J over R = P/(f); after position 2 it repeats with period 2, shifted by 3
res = resolve_over_R(f, J, max_position=5)
print(render_betti(res.betti))
print()

# socle degrees of P/(J+f) predict positions 2 and 3
soc = socle_profile(f, J)
print("socle:", soc.format())
report = verify_theorem(f, J, max_position=5, resolution=res, socle=soc)
print(report.format_text())
print()

# Frobenius powers shift everything by b(q-1)/2 = 15*4/2 = 30
for e in (1, 2):
    Jq = bracket_power(J, 5 ** e)
    print(f"e={e}:", socle_profile(f, Jq).format(), "|", resolve_over_R(f, Jq, 3).betti.format_position(2))
shift = frobenius_shift_check(f, J, 5, 3)
print("shift check:", shift.status, "n =", shift.n)
print()

# the periodic part is a 4x4 matrix factorization of f; it can be made alternating
mf = extract_mf(res, f)
pair = alternating_normalize(mf)
print("Phi =")
print(pair.Phi.format())
print("Psi =")
print(pair.Psi.format())
print("det Phi =", determinant(pair.Phi))
