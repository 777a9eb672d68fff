"""The colon module (I:f)/I for the Fermat example and how its resolution compares.

Its minimal generators sit in degrees b - 3 - sigma over the socle degrees,
so the module is cyclic exactly when the socle is one-dimensional.  The
direct resolution below is compared with the tail of R/J.

Run:  python3 demos/canonical_module.py
"""
from frobtail import PolynomialRing, canonical_generator_degrees, colon_tail_compare, socle_profile
from frobtail.theorem import resolve_colon_module

R = PolynomialRing(5, ["x", "y", "z"])
f = R.parse("x^3+y^3+z^3")
I = [R.parse(g) for g in ("x^5", "y^5", "z^5")]

soc = socle_profile(f, I)
print("socle", soc.format(), "-> generator degrees", sorted(15 - 3 - s for s in soc.as_list()))
print("computed generator degrees", canonical_generator_degrees(f, I))

L = resolve_colon_module(f, I, 5)
for k in range(6):
    print(f"pos {k}:", " ".join(map(str, L.twists(k))))

rep = colon_tail_compare(f, I, depth=2)
print("tail of (I:f)/I:", rep.module_tail)
print("tail of R/J:    ", rep.quotient_tail)
print("observed shift:", rep.computed_shift, "(formula b - 3 =", rep.expected_shift, ")")
