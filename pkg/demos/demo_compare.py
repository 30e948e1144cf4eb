# ## Deciding whether two germs can be contact equivalent
#
# Equal invariant pairs (up to an overall sign flip) are necessary for
# bi-Lipschitz contact equivalence, so a mismatch is a proof of
# non-equivalence; a match proves nothing and is reported as "possible".

from germinv import analyze_germ, equivalent_possible, parse_poly

GERMS = [
    "x^3 + y^6",
    "(x^2 - y^3)^2",
    "x^2 + y^4",
    "-x^2 - 2*y^6",
]

invs = {}
for text in GERMS:
    v = analyze_germ(parse_poly(text)).invariant
    invs[text] = v
    print(f"Inv({text}) = ({v.lo}, {v.hi})")
print()

# ## Pairwise verdict matrix

width = max(len(t) for t in GERMS)
print(" " * width, *(t.rjust(width) for t in GERMS))
for a in GERMS:
    row = [equivalent_possible(invs[a], invs[b]).rjust(width) for b in GERMS]
    print(a.ljust(width), *row)
print()

# All four reference germs are mutually excluded: no two of them are
# bi-Lipschitz contact equivalent.

# ## The sign flip
#
# x^2 + y^4 and -(x^2 + y^4) have pairs (2, 4) and (-4, -2); they match
# after negation, so equivalence is not excluded (and indeed composing with
# a reflection of the value axis realizes it).

v1 = invs["x^2 + y^4"]
v2 = analyze_germ(parse_poly("-x^2 - y^4")).invariant
print(f"Inv(x^2 + y^4)   = ({v1.lo}, {v1.hi})")
print(f"Inv(-x^2 - y^4)  = ({v2.lo}, {v2.hi})")
print(f"verdict: {equivalent_possible(v1, v2)}")

# ## Limits of the test
#
# "possible" is only the necessary condition: the tool never certifies
# equivalence. x^2 + x*y^2 + y^4 carries the same pair as x^2 + y^4 (here
# completing the square in x shows the two really are equivalent), but the
# verdict would read the same even if they were not.

v3 = analyze_germ(parse_poly("x^2 + x*y^2 + y^4")).invariant
print(f"\nInv(x^2 + x*y^2 + y^4) = ({v3.lo}, {v3.hi})")
print(f"x^2 + y^4 vs x^2 + x*y^2 + y^4: {equivalent_possible(v1, v3)}")

# A pair mismatch, on the other hand, is a proof of non-equivalence.

v4 = analyze_germ(parse_poly("x^2 + y^2")).invariant
print(f"Inv(x^2 + y^2) = ({v4.lo}, {v4.hi})")
print(f"x^2 + y^2 vs x^2 + y^4: {equivalent_possible(v4, v1)}")
