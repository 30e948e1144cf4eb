# ## The invariant pair of a plane germ
#
# For a polynomial f(x, y) vanishing at the origin, the level sets of f are
# tangent to small circles along the tangency curve h = y*f_x - x*f_y = 0.
# Restricting f to each half-branch of that curve gives a sign and an exact
# rational growth order; the six-case table over those classes produces a
# pair of signed exponents Inv(f) = (lo, hi) that survives bi-Lipschitz
# contact equivalence up to an overall sign flip.

from fractions import Fraction

from germinv import BivarPoly, analyze_germ, parse_poly

GERMS = [
    "x^3 + y^6",
    "(x^2 - y^3)^2",
    "x^2 + y^4",
    "-x^2 - 2*y^6",
]

# ## Exact analysis of each germ

for text in GERMS:
    a = analyze_germ(parse_poly(text))
    cls = a.classification
    print(f"f = {text}")
    print(f"  tangency half-branches: {len(a.restrictions)}")
    print(f"  K0 (f vanishes on branch): {cls.K0_count}")
    print(f"  K- orders: {[str(v) for v in cls.Kminus_alphas]}")
    print(f"  K+ orders: {[str(v) for v in cls.Kplus_alphas]}")
    print(f"  Inv(f) = ({a.invariant.lo}, {a.invariant.hi})")
    print()

# ## What the pair is made of
#
# x^3 + y^6 restricted to the negative x-axis behaves like -t^3, so the
# fastest escape below zero has order 3; on the positive x-axis it grows
# like +t^3. The pair (-3, 3) records exactly that.

# ## Invariance in action
#
# The pair does not move under rotation, positive scaling, or any
# bi-Lipschitz change of coordinates; negating f flips it.

f = parse_poly("x^3 + y^6")
base = analyze_germ(f).invariant

px = BivarPoly.var_x().scale(Fraction(3, 5)) + BivarPoly.var_y().scale(Fraction(4, 5))
py = BivarPoly.var_x().scale(Fraction(-4, 5)) + BivarPoly.var_y().scale(Fraction(3, 5))
rotated = analyze_germ(f.compose(px, py)).invariant
scaled = analyze_germ(f.scale(Fraction(7))).invariant
negated = analyze_germ(-f).invariant

print(f"Inv(f)          = ({base.lo}, {base.hi})")
print(f"Inv(f rotated)  = ({rotated.lo}, {rotated.hi})")
print(f"Inv(7*f)        = ({scaled.lo}, {scaled.hi})")
print(f"Inv(-f)         = ({negated.lo}, {negated.hi})  (sign-flipped pair)")
assert rotated == base and scaled == base and negated == base.negate()
