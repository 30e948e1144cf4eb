"""Shared fixtures: reference germs with hand-checked expected data."""

import random
from fractions import Fraction

import pytest

from germinv import BivarPoly, parse_poly

# Reference germs. Expected values worked out independently: the tangency
# curve of each was factored by hand, every half-branch parametrized, and
# the restriction sign/order read off the leading term (see test modules
# for the per-branch derivations they pin down).
#
#   text, invariant (lo, hi), half-branch count, K0 count,
#   K- alpha multiset, K+ alpha multiset
REFERENCE_GERMS = [
    ("x^3 + y^6", (-3, 3), 6, 0, [3], [3, 6, 6, 6, 6]),
    ("(x^2 - y^3)^2", (0, 4), 6, 2, [], [4, 4, 6, 6]),
    ("x^2 + y^4", (2, 4), 4, 0, [], [2, 2, 4, 4]),
    ("-x^2 - 2*y^6", (-6, -2), 4, 0, [2, 2, 6, 6], []),
]


@pytest.fixture(scope="session")
def reference_germs():
    return [(parse_poly(t), inv, n, k0, km, kp)
            for t, inv, n, k0, km, kp in REFERENCE_GERMS]


def rotate_germ(f: BivarPoly) -> BivarPoly:
    """Compose with the rational rotation (3/5, 4/5; -4/5, 3/5)."""
    px = (BivarPoly.var_x().scale(Fraction(3, 5))
          + BivarPoly.var_y().scale(Fraction(4, 5)))
    py = (BivarPoly.var_x().scale(Fraction(-4, 5))
          + BivarPoly.var_y().scale(Fraction(3, 5)))
    return f.compose(px, py)


def random_germ(rng: random.Random, max_deg: int = 6, max_terms: int = 6,
                max_coeff: int = 9) -> BivarPoly:
    """Sparse random polynomial vanishing at the origin (may be zero)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        i, j = rng.randint(0, max_deg), rng.randint(0, max_deg)
        if i + j == 0 or i + j > max_deg:
            continue
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            terms[(i, j)] = Fraction(c)
    return BivarPoly(terms)
