"""Structured form of the pair-element identities used in two places: as
exact state identities in the algebra (they evaluate to the zero state),
and as inputs to the boundary derivations on a generic vector.

A term is (coefficient, prefixes, r): the core is S(i,j;1,r) and each
prefix is (kind, role, depth) applied left of it, kind 'w' or 'H' with a
role 'i'/'j' and a creation depth >= 1, or ('L', None, 0) for the zero
mode of the full conformal vector (the translation operator).
"""

from fractions import Fraction

from . import fock
from .vertex import n_product

L = ("L", None, 0)


def w(role, depth):
    return ("w", role, depth)


def ham(role, depth):
    return ("H", role, depth)


# weight-5 relation
S11_3 = (
    (6, (w("i", 2),), 1),
    (2, (w("j", 2),), 1),
    (-4, (L, w("i", 1)), 1),
    (1, (L, L, L), 1),
    (4, (w("i", 1),), 2),
    (-4, (w("j", 1),), 2),
    (-3, (L, L), 2),
    (6, (L,), 3),
)

# weight-6 relations
S11_4_1 = (
    (32, (w("i", 3),), 1),
    (-24, (ham("i", 1),), 1),
    (-8, (w("j", 3),), 1),
    (24, (ham("j", 1),), 1),
    (-120, (L, w("i", 2)), 1),
    (36, (L, w("j", 2)), 1),
    (72, (L, L, w("i", 1)), 1),
    (-9, (L, L, L, L), 1),
    (12, (w("i", 2),), 2),
    (12, (w("j", 2),), 2),
    (-72, (L, w("i", 1)), 2),
    (-72, (L, w("j", 1)), 2),
    (18, (L, L, L), 2),
)

S11_4_2 = (
    (8, (w("j", 3),), 1),
    (-24, (ham("j", 1),), 1),
    (54, (L, w("i", 2)), 1),
    (-36, (L, w("j", 2)), 1),
    (-36, (L, L, w("i", 1)), 1),
    (9, (L, L, L, L), 1),
    (54, (w("i", 2),), 2),
    (-12, (w("j", 2),), 2),
    (72, (L, w("j", 1)), 2),
    (-18, (L, L, L), 2),
    (72, (w("i", 1),), 3),
)

S11_4_3 = (
    (14, (w("j", 3),), 1),
    (12, (ham("j", 1),), 1),
    (-3, (w("j", 2),), 2),
    (-36, (w("j", 1),), 3),
)

RELATIONS = {
    "s11_3": S11_3,
    "s11_4_1": S11_4_1,
    "s11_4_2": S11_4_2,
    "s11_4_3": S11_4_3,
}

# index-swap reductions: lhs S(i,j;r,s) equals the prefixed combination
REDUCTIONS = {
    "S21": ((2, 1), ((1, (L,), 1), (-1, (), 2))),
    "S31": ((3, 1), ((Fraction(1, 2), (L, L), 1), (-1, (L,), 2), (1, (), 3))),
    "S22": ((2, 2), ((1, (L,), 2), (-2, (), 3))),
    "S32": ((3, 2), ((-1, (w("j", 2),), 1), (2, (w("j", 1),), 2),
                     (Fraction(1, 2), (L, L), 2), (-2, (L,), 3))),
    "S33": ((3, 3), ((Fraction(-1, 2), (L, w("j", 2)), 1),
                     (Fraction(3, 2), (w("i", 2),), 2),
                     (-1, (L, w("i", 1)), 2),
                     (1, (L, w("j", 1)), 2),
                     (Fraction(1, 4), (L, L, L), 2),
                     (2, (w("i", 1),), 3),
                     (-1, (L, L), 3))),
}


def term_state(rank, i, j, term):
    """Evaluate one structured term to a Fock state."""
    coeff, prefixes, r = term
    cur = fock.s_pair(rank, i, j, 1, r)
    full = fock.omega(rank)
    for kind, role, depth in reversed(prefixes):
        if kind == "L":
            cur = n_product(full, 0, cur)
        else:
            el = (fock.omega_i if kind == "w" else fock.ham_i)(
                rank, i if role == "i" else j)
            cur = n_product(el, -depth, cur)
    return cur.scale(Fraction(coeff))


def relation_state(rank, i, j, terms):
    out = fock.State(fock.vacuum(rank))
    for term in terms:
        out = out + term_state(rank, i, j, term)
    return out


def reduction_residual(rank, i, j, name):
    """lhs - rhs of a reduction identity; the zero state when it holds."""
    (r, s), rhs_terms = REDUCTIONS[name]
    lhs = fock.s_pair(rank, i, j, r, s)
    return lhs - relation_state(rank, i, j, rhs_terms)
