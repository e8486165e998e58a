"""Published values that the pipelines are checked against.

Formulas are kept as plain strings in the parser's syntax: ``c1..c3`` are
the Chern classes of X, ``a1, a2`` those of S_1, ``d1, d2`` those of S_2 and
``f1..f4`` those of V_1.  Juxtaposition is multiplication.
"""
from __future__ import annotations

from fractions import Fraction

LEVEL1_RELATION = "a1^3 - 2a1^2c1 + a1c1^2 + a1c2 - c1c2 + c3"

LEVEL2_SEXTIC = (
    "-d1^6+3 d1^5f1-3 d1^4f1^2-2 d1^4f2+4 d1^3f2f1+d1^3f1^3-f3d1^2f1-f2^2d1^2+4 d1^2f4"
    "-2 d1^2f1^2f2+f3d1f1^2-4 d1f4f1+f2^2d1f1-f3f2f1+f3^2+f4f1^2"
)

LEVEL2_QUINTIC = (
    "-d1^5-f3f2+3 f4f1+f3f1^2-2 d2f3-2 d2f1f2-d2f1^3+5 f1d2^2+4 d1f4+d1f2^2+f3f1d1"
    "-d1f2f1^2-4 f2d2d1+4 d2f1^2d1+f3d1^2-2 d1^2f2f1+f1^3d1^2"
)

V1_CHERN = (
    "2 c1-2 a1",
    "c1^2-3 c1a1+a1^2+2 c2",
    "-c1^2a1+c1a1^2+2/3 a1^3+2 c1c2-2 c2a1-2 c1a2+2 c3",
    "-c3a1-6 a1^2a2+c2a1^2-c1^2a2-6 c2a2+4 c1c3+1/3 c1a1^3+1/2 c1^4-2 c1^2c2+2 c2^2"
    "+6 a2^2+2/3 a1^4-c1c2a1+4 a1c1a2",
)

CH_V1 = (
    "4+1/3 c1^3-2 c2-c1a1+1/2 c1a1^2-c1a2-1/2 c1^2a1+1/4 c1^2a1^2-1/2 c1^2a2+c2a1"
    "-1/2 c2a1^2+c2a2-1/6 c1^3a1+1/12 c1^3a1^2-1/6 c1^3a2-1/2 c3a1+1/4 c3a1^2-1/2 c3a2"
    "+a1^2a2+2 c1+1/2 c1c2a1-1/4 c1c2a1^2-c1c2+c1^2+1/2 c1c2a2-1/4 a1^4-2 a1+a1^2-a2^2+c3"
)

Z2_CLASS = "u2 + u1 + c1"

MORSE_FORM = {
    "h^3": Fraction(-449003520),
    "h^2*c1": Fraction(112896000),
    "h*c1^2": Fraction(0),
    "h*c2": Fraction(0),
    "c1^3": Fraction(-1050000),
    "c1*c2": Fraction(280000),
    "c3": Fraction(-70000),
}

# coefficients of d^0..d^4
MORSE_POLY = (0, -2473520, -43246000, -13300000, 840000)
# coefficients of delta * d^0..d^4
ALPHA_DELTA = (0, -36400, 9247280, 1862000, -742000)

MORSE_THRESHOLD = 19
EFFECTIVE_BOUND = 93

# the weight data of the Morse computation: O(5, 1) twisted by O(24), G = O(24)
MORSE_WEIGHTS = (5, 1)
MORSE_H_TWIST = 24
MORSE_G_TWIST = 24

POLE_ORDER = 7
