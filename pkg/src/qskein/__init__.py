"""qskein: exact symbolic engine for the quantized SL2 coordinate ring,
its braided-commutative transmutation, braided tensor powers carrying a
braid-group action, and filtered quotient presentations with a classical
point-counting limit over prime fields.

All arithmetic is exact: Laurent polynomials in the quarter-power variable v
(q = v**4, A = v**2) or reduced fractions of integer polynomials in v.
"""

ENGINE_VERSION = "0.1.0"
__version__ = ENGINE_VERSION
