"""Verification of explicit three-dimensional semisimple Frobenius manifolds.

Subpackages: ``exact`` (rational polynomials and rational functions),
``numeric`` (roots, the w-t quartic, finite differences, path ODEs),
``instanton`` (the n = 0, 1, 2 data), ``frobenius`` (homogeneity-0 test,
structural equation, coframes and lifts); modules ``geometry`` (Cartan
calculus), ``painleve`` and ``cli``.
"""

__version__ = "0.1.0"
